#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linord/ordinal.hpp"

namespace linord {

// Element of 2^alpha with finitely many constant blocks: a partition of
// [0, alpha) into half-open blocks [prev_end, end) carrying a bit.  After
// normalization adjacent blocks carry distinct bits and the last end equals
// alpha, which makes split levels exact.
class BlockSeq {
public:
    struct Block {
        Ordinal end;  // exclusive
        int bit;      // 0 or 1
        bool operator==(const Block& o) const { return bit == o.bit && end == o.end; }
    };

    BlockSeq() = default;
    // Blocks must have strictly increasing ends reaching alpha; merges
    // adjacent equal bits.
    BlockSeq(Ordinal alpha, std::vector<Block> blocks);

    // All-`bit` sequence of length alpha.
    static BlockSeq constant(Ordinal alpha, int bit);
    // 1^n 0^rest of length alpha (ascending n gives an omega-chain in lex).
    static BlockSeq ones_then_zeros(const Ordinal& alpha, const Ordinal& n);

    const Ordinal& alpha() const { return alpha_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    int bit_at(const Ordinal& pos) const;

    bool operator==(const BlockSeq& o) const {
        return alpha_ == o.alpha_ && blocks_ == o.blocks_;
    }

    // Text form: [(end,bit);...] @ alpha
    std::string str() const;
    static BlockSeq parse(const std::string& text);

private:
    Ordinal alpha_;
    std::vector<Block> blocks_;
};

struct LengthMismatch : std::runtime_error {
    LengthMismatch() : std::runtime_error("block sequences have different lengths") {}
};

struct EqualSequences : std::runtime_error {
    EqualSequences() : std::runtime_error("split level of equal sequences") {}
};

Cmp lex_compare(const BlockSeq& x, const BlockSeq& y);

// Least coordinate where the two sequences disagree.
Ordinal split_level(const BlockSeq& x, const BlockSeq& y);

}  // namespace linord
