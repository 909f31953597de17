#include "linord/block_seq.hpp"

#include <sstream>
#include <stdexcept>

namespace linord {

BlockSeq::BlockSeq(Ordinal alpha, std::vector<Block> blocks) : alpha_(std::move(alpha)) {
    if (blocks.empty()) {
        if (!alpha_.is_zero()) throw std::invalid_argument("BlockSeq: no blocks for nonzero alpha");
        return;
    }
    Ordinal prev;  // zero
    for (auto& b : blocks) {
        if (b.bit != 0 && b.bit != 1) throw std::invalid_argument("BlockSeq: bit must be 0/1");
        if (!(prev < b.end)) throw std::invalid_argument("BlockSeq: block ends not increasing");
        prev = b.end;
        if (!blocks_.empty() && blocks_.back().bit == b.bit)
            blocks_.back().end = b.end;
        else
            blocks_.push_back(b);
    }
    if (!(blocks_.back().end == alpha_))
        throw std::invalid_argument("BlockSeq: blocks do not reach alpha");
}

BlockSeq BlockSeq::constant(Ordinal alpha, int bit) {
    if (alpha.is_zero()) return BlockSeq();
    std::vector<Block> bs{{alpha, bit}};
    return BlockSeq(std::move(alpha), std::move(bs));
}

BlockSeq BlockSeq::ones_then_zeros(const Ordinal& alpha, const Ordinal& n) {
    if (n.is_zero()) return constant(alpha, 0);
    if (!(n < alpha)) throw std::invalid_argument("ones_then_zeros: n must be below alpha");
    return BlockSeq(alpha, {{n, 1}, {alpha, 0}});
}

int BlockSeq::bit_at(const Ordinal& pos) const {
    if (!(pos < alpha_)) throw std::out_of_range("BlockSeq: position beyond alpha");
    for (const auto& b : blocks_)
        if (pos < b.end) return b.bit;
    throw std::logic_error("BlockSeq: malformed blocks");
}

std::string BlockSeq::str() const {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const auto& b : blocks_) {
        if (!first) out << ";";
        first = false;
        out << "(" << b.end.str() << "," << b.bit << ")";
    }
    out << "] @ " << alpha_.str();
    return out.str();
}

BlockSeq BlockSeq::parse(const std::string& text) {
    auto fail = [&](std::size_t at) { throw ParseError("malformed block sequence", at); };
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip();
    if (i >= text.size() || text[i] != '[') fail(i);
    ++i;
    std::vector<Block> blocks;
    skip();
    while (i < text.size() && text[i] != ']') {
        if (text[i] != '(') fail(i);
        std::size_t close = text.find(',', i);
        if (close == std::string::npos) fail(i);
        Ordinal end = parse_ordinal(text.substr(i + 1, close - i - 1));
        std::size_t rp = text.find(')', close);
        if (rp == std::string::npos) fail(close);
        int bit = std::stoi(text.substr(close + 1, rp - close - 1));
        blocks.push_back({std::move(end), bit});
        i = rp + 1;
        skip();
        if (i < text.size() && text[i] == ';') { ++i; skip(); }
    }
    if (i >= text.size()) fail(i);
    ++i;  // ']'
    skip();
    if (i >= text.size() || text[i] != '@') fail(i);
    ++i;
    Ordinal alpha = parse_ordinal(text.substr(i));
    return BlockSeq(std::move(alpha), std::move(blocks));
}

namespace {

// Walks the merged block boundaries of x and y; calls visit(bit_x, bit_y) per
// refined segment in order until it returns false.
template <class F>
void walk_segments(const BlockSeq& x, const BlockSeq& y, F visit) {
    std::size_t ix = 0, iy = 0;
    Ordinal pos;  // segment start
    while (ix < x.blocks().size() && iy < y.blocks().size()) {
        const auto& bx = x.blocks()[ix];
        const auto& by = y.blocks()[iy];
        if (!visit(pos, bx.bit, by.bit)) return;
        Cmp c = compare(bx.end, by.end);
        if (c != Cmp::Greater) { pos = bx.end; ++ix; }
        if (c != Cmp::Less) { pos = by.end; ++iy; }
    }
}

}  // namespace

Cmp lex_compare(const BlockSeq& x, const BlockSeq& y) {
    if (!(x.alpha() == y.alpha())) throw LengthMismatch();
    Cmp verdict = Cmp::Equal;
    walk_segments(x, y, [&](const Ordinal&, int bx, int by) {
        if (bx != by) {
            verdict = bx < by ? Cmp::Less : Cmp::Greater;
            return false;
        }
        return true;
    });
    return verdict;
}

Ordinal split_level(const BlockSeq& x, const BlockSeq& y) {
    if (!(x.alpha() == y.alpha())) throw LengthMismatch();
    Ordinal level;
    bool found = false;
    walk_segments(x, y, [&](const Ordinal& start, int bx, int by) {
        if (bx != by) {
            level = start;
            found = true;
            return false;
        }
        return true;
    });
    if (!found) throw EqualSequences();
    return level;
}

}  // namespace linord
