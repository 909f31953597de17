#include <random>

#include "doctest.h"
#include "linord/block_seq.hpp"

using namespace linord;

namespace {

Ordinal o(const std::string& s) { return parse_ordinal(s); }

// Random finite-alpha sequence as raw bits, for cross-checking.
BlockSeq from_bits(const std::vector<int>& bits) {
    std::vector<BlockSeq::Block> blocks;
    for (std::size_t i = 0; i < bits.size(); ++i)
        blocks.push_back({Ordinal::nat(i + 1), bits[i]});
    return BlockSeq(Ordinal::nat(bits.size()), std::move(blocks));
}

}  // namespace

TEST_CASE("lex compare on omega-length sequences") {
    Ordinal w = Ordinal::omega();
    // x = 1 then 0s, y = all 1s: differ first at 1, x(1)=0 < y(1)=1
    BlockSeq x(w, {{Ordinal::nat(1), 1}, {w, 0}});
    BlockSeq y = BlockSeq::constant(w, 1);
    CHECK(lex_compare(x, y) == Cmp::Less);
    CHECK(lex_compare(x, x) == Cmp::Equal);
    CHECK(split_level(x, y) == Ordinal::nat(1));
}

TEST_CASE("split level at a limit coordinate") {
    Ordinal a = o("w*2");
    BlockSeq x(a, {{Ordinal::omega(), 0}, {a, 1}});  // 0s then 1s from w on
    BlockSeq y = BlockSeq::constant(a, 0);
    CHECK(lex_compare(x, y) == Cmp::Greater);
    CHECK(split_level(x, y) == Ordinal::omega());
}

TEST_CASE("errors") {
    BlockSeq x = BlockSeq::constant(Ordinal::omega(), 0);
    BlockSeq y = BlockSeq::constant(o("w*2"), 0);
    CHECK_THROWS_AS((void)lex_compare(x, y), LengthMismatch);
    CHECK_THROWS_AS((void)split_level(x, x), EqualSequences);
}

TEST_CASE("text form round-trips") {
    BlockSeq x(o("w*2"), {{Ordinal::nat(3), 1}, {Ordinal::omega(), 0}, {o("w*2"), 1}});
    CHECK(x.str() == "[(3,1);(w*1,0);(w*2,1)] @ w*2");
    CHECK(BlockSeq::parse(x.str()) == x);
}

TEST_CASE("agreement with pointwise comparison, exhaustive for alpha <= 8") {
    for (int len = 1; len <= 8; ++len) {
        for (int xb = 0; xb < (1 << len); ++xb) {
            for (int yb = 0; yb < (1 << len); ++yb) {
                std::vector<int> xs, ys;
                for (int i = 0; i < len; ++i) {
                    xs.push_back((xb >> i) & 1);
                    ys.push_back((yb >> i) & 1);
                }
                BlockSeq x = from_bits(xs), y = from_bits(ys);
                int first_diff = -1;
                for (int i = 0; i < len; ++i)
                    if (xs[i] != ys[i]) { first_diff = i; break; }
                if (first_diff < 0) {
                    CHECK(lex_compare(x, y) == Cmp::Equal);
                } else {
                    Cmp want = xs[first_diff] < ys[first_diff] ? Cmp::Less : Cmp::Greater;
                    CHECK(lex_compare(x, y) == want);
                    CHECK(split_level(x, y) == Ordinal::nat(first_diff));
                }
            }
        }
        if (len > 6) break;  // 2^14 pairs is plenty
    }
}

TEST_CASE("split level symmetry and ultrametric law on random triples") {
    std::mt19937_64 rng(0x5EEDull);
    std::uniform_int_distribution<int> bit(0, 1);
    auto rand_seq = [&](int len) {
        std::vector<int> bits;
        for (int i = 0; i < len; ++i) bits.push_back(bit(rng));
        return from_bits(bits);
    };
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        BlockSeq x = rand_seq(12), y = rand_seq(12), z = rand_seq(12);
        if (!(x == y)) CHECK(split_level(x, y) == split_level(y, x));
        if (x == y || y == z || x == z) continue;
        Ordinal dxy = split_level(x, y), dyz = split_level(y, z), dxz = split_level(x, z);
        if (!(dxy == dyz)) {
            Ordinal lo = compare(dxy, dyz) == Cmp::Less ? dxy : dyz;
            CHECK(dxz == lo);
            ++checked;
        }
    }
    CHECK(checked > 50);
}
