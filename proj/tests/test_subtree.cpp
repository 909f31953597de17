#include <random>

#include "doctest.h"
#include "linord/subtree.hpp"

using namespace linord;

TEST_CASE("constant colouring gives the identity subtree") {
    NodeColouring zero = [](const std::string&) { return 0; };
    StrongSubtree st = mono_subtree(zero, 3, 6);
    CHECK(st.colour == 0);
    CHECK(st.level_set == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(st.embed.at("") == "");
    CHECK(st.embed.at("01") == "01");
    CHECK(check_strong_subtree(st, 3));
    CHECK(check_monochromatic(st, zero));
}

TEST_CASE("parity colouring routes through even levels") {
    NodeColouring parity = [](const std::string& s) { return int(s.size() % 2); };
    StrongSubtree st = mono_subtree(parity, 3, 8);
    CHECK(st.colour == 0);
    for (std::size_t L : st.level_set) CHECK(L % 2 == 0);
    CHECK(st.level_set == std::vector<std::size_t>{0, 2, 4, 6});
    CHECK(check_strong_subtree(st, 3));
    CHECK(check_monochromatic(st, parity));
}

TEST_CASE("last-bit colouring routes the 1-direction through extensions ending in 0") {
    NodeColouring last_bit = [](const std::string& s) {
        return s.empty() ? 0 : int(s.back() - '0');
    };
    StrongSubtree st = mono_subtree(last_bit, 3, 5);
    CHECK(st.colour == 0);
    CHECK(check_strong_subtree(st, 3));
    CHECK(check_monochromatic(st, last_bit));
    // the image of s^1 must end in 0 while extending in direction 1
    const std::string& img1 = st.embed.at("1");
    const std::string& img = st.embed.at("");
    CHECK(img1.size() > img.size());
    CHECK(img1[img.size()] == '1');
    CHECK(img1.back() == '0');
}

TEST_CASE("insufficient bound is an error, not a wrong subtree") {
    // colour forbids everything except the root
    NodeColouring c = [](const std::string& s) { return s.empty() ? 0 : 1 + 0 * s[0]; };
    CHECK_THROWS_AS(mono_subtree([](const std::string& s) { return s.size() < 2 ? 0 : 1; }, 3, 6),
                    InsufficientBound);
    CHECK_THROWS_AS(mono_subtree(c, 4, 3), InsufficientBound);
}

TEST_CASE("determinism: double run yields identical output") {
    std::mt19937_64 rng(0x5137ull);
    for (int trial = 0; trial < 10; ++trial) {
        // random 3-state automaton colouring
        int delta[3][2], out[3];
        for (int s = 0; s < 3; ++s) {
            delta[s][0] = int(rng() % 3);
            delta[s][1] = int(rng() % 3);
            out[s] = int(rng() % 2);
        }
        NodeColouring c = [&](const std::string& node) {
            int s = 0;
            for (char ch : node) s = delta[s][ch - '0'];
            return out[s];
        };
        StrongSubtree a = mono_subtree(c, 3, 10);
        StrongSubtree b = mono_subtree(c, 3, 10);
        CHECK(a.embed == b.embed);
        CHECK(a.level_set == b.level_set);
        CHECK(a.colour == b.colour);
        CHECK(check_strong_subtree(a, 3));
        CHECK(check_monochromatic(a, c));
    }
}
