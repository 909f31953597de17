#include "linord/rationals.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace linord {

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Cmp rat_compare(const Rat& a, const Rat& b) {
    // Cross-multiply; __int128 covers every product of int64 operands.
    __int128 l = static_cast<__int128>(a.num) * b.den;
    __int128 r = static_cast<__int128>(b.num) * a.den;
    if (l < r) return Cmp::Less;
    if (l > r) return Cmp::Greater;
    return Cmp::Equal;
}

Rat rat_of(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    return Rat{num, den};
}

namespace {

// Reduced fractions at level h = |num| + den, ascending by numerator.
void level_entries(std::int64_t h, std::vector<Rat>& out) {
    out.clear();
    for (std::int64_t num = -(h - 1); num <= h - 1; ++num) {
        std::int64_t den = h - (num < 0 ? -num : num);
        if (den < 1) continue;
        if (std::gcd(num < 0 ? -num : num, den) != 1 && !(num == 0 && den == 1)) continue;
        if (num == 0 && den != 1) continue;
        out.push_back(Rat{num, den});
    }
}

}  // namespace

Rat q_at(std::uint64_t index) {
    std::vector<Rat> level;
    std::uint64_t seen = 0;
    for (std::int64_t h = 1;; ++h) {
        level_entries(h, level);
        if (index < seen + level.size()) return level[index - seen];
        seen += level.size();
    }
}

std::uint64_t q_index(const Rat& r) {
    const std::int64_t h_target = (r.num < 0 ? -r.num : r.num) + r.den;
    std::vector<Rat> level;
    std::uint64_t seen = 0;
    for (std::int64_t h = 1; h <= h_target; ++h) {
        level_entries(h, level);
        if (h == h_target) {
            for (std::size_t i = 0; i < level.size(); ++i)
                if (level[i] == r) return seen + i;
            throw std::invalid_argument("q_index: fraction not reduced");
        }
        seen += level.size();
    }
    throw std::invalid_argument("q_index: unreachable");
}

}  // namespace linord
