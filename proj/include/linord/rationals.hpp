#pragma once

#include <cstdint>
#include <string>

#include "linord/ordinal.hpp"

namespace linord {

// Reduced fraction num/den, den >= 1.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    std::string str() const;
};

Cmp rat_compare(const Rat& a, const Rat& b);

// The fixed enumeration of Q: level h = |num| + den = 1, 2, ..., reduced
// fractions within a level by ascending numerator.  "Minimal index"
// throughout the project means minimal index in this enumeration.
Rat q_at(std::uint64_t index);
std::uint64_t q_index(const Rat& r);

Rat rat_of(std::int64_t num, std::int64_t den);

}  // namespace linord
