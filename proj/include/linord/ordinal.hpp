#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace linord {

using BigNat = boost::multiprecision::cpp_int;

enum class Cmp { Less, Equal, Greater };

inline Cmp cmp_of_int(int c) { return c < 0 ? Cmp::Less : (c > 0 ? Cmp::Greater : Cmp::Equal); }
inline int  sign_of(Cmp c)   { return c == Cmp::Less ? -1 : (c == Cmp::Greater ? 1 : 0); }
inline Cmp  flip(Cmp c)      { return c == Cmp::Less ? Cmp::Greater : (c == Cmp::Greater ? Cmp::Less : Cmp::Equal); }

// Ordinal below w^w in Cantor normal form: sum of w^exp * coeff with exponents
// strictly descending naturals and coefficients >= 1.  Exponents are capped at
// naturals (values stay below w^w); operations that would need a transfinite
// exponent throw.
class Ordinal {
public:
    struct Term {
        std::uint64_t exp;
        BigNat coeff;
        bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
    };

    Ordinal() = default;                       // zero
    static Ordinal nat(BigNat n);
    static Ordinal omega();
    static Ordinal omega_pow(std::uint64_t e, BigNat c = 1);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const { return terms_.empty() || terms_.front().exp == 0; }
    // Finite part (coefficient of w^0), e.g. 4 for w*2+4.
    BigNat finite_part() const;

    bool operator==(const Ordinal& o) const { return terms_ == o.terms_; }

    std::string str() const;

    // Builds from raw terms; validates the CNF invariants.
    static Ordinal from_terms(std::vector<Term> ts);

private:
    std::vector<Term> terms_;
};

Cmp compare(const Ordinal& a, const Ordinal& b);
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);

inline bool operator<(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Cmp::Less; }
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return compare(a, b) != Cmp::Greater; }

// Text syntax: `w^2*3 + w*1 + 4`.  parse(str()) round-trips exactly.
Ordinal parse_ordinal(const std::string& text);

// Pair of splitting levels, ordered lexicographically.
struct SplitPair {
    Ordinal first;
    Ordinal second;
    bool operator==(const SplitPair& o) const { return first == o.first && second == o.second; }
};

Cmp compare(const SplitPair& p, const SplitPair& q);

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t p)
        : std::runtime_error(what + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

}  // namespace linord
