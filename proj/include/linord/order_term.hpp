#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "linord/ordinal.hpp"  // Cmp, ParseError

namespace linord {

// Syntactic order type built from 0, 1, fin(n), w, w*, z, eta by finite sums,
// colexicographic binary products (left factor = block) and reversal.
enum class TermKind : std::uint8_t {
    Zero, One, Fin, Omega, OmegaStar, Zeta, Eta, Sum, Prod, Rev
};

struct OrderTerm;
using TermPtr = std::shared_ptr<const OrderTerm>;

struct OrderTerm {
    TermKind kind;
    std::uint64_t n = 0;         // Fin
    std::vector<TermPtr> parts;  // Sum (>= 2 entries after normalization)
    TermPtr lhs, rhs;            // Prod
    TermPtr sub;                 // Rev
};

TermPtr t_zero();
TermPtr t_one();
TermPtr t_fin(std::uint64_t n);
TermPtr t_omega();
TermPtr t_omega_star();
TermPtr t_zeta();
TermPtr t_eta();
TermPtr t_sum(std::vector<TermPtr> parts);
TermPtr t_prod(TermPtr a, TermPtr b);
TermPtr t_rev(TermPtr t);

bool term_eq(const TermPtr& a, const TermPtr& b);
std::size_t term_hash(const TermPtr& t);
std::string term_str(const TermPtr& t);

// Grammar: 0 | 1 | fin(n) | w | w* | z | eta | t + t | t . t | rev(t)
// `.` binds tighter than `+`; both associate to form flat sums / right-nested
// products.  term_str of a parsed term round-trips.
TermPtr parse_term(const std::string& text);

// Rewrites to a fixed point: flattens sums, drops zero summands/factors,
// multiplies out adjacent finite factors, right-nests products, expands
// z = w* + w, and pushes rev inward via (s+t)* = t*+s*, (st)* = s*t*,
// w* = rev(w), eta* = eta.
TermPtr normalize(const TermPtr& t);

bool is_scattered(const TermPtr& t);

enum class JullienClass { StrictlyLeft, StrictlyRight, NotIndecomposable };
std::string jullien_str(JullienClass c);

// Requires a normalized, scattered, infinite term.
JullienClass jullien_classify(const TermPtr& t);

// Splits a normalized scattered term into indecomposable pieces whose sum is
// mutually embeddable with the input.
std::vector<TermPtr> laver_decompose(const TermPtr& t);

// Embeddability s <= t.  Total on terms generated from finite types, w, w* by
// finite sums and binary products, plus the eta / non-scattered cases; pairs
// escaping the recursion raise OutsideFragment instead of guessing.
bool embeds(const TermPtr& s, const TermPtr& t);

bool has_omega_omegastar(const TermPtr& t);

struct OutsideFragment : std::runtime_error {
    explicit OutsideFragment(const std::string& what)
        : std::runtime_error("outside decidable fragment: " + what) {}
};

struct TermDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace linord
