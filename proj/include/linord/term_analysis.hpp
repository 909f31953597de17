#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "linord/order_term.hpp"
#include "linord/ordinal.hpp"

namespace linord {

// Exact element counts over realized terms: a natural number or infinity.
struct Count {
    bool inf = false;
    std::uint64_t n = 0;

    static Count of(std::uint64_t k) { return Count{false, k}; }
    static Count infinite() { return Count{true, 0}; }
    bool is_zero() const { return !inf && n == 0; }
    bool operator==(const Count& o) const { return inf == o.inf && (inf || n == o.n); }
};

Count count_add(Count a, Count b);
Count count_mul(Count a, Count b);

// Position of an element inside a realization of a normalized term.
//  Fin / Omega / OmegaStar: k  (OmegaStar counts from the top)
//  Eta: k = index into the fixed enumeration of Q
//  Sum: part + sub
//  Prod: block element (inner) + index (outer); colex order, outer first
struct Addr;
using AddrPtr = std::shared_ptr<const Addr>;
struct Addr {
    std::uint64_t k = 0;
    std::uint32_t part = 0;
    AddrPtr inner, outer;  // Prod; Sum uses inner as the sub-address
};

AddrPtr addr_leaf(std::uint64_t k);
AddrPtr addr_sum(std::uint32_t part, AddrPtr sub);
AddrPtr addr_prod(AddrPtr inner, AddrPtr outer);
bool addr_eq(const AddrPtr& a, const AddrPtr& b);
std::string addr_str(const AddrPtr& a);

// Order of the realized positions; both addresses must fit the term shape.
Cmp addr_compare(const TermPtr& t, const AddrPtr& x, const AddrPtr& y);

Count term_size(const TermPtr& t);
Count count_above(const TermPtr& t, const AddrPtr& a);
Count count_below(const TermPtr& t, const AddrPtr& a);
// a strictly below b.
Count count_between(const TermPtr& t, const AddrPtr& a, const AddrPtr& b);

bool has_min(const TermPtr& t);
bool has_max(const TermPtr& t);
bool has_immediate_above(const TermPtr& t, const AddrPtr& a);
bool has_immediate_below(const TermPtr& t, const AddrPtr& a);

// Elements with finitely many others below (resp. above) them.
Count bot_run(const TermPtr& t);
Count top_run(const TermPtr& t);

// In-class neighbours under the finite condensation: how many elements above
// (below) the given one lie at finite distance.
Count cls_above(const TermPtr& t, const AddrPtr& a);
Count cls_below(const TermPtr& t, const AddrPtr& a);

// Whether the open interval (lo, hi) of the realization contains a densely
// ordered suborder; a missing bound means the interval is unbounded that way.
bool interval_contains_eta(const TermPtr& t, const AddrPtr& lo, const AddrPtr& hi);

}  // namespace linord
