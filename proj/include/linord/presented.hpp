#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "linord/block_seq.hpp"
#include "linord/order_term.hpp"
#include "linord/stream.hpp"
#include "linord/term_analysis.hpp"

namespace linord {

using Id = std::uint64_t;

// Concrete countable linear order: a lazy enumeration of element ids with a
// pure comparison oracle.  Realized terms also carry the term and per-element
// realization addresses; oracle-only orders leave those empty.
struct PresentedOrder {
    Stream<Id> carrier;
    std::function<Cmp(Id, Id)> cmp;
    TermPtr type_tag;                          // null when oracle-only
    std::function<AddrPtr(Id)> address;        // null / returns null when absent

    bool less(Id a, Id b) const { return cmp(a, b) == Cmp::Less; }
};

using OrderPtr = std::shared_ptr<const PresentedOrder>;

// Realization of a normalized countable term on ids 0, 1, 2, ... in a fixed
// deterministic enumeration; addresses record the constructor path.
OrderPtr realize(const TermPtr& t);

// First n ids of the carrier; n = 0 is rejected.
std::vector<Id> realized_prefix(const PresentedOrder& o, std::size_t n);

// The fixed presentation of Q: id n is the n-th rational of the pinned
// enumeration, compared as fractions.
OrderPtr rationals();

struct Embedding {
    OrderPtr source;
    Ordinal target_alpha;
    std::function<BlockSeq(Id)> map;
};

// delta(i(a), i(b)); equal images violate injectivity and throw.
Ordinal delta_i(const Embedding& e, Id a, Id b);

// (delta_i(x_n, x_{n+1}), delta_i(x_{n+1}, x_{n+2})) for X in canonical
// enumeration; X must supply n + 3 elements.
SplitPair d_n(const Embedding& e, const std::vector<Id>& X, std::size_t n);

// Pull-back of the lexicographic order along the injection.
OrderPtr order_from_injection(const Embedding& e);

struct InsufficientPrefix : std::runtime_error {
    explicit InsufficientPrefix(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace linord
