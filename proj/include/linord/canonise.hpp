#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "linord/presented.hpp"
#include "linord/stream.hpp"
#include "linord/subtree.hpp"

namespace linord {

enum class SeqDir { Omega, OmegaStar };
enum class Orientation { Preserving, Reversing };

struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what)
        : std::runtime_error("enumeration budget exhausted: " + what) {}
};

struct CertificateViolated : std::runtime_error {
    explicit CertificateViolated(const std::string& what)
        : std::runtime_error("certificate violated: " + what) {}
};

// Greedy minimal-index extraction of a subsequence whose consecutive image
// split levels strictly increase.  Scans at most scan_budget candidates per
// output element; a stall raises BudgetExhausted (logical failure on genuine
// monotone input does not occur).
Stream<Id> canonise_sequence(const Embedding& e, Stream<Id> xs, std::size_t scan_budget);

// First restricts to a subsequence on which the embedding is orientation
// consistent (decided inside a materialized window, minimal-index greedy),
// then canonises.  dir describes the source monotonicity of xs.
std::pair<Stream<Id>, Orientation> i_canonise(const Embedding& e, Stream<Id> xs, SeqDir dir,
                                              std::size_t window, std::size_t scan_budget);

// Second linear order on Q, given by index comparison plus the scatteredness
// oracles the canonisation lemma needs.  Structured scripts discharge the
// oracles exactly.
struct SecondOrder {
    std::string name;
    std::function<Cmp(Id, Id)> cmp;                       // the order `prec` on Q-indices
    std::function<bool(Id)> initial_segment_scattered;    // <-scatteredness of (<-, q_i)_prec
    std::function<bool(Id)> final_segment_scattered;
    std::optional<Stream<Id>> cofinal;                    // prec-increasing cofinal stream
    std::optional<Stream<Id>> coinitial;                  // prec-decreasing coinitial stream
    TermPtr structured_descr;                             // may be null
};

enum class CanonTag { Omega, OmegaStar, Identical, Reversed };
std::string canon_tag_str(CanonTag t);

struct CanonOutcome {
    CanonTag tag;
    Stream<Id> witness;            // injective stream of Q-indices
    std::uint64_t oracle_calls;    // comparison + scatteredness queries at decision time
};

struct CanonBudget {
    std::size_t scan = 4000;          // per-search enumeration budget
    std::size_t endpoint_scan = 150000;  // deep scan confirming a set endpoint
    std::size_t probe = 6;            // cofinal/coinitial oracle probes
    std::size_t n_budget = 20000;     // minimal-n search horizon
    std::size_t chunk = 24;           // prefix size for endpoint detection
    std::size_t members = 48;         // cached member prefix per recursion node
    std::size_t subtree_bound = 12;   // level bound D of the tree search
};

// The four-outcome canonisation of the second order: omega / omega-star via
// the back-and-forth reduction when every proper initial (final) segment is
// scattered, otherwise the binary-tree recursion, node colouring and a
// monochromatic strong subtree.
CanonOutcome canonise_on_rationals(const SecondOrder& so, const CanonBudget& budget);

// Removes the maximal prec-initial segment all of whose proper initial
// segments are <-scattered, then symmetrically for final segments; raises
// CertificateViolated (redirect to the omega/omega-star outcome) when the
// whole scanned prefix is stripped.
Stream<Id> strip_scattered_segments(Stream<Id> A, const SecondOrder& so, std::size_t scan);

// Tag checkers for witness prefixes; `deep` supplies extra witness elements
// for the density checks.
bool check_canon_witness(const SecondOrder& so, CanonTag tag, const std::vector<Id>& prefix,
                         const std::vector<Id>& deep, std::string* why = nullptr);

// Structured second orders by script name.
std::vector<std::string> second_order_scripts();
SecondOrder second_order_script(const std::string& script);
// File format: lines `order: <term>` (informative) and `script: <name>`.
SecondOrder load_second_order(const std::string& path);

}  // namespace linord
