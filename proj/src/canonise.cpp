#include "linord/canonise.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "linord/rationals.hpp"

namespace linord {

std::string canon_tag_str(CanonTag t) {
    switch (t) {
        case CanonTag::Omega: return "omega";
        case CanonTag::OmegaStar: return "omega-star";
        case CanonTag::Identical: return "identical";
        case CanonTag::Reversed: return "reversed";
    }
    return "?";
}

// --- canonise_sequence / i_canonise -----------------------------------------

Stream<Id> canonise_sequence(const Embedding& e, Stream<Id> xs, std::size_t scan_budget) {
    auto map = e.map;
    return Stream<Id>([xs, map, e, scan_budget] {
        auto pull = xs.start();
        auto last = std::make_shared<std::optional<Id>>();
        auto level = std::make_shared<std::optional<Ordinal>>();
        return [pull, last, level, e, scan_budget]() mutable -> std::optional<Id> {
            for (std::size_t scanned = 0; scanned < scan_budget; ++scanned) {
                auto c = pull();
                if (!c) return std::nullopt;
                if (!last->has_value()) {
                    *last = *c;
                    return c;
                }
                Ordinal d = delta_i(e, **last, *c);
                if (!level->has_value() || compare(**level, d) == Cmp::Less) {
                    *level = d;
                    *last = *c;
                    return c;
                }
            }
            throw BudgetExhausted("canonise_sequence: no extension within scan budget");
        };
    });
}

namespace {

Cmp wanted_verdict(SeqDir dir, Orientation orient) {
    // For window positions i < j (source order along the stream), the image
    // comparison an orientation demands.
    bool less = (dir == SeqDir::Omega) == (orient == Orientation::Preserving);
    return less ? Cmp::Less : Cmp::Greater;
}

}  // namespace

std::pair<Stream<Id>, Orientation> i_canonise(const Embedding& e, Stream<Id> xs, SeqDir dir,
                                              std::size_t window, std::size_t scan_budget) {
    // Materialize the window and find, per orientation, the longest
    // consistent subsequence (earliest-start, earliest-next selection).
    std::vector<Id> w = xs.take(window);
    if (w.size() < 3) throw BudgetExhausted("i_canonise: stream too short for the window");
    std::vector<BlockSeq> img;
    img.reserve(w.size());
    for (Id id : w) img.push_back(e.map(id));

    auto chain = [&](Orientation orient) {
        Cmp want = wanted_verdict(dir, orient);
        const std::size_t n = w.size();
        std::vector<std::size_t> len(n, 1);
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (lex_compare(img[i], img[j]) == want)
                    len[i] = std::max(len[i], len[j] + 1);
            }
        }
        std::size_t best = 0;
        for (std::size_t i = 0; i < n; ++i) best = std::max(best, len[i]);
        // earliest selection achieving the best length
        std::vector<std::size_t> picks;
        std::size_t need = best;
        std::size_t from = 0;
        while (need > 0) {
            for (std::size_t i = from; i < n; ++i) {
                if (len[i] < need) continue;
                if (!picks.empty() && lex_compare(img[picks.back()], img[i]) != want) continue;
                picks.push_back(i);
                from = i + 1;
                break;
            }
            --need;
        }
        return picks;
    };

    std::vector<std::size_t> asc = chain(Orientation::Preserving);
    std::vector<std::size_t> desc = chain(Orientation::Reversing);
    Orientation orient =
        asc.size() >= desc.size() ? Orientation::Preserving : Orientation::Reversing;
    std::vector<std::size_t> picks = orient == Orientation::Preserving ? asc : desc;
    Cmp want = wanted_verdict(dir, orient);

    std::vector<Id> head;
    for (std::size_t i : picks) head.push_back(w[i]);

    auto consistent = Stream<Id>([head, xs, e, want, window, scan_budget] {
        std::size_t at = 0;
        auto pull = xs.start();
        // skip the window portion once head is exhausted
        std::size_t skipped = 0;
        auto last = std::make_shared<std::optional<Id>>();
        return [head, at, pull, skipped, window, e, want, scan_budget,
                last]() mutable -> std::optional<Id> {
            if (at < head.size()) {
                *last = head[at];
                return head[at++];
            }
            while (skipped < window) {
                if (!pull()) return std::nullopt;
                ++skipped;
            }
            for (std::size_t scanned = 0; scanned < scan_budget; ++scanned) {
                auto c = pull();
                if (!c) return std::nullopt;
                if (!last->has_value() || lex_compare(e.map(**last), e.map(*c)) == want) {
                    *last = *c;
                    return c;
                }
            }
            throw BudgetExhausted("i_canonise: no orientation-consistent extension in budget");
        };
    });

    return {canonise_sequence(e, consistent, scan_budget), orient};
}

// --- second order machinery --------------------------------------------------

namespace {

// Shared cache of the fixed enumeration of Q.
class QValues {
public:
    static QValues& instance() {
        static QValues v;
        return v;
    }
    Rat at(Id i) {
        std::lock_guard<std::mutex> lock(mu_);
        while (vals_.size() <= i) vals_.push_back(q_at(vals_.size()));
        return vals_[i];
    }
    Cmp value_cmp(Id a, Id b) { return rat_compare(at(a), at(b)); }

private:
    std::vector<Rat> vals_;
    std::mutex mu_;
};

struct CanonCtx {
    const SecondOrder& so;
    CanonBudget b;
    std::uint64_t calls = 0;

    bool prec(Id a, Id b) {
        ++calls;
        return so.cmp(a, b) == Cmp::Less;
    }
    bool isc(Id x) {
        ++calls;
        return so.initial_segment_scattered(x);
    }
    bool fsc(Id x) {
        ++calls;
        return so.final_segment_scattered(x);
    }
    bool rat_less(Id a, Id b) { return QValues::instance().value_cmp(a, b) == Cmp::Less; }
};

using Pred = std::function<bool(Id)>;

std::optional<Id> first_member(const Pred& p, std::size_t scan) {
    for (Id j = 0; j < scan; ++j)
        if (p(j)) return j;
    return std::nullopt;
}

// Probes for a member strictly beyond `from` in the given direction: a short
// index scan first, then a deep confirmation scan.  Members beating a false
// extremum have height bounded by the set's structure, so the deep scan
// resolves them; a quiet deep scan confirms a genuine endpoint.
bool member_beyond(CanonCtx& ctx, const Pred& p, Id from, bool below) {
    for (Id j = 0; j < ctx.b.scan; ++j) {
        if (!p(j)) continue;
        if (below ? ctx.rat_less(j, from) : ctx.rat_less(from, j)) return true;
    }
    for (Id j = ctx.b.scan; j < ctx.b.endpoint_scan; ++j) {
        if (!p(j)) continue;
        if (below ? ctx.rat_less(j, from) : ctx.rat_less(from, j)) return true;
    }
    return false;
}

// Removes an actual <-endpoint of the set when the probes confirm one.
Pred drop_endpoints(CanonCtx& ctx, Pred p) {
    for (int round = 0; round < 2; ++round) {
        std::vector<Id> prefix;
        for (Id j = 0; j < ctx.b.scan && prefix.size() < ctx.b.chunk; ++j)
            if (p(j)) prefix.push_back(j);
        if (prefix.empty()) return p;
        Id lo = prefix[0], hi = prefix[0];
        for (Id m : prefix) {
            if (ctx.rat_less(m, lo)) lo = m;
            if (ctx.rat_less(hi, m)) hi = m;
        }
        bool lo_is_min = !member_beyond(ctx, p, lo, true);
        bool hi_is_max = !member_beyond(ctx, p, hi, false);
        if (!lo_is_min && !hi_is_max) return p;
        Pred base = p;
        Id drop_lo = lo, drop_hi = hi;
        bool dl = lo_is_min, dh = hi_is_max;
        p = [base, drop_lo, drop_hi, dl, dh](Id x) {
            if (dl && x == drop_lo) return false;
            if (dh && x == drop_hi) return false;
            return base(x);
        };
    }
    return p;
}

// One node of the q/Q recursion.
struct QNode {
    Pred member;
    Id pivot = 0;
    int colour = -1;  // decided when children are built
    std::shared_ptr<QNode> child[2];
};

using QNodePtr = std::shared_ptr<QNode>;

QNodePtr make_node(CanonCtx& ctx, Pred member) {
    auto node = std::make_shared<QNode>();
    node->member = drop_endpoints(ctx, std::move(member));
    auto pivot = first_member(node->member, ctx.b.scan);
    if (!pivot) throw BudgetExhausted("canonise: empty recursion node");
    node->pivot = *pivot;
    return node;
}

void build_children(CanonCtx& ctx, const QNodePtr& node) {
    if (node->colour >= 0) return;
    Id pivot = node->pivot;
    Pred mem = node->member;
    auto& qc = QValues::instance();
    Pred b0 = [mem, pivot, &qc](Id x) {
        return x != pivot && qc.value_cmp(x, pivot) == Cmp::Less && mem(x);
    };
    Pred b1 = [mem, pivot, &qc](Id x) {
        return x != pivot && qc.value_cmp(x, pivot) == Cmp::Greater && mem(x);
    };
    // Cache a member prefix per half; the separation search witnesses
    // non-emptiness inside these prefixes.
    auto members_of = [&](const Pred& p) {
        std::vector<Id> out;
        for (Id j = 0; j < ctx.b.scan && out.size() < ctx.b.members; ++j)
            if (p(j)) out.push_back(j);
        return out;
    };
    std::vector<Id> m0 = members_of(b0), m1 = members_of(b1);
    // Minimal n such that q_n separates the halves in the prec order, either
    // concordantly (colour 0) or crossed (colour 1).
    for (Id n = 0; n < ctx.b.n_budget; ++n) {
        auto below = [&](const std::vector<Id>& ms) {
            for (Id j : ms)
                if (ctx.prec(j, n)) return true;
            return false;
        };
        auto above = [&](const std::vector<Id>& ms) {
            for (Id j : ms)
                if (ctx.prec(n, j)) return true;
            return false;
        };
        bool case_a = below(m0) && above(m1);
        bool case_b = !case_a && above(m0) && below(m1);
        if (!case_a && !case_b) continue;
        auto so_ptr = &ctx.so;
        Pred a0, a1;
        std::uint64_t dummy = 0;
        (void)dummy;
        if (case_a) {
            node->colour = 0;
            a0 = [b0, n, so_ptr](Id x) { return b0(x) && so_ptr->cmp(x, n) == Cmp::Less; };
            a1 = [b1, n, so_ptr](Id x) { return b1(x) && so_ptr->cmp(n, x) == Cmp::Less; };
        } else {
            node->colour = 1;
            a0 = [b0, n, so_ptr](Id x) { return b0(x) && so_ptr->cmp(n, x) == Cmp::Less; };
            a1 = [b1, n, so_ptr](Id x) { return b1(x) && so_ptr->cmp(x, n) == Cmp::Less; };
        }
        node->child[0] = make_node(ctx, a0);
        node->child[1] = make_node(ctx, a1);
        return;
    }
    throw BudgetExhausted("canonise: no separating rational within the n budget");
}

// Lazily built colouring of the abstract binary tree backing mono_subtree.
struct QTree {
    CanonCtx* ctx;
    QNodePtr root;
    std::map<std::string, QNodePtr> nodes;

    QNodePtr at(const std::string& path) {
        auto it = nodes.find(path);
        if (it != nodes.end()) return it->second;
        QNodePtr cur = root;
        std::string walked;
        for (char c : path) {
            build_children(*ctx, cur);
            cur = cur->child[c - '0'];
            walked += c;
            nodes[walked] = cur;
        }
        return cur;
    }

    int colour(const std::string& path) {
        QNodePtr n = at(path);
        build_children(*ctx, n);
        return n->colour;
    }
};

// --- case (a): the back-and-forth reduction ---------------------------------

struct OmegaBuilder {
    std::shared_ptr<CanonCtx> ctx;
    bool mirrored;  // true: build the omega-star outcome on the reversed order

    bool prec(Id a, Id b) const { return mirrored ? ctx->prec(b, a) : ctx->prec(a, b); }
    bool seg_scattered(Id x) const { return mirrored ? ctx->fsc(x) : ctx->isc(x); }

    Stream<Id> witness(Stream<Id> chain) const {
        auto self = *this;
        return Stream<Id>([self, chain] {
            struct State {
                std::vector<Id> built;       // a_n, by construction step
                std::vector<Id> xs;          // chain prefix, one per step + lookahead
                std::vector<Id> emitted;
                Stream<Id>::Puller pull;
            };
            auto st = std::make_shared<State>();
            st->pull = chain.start();
            auto self2 = self;
            return [self2, st]() mutable -> std::optional<Id> {
                CanonCtx& c = *self2.ctx;
                while (true) {
                    // safe prefix: built elements prec-below the next chain point
                    if (st->xs.size() > st->built.size()) {
                        Id guard = st->xs[st->built.size()];
                        std::vector<Id> safe;
                        for (Id a : st->built)
                            if (self2.prec(a, guard)) safe.push_back(a);
                        std::sort(safe.begin(), safe.end(),
                                  [&](Id a, Id b) { return self2.prec(a, b); });
                        if (st->emitted.size() < safe.size()) {
                            Id next = safe[st->emitted.size()];
                            st->emitted.push_back(next);
                            return next;
                        }
                    }
                    // build the next a_n
                    const std::size_t n = st->built.size();
                    while (st->xs.size() <= n + 1) {
                        auto x = st->pull();
                        if (!x) throw BudgetExhausted("canonise: cofinal stream exhausted");
                        if (!self2.seg_scattered(*x))
                            throw CertificateViolated(
                                "canonise: segment along the cofinal stream is not scattered");
                        st->xs.push_back(*x);
                    }
                    Id xn = st->xs[n];
                    auto& qc = QValues::instance();
                    std::optional<Id> found;
                    for (Id j = 0; j < c.b.scan && !found; ++j) {
                        if (std::find(st->built.begin(), st->built.end(), j) != st->built.end())
                            continue;
                        // j must lie in F_n = {y : x_n preceq y}
                        if (self2.prec(j, xn)) continue;
                        bool ok = true;
                        for (std::size_t m = 0; m < n && ok; ++m) {
                            Cmp pattern = qc.value_cmp(n, m);
                            Cmp actual = qc.value_cmp(j, st->built[m]);
                            ok = pattern == actual;
                        }
                        if (ok) found = j;
                    }
                    if (!found)
                        throw BudgetExhausted("canonise: no pattern-matching element in budget");
                    st->built.push_back(*found);
                }
            };
        });
    }
};

}  // namespace

Stream<Id> strip_scattered_segments(Stream<Id> A, const SecondOrder& so, std::size_t scan) {
    auto isc = so.initial_segment_scattered;
    auto fsc = so.final_segment_scattered;
    Stream<Id> filtered = A.filter([isc, fsc](const Id& x) { return !isc(x) && !fsc(x); });
    // Redirect detection: a fully stripped prefix means the omega or
    // omega-star outcome applies instead.
    auto probe = A.take(scan);
    bool any = false;
    for (Id x : probe)
        if (!isc(x) && !fsc(x)) {
            any = true;
            break;
        }
    if (!probe.empty() && !any)
        throw CertificateViolated("strip: entire prefix stripped; outcome (a) applies");
    return filtered;
}

CanonOutcome canonise_on_rationals(const SecondOrder& so, const CanonBudget& budget) {
    auto ctx = std::make_shared<CanonCtx>(CanonCtx{so, budget});

    // Case (a): a cofinal stream along which every initial segment is
    // scattered yields the omega outcome (footnote: (a) wins when both apply).
    if (so.cofinal) {
        auto probe = so.cofinal->take(budget.probe);
        bool all = !probe.empty();
        for (Id x : probe) all = all && ctx->isc(x);
        if (all) {
            OmegaBuilder b{ctx, false};
            return CanonOutcome{CanonTag::Omega, b.witness(*so.cofinal), ctx->calls};
        }
    }
    if (so.coinitial) {
        auto probe = so.coinitial->take(budget.probe);
        bool all = !probe.empty();
        for (Id x : probe) all = all && ctx->fsc(x);
        if (all) {
            OmegaBuilder b{ctx, true};
            return CanonOutcome{CanonTag::OmegaStar, b.witness(*so.coinitial), ctx->calls};
        }
    }

    // Case (b): strip, then the q/Q recursion and the subtree search.
    auto isc = so.initial_segment_scattered;
    auto fsc = so.final_segment_scattered;
    Pred base = [isc, fsc](Id x) { return !isc(x) && !fsc(x); };
    {
        bool any = false;
        for (Id j = 0; j < budget.scan && !any; ++j) any = base(j);
        if (!any) throw CertificateViolated("canonise: everything stripped at the root");
    }

    auto tree = std::make_shared<QTree>();
    tree->ctx = ctx.get();
    // keep the context alive alongside the tree
    auto holder = std::make_shared<std::pair<std::shared_ptr<CanonCtx>, std::shared_ptr<QTree>>>(
        ctx, tree);
    tree->root = make_node(*ctx, base);

    NodeColouring colouring = [holder](const std::string& node) {
        return holder->second->colour(node);
    };

    StrongSubtree st = mono_subtree(colouring, 1, budget.subtree_bound);
    CanonTag tag = st.colour == 0 ? CanonTag::Identical : CanonTag::Reversed;

    // Witness: pivots of the homogeneous subtree's nodes, extended level by
    // level on demand (breadth-first over tree keys).
    auto bound = budget.subtree_bound;
    Stream<Id> witness([holder, colouring, bound, st] {
        auto cur = std::make_shared<StrongSubtree>(st);
        auto depth = std::make_shared<std::size_t>(1);
        auto keys = std::make_shared<std::vector<std::string>>();
        auto at = std::make_shared<std::size_t>(0);
        // breadth-first keys of 2^{<=depth}
        auto refresh = [cur, keys]() {
            keys->clear();
            std::vector<std::string> level{""};
            keys->push_back("");
            while (true) {
                std::vector<std::string> next;
                for (const auto& k : level) {
                    if (cur->embed.find(k + "0") == cur->embed.end()) return;
                    next.push_back(k + "0");
                    next.push_back(k + "1");
                }
                for (const auto& k : next) keys->push_back(k);
                level = next;
            }
        };
        refresh();
        return [holder, colouring, bound, cur, depth, keys, at,
                refresh]() mutable -> std::optional<Id> {
            if (*at >= keys->size()) {
                // deepen: search a fresh subtree one level deeper with the
                // same colour; deterministic, so prefixes stay consistent
                ++*depth;
                StrongSubtree bigger = mono_subtree(colouring, *depth, bound);
                if (bigger.colour != cur->colour)
                    throw InsufficientBound("subtree deepening flipped the colour");
                for (const auto& [k, img] : cur->embed)
                    if (bigger.embed.at(k) != img)
                        throw InsufficientBound("subtree deepening changed the prefix");
                *cur = bigger;
                refresh();
            }
            const std::string& key = (*keys)[*at];
            ++*at;
            QNodePtr qn = holder->second->at(cur->embed.at(key));
            return qn->pivot;
        };
    });

    return CanonOutcome{tag, witness, ctx->calls};
}

// --- witness checkers ---------------------------------------------------------

bool check_canon_witness(const SecondOrder& so, CanonTag tag, const std::vector<Id>& prefix,
                         const std::vector<Id>& deep, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    auto& qc = QValues::instance();
    for (std::size_t i = 0; i < prefix.size(); ++i)
        for (std::size_t j = i + 1; j < prefix.size(); ++j)
            if (prefix[i] == prefix[j]) return fail("witness repeats an element");
    switch (tag) {
        case CanonTag::Omega:
        case CanonTag::OmegaStar: {
            for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
                Cmp c = so.cmp(prefix[i], prefix[i + 1]);
                if (c != (tag == CanonTag::Omega ? Cmp::Less : Cmp::Greater))
                    return fail("witness enumeration is not prec-monotone");
            }
            break;
        }
        case CanonTag::Identical:
        case CanonTag::Reversed: {
            for (std::size_t i = 0; i < prefix.size(); ++i) {
                for (std::size_t j = 0; j < prefix.size(); ++j) {
                    if (i == j) continue;
                    Cmp value = qc.value_cmp(prefix[i], prefix[j]);
                    Cmp order = so.cmp(prefix[i], prefix[j]);
                    Cmp want = tag == CanonTag::Identical ? value : flip(value);
                    if (order != want) return fail("witness pair contradicts the tag");
                }
            }
            break;
        }
    }
    // Density of the witness set under the rational order: pairs from the
    // front quarter must have an element of the deeper pull strictly between.
    std::size_t quarter = std::max<std::size_t>(4, prefix.size() / 4);
    quarter = std::min(quarter, prefix.size());
    for (std::size_t i = 0; i < quarter; ++i) {
        for (std::size_t j = 0; j < quarter; ++j) {
            if (qc.value_cmp(prefix[i], prefix[j]) != Cmp::Less) continue;
            bool found = false;
            for (Id z : deep) {
                if (z == prefix[i] || z == prefix[j]) continue;
                if (qc.value_cmp(prefix[i], z) == Cmp::Less &&
                    qc.value_cmp(z, prefix[j]) == Cmp::Less) {
                    found = true;
                    break;
                }
            }
            if (!found) return fail("witness prefix is not dense at the front");
        }
    }
    return true;
}

// --- structured scripts --------------------------------------------------------

namespace {

std::int64_t floor_of(const Rat& r) {
    std::int64_t q = r.num / r.den;
    if (r.num % r.den != 0 && r.num < 0) --q;
    return q;
}

bool is_integer(const Rat& r) { return r.den == 1; }

// zig position of the integers enumerated 0, -1, 1, -2, 2, ...
std::uint64_t zig_pos(std::int64_t n) {
    return n >= 0 ? 2 * static_cast<std::uint64_t>(n)
                  : 2 * static_cast<std::uint64_t>(-n) - 1;
}

Cmp cmp_u64(std::uint64_t a, std::uint64_t b) {
    return a < b ? Cmp::Less : (a > b ? Cmp::Greater : Cmp::Equal);
}

Stream<Id> all_ids() {
    return Stream<Id>::of_fn([](std::uint64_t k) { return std::optional<Id>(k); });
}

Stream<Id> non_integer_ids() {
    return all_ids().filter([](const Id& x) { return !is_integer(q_at(x)); });
}

}  // namespace

std::vector<std::string> second_order_scripts() {
    return {"identity",
            "reverse",
            "enum-omega",
            "enum-omega-star",
            "zeta-blocks",
            "two-copy-shuffle",
            "shuffle-reversed",
            "scattered-prefix-identity",
            "scattered-prefix-omega",
            "scattered-prefix-reverse",
            "scattered-suffix-omega-star"};
}

SecondOrder second_order_script(const std::string& script) {
    auto& qc = QValues::instance();
    SecondOrder so;
    so.name = script;
    auto value_cmp = [&qc](Id a, Id b) { return qc.value_cmp(a, b); };

    if (script == "identity") {
        so.cmp = value_cmp;
        so.initial_segment_scattered = [](Id) { return false; };
        so.final_segment_scattered = [](Id) { return false; };
        so.structured_descr = t_eta();
        return so;
    }
    if (script == "reverse") {
        so.cmp = [value_cmp](Id a, Id b) { return flip(value_cmp(a, b)); };
        so.initial_segment_scattered = [](Id) { return false; };
        so.final_segment_scattered = [](Id) { return false; };
        so.structured_descr = t_eta();
        return so;
    }
    if (script == "enum-omega") {
        so.cmp = [](Id a, Id b) { return cmp_u64(a, b); };
        so.initial_segment_scattered = [](Id) { return true; };   // finite segments
        so.final_segment_scattered = [](Id) { return false; };    // cofinite, dense
        so.cofinal = all_ids();
        so.structured_descr = t_omega();
        return so;
    }
    if (script == "enum-omega-star") {
        so.cmp = [](Id a, Id b) { return cmp_u64(b, a); };
        so.initial_segment_scattered = [](Id) { return false; };
        so.final_segment_scattered = [](Id) { return true; };
        so.coinitial = all_ids();
        so.structured_descr = t_omega_star();
        return so;
    }
    if (script == "zeta-blocks") {
        // blocks [k, k+1) rearranged in reversed order, identity inside
        so.cmp = [&qc, value_cmp](Id a, Id b) {
            std::int64_t ka = floor_of(qc.at(a)), kb = floor_of(qc.at(b));
            if (ka != kb) return ka > kb ? Cmp::Less : Cmp::Greater;
            return value_cmp(a, b);
        };
        so.initial_segment_scattered = [](Id) { return false; };  // full blocks below
        so.final_segment_scattered = [](Id) { return false; };
        so.structured_descr = normalize(t_prod(t_sum({t_one(), t_eta()}), t_zeta()));
        return so;
    }
    if (script == "two-copy-shuffle" || script == "shuffle-reversed") {
        bool reversed = script == "shuffle-reversed";
        // halves by denominator parity, each half dense
        auto half = [&qc](Id x) { return qc.at(x).den % 2 == 0 ? 1 : 0; };
        so.cmp = [half, value_cmp, reversed](Id a, Id b) {
            int ha = half(a), hb = half(b);
            if (ha != hb) return ha < hb ? Cmp::Less : Cmp::Greater;
            Cmp c = value_cmp(a, b);
            return reversed ? flip(c) : c;
        };
        so.initial_segment_scattered = [](Id) { return false; };
        so.final_segment_scattered = [](Id) { return false; };
        so.structured_descr = normalize(t_sum({t_eta(), t_eta()}));
        return so;
    }
    if (script == "scattered-prefix-identity" || script == "scattered-prefix-reverse") {
        bool reversed = script == "scattered-prefix-reverse";
        // integers (a scattered set) first by value, the rest by value
        so.cmp = [&qc, value_cmp, reversed](Id a, Id b) {
            bool ia = is_integer(qc.at(a)), ib = is_integer(qc.at(b));
            if (ia != ib) return ia ? Cmp::Less : Cmp::Greater;
            Cmp c = value_cmp(a, b);
            return (!ia && reversed) ? flip(c) : c;
        };
        so.initial_segment_scattered = [&qc](Id x) { return is_integer(qc.at(x)); };
        so.final_segment_scattered = [](Id) { return false; };
        so.structured_descr = normalize(t_sum({t_zeta(), t_eta()}));
        return so;
    }
    if (script == "scattered-prefix-omega" || script == "scattered-suffix-omega-star") {
        bool mirror = script == "scattered-suffix-omega-star";
        // integers in zig order, then non-integers in enumeration order;
        // the whole order has type omega (mirrored: omega-star)
        auto base = [&qc](Id a, Id b) {
            const Rat ra = qc.at(a), rb = qc.at(b);
            bool ia = is_integer(ra), ib = is_integer(rb);
            if (ia != ib) return ia ? Cmp::Less : Cmp::Greater;
            if (ia) return cmp_u64(zig_pos(ra.num), zig_pos(rb.num));
            return cmp_u64(a, b);
        };
        if (!mirror) {
            so.cmp = base;
            so.initial_segment_scattered = [](Id) { return true; };
            so.final_segment_scattered = [&qc](Id x) { return false; };
            so.cofinal = non_integer_ids();
            so.structured_descr = t_omega();
        } else {
            so.cmp = [base](Id a, Id b) { return flip(base(a, b)); };
            so.initial_segment_scattered = [](Id) { return false; };
            so.final_segment_scattered = [](Id) { return true; };
            so.coinitial = non_integer_ids();
            so.structured_descr = t_omega_star();
        }
        return so;
    }
    throw std::invalid_argument("unknown second-order script: " + script);
}

SecondOrder load_second_order(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open second-order file: " + path);
    std::string line, script;
    TermPtr order;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = line.substr(0, colon);
        std::string val = line.substr(colon + 1);
        auto trim = [](std::string& s) {
            while (!s.empty() && std::isspace((unsigned char)s.front())) s.erase(s.begin());
            while (!s.empty() && std::isspace((unsigned char)s.back())) s.pop_back();
        };
        trim(key);
        trim(val);
        if (key == "script") script = val;
        if (key == "order") order = parse_term(val);
    }
    if (script.empty())
        throw std::invalid_argument("second-order file needs a `script:` line");
    SecondOrder so = second_order_script(script);
    if (order) so.structured_descr = normalize(order);
    return so;
}

}  // namespace linord
