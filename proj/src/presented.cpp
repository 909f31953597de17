#include "linord/presented.hpp"

#include <mutex>
#include <vector>

#include "linord/rationals.hpp"

namespace linord {

namespace {

// Lazily materialized address enumeration per realized term.
class AddrEnum {
public:
    explicit AddrEnum(TermPtr t) : term_(std::move(t)) {}

    // Address of the id-th enumerated element, or null past the end.
    AddrPtr at(std::uint64_t id) {
        std::lock_guard<std::mutex> lock(mu_);
        while (cache_.size() <= id && !done_) step();
        return id < cache_.size() ? cache_[id] : nullptr;
    }

    const TermPtr& term() const { return term_; }

private:
    void step() {
        AddrPtr next = emit(term_, cache_.size());
        if (next)
            cache_.push_back(next);
        else
            done_ = true;
    }

    // k-th element of the fixed enumeration of t, or null when t has fewer.
    static AddrPtr emit(const TermPtr& t, std::uint64_t k) {
        switch (t->kind) {
            case TermKind::Zero: return nullptr;
            case TermKind::One: return k == 0 ? addr_leaf(0) : nullptr;
            case TermKind::Fin: return k < t->n ? addr_leaf(k) : nullptr;
            case TermKind::Omega:
            case TermKind::OmegaStar:
            case TermKind::Eta:
                return addr_leaf(k);
            case TermKind::Sum: {
                // Round-robin over parts, skipping exhausted ones.
                std::vector<std::uint64_t> used(t->parts.size(), 0);
                std::uint64_t remaining = k;
                while (true) {
                    bool progressed = false;
                    for (std::uint32_t j = 0; j < t->parts.size(); ++j) {
                        Count sz = term_size(t->parts[j]);
                        if (!sz.inf && used[j] >= sz.n) continue;
                        if (remaining == 0) return addr_sum(j, emit(t->parts[j], used[j]));
                        ++used[j];
                        --remaining;
                        progressed = true;
                    }
                    if (!progressed) return nullptr;
                }
            }
            case TermKind::Prod: {
                // Cantor diagonal over (inner, outer) index pairs.
                Count si = term_size(t->lhs), so = term_size(t->rhs);
                if (si.is_zero() || so.is_zero()) return nullptr;
                std::uint64_t seen = 0;
                for (std::uint64_t d = 0;; ++d) {
                    bool any = false;
                    for (std::uint64_t o = 0; o <= d; ++o) {
                        std::uint64_t i = d - o;
                        if (!so.inf && o >= so.n) continue;
                        if (!si.inf && i >= si.n) continue;
                        any = true;
                        if (seen == k)
                            return addr_prod(emit(t->lhs, i), emit(t->rhs, o));
                        ++seen;
                    }
                    if (!any && !si.inf && !so.inf && d > si.n + so.n) return nullptr;
                }
            }
            default:
                throw TermDomainError("realize: term not normalized");
        }
    }

    TermPtr term_;
    std::vector<AddrPtr> cache_;
    bool done_ = false;
    std::mutex mu_;
};

}  // namespace

OrderPtr realize(const TermPtr& t_raw) {
    TermPtr t = normalize(t_raw);
    auto en = std::make_shared<AddrEnum>(t);
    auto o = std::make_shared<PresentedOrder>();
    o->type_tag = t;
    o->address = [en](Id id) { return en->at(id); };
    o->carrier = Stream<Id>::of_fn([en](std::uint64_t k) -> std::optional<Id> {
        if (!en->at(k)) return std::nullopt;
        return k;
    });
    o->cmp = [en, t](Id a, Id b) {
        AddrPtr x = en->at(a), y = en->at(b);
        if (!x || !y) throw std::out_of_range("realize: id beyond carrier");
        return addr_compare(t, x, y);
    };
    return o;
}

std::vector<Id> realized_prefix(const PresentedOrder& o, std::size_t n) {
    if (n == 0) throw std::invalid_argument("prefix size must be positive");
    return o.carrier.take(n);
}

OrderPtr rationals() {
    struct Cache {
        std::vector<Rat> vals;
        std::mutex mu;
        Rat at(Id i) {
            std::lock_guard<std::mutex> lock(mu);
            while (vals.size() <= i) vals.push_back(q_at(vals.size()));
            return vals[i];
        }
    };
    auto cache = std::make_shared<Cache>();
    auto o = std::make_shared<PresentedOrder>();
    o->type_tag = t_eta();
    o->address = [](Id id) { return addr_leaf(id); };
    o->carrier = Stream<Id>::of_fn([](std::uint64_t k) { return std::optional<Id>(k); });
    o->cmp = [cache](Id a, Id b) { return rat_compare(cache->at(a), cache->at(b)); };
    return o;
}

Ordinal delta_i(const Embedding& e, Id a, Id b) {
    if (a == b) throw std::invalid_argument("delta_i: equal elements");
    BlockSeq x = e.map(a), y = e.map(b);
    if (x == y) throw std::invalid_argument("delta_i: embedding not injective on pair");
    return split_level(x, y);
}

SplitPair d_n(const Embedding& e, const std::vector<Id>& X, std::size_t n) {
    if (X.size() < n + 3)
        throw InsufficientPrefix("d_n: need " + std::to_string(n + 3) + " elements, have " +
                                 std::to_string(X.size()));
    return SplitPair{delta_i(e, X[n], X[n + 1]), delta_i(e, X[n + 1], X[n + 2])};
}

OrderPtr order_from_injection(const Embedding& e) {
    auto o = std::make_shared<PresentedOrder>();
    o->carrier = e.source->carrier;
    auto map = e.map;
    o->cmp = [map](Id a, Id b) {
        if (a == b) return Cmp::Equal;
        return lex_compare(map(a), map(b));
    };
    return o;
}

}  // namespace linord
