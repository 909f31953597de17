#include "linord/term_analysis.hpp"

#include <sstream>
#include <stdexcept>

#include "linord/rationals.hpp"

namespace linord {

Count count_add(Count a, Count b) {
    if (a.inf || b.inf) return Count::infinite();
    if (a.n > UINT64_MAX - b.n) return Count::infinite();  // saturate
    return Count::of(a.n + b.n);
}

Count count_mul(Count a, Count b) {
    if (a.is_zero() || b.is_zero()) return Count::of(0);
    if (a.inf || b.inf) return Count::infinite();
    if (b.n != 0 && a.n > UINT64_MAX / b.n) return Count::infinite();
    return Count::of(a.n * b.n);
}

AddrPtr addr_leaf(std::uint64_t k) {
    auto a = std::make_shared<Addr>();
    a->k = k;
    return a;
}

AddrPtr addr_sum(std::uint32_t part, AddrPtr sub) {
    auto a = std::make_shared<Addr>();
    a->part = part;
    a->inner = std::move(sub);
    return a;
}

AddrPtr addr_prod(AddrPtr inner, AddrPtr outer) {
    auto a = std::make_shared<Addr>();
    a->inner = std::move(inner);
    a->outer = std::move(outer);
    return a;
}

bool addr_eq(const AddrPtr& a, const AddrPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return a->k == b->k && a->part == b->part && addr_eq(a->inner, b->inner) &&
           addr_eq(a->outer, b->outer);
}

std::string addr_str(const AddrPtr& a) {
    if (!a) return "_";
    std::ostringstream out;
    if (a->outer) {
        out << "(" << addr_str(a->inner) << "," << addr_str(a->outer) << ")";
    } else if (a->inner) {
        out << a->part << ":" << addr_str(a->inner);
    } else {
        out << a->k;
    }
    return out.str();
}

namespace {

[[noreturn]] void shape_error(const char* what) {
    throw TermDomainError(std::string("address does not fit term: ") + what);
}

const TermPtr& sum_part(const TermPtr& t, std::uint32_t j) {
    if (j >= t->parts.size()) shape_error("sum part out of range");
    return t->parts[j];
}

}  // namespace

Cmp addr_compare(const TermPtr& t, const AddrPtr& x, const AddrPtr& y) {
    switch (t->kind) {
        case TermKind::One:
        case TermKind::Fin:
        case TermKind::Omega:
            return x->k < y->k ? Cmp::Less : (x->k > y->k ? Cmp::Greater : Cmp::Equal);
        case TermKind::OmegaStar:
            return x->k > y->k ? Cmp::Less : (x->k < y->k ? Cmp::Greater : Cmp::Equal);
        case TermKind::Eta:
            return rat_compare(q_at(x->k), q_at(y->k));
        case TermKind::Sum:
            if (x->part != y->part) return x->part < y->part ? Cmp::Less : Cmp::Greater;
            return addr_compare(sum_part(t, x->part), x->inner, y->inner);
        case TermKind::Prod: {
            Cmp outer = addr_compare(t->rhs, x->outer, y->outer);
            if (outer != Cmp::Equal) return outer;
            return addr_compare(t->lhs, x->inner, y->inner);
        }
        default:
            shape_error("unexpected term kind");
    }
}

Count term_size(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Zero: return Count::of(0);
        case TermKind::One: return Count::of(1);
        case TermKind::Fin: return Count::of(t->n);
        case TermKind::Omega:
        case TermKind::OmegaStar:
        case TermKind::Eta:
            return Count::infinite();
        case TermKind::Sum: {
            Count acc = Count::of(0);
            for (const auto& p : t->parts) acc = count_add(acc, term_size(p));
            return acc;
        }
        case TermKind::Prod:
            return count_mul(term_size(t->lhs), term_size(t->rhs));
        default:
            shape_error("unexpected term kind");
    }
}

Count count_above(const TermPtr& t, const AddrPtr& a) {
    switch (t->kind) {
        case TermKind::One: return Count::of(0);
        case TermKind::Fin: return Count::of(t->n - 1 - a->k);
        case TermKind::Omega: return Count::infinite();
        case TermKind::OmegaStar: return Count::of(a->k);
        case TermKind::Eta: return Count::infinite();
        case TermKind::Sum: {
            Count acc = count_above(sum_part(t, a->part), a->inner);
            for (std::size_t j = a->part + 1; j < t->parts.size(); ++j)
                acc = count_add(acc, term_size(t->parts[j]));
            return acc;
        }
        case TermKind::Prod:
            return count_add(count_above(t->lhs, a->inner),
                             count_mul(term_size(t->lhs), count_above(t->rhs, a->outer)));
        default:
            shape_error("unexpected term kind");
    }
}

Count count_below(const TermPtr& t, const AddrPtr& a) {
    switch (t->kind) {
        case TermKind::One: return Count::of(0);
        case TermKind::Fin:
        case TermKind::Omega:
            return Count::of(a->k);
        case TermKind::OmegaStar: return Count::infinite();
        case TermKind::Eta: return Count::infinite();
        case TermKind::Sum: {
            Count acc = count_below(sum_part(t, a->part), a->inner);
            for (std::size_t j = 0; j < a->part; ++j)
                acc = count_add(acc, term_size(t->parts[j]));
            return acc;
        }
        case TermKind::Prod:
            return count_add(count_below(t->lhs, a->inner),
                             count_mul(term_size(t->lhs), count_below(t->rhs, a->outer)));
        default:
            shape_error("unexpected term kind");
    }
}

Count count_between(const TermPtr& t, const AddrPtr& a, const AddrPtr& b) {
    if (addr_compare(t, a, b) != Cmp::Less)
        throw TermDomainError("count_between: first address not strictly below second");
    switch (t->kind) {
        case TermKind::Fin:
        case TermKind::Omega:
            return Count::of(b->k - a->k - 1);
        case TermKind::OmegaStar:
            return Count::of(a->k - b->k - 1);
        case TermKind::Eta:
            return Count::infinite();
        case TermKind::Sum: {
            if (a->part == b->part)
                return count_between(sum_part(t, a->part), a->inner, b->inner);
            Count acc = count_above(sum_part(t, a->part), a->inner);
            for (std::uint32_t j = a->part + 1; j < b->part; ++j)
                acc = count_add(acc, term_size(t->parts[j]));
            return count_add(acc, count_below(sum_part(t, b->part), b->inner));
        }
        case TermKind::Prod: {
            if (addr_compare(t->rhs, a->outer, b->outer) == Cmp::Equal)
                return count_between(t->lhs, a->inner, b->inner);
            Count mid = count_between(t->rhs, a->outer, b->outer);
            Count acc = count_above(t->lhs, a->inner);
            acc = count_add(acc, count_mul(term_size(t->lhs), mid));
            return count_add(acc, count_below(t->lhs, b->inner));
        }
        default:
            shape_error("unexpected term kind");
    }
}

bool has_min(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::One:
        case TermKind::Fin:
        case TermKind::Omega:
            return true;
        case TermKind::OmegaStar:
        case TermKind::Eta:
        case TermKind::Zero:
            return false;
        case TermKind::Sum: return has_min(t->parts.front());
        case TermKind::Prod: return has_min(t->lhs) && has_min(t->rhs);
        default: shape_error("unexpected term kind");
    }
}

bool has_max(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::One:
        case TermKind::Fin:
        case TermKind::OmegaStar:
            return true;
        case TermKind::Omega:
        case TermKind::Eta:
        case TermKind::Zero:
            return false;
        case TermKind::Sum: return has_max(t->parts.back());
        case TermKind::Prod: return has_max(t->lhs) && has_max(t->rhs);
        default: shape_error("unexpected term kind");
    }
}

bool has_immediate_above(const TermPtr& t, const AddrPtr& a) {
    switch (t->kind) {
        case TermKind::One: return false;
        case TermKind::Fin: return a->k + 1 < t->n;
        case TermKind::Omega: return true;
        case TermKind::OmegaStar: return a->k >= 1;
        case TermKind::Eta: return false;
        case TermKind::Sum: {
            const TermPtr& part = sum_part(t, a->part);
            if (has_immediate_above(part, a->inner)) return true;
            if (!count_above(part, a->inner).is_zero()) return false;
            for (std::size_t j = a->part + 1; j < t->parts.size(); ++j) {
                if (term_size(t->parts[j]).is_zero()) continue;
                return has_min(t->parts[j]);
            }
            return false;
        }
        case TermKind::Prod: {
            if (has_immediate_above(t->lhs, a->inner)) return true;
            if (!count_above(t->lhs, a->inner).is_zero()) return false;
            return has_immediate_above(t->rhs, a->outer) && has_min(t->lhs);
        }
        default: shape_error("unexpected term kind");
    }
}

bool has_immediate_below(const TermPtr& t, const AddrPtr& a) {
    switch (t->kind) {
        case TermKind::One: return false;
        case TermKind::Fin:
        case TermKind::Omega:
            return a->k >= 1;
        case TermKind::OmegaStar: return true;
        case TermKind::Eta: return false;
        case TermKind::Sum: {
            const TermPtr& part = sum_part(t, a->part);
            if (has_immediate_below(part, a->inner)) return true;
            if (!count_below(part, a->inner).is_zero()) return false;
            for (std::size_t j = a->part; j-- > 0;) {
                if (term_size(t->parts[j]).is_zero()) continue;
                return has_max(t->parts[j]);
            }
            return false;
        }
        case TermKind::Prod: {
            if (has_immediate_below(t->lhs, a->inner)) return true;
            if (!count_below(t->lhs, a->inner).is_zero()) return false;
            return has_immediate_below(t->rhs, a->outer) && has_max(t->lhs);
        }
        default: shape_error("unexpected term kind");
    }
}

Count bot_run(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Zero: return Count::of(0);
        case TermKind::One: return Count::of(1);
        case TermKind::Fin: return Count::of(t->n);
        case TermKind::Omega: return Count::infinite();
        case TermKind::OmegaStar:
        case TermKind::Eta:
            return Count::of(0);
        case TermKind::Sum: {
            Count acc = Count::of(0);
            for (const auto& p : t->parts) {
                Count r = bot_run(p);
                acc = count_add(acc, r);
                if (acc.inf) return acc;
                if (!(r == term_size(p))) break;  // run ends inside this part
            }
            return acc;
        }
        case TermKind::Prod: {
            Count sp = term_size(t->lhs);
            if (sp.is_zero() || term_size(t->rhs).is_zero()) return Count::of(0);
            if (!sp.inf) return count_mul(sp, bot_run(t->rhs));
            return has_min(t->rhs) ? bot_run(t->lhs) : Count::of(0);
        }
        default: shape_error("unexpected term kind");
    }
}

Count top_run(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Zero: return Count::of(0);
        case TermKind::One: return Count::of(1);
        case TermKind::Fin: return Count::of(t->n);
        case TermKind::OmegaStar: return Count::infinite();
        case TermKind::Omega:
        case TermKind::Eta:
            return Count::of(0);
        case TermKind::Sum: {
            Count acc = Count::of(0);
            for (std::size_t j = t->parts.size(); j-- > 0;) {
                Count r = top_run(t->parts[j]);
                acc = count_add(acc, r);
                if (acc.inf) return acc;
                if (!(r == term_size(t->parts[j]))) break;
            }
            return acc;
        }
        case TermKind::Prod: {
            Count sp = term_size(t->lhs);
            if (sp.is_zero() || term_size(t->rhs).is_zero()) return Count::of(0);
            if (!sp.inf) return count_mul(sp, top_run(t->rhs));
            return has_max(t->rhs) ? top_run(t->lhs) : Count::of(0);
        }
        default: shape_error("unexpected term kind");
    }
}

Count cls_above(const TermPtr& t, const AddrPtr& a) {
    switch (t->kind) {
        case TermKind::One: return Count::of(0);
        case TermKind::Fin: return Count::of(t->n - 1 - a->k);
        case TermKind::Omega: return Count::infinite();
        case TermKind::OmegaStar: return Count::of(a->k);
        case TermKind::Eta: return Count::of(0);
        case TermKind::Sum: {
            const TermPtr& part = sum_part(t, a->part);
            Count x = cls_above(part, a->inner);
            if (x.inf) return x;
            Count above = count_above(part, a->inner);
            if (above.inf) return x;  // class stays inside the part
            Count acc = above;
            for (std::size_t j = a->part + 1; j < t->parts.size(); ++j) {
                const TermPtr& next = t->parts[j];
                if (term_size(next).is_zero()) continue;
                Count br = bot_run(next);
                acc = count_add(acc, br);
                if (acc.inf) return acc;
                if (term_size(next).inf || !(br == term_size(next))) break;
            }
            return acc;
        }
        case TermKind::Prod: {
            Count x = cls_above(t->lhs, a->inner);
            if (x.inf) return x;
            Count above_in = count_above(t->lhs, a->inner);
            if (above_in.inf) return x;
            Count sp = term_size(t->lhs);
            if (!sp.inf)
                return count_add(above_in, count_mul(sp, cls_above(t->rhs, a->outer)));
            if (has_immediate_above(t->rhs, a->outer))
                return count_add(above_in, bot_run(t->lhs));
            return above_in;
        }
        default: shape_error("unexpected term kind");
    }
}

Count cls_below(const TermPtr& t, const AddrPtr& a) {
    switch (t->kind) {
        case TermKind::One: return Count::of(0);
        case TermKind::Fin:
        case TermKind::Omega:
            return Count::of(a->k);
        case TermKind::OmegaStar: return Count::infinite();
        case TermKind::Eta: return Count::of(0);
        case TermKind::Sum: {
            const TermPtr& part = sum_part(t, a->part);
            Count x = cls_below(part, a->inner);
            if (x.inf) return x;
            Count below = count_below(part, a->inner);
            if (below.inf) return x;
            Count acc = below;
            for (std::size_t j = a->part; j-- > 0;) {
                const TermPtr& prev = t->parts[j];
                if (term_size(prev).is_zero()) continue;
                Count tr = top_run(prev);
                acc = count_add(acc, tr);
                if (acc.inf) return acc;
                if (term_size(prev).inf || !(tr == term_size(prev))) break;
            }
            return acc;
        }
        case TermKind::Prod: {
            Count x = cls_below(t->lhs, a->inner);
            if (x.inf) return x;
            Count below_in = count_below(t->lhs, a->inner);
            if (below_in.inf) return x;
            Count sp = term_size(t->lhs);
            if (!sp.inf)
                return count_add(below_in, count_mul(sp, cls_below(t->rhs, a->outer)));
            if (has_immediate_below(t->rhs, a->outer))
                return count_add(below_in, top_run(t->lhs));
            return below_in;
        }
        default: shape_error("unexpected term kind");
    }
}

namespace {

bool term_has_eta(const TermPtr& t) { return !is_scattered(t); }

Count open_count(const TermPtr& t, const AddrPtr& lo, const AddrPtr& hi) {
    if (lo && hi) return count_between(t, lo, hi);
    if (lo) return count_above(t, lo);
    if (hi) return count_below(t, hi);
    return term_size(t);
}

}  // namespace

bool interval_contains_eta(const TermPtr& t, const AddrPtr& lo, const AddrPtr& hi) {
    if (lo && hi && addr_compare(t, lo, hi) != Cmp::Less) return false;
    switch (t->kind) {
        case TermKind::Zero:
        case TermKind::One:
        case TermKind::Fin:
        case TermKind::Omega:
        case TermKind::OmegaStar:
            return false;
        case TermKind::Eta:
            return true;  // open rational intervals are nonempty and dense
        case TermKind::Sum: {
            if (lo && hi && lo->part == hi->part)
                return interval_contains_eta(sum_part(t, lo->part), lo->inner, hi->inner);
            std::size_t from = lo ? lo->part + 1 : 0;
            std::size_t to = hi ? hi->part : t->parts.size();
            if (lo && interval_contains_eta(sum_part(t, lo->part), lo->inner, nullptr))
                return true;
            if (hi && interval_contains_eta(sum_part(t, hi->part), nullptr, hi->inner))
                return true;
            for (std::size_t j = from; j < to; ++j)
                if (term_has_eta(t->parts[j])) return true;
            return false;
        }
        case TermKind::Prod: {
            const AddrPtr ql = lo ? lo->outer : nullptr;
            const AddrPtr qh = hi ? hi->outer : nullptr;
            if (lo && hi && addr_compare(t->rhs, ql, qh) == Cmp::Equal)
                return interval_contains_eta(t->lhs, lo->inner, hi->inner);
            if (lo && interval_contains_eta(t->lhs, lo->inner, nullptr)) return true;
            if (hi && interval_contains_eta(t->lhs, nullptr, hi->inner)) return true;
            Count mid = open_count(t->rhs, ql, qh);
            if (!mid.is_zero() && term_has_eta(t->lhs)) return true;
            if (interval_contains_eta(t->rhs, ql, qh) && !term_size(t->lhs).is_zero())
                return true;
            return false;
        }
        default:
            throw TermDomainError("interval_contains_eta: term not normalized");
    }
}

}  // namespace linord
