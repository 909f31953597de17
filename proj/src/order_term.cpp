#include "linord/order_term.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "linord/ordinal.hpp"  // ParseError

namespace linord {

namespace {

TermPtr make(TermKind k) {
    auto t = std::make_shared<OrderTerm>();
    t->kind = k;
    return t;
}

}  // namespace

TermPtr t_zero()       { static TermPtr t = make(TermKind::Zero); return t; }
TermPtr t_one()        { static TermPtr t = make(TermKind::One); return t; }
TermPtr t_omega()      { static TermPtr t = make(TermKind::Omega); return t; }
TermPtr t_omega_star() { static TermPtr t = make(TermKind::OmegaStar); return t; }
TermPtr t_zeta()       { static TermPtr t = make(TermKind::Zeta); return t; }
TermPtr t_eta()        { static TermPtr t = make(TermKind::Eta); return t; }

TermPtr t_fin(std::uint64_t n) {
    if (n == 0) return t_zero();
    if (n == 1) return t_one();
    auto t = std::make_shared<OrderTerm>();
    t->kind = TermKind::Fin;
    t->n = n;
    return t;
}

TermPtr t_sum(std::vector<TermPtr> parts) {
    if (parts.empty()) return t_zero();
    if (parts.size() == 1) return parts[0];
    auto t = std::make_shared<OrderTerm>();
    t->kind = TermKind::Sum;
    t->parts = std::move(parts);
    return t;
}

TermPtr t_prod(TermPtr a, TermPtr b) {
    auto t = std::make_shared<OrderTerm>();
    t->kind = TermKind::Prod;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
}

TermPtr t_rev(TermPtr s) {
    auto t = std::make_shared<OrderTerm>();
    t->kind = TermKind::Rev;
    t->sub = std::move(s);
    return t;
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case TermKind::Fin: return a->n == b->n;
        case TermKind::Sum: {
            if (a->parts.size() != b->parts.size()) return false;
            for (std::size_t i = 0; i < a->parts.size(); ++i)
                if (!term_eq(a->parts[i], b->parts[i])) return false;
            return true;
        }
        case TermKind::Prod: return term_eq(a->lhs, b->lhs) && term_eq(a->rhs, b->rhs);
        case TermKind::Rev: return term_eq(a->sub, b->sub);
        default: return true;
    }
}

std::size_t term_hash(const TermPtr& t) {
    if (!t) return 0;
    std::size_t h = static_cast<std::size_t>(t->kind) * 0x9e3779b97f4a7c15ull;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    switch (t->kind) {
        case TermKind::Fin: mix(t->n); break;
        case TermKind::Sum:
            for (const auto& p : t->parts) mix(term_hash(p));
            break;
        case TermKind::Prod: mix(term_hash(t->lhs)); mix(term_hash(t->rhs)); break;
        case TermKind::Rev: mix(term_hash(t->sub)); break;
        default: break;
    }
    return h;
}

namespace {

// Precedence: atoms > product > sum.
void print_term(std::ostream& out, const TermPtr& t, int parent_prec) {
    const int prec = t->kind == TermKind::Sum ? 0 : (t->kind == TermKind::Prod ? 1 : 2);
    const bool paren = prec < parent_prec;
    if (paren) out << "(";
    switch (t->kind) {
        case TermKind::Zero: out << "0"; break;
        case TermKind::One: out << "1"; break;
        case TermKind::Fin: out << "fin(" << t->n << ")"; break;
        case TermKind::Omega: out << "w"; break;
        case TermKind::OmegaStar: out << "w*"; break;
        case TermKind::Zeta: out << "z"; break;
        case TermKind::Eta: out << "eta"; break;
        case TermKind::Sum: {
            bool first = true;
            for (const auto& p : t->parts) {
                if (!first) out << " + ";
                first = false;
                print_term(out, p, 1);
            }
            break;
        }
        case TermKind::Prod:
            print_term(out, t->lhs, 2);
            out << " . ";
            print_term(out, t->rhs, 2);
            break;
        case TermKind::Rev:
            out << "rev(";
            print_term(out, t->sub, 0);
            out << ")";
            break;
    }
    if (paren) out << ")";
}

}  // namespace

std::string term_str(const TermPtr& t) {
    std::ostringstream out;
    print_term(out, t, 0);
    return out.str();
}

namespace {

struct TermParser {
    const std::string& s;
    std::size_t i = 0;

    explicit TermParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }

    bool eat(char c) {
        if (peek(c)) { ++i; return true; }
        return false;
    }

    bool eat_word(const char* w) {
        skip_ws();
        std::size_t j = i, k = 0;
        while (w[k] && j < s.size() && s[j] == w[k]) { ++j; ++k; }
        if (w[k]) return false;
        // Reject a word that continues alphabetically (e.g. "etax").
        if (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) return false;
        i = j;
        return true;
    }

    std::uint64_t number() {
        skip_ws();
        std::size_t start = i;
        std::uint64_t n = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            n = n * 10 + static_cast<std::uint64_t>(s[i] - '0');
            ++i;
        }
        if (i == start) throw ParseError("expected number", i);
        return n;
    }

    TermPtr atom() {
        skip_ws();
        if (i >= s.size()) throw ParseError("unexpected end of term", i);
        if (eat('(')) {
            TermPtr t = sum();
            if (!eat(')')) throw ParseError("expected ')'", i);
            return t;
        }
        if (eat_word("rev")) {
            if (!eat('(')) throw ParseError("expected '(' after rev", i);
            TermPtr t = sum();
            if (!eat(')')) throw ParseError("expected ')'", i);
            return t_rev(t);
        }
        if (eat_word("fin")) {
            if (!eat('(')) throw ParseError("expected '(' after fin", i);
            std::uint64_t n = number();
            if (!eat(')')) throw ParseError("expected ')'", i);
            return t_fin(n);
        }
        if (eat_word("eta")) return t_eta();
        // 'w' may be followed by '*' to mean w*.
        if (i < s.size() && s[i] == 'w') {
            ++i;
            if (i < s.size() && s[i] == '*') { ++i; return t_omega_star(); }
            return t_omega();
        }
        if (eat_word("z")) return t_zeta();
        if (s[i] == '0') { ++i; return t_zero(); }
        if (s[i] == '1') { ++i; return t_one(); }
        throw ParseError("expected term atom", i);
    }

    TermPtr product() {
        TermPtr t = atom();
        while (eat('.')) {
            TermPtr r = atom();
            t = t_prod(t, r);
        }
        return t;
    }

    TermPtr sum() {
        std::vector<TermPtr> parts;
        parts.push_back(product());
        while (eat('+')) parts.push_back(product());
        return t_sum(std::move(parts));
    }

    TermPtr parse() {
        TermPtr t = sum();
        skip_ws();
        if (i != s.size()) throw ParseError("trailing input after term", i);
        return t;
    }
};

TermPtr reverse_term(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Zero:
        case TermKind::One:
        case TermKind::Fin:
        case TermKind::Zeta:
        case TermKind::Eta:
            return t;
        case TermKind::Omega: return t_omega_star();
        case TermKind::OmegaStar: return t_omega();
        case TermKind::Sum: {
            std::vector<TermPtr> rev;
            for (auto it = t->parts.rbegin(); it != t->parts.rend(); ++it)
                rev.push_back(reverse_term(*it));
            return t_sum(std::move(rev));
        }
        case TermKind::Prod:
            return t_prod(reverse_term(t->lhs), reverse_term(t->rhs));
        case TermKind::Rev:
            return t->sub;  // caller normalizes the body separately
    }
    return t;
}

}  // namespace

TermPtr parse_term(const std::string& text) {
    TermParser p(text);
    return p.parse();
}

TermPtr normalize(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Zero:
        case TermKind::One:
        case TermKind::Omega:
        case TermKind::OmegaStar:
        case TermKind::Eta:
            return t;
        case TermKind::Fin:
            return t_fin(t->n);  // collapses fin(0), fin(1)
        case TermKind::Zeta:
            return t_sum({t_omega_star(), t_omega()});
        case TermKind::Rev:
            return normalize(reverse_term(normalize(t->sub)));
        case TermKind::Sum: {
            std::vector<TermPtr> flat;
            for (const auto& p : t->parts) {
                TermPtr q = normalize(p);
                if (q->kind == TermKind::Zero) continue;
                if (q->kind == TermKind::Sum)
                    flat.insert(flat.end(), q->parts.begin(), q->parts.end());
                else
                    flat.push_back(q);
            }
            // Merge adjacent finite summands.
            std::vector<TermPtr> merged;
            for (const auto& p : flat) {
                auto fin_of = [](const TermPtr& x) -> std::uint64_t {
                    if (x->kind == TermKind::One) return 1;
                    if (x->kind == TermKind::Fin) return x->n;
                    return 0;
                };
                std::uint64_t pn = fin_of(p);
                if (pn > 0 && !merged.empty()) {
                    std::uint64_t qn = fin_of(merged.back());
                    if (qn > 0) {
                        merged.back() = t_fin(pn + qn);
                        continue;
                    }
                }
                merged.push_back(p);
            }
            return t_sum(std::move(merged));
        }
        case TermKind::Prod: {
            TermPtr a = normalize(t->lhs);
            TermPtr b = normalize(t->rhs);
            if (a->kind == TermKind::Zero || b->kind == TermKind::Zero) return t_zero();
            if (a->kind == TermKind::One) return b;
            if (b->kind == TermKind::One) return a;
            // Right-nest: (a.b).c -> a.(b.c).
            if (a->kind == TermKind::Prod)
                return normalize(t_prod(a->lhs, t_prod(a->rhs, b)));
            auto fin_of = [](const TermPtr& x) -> std::uint64_t {
                return x->kind == TermKind::Fin ? x->n : 0;
            };
            if (fin_of(a) > 0 && fin_of(b) > 0) return t_fin(a->n * b->n);
            if (fin_of(a) > 0 && b->kind == TermKind::Prod && fin_of(b->lhs) > 0)
                return normalize(t_prod(t_fin(a->n * b->lhs->n), b->rhs));
            if (b->kind == TermKind::Prod) {
                // Keep the right-nested spine normalized.
                TermPtr rb = normalize(b);
                return t_prod(a, rb);
            }
            return t_prod(a, b);
        }
    }
    return t;
}

bool is_scattered(const TermPtr& t) {
    TermPtr n = normalize(t);
    std::function<bool(const TermPtr&)> has_eta = [&](const TermPtr& x) {
        switch (x->kind) {
            case TermKind::Eta: return true;
            case TermKind::Sum:
                for (const auto& p : x->parts)
                    if (has_eta(p)) return true;
                return false;
            case TermKind::Prod: return has_eta(x->lhs) || has_eta(x->rhs);
            default: return false;
        }
    };
    return !has_eta(n);
}

std::string jullien_str(JullienClass c) {
    switch (c) {
        case JullienClass::StrictlyLeft: return "strictly-left";
        case JullienClass::StrictlyRight: return "strictly-right";
        case JullienClass::NotIndecomposable: return "not-indecomposable";
    }
    return "?";
}

}  // namespace linord
