#include "linord/ordinal.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace linord {

Ordinal Ordinal::nat(BigNat n) {
    Ordinal o;
    if (n < 0) throw std::invalid_argument("ordinal: negative natural");
    if (n > 0) o.terms_.push_back({0, std::move(n)});
    return o;
}

Ordinal Ordinal::omega() { return omega_pow(1); }

Ordinal Ordinal::omega_pow(std::uint64_t e, BigNat c) {
    Ordinal o;
    if (c < 0) throw std::invalid_argument("ordinal: negative coefficient");
    if (c > 0) o.terms_.push_back({e, std::move(c)});
    return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> ts) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].coeff < 1) throw std::invalid_argument("ordinal: coefficient < 1");
        if (i + 1 < ts.size() && ts[i].exp <= ts[i + 1].exp)
            throw std::invalid_argument("ordinal: exponents not strictly descending");
    }
    Ordinal o;
    o.terms_ = std::move(ts);
    return o;
}

BigNat Ordinal::finite_part() const {
    if (terms_.empty() || terms_.back().exp != 0) return 0;
    return terms_.back().coeff;
}

std::string Ordinal::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out << " + ";
        first = false;
        if (t.exp == 0) {
            out << t.coeff;
        } else if (t.exp == 1) {
            out << "w*" << t.coeff;
        } else {
            out << "w^" << t.exp << "*" << t.coeff;
        }
    }
    return out.str();
}

Cmp compare(const Ordinal& a, const Ordinal& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i].exp != y[i].exp) return x[i].exp < y[i].exp ? Cmp::Less : Cmp::Greater;
        if (x[i].coeff != y[i].coeff) return x[i].coeff < y[i].coeff ? Cmp::Less : Cmp::Greater;
    }
    if (x.size() != y.size()) return x.size() < y.size() ? Cmp::Less : Cmp::Greater;
    return Cmp::Equal;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const std::uint64_t lead = b.terms().front().exp;
    std::vector<Ordinal::Term> out;
    // Terms of a with exponent > lead survive; an equal-exponent term merges.
    for (const auto& t : a.terms()) {
        if (t.exp > lead) out.push_back(t);
    }
    bool merged = false;
    for (const auto& t : a.terms()) {
        if (t.exp == lead) {
            out.push_back({lead, t.coeff + b.terms().front().coeff});
            merged = true;
            break;
        }
    }
    if (!merged) out.push_back(b.terms().front());
    out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
    return Ordinal::from_terms(std::move(out));
}

namespace {

std::uint64_t checked_exp_add(std::uint64_t a, std::uint64_t b) {
    if (a > UINT64_MAX - b) throw std::overflow_error("ordinal: exponent overflow (beyond the w^w cap)");
    return a + b;
}

}  // namespace

Ordinal mul(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) return Ordinal();
    Ordinal acc;
    const std::uint64_t a_lead = a.terms().front().exp;
    for (const auto& t : b.terms()) {
        Ordinal piece;
        if (t.exp == 0) {
            // a * n = w^e0*(c0*n) + tail for infinite a, plain product for finite a.
            if (a.is_finite()) {
                piece = Ordinal::nat(a.terms().front().coeff * t.coeff);
            } else {
                std::vector<Ordinal::Term> ts = a.terms();
                ts.front().coeff *= t.coeff;
                piece = Ordinal::from_terms(std::move(ts));
            }
        } else {
            piece = Ordinal::omega_pow(checked_exp_add(a_lead, t.exp), t.coeff);
        }
        acc = add(acc, piece);
    }
    return acc;
}

Cmp compare(const SplitPair& p, const SplitPair& q) {
    Cmp c = compare(p.first, q.first);
    if (c != Cmp::Equal) return c;
    return compare(p.second, q.second);
}

namespace {

struct OrdParser {
    const std::string& s;
    std::size_t i = 0;

    explicit OrdParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }

    BigNat number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected number", i);
        return BigNat(s.substr(start, i - start));
    }

    std::uint64_t small_number() {
        skip_ws();
        std::size_t at = i;
        BigNat n = number();
        if (n > UINT64_MAX) throw ParseError("exponent too large", at);
        return static_cast<std::uint64_t>(n);
    }

    // term := 'w' ('^' nat)? ('*' nat)? | nat
    Ordinal::Term term() {
        skip_ws();
        if (i < s.size() && (s[i] == 'w' || s[i] == 'W')) {
            ++i;
            std::uint64_t e = 1;
            if (eat('^')) {
                skip_ws();
                if (i < s.size() && (s[i] == 'w' || s[i] == 'W'))
                    throw ParseError("transfinite exponents are not supported (cap is w^w)", i);
                e = small_number();
            }
            BigNat c = 1;
            if (eat('*')) c = number();
            if (c < 1) throw ParseError("coefficient must be >= 1", i);
            return {e, c};
        }
        return {0, number()};
    }

    Ordinal parse() {
        std::vector<Ordinal::Term> ts;
        ts.push_back(term());
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            if (!eat('+')) throw ParseError("expected '+'", i);
            ts.push_back(term());
        }
        if (ts.size() == 1 && ts[0].exp == 0 && ts[0].coeff == 0) return Ordinal();
        for (auto& t : ts)
            if (t.coeff == 0) throw ParseError("zero coefficient in sum", i);
        return Ordinal::from_terms(std::move(ts));
    }
};

}  // namespace

Ordinal parse_ordinal(const std::string& text) {
    OrdParser p(text);
    try {
        return p.parse();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), p.i);
    }
}

}  // namespace linord
