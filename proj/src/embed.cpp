#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "linord/order_term.hpp"

// Embeddability between scattered terms of the fragment (finite types, w, w*
// closed under finite sums and binary products).  Terms are first rewritten,
// up to mutual embeddability, into sums of atoms
//
//     atom := fin(n) | S.w | S.w*        (S a sum of atoms)
//
// and decided by a grouping DP over pieces.  The two facts carrying the
// recursion: an indecomposable atom embedding into a sum embeds into a single
// summand, and a sum embedding into S.w either lands in finitely many copies
// of S or has exactly its last atom unbounded (dually for S.w*).

namespace linord {

namespace {

constexpr std::size_t kFinCap = 4096;    // unit-expansion cap for fin atoms
constexpr int kDepthCap = 512;

enum class Dir : std::uint8_t { W, WStar };

struct NfAtom;
using NfSum = std::vector<NfAtom>;

struct NfAtom {
    bool fin = false;
    std::uint64_t n = 0;  // size when fin
    NfSum inner;          // S when iterated
    Dir dir = Dir::W;
};

NfAtom fin_atom(std::uint64_t n) {
    NfAtom a;
    a.fin = true;
    a.n = n;
    return a;
}

NfAtom iter_atom(NfSum s, Dir d) {
    NfAtom a;
    a.inner = std::move(s);
    a.dir = d;
    return a;
}

void append_merged(NfSum& out, NfAtom a) {
    if (a.fin && a.n == 0) return;
    if (a.fin && !out.empty() && out.back().fin) {
        out.back().n += a.n;
        return;
    }
    out.push_back(std::move(a));
}

void serialize(const NfAtom& a, std::ostringstream& out);

void serialize(const NfSum& s, std::ostringstream& out) {
    out << "[";
    for (const auto& a : s) serialize(a, out);
    out << "]";
}

void serialize(const NfAtom& a, std::ostringstream& out) {
    if (a.fin) {
        out << "F" << a.n << ";";
    } else {
        out << (a.dir == Dir::W ? "I" : "J");
        serialize(a.inner, out);
    }
}

std::string ser(const NfSum& s) {
    std::ostringstream out;
    serialize(s, out);
    return out.str();
}

std::size_t unit_count(const NfSum& s) {
    std::size_t total = 0;
    for (const auto& a : s) {
        total += a.fin ? a.n : 1;
        if (total > kFinCap) throw OutsideFragment("finite multiplicity beyond cap");
    }
    return total;
}

NfSum expand_fins(const NfSum& s) {
    unit_count(s);
    NfSum out;
    for (const auto& a : s) {
        if (a.fin) {
            for (std::uint64_t i = 0; i < a.n; ++i) out.push_back(fin_atom(1));
        } else {
            out.push_back(a);
        }
    }
    return out;
}

// --- conversion from terms ------------------------------------------------

NfSum nf_of(const TermPtr& t);

NfSum nf_mul(const NfSum& a, const NfSum& b) {
    NfSum out;
    for (const auto& beta : b) {
        if (beta.fin) {
            if (beta.n > kFinCap) throw OutsideFragment("finite factor beyond cap");
            for (std::uint64_t i = 0; i < beta.n; ++i)
                for (const auto& x : a) append_merged(out, x);
        } else {
            NfSum inner = nf_mul(a, beta.inner);
            if (inner.empty()) continue;
            // fin(k).w == w, so a finite inner sum collapses to a unit.
            bool all_fin = true;
            for (const auto& x : inner) all_fin = all_fin && x.fin;
            if (all_fin) inner = {fin_atom(1)};
            append_merged(out, iter_atom(std::move(inner), beta.dir));
        }
    }
    return out;
}

NfSum nf_of(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Zero: return {};
        case TermKind::One: return {fin_atom(1)};
        case TermKind::Fin: return {fin_atom(t->n)};
        case TermKind::Omega: return {iter_atom({fin_atom(1)}, Dir::W)};
        case TermKind::OmegaStar: return {iter_atom({fin_atom(1)}, Dir::WStar)};
        case TermKind::Sum: {
            NfSum out;
            for (const auto& p : t->parts)
                for (auto& a : nf_of(p)) append_merged(out, std::move(a));
            return out;
        }
        case TermKind::Prod: return nf_mul(nf_of(t->lhs), nf_of(t->rhs));
        case TermKind::Zeta:
        case TermKind::Rev:
            throw TermDomainError("embeds: term not normalized");
        case TermKind::Eta:
            throw TermDomainError("embeds: eta inside a scattered decision");
    }
    return {};
}

// --- decision procedure ----------------------------------------------------

struct EmbedCtx {
    std::unordered_map<std::string, bool> memo;
    int depth = 0;

    struct Guard {
        EmbedCtx& c;
        explicit Guard(EmbedCtx& ctx) : c(ctx) {
            if (++c.depth > kDepthCap) throw OutsideFragment("recursion depth cap");
        }
        ~Guard() { --c.depth; }
    };
};

bool sum_le(EmbedCtx& ctx, const NfSum& s, const NfSum& t);

bool atom_le(EmbedCtx& ctx, const NfAtom& a, const NfAtom& b) {
    EmbedCtx::Guard g(ctx);
    if (a.fin) return b.fin ? a.n <= b.n : true;
    if (b.fin) return false;
    std::ostringstream key;
    key << "a:";
    serialize(a, key);
    serialize(b, key);
    auto it = ctx.memo.find(key.str());
    if (it != ctx.memo.end()) return it->second;
    bool res;
    if (a.dir == b.dir) {
        // S.d <= T.d iff S embeds into finitely many copies of T.
        std::size_t m = unit_count(a.inner);
        NfSum target;
        for (std::size_t i = 0; i < m; ++i)
            target.insert(target.end(), b.inner.begin(), b.inner.end());
        res = sum_le(ctx, a.inner, target);
    } else {
        // Opposite directions: the image meets finitely many T-blocks, so the
        // indecomposable a must land inside a single atom of T.
        res = false;
        for (const auto& u : b.inner)
            if (atom_le(ctx, a, u)) { res = true; break; }
    }
    ctx.memo[key.str()] = res;
    return res;
}

// Sum of consecutive atoms g into a single infinite atom b.
bool group_le(EmbedCtx& ctx, const NfSum& g, const NfAtom& b) {
    EmbedCtx::Guard guard(ctx);
    if (g.empty()) return true;
    if (g.size() == 1) return atom_le(ctx, g[0], b);
    if (b.fin) {
        std::uint64_t total = 0;
        for (const auto& a : g) {
            if (!a.fin) return false;
            total += a.n;
        }
        return total <= b.n;
    }
    NfSum units = expand_fins(g);
    const std::size_t m = units.size();
    auto repeat_inner = [&](std::size_t k) {
        NfSum target;
        for (std::size_t i = 0; i < k; ++i)
            target.insert(target.end(), b.inner.begin(), b.inner.end());
        return target;
    };
    // Bounded image: everything inside finitely many inner copies.
    if (sum_le(ctx, g, repeat_inner(m))) return true;
    // Unbounded image: only the end atom on the open side can be unbounded.
    if (b.dir == Dir::W) {
        const NfAtom& last = units.back();
        if (!last.fin && atom_le(ctx, last, b)) {
            NfSum prefix(units.begin(), units.end() - 1);
            if (sum_le(ctx, prefix, repeat_inner(m - 1))) return true;
        }
    } else {
        const NfAtom& first = units.front();
        if (!first.fin && atom_le(ctx, first, b)) {
            NfSum suffix(units.begin() + 1, units.end());
            if (sum_le(ctx, suffix, repeat_inner(m - 1))) return true;
        }
    }
    return false;
}

bool sum_le(EmbedCtx& ctx, const NfSum& s_in, const NfSum& t) {
    EmbedCtx::Guard guard(ctx);
    NfSum s = expand_fins(s_in);
    if (s.empty()) return true;
    std::ostringstream key;
    key << "s:" << ser(s) << "|" << ser(t);
    auto it = ctx.memo.find(key.str());
    if (it != ctx.memo.end()) return it->second;

    const std::size_t n = s.size(), m = t.size();
    // dp[i][j]: s[i..) embeds into t[j..), groups in order.
    std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, -1));
    std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> bool {
        if (i == n) return true;
        if (j == m) return false;
        int& slot = dp[i][j];
        if (slot != -1) return slot != 0;
        bool ok = go(i, j + 1);
        for (std::size_t k = i; !ok && k < n; ++k) {
            NfSum group(s.begin() + i, s.begin() + k + 1);
            if (group_le(ctx, group, t[j])) ok = go(k + 1, j + 1);
            // Larger groups may still fit, keep scanning.
        }
        slot = ok ? 1 : 0;
        return ok;
    };
    bool res = go(0, 0);
    ctx.memo[key.str()] = res;
    return res;
}

// --- absorption reduction (for indecomposability) ---------------------------

bool absorbs(EmbedCtx& ctx, const NfAtom& host_iter, const NfAtom& small) {
    // host = T.w absorbing from the left (or T.w* from the right): the small
    // atom must fit into finitely many copies of T.
    if (small.fin) return true;
    for (const auto& u : host_iter.inner)
        if (atom_le(ctx, small, u)) return true;
    return false;
}

NfSum reduce(EmbedCtx& ctx, NfSum s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            NfAtom& a = s[i];
            NfAtom& b = s[i + 1];
            if (a.fin && b.fin) {
                a.n += b.n;
                s.erase(s.begin() + i + 1);
                changed = true;
                break;
            }
            if (!b.fin && b.dir == Dir::W && absorbs(ctx, b, a)) {
                s.erase(s.begin() + i);
                changed = true;
                break;
            }
            if (!a.fin && a.dir == Dir::WStar && absorbs(ctx, a, b)) {
                s.erase(s.begin() + i + 1);
                changed = true;
                break;
            }
        }
    }
    return s;
}

}  // namespace

bool embeds(const TermPtr& s_raw, const TermPtr& t_raw) {
    TermPtr s = normalize(s_raw);
    TermPtr t = normalize(t_raw);
    if (term_eq(s, t)) return true;
    // Every countable order embeds into a non-scattered one.
    if (!is_scattered(t)) return true;
    if (!is_scattered(s)) return false;
    EmbedCtx ctx;
    return sum_le(ctx, nf_of(s), nf_of(t));
}

bool has_omega_omegastar(const TermPtr& t) {
    return embeds(t_prod(t_omega(), t_omega_star()), t) ||
           embeds(t_prod(t_omega_star(), t_omega()), t);
}

JullienClass jullien_classify(const TermPtr& t_raw) {
    TermPtr t = normalize(t_raw);
    if (!is_scattered(t)) throw TermDomainError("jullien_classify: term is not scattered");
    NfSum nf = nf_of(t);
    bool infinite = false;
    for (const auto& a : nf) infinite = infinite || !a.fin;
    if (!infinite) throw TermDomainError("jullien_classify: term is finite");
    EmbedCtx ctx;
    NfSum red = reduce(ctx, std::move(nf));
    if (red.size() == 1 && !red[0].fin)
        return red[0].dir == Dir::W ? JullienClass::StrictlyRight : JullienClass::StrictlyLeft;
    return JullienClass::NotIndecomposable;
}

namespace {

void decompose(const TermPtr& t, std::vector<TermPtr>& out);

// Pieces of block.index without rebuilding left-nested products (normalize
// would rotate those straight back).
void decompose_prod(const TermPtr& block, const TermPtr& index, std::vector<TermPtr>& out) {
    switch (index->kind) {
        case TermKind::Zero: return;
        case TermKind::One: decompose(block, out); return;
        case TermKind::Fin:
            for (std::uint64_t i = 0; i < index->n; ++i) decompose(block, out);
            return;
        case TermKind::Omega:
        case TermKind::OmegaStar:
            out.push_back(normalize(t_prod(block, index)));
            return;
        case TermKind::Sum:
            for (const auto& p : index->parts) decompose_prod(block, p, out);
            return;
        case TermKind::Prod:
            // block.(c.d) = (block.c).d
            decompose_prod(normalize(t_prod(block, index->lhs)), index->rhs, out);
            return;
        default:
            throw TermDomainError("laver_decompose: unexpected factor");
    }
}

void decompose(const TermPtr& t, std::vector<TermPtr>& out) {
    switch (t->kind) {
        case TermKind::Zero: return;
        case TermKind::One: out.push_back(t_one()); return;
        case TermKind::Fin:
            for (std::uint64_t i = 0; i < t->n; ++i) out.push_back(t_one());
            return;
        case TermKind::Omega:
        case TermKind::OmegaStar:
            out.push_back(t);
            return;
        case TermKind::Sum:
            for (const auto& p : t->parts) decompose(p, out);
            return;
        case TermKind::Prod:
            decompose_prod(t->lhs, t->rhs, out);
            return;
        default:
            throw TermDomainError("laver_decompose: term not normalized");
    }
}

}  // namespace

std::vector<TermPtr> laver_decompose(const TermPtr& t_raw) {
    TermPtr t = normalize(t_raw);
    if (!is_scattered(t)) throw TermDomainError("laver_decompose: term is not scattered");
    std::vector<TermPtr> out;
    decompose(t, out);
    return out;
}

}  // namespace linord
