#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "liesq/weight.hpp"

namespace liesq {

// Product formula dimension for a classical or exceptional system:
// prod over positive roots of (lambda+rho, alpha) / (rho, alpha).
inline Big weyl_dim(const RootSystem& rs, const std::vector<int>& f) {
    const LVec lr = rs.fund_to_eps(f) + rs.rho;
    Big num = 1, den = 1;
    for (const auto& a : rs.pos) {
        num *= to_big(dot(lr, a));
        den *= to_big(dot(rs.rho, a));
    }
    return exact_div(num, den, "dimension product");
}

// Superdimension of the BC_m irreducible with epsilon-coordinates
// lam_1 >= ... >= lam_m >= 0: the double product over 1 <= i < j <= m of
// ((lam_i-lam_j)/(j-i) + 1) * ((lam_i+lam_j)/(2m+1-i-j) + 1).
// Every factor is >= 1, so the result is a positive integer >= 1.
inline Big kac_weyl_sdim(const RootSystem& rs, const std::vector<int>& f) {
    const int m = rs.rank;
    std::vector<Int> lam(static_cast<std::size_t>(m));
    lam[static_cast<std::size_t>(m - 1)] = f[static_cast<std::size_t>(m - 1)] / 2;
    for (int i = m - 2; i >= 0; --i)
        lam[static_cast<std::size_t>(i)] =
            lam[static_cast<std::size_t>(i + 1)] + f[static_cast<std::size_t>(i)];
    Big num = 1, den = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            const Int li = lam[static_cast<std::size_t>(i - 1)];
            const Int lj = lam[static_cast<std::size_t>(j - 1)];
            num *= to_big(li - lj + (j - i));
            den *= to_big(j - i);
            num *= to_big(li + lj + (2 * m + 1 - i - j));
            den *= to_big(2 * m + 1 - i - j);
        }
    return exact_div(num, den, "superdimension product");
}

// Dimension of the irreducible with highest weight f; for BC this is the
// superdimension (nonnegative by the evenness constraint on f).
inline Big dim_irrep(const RootSystem& rs, const std::vector<int>& f) {
    check_highest_weight(rs, f);
    return rs.id.family == Family::BC ? kac_weyl_sdim(rs, f) : weyl_dim(rs, f);
}

// Casimir scalar c(mu) = (mu, mu) + 2(mu, rho).
inline Rat casimir(const RootSystem& rs, const std::vector<int>& f) {
    check_highest_weight(rs, f);
    const LVec v = rs.fund_to_eps(f);
    return rs.inner(v, v) + 2 * rs.inner(v, rs.rho);
}

// dim(V_lambda) * c(lambda): the index of V_lambda up to one universal
// system-dependent constant. All identities used are homogeneous in that
// constant, so it is never materialized.
inline Rat index_numerator(const RootSystem& rs, const std::vector<int>& f) {
    return casimir(rs, f) * Rat(dim_irrep(rs, f));
}

// |alpha_i|^2 / |beta_i|^2 (1-based i): the strict upper bound for the
// multiplier r in an alternating-square candidate r*beta_i.
inline Rat r_threshold(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank) fail(err::IndexOutOfRange, "r_threshold " + std::to_string(i));
    const auto& a = rs.simples[static_cast<std::size_t>(i - 1)];
    const auto& b = rs.fund[static_cast<std::size_t>(i - 1)];
    return make_rat(dot(a, a), dot(b, b));
}

struct Lemma1Result {
    bool applicable; // false for every rank-1 system (all are sl(2)-like)
    bool holds;      // 4|rho|^2 max|alpha^vee|^2 < (dim g - 1)^2, compared squared
};

inline Lemma1Result lemma1_check(const RootSystem& rs) {
    if (rs.rank == 1) return {false, false};
    const auto t = rs.table1_row();
    const Rat lhs = 4 * t.rho_norm_sq * t.max_coroot_norm_sq;
    const Rat rhs = Rat(static_cast<long>(t.dim_g - 1)) * Rat(static_cast<long>(t.dim_g - 1));
    return {true, lhs < rhs};
}

// All nonzero dominant weights whose irreducible has dimension at most
// dim g, by breadth-first search over the generator monoid (classical:
// fundamental weights; BC: the mu_i, preserving the evenness constraint).
// Valid because the dimension strictly increases when a generator is added.
// Sorted by (dimension, coordinates).
inline std::vector<std::pair<std::vector<int>, Big>> enumerate_small_reps(const RootSystem& rs) {
    if (rs.id.family == Family::BC && rs.rank == 1)
        fail(err::UnsupportedType,
             "BC1: every irreducible has superdimension 1, the search would not terminate");
    const int m = rs.rank;
    std::vector<std::vector<int>> gens;
    for (int i = 1; i <= m; ++i) {
        std::vector<int> g(static_cast<std::size_t>(m), 0);
        g[static_cast<std::size_t>(i - 1)] =
            (rs.id.family == Family::BC && i == m) ? 2 : 1;
        gens.push_back(g);
    }
    const Big bound = to_big(rs.dim_g);
    std::vector<std::pair<std::vector<int>, Big>> out;
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    const std::vector<int> zero(static_cast<std::size_t>(m), 0);
    seen.insert(zero);
    queue.push_back(zero);
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            auto nxt = cur;
            for (int i = 0; i < m; ++i) nxt[static_cast<std::size_t>(i)] += g[static_cast<std::size_t>(i)];
            if (!seen.insert(nxt).second) continue;
            const Big d = dim_irrep(rs, nxt);
            if (d <= bound) {
                out.emplace_back(nxt, d);
                queue.push_back(nxt);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return x.first < y.first;
    });
    return out;
}

inline bool is_adjoint(const RootSystem& rs, const std::vector<int>& f) {
    return f == rs.adjoint;
}

} // namespace liesq
