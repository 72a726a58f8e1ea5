#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>
#include <vector>

#include "liesq/family.hpp"
#include "liesq/lvec.hpp"
#include "liesq/numeric.hpp"

namespace liesq {

namespace detail {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;

inline Rat rdot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatMat rat_mat_inv(RatMat a) {
    const std::size_t n = a.size();
    RatMat inv(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p][c] == 0) ++p;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const Rat piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rat f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// Exact rational simple roots in the standard Euclidean embeddings
// (classical families by coordinate formulas; E/F/G by the plate data).
inline std::pair<std::vector<RatVec>, int> simple_roots_exact(const SystemId& id) {
    const int m = id.rank;
    auto unit = [](int dim, int i) {
        RatVec v(static_cast<std::size_t>(dim), Rat(0));
        v[static_cast<std::size_t>(i)] = 1;
        return v;
    };
    std::vector<RatVec> s;
    switch (id.family) {
        case Family::A: {
            const int n = m + 1;
            for (int i = 0; i < m; ++i) {
                RatVec v(static_cast<std::size_t>(n), Rat(0));
                v[static_cast<std::size_t>(i)] = 1;
                v[static_cast<std::size_t>(i + 1)] = -1;
                s.push_back(v);
            }
            return {s, n};
        }
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::BC: {
            for (int i = 0; i + 1 < m; ++i) {
                RatVec v(static_cast<std::size_t>(m), Rat(0));
                v[static_cast<std::size_t>(i)] = 1;
                v[static_cast<std::size_t>(i + 1)] = -1;
                s.push_back(v);
            }
            if (id.family == Family::B || id.family == Family::BC) {
                s.push_back(unit(m, m - 1));
            } else if (id.family == Family::C) {
                RatVec v = unit(m, m - 1);
                v[static_cast<std::size_t>(m - 1)] = 2;
                s.push_back(v);
            } else {
                RatVec v(static_cast<std::size_t>(m), Rat(0));
                v[static_cast<std::size_t>(m - 2)] = 1;
                v[static_cast<std::size_t>(m - 1)] = 1;
                s.push_back(v);
            }
            return {s, m};
        }
        case Family::G: {
            s.push_back({Rat(1), Rat(-1), Rat(0)});
            s.push_back({Rat(-2), Rat(1), Rat(1)});
            return {s, 3};
        }
        case Family::F: {
            s.push_back({Rat(0), Rat(1), Rat(-1), Rat(0)});
            s.push_back({Rat(0), Rat(0), Rat(1), Rat(-1)});
            s.push_back({Rat(0), Rat(0), Rat(0), Rat(1)});
            s.push_back({make_rat(1, 2), make_rat(-1, 2), make_rat(-1, 2), make_rat(-1, 2)});
            return {s, 4};
        }
        case Family::E: {
            RatVec a1(8, make_rat(-1, 2));
            a1[0] = make_rat(1, 2);
            a1[7] = make_rat(1, 2);
            s.push_back(a1);
            RatVec a2(8, Rat(0));
            a2[0] = 1;
            a2[1] = 1;
            s.push_back(a2);
            for (int i = 0; i + 2 < 8; ++i) {
                RatVec v(8, Rat(0));
                v[static_cast<std::size_t>(i + 1)] = 1;
                v[static_cast<std::size_t>(i)] = -1;
                s.push_back(v);
            }
            s.resize(static_cast<std::size_t>(m));
            return {s, 8};
        }
    }
    fail(err::InvalidRank, system_name(id));
}

} // namespace detail

struct Table1Row {
    Rat rho_norm_sq;
    Rat max_coroot_norm_sq;
    Int dim_g;
};

// Immutable exact root-system datum. All stored LVecs are the true rational
// coordinates multiplied by the per-system integer scale L, so dot products
// of stored vectors carry a factor L^2.
class RootSystem {
public:
    SystemId id;
    int rank = 0;
    int amb = 0; // ambient dimension
    Int L = 1;   // coordinate scale

    std::vector<LVec> simples;       // alpha_1..alpha_m (for BC, alpha_m is odd)
    std::vector<LVec> fund;          // beta_1..beta_m
    std::vector<LVec> pos;           // positive even roots
    std::vector<LVec> pos_odd;       // positive odd roots (BC only)
    LVec rho;                        // half-(super-)sum of positive roots
    Int dim_g = 0;                   // superdimension of the algebra
    std::vector<std::vector<Rat>> cartan_inv; // inverse of A[i][j] = (alpha_j, alpha_i^vee)
    std::vector<int> adjoint;        // fundamental coords of the highest (even) root
    std::vector<Int> height_num;     // height functional numerators (shared denominator)

    bool is_super() const { return id.family == Family::BC; }

    explicit RootSystem(const SystemId& sys) : id(sys), rank(sys.rank) {
        validate_rank(id);
        build();
    }

    // --- exact form -------------------------------------------------------

    Int dots(const LVec& a, const LVec& b) const { return dot(a, b); }

    Rat inner(const LVec& a, const LVec& b) const {
        if (a.size() != amb || b.size() != amb)
            fail(err::DimensionMismatch, system_name(id));
        return make_rat(dot(a, b), L * L);
    }

    // (w, alpha^vee) as an exact integer; weights of the lattice always pair
    // integrally against roots.
    Int pairing(const LVec& w, const LVec& alpha) const {
        const Int num = 2 * dot(w, alpha);
        const Int den = dot(alpha, alpha);
        if (den == 0) fail(err::ZeroNorm, "coroot of an isotropic vector");
        if (num % den != 0)
            fail(err::NonIntegerResult, "pairing " + system_name(id));
        return num / den;
    }

    // 2*root/(root,root), exact in the stored scale (coordinates may acquire
    // denominators dividing (root,root)/2L; all supported cases stay integral).
    LVec coroot(const LVec& root) const {
        const Int nn = dot(root, root);
        if (nn == 0) fail(err::ZeroNorm, "coroot of odd isotropic root");
        bool found = false;
        for (const auto& r : pos)
            if (r == root || r == -root) { found = true; break; }
        if (!found)
            for (const auto& r : pos_odd)
                if (r == root || r == -root) { found = true; break; }
        if (!found) fail(err::NotARoot, system_name(id));
        // 2L^2/(root,root) is integral for every root in the chosen scalings.
        const Int f = 2 * L * L;
        if (f % nn != 0) fail(err::NonIntegerResult, "coroot scale");
        return (f / nn) * root;
    }

    Rat coroot_norm_sq(const LVec& root) const {
        // |2a/(a,a)|^2 = 4/(a,a) in true coordinates.
        return make_rat(Big(4) * to_big(L) * to_big(L), to_big(dot(root, root)));
    }

    // --- coordinates ------------------------------------------------------

    LVec fund_to_eps(const std::vector<int>& coords) const {
        if (static_cast<int>(coords.size()) != rank)
            fail(err::DimensionMismatch, "fundamental coords length");
        LVec v(amb);
        for (int i = 0; i < rank; ++i) v = v + Int(coords[static_cast<std::size_t>(i)]) * fund[static_cast<std::size_t>(i)];
        return v;
    }

    std::vector<int> eps_to_fund(const LVec& w) const {
        std::vector<int> c(static_cast<std::size_t>(rank));
        for (int i = 0; i < rank; ++i)
            c[static_cast<std::size_t>(i)] = static_cast<int>(pairing(w, simples[static_cast<std::size_t>(i)]));
        return c;
    }

    // General (possibly non-lattice) weights: rational pairings.
    std::vector<Rat> to_fund_rat(const LVec& w) const {
        std::vector<Rat> c(static_cast<std::size_t>(rank));
        for (int i = 0; i < rank; ++i) {
            const auto& a = simples[static_cast<std::size_t>(i)];
            c[static_cast<std::size_t>(i)] = make_rat(2 * dot(w, a), dot(a, a));
        }
        return c;
    }

    // Coefficients of w in the simple-root basis (rational in general).
    std::vector<Rat> root_coords(const LVec& w) const {
        std::vector<Rat> f(static_cast<std::size_t>(rank));
        for (int i = 0; i < rank; ++i) {
            const auto& a = simples[static_cast<std::size_t>(i)];
            f[static_cast<std::size_t>(i)] = make_rat(2 * dot(w, a), dot(a, a));
        }
        std::vector<Rat> c(static_cast<std::size_t>(rank), Rat(0));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                c[static_cast<std::size_t>(i)] += cartan_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(j)];
        return c;
    }

    // Sum of the simple-root coefficients of w, up to one fixed positive
    // per-system factor: an exact integer key that linearly extends the
    // dominance order (w closer to the top of a module has a larger key).
    Int height_key(const LVec& w) const {
        Int h = 0;
        for (int j = 0; j < rank; ++j)
            h += height_num[static_cast<std::size_t>(j)] * pairing(w, simples[static_cast<std::size_t>(j)]);
        return h;
    }

    bool is_dominant(const LVec& w) const {
        for (const auto& a : simples)
            if (pairing(w, a) < 0) return false;
        return true;
    }

    // --- Weyl machinery ----------------------------------------------------

    LVec dominize(LVec w) const {
        for (;;) {
            bool moved = false;
            for (const auto& a : simples) {
                const Int c = pairing(w, a);
                if (c < 0) {
                    w = w - c * a;
                    moved = true;
                    break;
                }
            }
            if (!moved) return w;
        }
    }

    // max_size > 0 aborts once the orbit grows past that many elements; orbits
    // of nearly regular weights in high-rank systems reach Weyl-group size.
    std::vector<LVec> weyl_orbit(const LVec& w, Int max_size = 0) const {
        std::unordered_set<LVec, LVecHash> seen{w};
        std::vector<LVec> frontier{w}, out{w};
        while (!frontier.empty()) {
            std::vector<LVec> nxt;
            for (const auto& v : frontier) {
                for (const auto& a : simples) {
                    const LVec img = v - pairing(v, a) * a;
                    if (seen.insert(img).second) {
                        if (max_size > 0 && static_cast<Int>(seen.size()) > max_size)
                            fail(err::BudgetExceeded,
                                 "Weyl orbit larger than " + std::to_string(max_size));
                        nxt.push_back(img);
                        out.push_back(img);
                    }
                }
            }
            frontier = std::move(nxt);
        }
        return out;
    }

    // -w0(lambda): the dominant representative of the orbit of -lambda.
    std::vector<int> dual_weight(const std::vector<int>& coords) const {
        for (int c : coords)
            if (c < 0) fail(err::NotDominant, "dual_weight");
        return eps_to_fund(dominize(-fund_to_eps(coords)));
    }

    // --- reporting ----------------------------------------------------------

    Table1Row table1_row() const {
        Rat mx(0);
        for (const auto& a : even_simple_system())
            mx = std::max(mx, coroot_norm_sq(a));
        return Table1Row{inner(rho, rho), mx, dim_g};
    }

    // The simple system of the even root subsystem: for BC the odd simple
    // root epsilon_m is replaced by the even root 2*epsilon_m; classical
    // systems return their simples unchanged.
    std::vector<LVec> even_simple_system() const {
        if (id.family != Family::BC) return simples;
        std::vector<LVec> s(simples.begin(), simples.end() - 1);
        s.push_back(2 * simples.back());
        return s;
    }

private:
    void build() {
        auto [sf, dim_amb] = detail::simple_roots_exact(id);
        amb = dim_amb;
        const int m = rank;

        // Cartan matrix A[i][j] = (alpha_j, alpha_i^vee) and its inverse.
        detail::RatMat A(static_cast<std::size_t>(m), detail::RatVec(static_cast<std::size_t>(m)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    2 * detail::rdot(sf[static_cast<std::size_t>(i)], sf[static_cast<std::size_t>(j)]) /
                    detail::rdot(sf[static_cast<std::size_t>(i)], sf[static_cast<std::size_t>(i)]);
        const detail::RatMat inv = detail::rat_mat_inv(A);

        // Fundamental weights: beta_j = sum_k inv[k][j] * alpha_k.
        std::vector<detail::RatVec> ff(static_cast<std::size_t>(m),
                                       detail::RatVec(static_cast<std::size_t>(amb), Rat(0)));
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int d = 0; d < amb; ++d)
                    ff[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] +=
                        inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] *
                        sf[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];

        detail::RatVec rf(static_cast<std::size_t>(amb), Rat(0));
        for (const auto& v : ff)
            for (int d = 0; d < amb; ++d) rf[static_cast<std::size_t>(d)] += v[static_cast<std::size_t>(d)];

        // Scale: lcm of all coordinate denominators.
        Big lden = 1;
        auto fold = [&](const detail::RatVec& v) {
            for (const auto& x : v) {
                Big d = x.get_den();
                lden = lden * d / gcd(lden, d);
            }
        };
        for (const auto& v : sf) fold(v);
        for (const auto& v : ff) fold(v);
        fold(rf);
        L = static_cast<Int>(lden.get_si());

        auto freeze = [&](const detail::RatVec& v) {
            LVec r(amb);
            for (int d = 0; d < amb; ++d) {
                Rat x = v[static_cast<std::size_t>(d)] * Rat(static_cast<long>(L));
                if (x.get_den() != 1) fail(err::NonIntegerResult, "scale");
                r[d] = static_cast<std::int32_t>(x.get_num().get_si());
            }
            return r;
        };
        for (const auto& v : sf) simples.push_back(freeze(v));
        for (const auto& v : ff) fund.push_back(freeze(v));
        rho = freeze(rf);

        cartan_inv = inv;

        // Height functional: sum of simple-root coefficients, cleared of
        // denominators. h(mu) = sum_j colsum_j(A^-1) * (mu, alpha_j^vee).
        {
            detail::RatVec col(static_cast<std::size_t>(m), Rat(0));
            Big hd = 1;
            for (int j = 0; j < m; ++j) {
                for (int i = 0; i < m; ++i)
                    col[static_cast<std::size_t>(j)] += inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                Big d = col[static_cast<std::size_t>(j)].get_den();
                hd = hd * d / gcd(hd, d);
            }
            for (int j = 0; j < m; ++j) {
                Rat x = col[static_cast<std::size_t>(j)] * Rat(hd);
                height_num.push_back(static_cast<Int>(x.get_num().get_si()));
            }
        }

        build_positive_roots();

        const Int pe = static_cast<Int>(pos.size());
        const Int po = static_cast<Int>(pos_odd.size());
        dim_g = 2 * (pe - po) + m;

        // Highest (even) root = the positive root maximal against rho.
        const LVec* best = &pos.front();
        for (const auto& r : pos)
            if (std::pair(dot(r, rho), r) > std::pair(dot(*best, rho), *best)) best = &r;
        adjoint = eps_to_fund(*best);

        check_invariants();
    }

    void build_positive_roots() {
        const int m = rank;
        auto unit = [&](int i) {
            LVec v(amb);
            v[i] = static_cast<std::int32_t>(L);
            return v;
        };
        switch (id.family) {
            case Family::A:
                for (int i = 0; i < amb; ++i)
                    for (int j = i + 1; j < amb; ++j) pos.push_back(unit(i) - unit(j));
                return;
            case Family::B:
            case Family::C:
            case Family::D:
            case Family::BC:
                for (int i = 0; i < m; ++i)
                    for (int j = i + 1; j < m; ++j) {
                        pos.push_back(unit(i) - unit(j));
                        pos.push_back(unit(i) + unit(j));
                    }
                if (id.family == Family::B)
                    for (int i = 0; i < m; ++i) pos.push_back(unit(i));
                if (id.family == Family::C || id.family == Family::BC)
                    for (int i = 0; i < m; ++i) pos.push_back(2 * unit(i));
                if (id.family == Family::BC)
                    for (int i = 0; i < m; ++i) pos_odd.push_back(unit(i));
                return;
            default: {
                // Reflection closure of the simples, then keep the roots whose
                // simple-root coefficients are all nonnegative.
                std::unordered_set<LVec, LVecHash> roots(simples.begin(), simples.end());
                std::vector<LVec> frontier(simples.begin(), simples.end());
                while (!frontier.empty()) {
                    std::vector<LVec> nxt;
                    for (const auto& r : frontier)
                        for (const auto& a : simples) {
                            const LVec img = r - pairing(r, a) * a;
                            if (roots.insert(img).second) nxt.push_back(img);
                        }
                    frontier = std::move(nxt);
                }
                for (const auto& r : roots) {
                    const auto c = root_coords(r);
                    bool nonneg = true, some = false;
                    for (const auto& x : c) {
                        if (x < 0) nonneg = false;
                        if (x > 0) some = true;
                    }
                    if (nonneg && some) pos.push_back(r);
                }
                std::sort(pos.begin(), pos.end());
                return;
            }
        }
    }

    void check_invariants() const {
        const int m = rank;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (pairing(fund[static_cast<std::size_t>(j)], simples[static_cast<std::size_t>(i)]) != (i == j ? 1 : 0))
                    fail(err::NonIntegerResult, "coroot/fundamental duality");
        // rho from fundamental weights == half-(super-)sum of positive roots.
        LVec twice(amb);
        for (const auto& r : pos) twice = twice + r;
        for (const auto& r : pos_odd) twice = twice - r;
        if (!(twice == 2 * rho)) fail(err::NonIntegerResult, "rho consistency");

        Int want = 0;
        switch (id.family) {
            case Family::A: want = Int(m) * (m + 2); break;
            case Family::B:
            case Family::C: want = Int(m) * (2 * m + 1); break;
            case Family::D:
            case Family::BC: want = Int(m) * (2 * m - 1); break;
            case Family::E: want = rank == 6 ? 78 : rank == 7 ? 133 : 248; break;
            case Family::F: want = 52; break;
            case Family::G: want = 14; break;
        }
        if (dim_g != want) fail(err::NonIntegerResult, "dim_g consistency");
    }
};

// Shared registry; systems are immutable so const references stay valid.
inline const RootSystem& get_system(const SystemId& id) {
    static std::map<SystemId, std::unique_ptr<const RootSystem>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it == cache.end())
        it = cache.emplace(id, std::make_unique<const RootSystem>(id)).first;
    return *it->second;
}

inline const RootSystem& get_system(const std::string& name) {
    return get_system(parse_system(name));
}

} // namespace liesq
