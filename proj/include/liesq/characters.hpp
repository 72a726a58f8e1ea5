#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "liesq/repdims.hpp"

namespace liesq {

inline constexpr Int kDefaultCharBudget = 100000;

// Parity-graded formal character, Weyl-invariant by construction. Stored
// both as the dominant-representative map (deterministic iteration; used by
// peeling and subtraction) and as the fully expanded weight map (used by
// convolution). Values are (even multiplicity, odd multiplicity); classical
// systems only ever populate the even slot.
class GradedChar {
public:
    using Pair = std::pair<Int, Int>;
    using DomMap = std::map<LVec, Pair>;
    using FullMap = std::unordered_map<LVec, Pair, LVecHash>;

    const RootSystem* rs = nullptr;
    DomMap dom;
    FullMap full;
    Int mass_ordinary = 0; // sum of even+odd over all weights
    Int mass_super = 0;    // sum of even-odd over all weights

    // max_support > 0 bounds the expanded weight count; distinct dominant
    // weights have disjoint orbits, so each orbit gets the remaining slack.
    static GradedChar from_dominant(const RootSystem& r, DomMap d, Int max_support = 0) {
        GradedChar c;
        c.rs = &r;
        for (auto it = d.begin(); it != d.end();)
            it = (it->second.first == 0 && it->second.second == 0) ? d.erase(it) : std::next(it);
        c.dom = std::move(d);
        for (const auto& [w, eo] : c.dom) {
            Int allowance = 0;
            if (max_support > 0) {
                allowance = max_support - static_cast<Int>(c.full.size());
                if (allowance <= 0)
                    fail(err::BudgetExceeded,
                         "weight support exceeds " + std::to_string(max_support));
            }
            for (const auto& v : r.weyl_orbit(w, allowance)) {
                c.full.emplace(v, eo);
                c.mass_ordinary += eo.first + eo.second;
                c.mass_super += eo.first - eo.second;
            }
        }
        return c;
    }

    static GradedChar from_full(const RootSystem& r, FullMap f) {
        GradedChar c;
        c.rs = &r;
        for (auto it = f.begin(); it != f.end();)
            it = (it->second.first == 0 && it->second.second == 0) ? f.erase(it) : std::next(it);
        c.full = std::move(f);
        for (const auto& [w, eo] : c.full) {
            c.mass_ordinary += eo.first + eo.second;
            c.mass_super += eo.first - eo.second;
            if (r.is_dominant(w)) c.dom.emplace(w, eo);
        }
        return c;
    }

    static GradedChar trivial(const RootSystem& r) {
        DomMap d;
        d.emplace(LVec(r.amb), Pair{1, 0});
        return from_dominant(r, std::move(d));
    }

    // Parity flip: exchanges the even and odd slots everywhere.
    GradedChar flipped() const {
        GradedChar c;
        c.rs = rs;
        for (const auto& [w, eo] : dom) c.dom.emplace(w, Pair{eo.second, eo.first});
        for (const auto& [w, eo] : full) c.full.emplace(w, Pair{eo.second, eo.first});
        c.mass_ordinary = mass_ordinary;
        c.mass_super = -mass_super;
        return c;
    }

    std::size_t dominant_count() const { return dom.size(); }
};

// Peeling/report order: weights closer to the top of the module first
// (larger height key), ties broken lexicographically descending.
inline bool height_before(const RootSystem& rs, const LVec& a, const LVec& b) {
    const Int ha = rs.height_key(a), hb = rs.height_key(b);
    if (ha != hb) return ha > hb;
    return a > b;
}

inline GradedChar tensor_char(const GradedChar& a, const GradedChar& b) {
    if (a.rs == nullptr || b.rs == nullptr || a.rs->id != b.rs->id)
        fail(err::SystemMismatch, "tensor of characters over different systems");
    GradedChar::FullMap out;
    out.reserve(a.full.size() + b.full.size());
    for (const auto& [w1, p1] : a.full)
        for (const auto& [w2, p2] : b.full) {
            auto& acc = out[w1 + w2];
            acc.first += p1.first * p2.first + p1.second * p2.second;
            acc.second += p1.first * p2.second + p1.second * p2.first;
        }
    return GradedChar::from_full(*a.rs, std::move(out));
}

// Super symmetric/alternating square. With (c0, c1) the even/odd parts,
// * convolution and (.)∘2 weight doubling:
//   sym-even = (c0*c0 + c0∘2)/2 + (c1*c1 − c1∘2)/2,   sym-odd = c0*c1,
//   alt      = tensor square − sym componentwise.
inline std::pair<GradedChar, GradedChar> square_chars(const GradedChar& c) {
    using Map = std::unordered_map<LVec, Int, LVecHash>;
    Map ee, oo, eo, de, dod;
    for (const auto& [w1, p1] : c.full)
        for (const auto& [w2, p2] : c.full) {
            const LVec v = w1 + w2;
            if (p1.first && p2.first) ee[v] += p1.first * p2.first;
            if (p1.second && p2.second) oo[v] += p1.second * p2.second;
            if (p1.first && p2.second) eo[v] += p1.first * p2.second;
        }
    for (const auto& [w, p] : c.full) {
        const LVec v = 2 * w;
        if (p.first) de[v] += p.first;
        if (p.second) dod[v] += p.second;
    }
    std::unordered_set<LVec, LVecHash> keys;
    for (const auto* m : {&ee, &oo, &eo, &de, &dod})
        for (const auto& [w, x] : *m) keys.insert(w);
    auto get = [](const Map& m, const LVec& w) {
        auto it = m.find(w);
        return it == m.end() ? Int(0) : it->second;
    };
    auto halve = [](Int x) {
        if (x % 2 != 0) fail(err::ParityArithmetic, "odd intermediate in square plethysm");
        return x / 2;
    };
    GradedChar::FullMap sym, alt;
    for (const auto& w : keys) {
        const Int vee = get(ee, w), voo = get(oo, w), veo = get(eo, w);
        const Int vde = get(de, w), vdo = get(dod, w);
        const Int se = halve(vee + vde) + halve(voo - vdo);
        const Int ae = halve(vee - vde) + halve(voo + vdo);
        if (se < 0 || ae < 0) fail(err::ParityArithmetic, "negative square multiplicity");
        if (se || veo) sym.emplace(w, GradedChar::Pair{se, veo});
        if (ae || veo) alt.emplace(w, GradedChar::Pair{ae, veo});
    }
    return {GradedChar::from_full(*c.rs, std::move(sym)),
            GradedChar::from_full(*c.rs, std::move(alt))};
}

inline GradedChar sym_square_char(const GradedChar& c) { return square_chars(c).first; }
inline GradedChar alt_square_char(const GradedChar& c) { return square_chars(c).second; }

namespace detail {

// All v = rho + (nonnegative combination of fundamental weights) with
// |v|^2 <= n2. Adding a fundamental weight strictly increases |v|^2 on the
// dominant cone, so the nested enumeration prunes exactly.
inline void dominant_ball_rec(const RootSystem& rs, int i, const LVec& v, Int n2,
                              std::vector<LVec>& out, Int budget) {
    if (i == rs.rank) {
        if (static_cast<Int>(out.size()) >= budget)
            fail(err::BudgetExceeded, "dominant weight enumeration cap " + std::to_string(budget));
        out.push_back(v);
        return;
    }
    for (LVec w = v;; w = w + rs.fund[static_cast<std::size_t>(i)]) {
        if (dot(w, w) > n2) break;
        dominant_ball_rec(rs, i + 1, w, n2, out, budget);
    }
}

// Multiplicity recursion over the dominant weights of V_lambda.
inline GradedChar::DomMap freudenthal(const RootSystem& rs, const std::vector<int>& f, Int budget) {
    const LVec lam = rs.fund_to_eps(f);
    const LVec lr = lam + rs.rho;
    const Int n2 = dot(lr, lr);

    std::vector<LVec> ball;
    dominant_ball_rec(rs, 0, rs.rho, n2, ball, budget);

    std::vector<LVec> mus;
    for (const auto& v : ball) {
        const LVec mu = v - rs.rho;
        bool ok = true;
        for (const auto& x : rs.root_coords(lam - mu))
            if (x < 0 || x.get_den() != 1) {
                ok = false;
                break;
            }
        if (ok) mus.push_back(mu);
    }
    std::sort(mus.begin(), mus.end(),
              [&](const LVec& a, const LVec& b) { return height_before(rs, a, b); });
    if (mus.empty() || !(mus.front() == lam))
        fail(err::NonIntegerResult, "weight enumeration lost the highest weight");

    std::unordered_map<LVec, Int, LVecHash> mult;
    mult.emplace(lam, 1);
    for (std::size_t idx = 1; idx < mus.size(); ++idx) {
        const LVec& mu = mus[idx];
        Int num = 0;
        for (const auto& a : rs.pos) {
            for (Int k = 1;; ++k) {
                const LVec w = mu + k * a;
                const auto it = mult.find(rs.dominize(w));
                if (it != mult.end() && it->second != 0) {
                    num += 2 * it->second * dot(w, a);
                } else {
                    const LVec wr = w + rs.rho;
                    if (dot(wr, wr) > n2) break;
                }
            }
        }
        const LVec mr = mu + rs.rho;
        const Int den = n2 - dot(mr, mr);
        if (den <= 0 || num % den != 0)
            fail(err::NonIntegerResult, "multiplicity recursion");
        mult.emplace(mu, num / den);
    }

    GradedChar::DomMap out;
    for (const auto& [w, m] : mult)
        if (m > 0) out.emplace(w, GradedChar::Pair{m, 0});
    return out;
}

// Coefficients of ch(V_lamp) * seed in the character ring, computed from the
// seed's weight multiset alone: each weight u contributes its (total)
// multiplicity, signed by the reflections that regularize lamp + rho + u;
// stabilized points contribute nothing. Keys are epsilon-space weights.
inline std::map<LVec, Int> product_summands(const RootSystem& rs, const LVec& lamp,
                                            const GradedChar& seed) {
    std::map<LVec, Int> out;
    for (const auto& [u, p] : seed.full) {
        const Int mu_tot = p.first + p.second;
        LVec x = lamp + rs.rho + u;
        int sign = 1;
        for (;;) {
            bool refl = false;
            for (const auto& a : rs.simples) {
                const Int pr = rs.pairing(x, a);
                if (pr < 0) {
                    x = x - pr * a;
                    sign = -sign;
                    refl = true;
                    break;
                }
            }
            if (!refl) break;
        }
        bool singular = false;
        for (const auto& a : rs.simples)
            if (rs.pairing(x, a) == 0) {
                singular = true;
                break;
            }
        if (singular) continue;
        out[x - rs.rho] += sign * mu_tot;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

// The BC fundamental V_{mu_r}: even part = weight multiset of the r-th
// exterior power of the 2m-dimensional standard sp weight set {±eps_i},
// odd part = that of the (r-1)-st.
inline GradedChar bc_fund_seed(const RootSystem& rs, int r) {
    const int m = rs.rank;
    std::vector<LVec> items;
    for (int i = 0; i < m; ++i) {
        LVec u(rs.amb);
        u[i] = static_cast<std::int32_t>(rs.L);
        items.push_back(u);
        items.push_back(-u);
    }
    const int n = 2 * m;
    GradedChar::FullMap full;
    auto add_subsets = [&](int k, bool even_slot) {
        if (k == 0) {
            auto& p = full[LVec(rs.amb)];
            (even_slot ? p.first : p.second) += 1;
            return;
        }
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            LVec s(rs.amb);
            for (int j : idx) s = s + items[static_cast<std::size_t>(j)];
            auto& p = full[s];
            (even_slot ? p.first : p.second) += 1;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    };
    add_subsets(r, true);
    add_subsets(r - 1, false);
    return GradedChar::from_full(rs, std::move(full));
}

// r such that f is the fundamental-coordinate vector of mu_r, else 0.
inline int mu_index_of(const RootSystem& rs, const std::vector<int>& f) {
    const int m = rs.rank;
    int j = -1;
    for (int i = 0; i < m; ++i)
        if (f[static_cast<std::size_t>(i)] != 0) {
            if (j >= 0) return 0;
            j = i;
        }
    if (j < 0) return 0;
    if (j < m - 1 && f[static_cast<std::size_t>(j)] == 1) return j + 1;
    if (j == m - 1 && f[static_cast<std::size_t>(j)] == 2) return m;
    return 0;
}

} // namespace detail

inline const GradedChar& irrep_character(const RootSystem& rs, const std::vector<int>& f,
                                         Int budget = kDefaultCharBudget);

namespace detail {

// One inductive step in the tensor ring: split a generator off lambda,
// multiply the two known characters, and remove the sibling constituents
// (coefficients from product_summands). Works for BC (with parity handling)
// and for classical systems (no odd parts; used as a cross-check).
inline GradedChar induced_build(const RootSystem& rs, const std::vector<int>& f, Int budget) {
    const bool super = rs.id.family == Family::BC;
    const int m = rs.rank;

    int gi = -1;
    for (int i = 0; i < m && gi < 0; ++i)
        if (f[static_cast<std::size_t>(i)] > 0) gi = i;
    if (gi < 0) return GradedChar::trivial(rs);

    std::vector<int> gen(static_cast<std::size_t>(m), 0);
    gen[static_cast<std::size_t>(gi)] = (super && gi == m - 1) ? 2 : 1;
    std::vector<int> fp = f;
    fp[static_cast<std::size_t>(gi)] -= gen[static_cast<std::size_t>(gi)];

    const GradedChar& chL = irrep_character(rs, fp, budget);
    const GradedChar& chM = irrep_character(rs, gen, budget);
    GradedChar T = tensor_char(chL, chM);

    const LVec lam = rs.fund_to_eps(f);
    const LVec lamp = rs.fund_to_eps(fp);
    auto sib = product_summands(rs, lamp, chM);
    {
        const auto it = sib.find(lam);
        if (it == sib.end() || it->second != 1)
            fail(err::ParityArithmetic, "induction leading coefficient");
    }

    auto R = T.dom;
    for (const auto& [nu, cof] : sib) {
        if (nu == lam) continue;
        if (cof < 0) fail(err::ParityArithmetic, "negative sibling multiplicity");
        const bool flip =
            super && ((lam.coord_sum() - nu.coord_sum()) / rs.L) % 2 != 0;
        const GradedChar& sub = irrep_character(rs, rs.eps_to_fund(nu), budget);
        for (const auto& [w, eo] : sub.dom) {
            auto& t = R[w];
            t.first -= cof * (flip ? eo.second : eo.first);
            t.second -= cof * (flip ? eo.first : eo.second);
            if (t.first < 0 || t.second < 0)
                fail(err::ParityArithmetic, "negative residual in induction");
        }
    }
    for (auto it = R.begin(); it != R.end();)
        it = (it->second.first == 0 && it->second.second == 0) ? R.erase(it) : std::next(it);

    const auto top = R.find(lam);
    if (top == R.end() || top->second != GradedChar::Pair{1, 0})
        fail(err::ParityArithmetic, "induction top multiplicity");
    if (super)
        for (const auto& [w, eo] : R) {
            const bool odd_layer = ((lam.coord_sum() - w.coord_sum()) / rs.L) % 2 != 0;
            if ((odd_layer && eo.first != 0) || (!odd_layer && eo.second != 0))
                fail(err::ParityArithmetic, "mixed parity layer");
        }
    return GradedChar::from_dominant(rs, std::move(R), budget);
}

inline GradedChar compute_irrep(const RootSystem& rs, const std::vector<int>& f, Int budget) {
    if (rs.id.family != Family::BC)
        return GradedChar::from_dominant(rs, freudenthal(rs, f, budget), budget);
    if (const int r = mu_index_of(rs, f)) {
        GradedChar c = bc_fund_seed(rs, r);
        if (to_big(c.mass_super) != kac_weyl_sdim(rs, f))
            fail(err::ParityArithmetic, "fundamental superdimension mismatch");
        return c;
    }
    GradedChar c = induced_build(rs, f, budget);
    if (to_big(c.mass_super) != kac_weyl_sdim(rs, f))
        fail(err::ParityArithmetic, "superdimension mismatch");
    return c;
}

struct IrrepKey {
    SystemId sys;
    std::vector<int> f;
    friend bool operator<(const IrrepKey& a, const IrrepKey& b) {
        if (a.sys != b.sys) return a.sys < b.sys;
        return a.f < b.f;
    }
};

} // namespace detail

// Memoized irreducible character. The cache is append-only and deterministic;
// concurrent duplicate computation is harmless (first insert wins).
inline const GradedChar& irrep_character(const RootSystem& rs, const std::vector<int>& f,
                                         Int budget) {
    check_highest_weight(rs, f);
    static std::map<detail::IrrepKey, std::shared_ptr<const GradedChar>> cache;
    static std::mutex mu;
    const detail::IrrepKey key{rs.id, f};
    {
        std::lock_guard<std::mutex> lock(mu);
        const auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto ch = std::make_shared<const GradedChar>(detail::compute_irrep(rs, f, budget));
    std::lock_guard<std::mutex> lock(mu);
    return *cache.emplace(key, std::move(ch)).first->second;
}

// Classical cross-check entry point: builds the character by the same
// tensor-ring induction used for BC instead of the multiplicity recursion.
inline GradedChar induced_irrep_classical(const RootSystem& rs, const std::vector<int>& f,
                                          Int budget = kDefaultCharBudget) {
    if (rs.id.family == Family::BC)
        fail(err::SystemMismatch, "classical induction requested for a BC system");
    check_highest_weight(rs, f);
    GradedChar c = detail::induced_build(rs, f, budget);
    if (to_big(c.mass_ordinary) != weyl_dim(rs, f))
        fail(err::ParityArithmetic, "induced dimension mismatch");
    return c;
}

// --- decomposition ----------------------------------------------------------

struct Summand {
    std::vector<int> f;
    bool flipped = false;
    Int mult = 0;

    friend bool operator==(const Summand&, const Summand&) = default;
};

struct Decomposition {
    SystemId sys;
    std::vector<Summand> summands; // nontrivial constituents, sorted by (f, flipped)
    Int trivial_count = 0;         // multiplicity of the trivial representation

    Int nontrivial_mass() const {
        Int s = 0;
        for (const auto& x : summands) s += x.mult;
        return s;
    }
};

// Highest-weight peeling. The input must be a genuine nonnegative integral
// combination of irreducible characters.
inline Decomposition decompose(const GradedChar& c, Int budget = kDefaultCharBudget) {
    const RootSystem& rs = *c.rs;
    auto R = c.dom;
    Decomposition out{rs.id, {}, 0};
    while (!R.empty()) {
        auto best = R.begin();
        for (auto it = std::next(R.begin()); it != R.end(); ++it)
            if (height_before(rs, it->first, best->first)) best = it;
        const LVec mu = best->first;
        const auto [e, o] = best->second;
        if (e < 0 || o < 0) fail(err::NegativeResidual, "peeling " + system_name(rs.id));
        if (mu.is_zero()) {
            if (e > 0) out.trivial_count += e;
            if (o > 0)
                out.summands.push_back({std::vector<int>(static_cast<std::size_t>(rs.rank), 0), true, o});
            R.erase(best);
            continue;
        }
        const auto fmu = rs.eps_to_fund(mu);
        const GradedChar& ir = irrep_character(rs, fmu, budget);
        auto subtract = [&](Int mult, bool flip) {
            for (const auto& [w, eo] : ir.dom) {
                auto& t = R[w];
                t.first -= mult * (flip ? eo.second : eo.first);
                t.second -= mult * (flip ? eo.first : eo.second);
                if (t.first < 0 || t.second < 0)
                    fail(err::NegativeResidual, "peeling " + system_name(rs.id));
                if (t.first == 0 && t.second == 0) R.erase(w);
            }
        };
        if (e > 0) {
            subtract(e, false);
            out.summands.push_back({fmu, false, e});
        }
        const auto rest = R.find(mu);
        if (rest != R.end() && rest->second.second > 0) {
            const Int o2 = rest->second.second;
            subtract(o2, true);
            out.summands.push_back({fmu, true, o2});
        }
    }
    std::sort(out.summands.begin(), out.summands.end(), [](const Summand& a, const Summand& b) {
        if (a.f != b.f) return a.f < b.f;
        return a.flipped < b.flipped;
    });
    return out;
}

// Dominant-map reconstruction of a decomposition; equals the decomposed
// character's dominant map when the reconstruction invariant holds.
inline GradedChar::DomMap reconstruct_dominant(const RootSystem& rs, const Decomposition& d,
                                               Int budget = kDefaultCharBudget) {
    GradedChar::DomMap acc;
    if (d.trivial_count > 0) acc[LVec(rs.amb)] = {d.trivial_count, 0};
    for (const auto& s : d.summands) {
        const GradedChar& ch = irrep_character(rs, s.f, budget);
        for (const auto& [w, eo] : ch.dom) {
            auto& t = acc[w];
            t.first += s.mult * (s.flipped ? eo.second : eo.first);
            t.second += s.mult * (s.flipped ? eo.first : eo.second);
        }
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = (it->second.first == 0 && it->second.second == 0) ? acc.erase(it) : std::next(it);
    return acc;
}

inline std::pair<Decomposition, Decomposition>
square_table(const RootSystem& rs, const std::vector<int>& f, Int budget = kDefaultCharBudget) {
    const GradedChar& c = irrep_character(rs, f, budget);
    auto [s, a] = square_chars(c);
    return {decompose(s, budget), decompose(a, budget)};
}

} // namespace liesq
