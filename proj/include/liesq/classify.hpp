#pragma once

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "liesq/characters.hpp"
#include "liesq/golden.hpp"

namespace liesq {

enum class SquareKind { Symmetric, Alternating };

inline const char* kind_name(SquareKind k) {
    return k == SquareKind::Symmetric ? "sym" : "alt";
}

inline SquareKind parse_kind(const std::string& s) {
    if (s == "sym" || s == "symmetric") return SquareKind::Symmetric;
    if (s == "alt" || s == "alternating") return SquareKind::Alternating;
    fail(err::ParseError, "kind must be 'sym' or 'alt', got '" + s + "'");
}

enum class SquareStatus { Irreducible, IrreduciblePlusTrivial, Neither };

inline const char* status_name(SquareStatus s) {
    switch (s) {
        case SquareStatus::Irreducible: return "Irreducible";
        case SquareStatus::IrreduciblePlusTrivial: return "IrreduciblePlusTrivial";
        default: return "Neither";
    }
}

// A square counts as a hit when it is a single irreducible (possibly the
// trivial one) or a single nontrivial irreducible plus one trivial summand.
inline SquareStatus status_of(const Decomposition& d) {
    const Int nt = d.nontrivial_mass();
    const Int t = d.trivial_count;
    if ((nt == 1 && t == 0) || (nt == 0 && t == 1)) return SquareStatus::Irreducible;
    if (nt == 1 && t == 1) return SquareStatus::IrreduciblePlusTrivial;
    return SquareStatus::Neither;
}

inline int delta_of(SquareStatus s) {
    return s == SquareStatus::IrreduciblePlusTrivial ? 1 : 0;
}

namespace detail {

inline void require_classifiable(const RootSystem& rs) {
    if (rs.rank == 1 && (rs.id.family == Family::A || rs.id.family == Family::BC))
        fail(err::UnsupportedType,
             system_name(rs.id) +
                 " has a closed-form answer for every highest weight; use the"
                 " rank-one series formulas instead of the search driver");
}

} // namespace detail

// Candidates for an irreducible-or-almost symmetric square: every highest
// weight whose representation is no larger than the adjoint.
inline std::vector<std::vector<int>> symmetric_candidates(const RootSystem& rs) {
    detail::require_classifiable(rs);
    std::vector<std::vector<int>> out;
    for (auto& [f, d] : enumerate_small_reps(rs)) out.push_back(f);
    return out;
}

// Candidates for the alternating square: multiples r*beta_i with r below the
// per-node threshold (and, on the odd BC node, r even so the weight exists).
inline std::vector<std::vector<int>> alternating_candidates(const RootSystem& rs) {
    detail::require_classifiable(rs);
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= rs.rank; ++i) {
        const Rat thr = r_threshold(rs, i);
        for (int r = 1; Rat(r) < thr; ++r) {
            if (rs.id.family == Family::BC && i == rs.rank && r % 2 != 0) continue;
            std::vector<int> f(static_cast<std::size_t>(rs.rank), 0);
            f[static_cast<std::size_t>(i - 1)] = r;
            out.push_back(std::move(f));
        }
    }
    return out;
}

// Canonical representative of {lambda, dual(lambda)}: the lexicographically
// smaller coordinate vector.
inline std::vector<int> canon_weight(const RootSystem& rs, const std::vector<int>& f) {
    return std::min(f, rs.dual_weight(f));
}

struct ClassifiedHit {
    std::vector<int> f;
    SquareStatus status = SquareStatus::Neither;
    int delta = 0;
    Decomposition dec;
};

struct Classification {
    SystemId sys;
    SquareKind kind = SquareKind::Symmetric;
    std::vector<std::vector<int>> candidates;
    std::vector<ClassifiedHit> hits;
    // Hits grouped under the canonical member of {weight, dual}; both members
    // of a dual pair are retained in the value list.
    std::map<std::vector<int>, std::vector<std::vector<int>>> duality_classes;
};

inline Classification classify_squares(const RootSystem& rs, SquareKind kind,
                                       Int budget = kDefaultCharBudget) {
    detail::require_classifiable(rs);
    Classification out;
    out.sys = rs.id;
    out.kind = kind;
    out.candidates =
        kind == SquareKind::Symmetric ? symmetric_candidates(rs) : alternating_candidates(rs);
    for (const auto& f : out.candidates) {
        const GradedChar& ch = irrep_character(rs, f, budget);
        auto sq = square_chars(ch);
        Decomposition d = decompose(kind == SquareKind::Symmetric ? sq.first : sq.second, budget);
        const SquareStatus st = status_of(d);
        if (st != SquareStatus::Neither) out.hits.push_back({f, st, delta_of(st), std::move(d)});
    }
    for (const auto& h : out.hits) out.duality_classes[canon_weight(rs, h.f)].push_back(h.f);
    return out;
}

// --- consistency identities ------------------------------------------------

// Trace-form balance of a square decomposition: the Casimir-weighted
// dimension sum of the constituents equals (dim V ± 2) dim V c(lambda),
// with + for the symmetric square. Flipped summands count negatively;
// trivial summands contribute nothing.
inline bool verify_index_identity(const RootSystem& rs, const std::vector<int>& f,
                                  SquareKind kind, const Decomposition& d) {
    Rat lhs(0);
    for (const auto& s : d.summands) {
        Rat term = Rat(dim_irrep(rs, s.f)) * casimir(rs, s.f) * make_rat(s.mult, 1);
        if (s.flipped) term = -term;
        lhs += term;
    }
    const Rat n = Rat(dim_irrep(rs, f));
    const Rat rhs = (n + (kind == SquareKind::Symmetric ? Rat(2) : Rat(-2))) * n * casimir(rs, f);
    return lhs == rhs;
}

// Every symmetric-square hit satisfies (dim V − 2 delta)(lambda, lambda) =
// 2 (lambda, rho).
inline bool symmetric_hit_identity(const RootSystem& rs, const std::vector<int>& f, int delta) {
    const LVec lam = rs.fund_to_eps(f);
    return (Rat(dim_irrep(rs, f)) - Rat(2 * delta)) * rs.inner(lam, lam) ==
           Rat(2) * rs.inner(lam, rs.rho);
}

// Cauchy-Schwarz chain bounding (lambda, alpha_i^vee)^2 for symmetric hits;
// the final strict inequality degenerates to equality at rank one.
inline bool symmetric_proof_bound(const RootSystem& rs, const std::vector<int>& f, int delta) {
    if (rs.rank < 2)
        fail(err::UnsupportedType, "the bound is not strict at rank one");
    const LVec lam = rs.fund_to_eps(f);
    const Rat ll = rs.inner(lam, lam);
    const Rat n = Rat(dim_irrep(rs, f)) - Rat(2 * delta);
    const Rat bound = make_rat(rs.dim_g - 1, 1) / n;
    const Rat bound2 = bound * bound;
    for (const auto& a : rs.simples) {
        const Int p = rs.pairing(lam, a);
        const Rat chain = ll * rs.coroot_norm_sq(a);
        if (!(make_rat(p * p, 1) <= chain && chain < bound2)) return false;
    }
    return true;
}

struct AlternatingIdentityResult {
    bool identity = false;
    bool positivity = false;
    bool ok() const { return identity && positivity; }
};

// Alternating hits have single-support highest weight lambda = r*beta_i.
// With alpha the supporting simple root, n = dim V > 2, d = 2 delta / n:
//   (n − 1 − d) ((alpha, rho) + |alpha|^2/2 − |lambda − alpha|^2) = (1 − d) c(lambda),
// and 2 (alpha, lambda) > (lambda, lambda).
inline AlternatingIdentityResult alternating_proof_identity(const RootSystem& rs,
                                                            const std::vector<int>& f,
                                                            int delta) {
    int idx = -1;
    for (int i = 0; i < rs.rank; ++i)
        if (f[static_cast<std::size_t>(i)] != 0) {
            if (idx >= 0) fail(err::NotSingleSupport, "weight supported on several nodes");
            idx = i;
        }
    if (idx < 0) fail(err::NotSingleSupport, "zero weight");
    const Rat n = Rat(dim_irrep(rs, f));
    if (n <= 2) fail(err::UnsupportedType, "identity requires dimension greater than two");
    const LVec lam = rs.fund_to_eps(f);
    const LVec& alpha = rs.simples[static_cast<std::size_t>(idx)];
    const LVec lma = lam - alpha;
    const Rat d = Rat(2 * delta) / n;
    const Rat lhs = (n - Rat(1) - d) *
                    (rs.inner(alpha, rs.rho) + rs.inner(alpha, alpha) / 2 - rs.inner(lma, lma));
    const Rat rhs = (Rat(1) - d) * casimir(rs, f);
    AlternatingIdentityResult r;
    r.identity = lhs == rhs;
    r.positivity = Rat(2) * rs.inner(alpha, lam) - rs.inner(lam, lam) > 0;
    return r;
}

// --- rank-one closed forms ---------------------------------------------------

// Rank-one type A: the square of the (n+1)-dimensional irreducible splits
// into the even ladder V_{2n}, V_{2n-4}, ... (symmetric) and V_{2n-2},
// V_{2n-6}, ... (alternating); a 0 term is the trivial representation.
inline Decomposition a1_square(int n, SquareKind kind) {
    if (n < 1) fail(err::IndexOutOfRange, "highest weight must be positive");
    Decomposition d{SystemId{Family::A, 1}, {}, 0};
    for (int t = kind == SquareKind::Symmetric ? 2 * n : 2 * n - 2; t >= 0; t -= 4) {
        if (t == 0)
            d.trivial_count += 1;
        else
            d.summands.push_back({{t}, false, 1});
    }
    std::sort(d.summands.begin(), d.summands.end(),
              [](const Summand& a, const Summand& b) { return a.f < b.f; });
    return d;
}

// Rank-one BC: the square of V_n (highest weight n*eps, fundamental
// coordinate 2n) contains one copy of (Pi^d) V_{2n-d} for d = 0..2n, on the
// symmetric side iff d mod 4 is 0 or 3; the d = 2n term is trivial.
inline Decomposition bc1_square(int n, SquareKind kind) {
    if (n < 1) fail(err::IndexOutOfRange, "highest weight must be positive");
    Decomposition out{SystemId{Family::BC, 1}, {}, 0};
    for (int d = 0; d <= 2 * n; ++d) {
        const int c = 2 * n - d;
        const bool to_sym = d % 4 == 0 || d % 4 == 3;
        if (to_sym != (kind == SquareKind::Symmetric)) continue;
        if (c == 0)
            out.trivial_count += 1;
        else
            out.summands.push_back({{2 * c}, d % 2 != 0, 1});
    }
    std::sort(out.summands.begin(), out.summands.end(), [](const Summand& a, const Summand& b) {
        if (a.f != b.f) return a.f < b.f;
        return a.flipped < b.flipped;
    });
    return out;
}

// Low-rank coincidences between families. The golden buckets list every hit
// under its own system label, so the classification diff needs no folding;
// this table documents why some rows repeat across families.
struct LowRankIsomorphism {
    const char* a;
    const char* b;
    const char* note;
};

inline constexpr std::array<LowRankIsomorphism, 4> kLowRankIsomorphisms = {{
    {"A1", "B1", "so(3) is sl(2); the B1 vector weight beta1 matches the A1 weight 2*beta1"},
    {"A1", "C1", "sp(2) is sl(2); the fundamental weights correspond directly"},
    {"B2", "C2", "so(5) is sp(4); the B2 spin node is the C2 standard node"},
    {"A3", "D3", "sl(4) is so(6); the systems agree after relabeling nodes"},
}};

// --- classification sweep vs. the golden list --------------------------------

inline std::string bucket_of(SquareKind k, SquareStatus s) {
    std::string b = k == SquareKind::Symmetric ? "sym_" : "alt_";
    b += s == SquareStatus::Irreducible ? "irreducible" : "plus_trivial";
    return b;
}

inline const std::array<const char*, 4> kTheoremBuckets = {
    "sym_irreducible", "sym_plus_trivial", "alt_irreducible", "alt_plus_trivial"};

struct TheoremDiff {
    std::string bucket;
    std::vector<TheoremEntry> missing; // expected but not computed
    std::vector<TheoremEntry> extra;   // computed but not expected
};

struct TheoremReport {
    int rank_bound = 0;
    std::map<std::string, std::set<TheoremEntry>> computed;
    std::vector<TheoremDiff> diffs;
    bool pass() const { return diffs.empty(); }
};

// Sweeps every system in scope (classical families up to rank_bound, all
// exceptional systems, rank-one series by their closed forms), classifies
// both squares, canonicalizes dual pairs, and diffs against the golden
// bucket lists restricted to the same scope.
inline TheoremReport theorem_check(const Corpus& corpus, int rank_bound,
                                   Int budget = kDefaultCharBudget) {
    TheoremReport rep;
    rep.rank_bound = rank_bound;

    std::vector<SystemId> scope;
    for (int m = 2; m <= rank_bound; ++m) scope.push_back({Family::A, m});
    for (int m = 1; m <= rank_bound; ++m) scope.push_back({Family::B, m});
    for (int m = 1; m <= rank_bound; ++m) scope.push_back({Family::C, m});
    for (int m = 3; m <= rank_bound; ++m) scope.push_back({Family::D, m});
    for (int m = 2; m <= rank_bound; ++m) scope.push_back({Family::BC, m});
    for (int r : {6, 7, 8}) scope.push_back({Family::E, r});
    scope.push_back({Family::F, 4});
    scope.push_back({Family::G, 2});

    for (const auto& id : scope) {
        const RootSystem& rs = get_system(id);
        for (SquareKind k : {SquareKind::Symmetric, SquareKind::Alternating}) {
            for (const auto& h : classify_squares(rs, k, budget).hits)
                rep.computed[bucket_of(k, h.status)].emplace(family_label(id), id.rank,
                                                             canon_weight(rs, h.f));
        }
    }
    // Rank-one series, far enough out to witness that the hits stop.
    for (int n = 1; n <= 6; ++n)
        for (SquareKind k : {SquareKind::Symmetric, SquareKind::Alternating}) {
            const SquareStatus st = status_of(a1_square(n, k));
            if (st != SquareStatus::Neither)
                rep.computed[bucket_of(k, st)].emplace("A", 1, std::vector<int>{n});
        }
    for (int n = 1; n <= 5; ++n)
        for (SquareKind k : {SquareKind::Symmetric, SquareKind::Alternating}) {
            const SquareStatus st = status_of(bc1_square(n, k));
            if (st != SquareStatus::Neither)
                rep.computed[bucket_of(k, st)].emplace("BC", 1, std::vector<int>{2 * n});
        }

    auto in_scope = [&](const TheoremEntry& e) {
        const auto& fam = std::get<0>(e);
        if (fam == "F" || fam == "G" || fam.front() == 'E') return true;
        return std::get<1>(e) <= rank_bound;
    };
    for (const char* bucket : kTheoremBuckets) {
        TheoremDiff diff;
        diff.bucket = bucket;
        std::set<TheoremEntry> expected;
        if (auto it = corpus.theorem.find(bucket); it != corpus.theorem.end())
            for (const auto& e : it->second)
                if (in_scope(e)) expected.insert(e);
        const auto& got = rep.computed[bucket];
        for (const auto& e : expected)
            if (!got.count(e)) diff.missing.push_back(e);
        for (const auto& e : got)
            if (!expected.count(e)) diff.extra.push_back(e);
        if (!diff.missing.empty() || !diff.extra.empty()) rep.diffs.push_back(std::move(diff));
    }
    return rep;
}

} // namespace liesq
