#pragma once

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "liesq/classify.hpp"
#include "liesq/serialize.hpp"

namespace liesq {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    int rank_bound = 8;
    Int budget = kDefaultCharBudget;
};

// Runs the eight release checks against a golden corpus. Criteria 5 and 7
// share the computed square decompositions, so running them through one
// Verifier instance avoids recomputation.
class Verifier {
public:
    Verifier(const Corpus& corpus, VerifyOptions opt) : corpus_(corpus), opt_(opt) {}

    std::vector<CriterionResult> run_all() {
        std::vector<CriterionResult> out;
        for (int id = 1; id <= 8; ++id) out.push_back(run(id));
        return out;
    }

    CriterionResult run(int id) {
        CriterionResult r;
        r.id = id;
        const auto t0 = std::chrono::steady_clock::now();
        switch (id) {
            case 1: c1(r); break;
            case 2: c2(r); break;
            case 3: c3(r); break;
            case 4: c4(r); break;
            case 5: c5(r); break;
            case 6: c6(r); break;
            case 7: c7(r); break;
            case 8: c8(r); break;
            default: fail(err::IndexOutOfRange, "criterion id must be 1..8");
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }

private:
    const Corpus& corpus_;
    VerifyOptions opt_;

    bool squares_done_ = false;
    bool squares_match_ = true;
    std::string squares_detail_;
    double squares_seconds_ = 0.0;
    double e8_seconds_ = 0.0;
    std::vector<std::tuple<const GoldenSquare*, Decomposition, Decomposition>> square_decs_;

    bool in_scope(const SystemId& sys) const {
        if (sys.family == Family::E || sys.family == Family::F || sys.family == Family::G)
            return true;
        return sys.rank <= opt_.rank_bound;
    }

    void c1(CriterionResult& r) {
        r.name = "invariant table";
        int rows = 0;
        for (const auto& row : corpus_.table1) {
            const auto got = get_system(row.sys).table1_row();
            if (got.rho_norm_sq != row.rho_norm_sq ||
                got.max_coroot_norm_sq != row.max_coroot_norm_sq || got.dim_g != row.dim_g) {
                r.pass = false;
                r.detail = system_name(row.sys) + " invariants differ";
                return;
            }
            ++rows;
        }
        r.pass = true;
        r.detail = std::to_string(rows) + " rows match";
    }

    void c2(CriterionResult& r) {
        r.name = "adjoint bound";
        int held = 0, degenerate = 0;
        for (const auto& row : corpus_.table1) {
            const RootSystem& rs = get_system(row.sys);
            const auto lr = lemma1_check(rs);
            if (rs.rank == 1) {
                if (lr.applicable) {
                    r.pass = false;
                    r.detail = system_name(row.sys) + " should be degenerate";
                    return;
                }
                ++degenerate;
            } else {
                if (!lr.applicable || !lr.holds) {
                    r.pass = false;
                    r.detail = "bound fails for " + system_name(row.sys);
                    return;
                }
                ++held;
            }
        }
        r.pass = true;
        r.detail = "strict for " + std::to_string(held) + " systems, degenerate for " +
                   std::to_string(degenerate) + " rank-one systems";
    }

    void c3(CriterionResult& r) {
        r.name = "alternating thresholds";
        int rows = 0;
        for (const auto& row : corpus_.table2) {
            const RootSystem& rs = get_system(row.sys);
            if (static_cast<int>(row.r.size()) != rs.rank) {
                r.pass = false;
                r.detail = system_name(row.sys) + " threshold count differs";
                return;
            }
            for (int i = 1; i <= rs.rank; ++i)
                if (r_threshold(rs, i) != row.r[static_cast<std::size_t>(i - 1)]) {
                    r.pass = false;
                    r.detail = system_name(row.sys) + " threshold " + std::to_string(i) +
                               " differs";
                    return;
                }
            ++rows;
        }
        r.pass = true;
        r.detail = std::to_string(rows) + " rows match";
    }

    void c4(CriterionResult& r) {
        r.name = "small-representation inventory";
        std::map<SystemId, std::set<std::pair<std::vector<int>, Big>>> golden;
        for (const auto& row : corpus_.squares) golden[row.sys].insert({row.lambda, row.dim});
        int systems = 0;
        Big min_dim(0);
        bool have_min = false;
        std::set<std::pair<std::string, std::vector<int>>> attain;
        for (const auto& [sys, rows] : golden) {
            if (!in_scope(sys)) continue;
            if (sys.family == Family::BC && (sys.rank < 2 || sys.rank > 5)) continue;
            const RootSystem& rs = get_system(sys);
            const auto reps = enumerate_small_reps(rs);
            const std::set<std::pair<std::vector<int>, Big>> computed(reps.begin(), reps.end());
            if (computed != rows) {
                r.pass = false;
                r.detail = system_name(sys) + " inventory differs from the golden list";
                return;
            }
            ++systems;
            if (rs.rank >= 2)
                for (const auto& [f, d] : computed) {
                    if (!have_min || d < min_dim) {
                        min_dim = d;
                        have_min = true;
                        attain.clear();
                    }
                    if (d == min_dim) attain.insert({system_name(sys), f});
                }
        }
        const std::set<std::pair<std::string, std::vector<int>>> expected_attain = {
            {"BC2", {0, 2}}};
        if (!have_min || min_dim != 2 || attain != expected_attain) {
            r.pass = false;
            r.detail = "minimal dimension witness is not the expected one";
            return;
        }
        r.pass = true;
        r.detail = std::to_string(systems) +
                   " inventories match; minimal dimension 2 attained only at BC2 f:0,2";
    }

    void ensure_squares() {
        if (squares_done_) return;
        squares_done_ = true;
        const auto t0 = std::chrono::steady_clock::now();
        for (const auto& row : corpus_.squares) {
            if (!in_scope(row.sys)) continue;
            const RootSystem& rs = get_system(row.sys);
            const auto t1 = std::chrono::steady_clock::now();
            const GradedChar& ch = irrep_character(rs, row.lambda, opt_.budget);
            auto [sq, aq] = square_chars(ch);
            Decomposition ds = decompose(sq, opt_.budget);
            Decomposition da = decompose(aq, opt_.budget);
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
            if (row.sys == SystemId{Family::E, 8}) e8_seconds_ += secs;
            if (squares_match_) {
                if (dim_irrep(rs, row.lambda) != row.dim) {
                    squares_match_ = false;
                    squares_detail_ = system_name(row.sys) + " " + weight_str(row.lambda) +
                                      ": dimension differs";
                } else if (!half_matches(row.sym, ds) || !half_matches(row.alt, da)) {
                    squares_match_ = false;
                    squares_detail_ = system_name(row.sys) + " " + weight_str(row.lambda) +
                                      ": decomposition differs";
                }
            }
            square_decs_.emplace_back(&row, std::move(ds), std::move(da));
        }
        squares_seconds_ =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    static bool half_matches(const GoldenHalf& g, const Decomposition& d) {
        if (g.trivial != d.trivial_count) return false;
        if (g.summands.size() != d.summands.size()) return false;
        auto gs = g.summands;
        std::sort(gs.begin(), gs.end(), [](const GoldenSummand& a, const GoldenSummand& b) {
            if (a.f != b.f) return a.f < b.f;
            return a.flip < b.flip;
        });
        for (std::size_t i = 0; i < gs.size(); ++i)
            if (gs[i].f != d.summands[i].f || gs[i].flip != d.summands[i].flipped ||
                gs[i].mult != d.summands[i].mult)
                return false;
        return true;
    }

    void c5(CriterionResult& r) {
        r.name = "square decompositions";
        ensure_squares();
        char buf[160];
        std::snprintf(buf, sizeof buf, "%zu rows; largest system %.1fs; total %.1fs",
                      square_decs_.size(), e8_seconds_, squares_seconds_);
        if (!squares_match_) {
            r.pass = false;
            r.detail = squares_detail_;
            return;
        }
        if (e8_seconds_ > 60.0 || squares_seconds_ > 300.0) {
            r.pass = false;
            r.detail = std::string("time budget exceeded: ") + buf;
            return;
        }
        r.pass = true;
        r.detail = buf;
    }

    void c6(CriterionResult& r) {
        r.name = "classification sweep";
        const TheoremReport rep = theorem_check(corpus_, opt_.rank_bound, opt_.budget);
        std::size_t entries = 0;
        for (const auto& [bucket, s] : rep.computed) entries += s.size();
        if (!rep.pass()) {
            std::string first;
            for (const auto& d : rep.diffs) {
                if (!d.missing.empty()) { first = "missing " + entry_str(d.missing.front()) + " in " + d.bucket; break; }
                if (!d.extra.empty()) { first = "extra " + entry_str(d.extra.front()) + " in " + d.bucket; break; }
            }
            r.pass = false;
            r.detail = first;
            return;
        }
        r.pass = true;
        r.detail = std::to_string(entries) + " hits across four buckets match the golden list";
    }

    void c7(CriterionResult& r) {
        r.name = "trace-form identities";
        ensure_squares();
        int checked = 0;
        for (const auto& [rowp, ds, da] : square_decs_) {
            const RootSystem& rs = get_system(rowp->sys);
            if (!verify_index_identity(rs, rowp->lambda, SquareKind::Symmetric, ds) ||
                !verify_index_identity(rs, rowp->lambda, SquareKind::Alternating, da)) {
                r.pass = false;
                r.detail = "index identity fails at " + system_name(rowp->sys) + " " +
                           weight_str(rowp->lambda);
                return;
            }
            checked += 2;
        }
        for (const auto& [bucket, delta] :
             std::vector<std::pair<std::string, int>>{{"sym_irreducible", 0},
                                                      {"sym_plus_trivial", 1}}) {
            const auto it = corpus_.theorem.find(bucket);
            if (it == corpus_.theorem.end()) continue;
            for (const auto& e : it->second) {
                const SystemId sys = system_from_label(std::get<0>(e), std::get<1>(e));
                if (!in_scope(sys)) continue;
                if (!symmetric_hit_identity(get_system(sys), std::get<2>(e), delta)) {
                    r.pass = false;
                    r.detail = "symmetric hit identity fails at " + entry_str(e);
                    return;
                }
                ++checked;
            }
        }
        r.pass = true;
        r.detail = std::to_string(checked) + " identities hold exactly";
    }

    void c8(CriterionResult& r) {
        r.name = "randomized properties";
        std::mt19937 rng(20260816u);
        const std::vector<std::string> pool = {"A3", "B3", "C4", "D4", "G2", "F4", "BC2", "BC3"};
        int instances = 0;
        std::set<std::string> used;
        std::string first_fail;
        auto note = [&](bool ok, const std::string& what, const RootSystem& rs,
                        const std::vector<int>& f) {
            if (!ok && first_fail.empty())
                first_fail = what + " at " + system_name(rs.id) + " " + weight_str(f);
        };
        auto random_weight = [&](const RootSystem& rs) {
            const int hi = (rs.id.family == Family::F || rs.id.family == Family::C) ? 1 : 2;
            std::uniform_int_distribution<int> dist(0, hi);
            std::vector<int> f(static_cast<std::size_t>(rs.rank), 0);
            bool nonzero = false;
            for (auto& x : f) {
                x = dist(rng);
                nonzero |= x != 0;
            }
            if (!nonzero) f[0] = 1;
            if (rs.id.family == Family::BC) f.back() *= 2;
            return f;
        };

        for (const auto& name : pool) {
            const RootSystem& rs = get_system(name);
            for (int t = 0; t < 14; ++t) {
                const auto f = random_weight(rs);
                ++instances;
                used.insert(name);
                const GradedChar& ch = irrep_character(rs, f, opt_.budget);
                const Int N = ch.mass_ordinary, n = ch.mass_super;
                auto [sy, al] = square_chars(ch);
                note(sy.mass_ordinary + al.mass_ordinary == N * N, "square mass", rs, f);
                note(2 * sy.mass_super == n * (n + 1), "symmetric superdimension", rs, f);
                note(2 * al.mass_super == n * (n - 1), "alternating superdimension", rs, f);

                // Weyl invariance of the weight multiset
                std::uniform_int_distribution<std::size_t> dpick(0, ch.dom.size() - 1);
                auto it = std::next(ch.dom.begin(),
                                    static_cast<std::ptrdiff_t>(dpick(rng)));
                const auto orbit = rs.weyl_orbit(it->first);
                std::uniform_int_distribution<std::size_t> opick(0, orbit.size() - 1);
                const LVec w = orbit[opick(rng)];
                std::uniform_int_distribution<std::size_t> spick(
                    0, static_cast<std::size_t>(rs.rank) - 1);
                const LVec& a = rs.simples[spick(rng)];
                const LVec w2 = w - rs.pairing(w, a) * a;
                note(ch.full.at(w) == ch.full.at(w2), "reflection invariance", rs, f);

                // peeling returns exactly the character we started from
                const Decomposition dd = decompose(ch, opt_.budget);
                note(dd.trivial_count == 0 && dd.summands.size() == 1 &&
                         dd.summands[0] == Summand{f, false, 1},
                     "peel identity", rs, f);
                const Decomposition df = decompose(ch.flipped(), opt_.budget);
                note(df.trivial_count == 0 && df.summands.size() == 1 &&
                         df.summands[0] == Summand{f, true, 1},
                     "flipped peel identity", rs, f);

                // growing the weight grows the dimension
                std::uniform_int_distribution<int> npick(0, rs.rank - 1);
                const int j = npick(rng);
                auto g = f;
                g[static_cast<std::size_t>(j)] +=
                    (rs.id.family == Family::BC && j == rs.rank - 1) ? 2 : 1;
                note(dim_irrep(rs, g) > dim_irrep(rs, f), "dimension monotonicity", rs, f);
                note(casimir(rs, f) > 0, "Casimir positivity", rs, f);

                // weight parsing round-trips
                note(parse_weight(rs, weight_str(f)) == f, "f round trip", rs, f);
                note(parse_weight(rs, "e:" + eps_str(rs.fund_to_eps(f), rs.L)) == f,
                     "e round trip", rs, f);

                if (t == 0) {
                    // the two squares partition the tensor square
                    const GradedChar T = tensor_char(ch, ch);
                    auto U = sy.full;
                    for (const auto& [wu, eo] : al.full) {
                        auto& p = U[wu];
                        p.first += eo.first;
                        p.second += eo.second;
                    }
                    for (auto itU = U.begin(); itU != U.end();)
                        itU = (itU->second.first == 0 && itU->second.second == 0)
                                  ? U.erase(itU)
                                  : std::next(itU);
                    note(U == T.full, "squares partition the tensor square", rs, f);
                }
            }
        }

        // the multiplicity recursion agrees with the tensor-ring induction
        const std::vector<std::string> classical = {"A3", "B3", "C4", "D4", "G2", "F4"};
        for (int t = 0; t < 20; ++t) {
            const RootSystem& rs = get_system(classical[static_cast<std::size_t>(t) % classical.size()]);
            const auto f = random_weight(rs);
            ++instances;
            const GradedChar ind = induced_irrep_classical(rs, f, opt_.budget);
            const GradedChar& fr = irrep_character(rs, f, opt_.budget);
            note(ind.dom == fr.dom, "induction cross-check", rs, f);
        }

        if (!first_fail.empty()) {
            r.pass = false;
            r.detail = first_fail;
            return;
        }
        r.pass = true;
        r.detail = std::to_string(instances) + " instances across " +
                   std::to_string(used.size()) + " systems";
    }
};

inline std::string criterion_line(const CriterionResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
    return "criterion " + std::to_string(r.id) + " [" + r.name + "]: " +
           (r.pass ? "PASS" : "FAIL") + buf + " — " + r.detail;
}

} // namespace liesq
