#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liesq/classify.hpp"

using namespace liesq;

namespace {

std::vector<int> random_weight(const RootSystem& rs, std::mt19937& rng, int max_coord) {
    std::uniform_int_distribution<int> pick(0, max_coord);
    for (;;) {
        std::vector<int> f(static_cast<std::size_t>(rs.rank));
        for (auto& c : f) c = pick(rng);
        if (rs.id.family == Family::BC && f.back() % 2 != 0) f.back() -= 1;
        for (int c : f)
            if (c != 0) return f;
    }
}

} // namespace

TEST_CASE("random squares add up to the tensor square") {
    std::mt19937 rng(42u);
    for (const char* s : {"A2", "B2", "C3", "BC2"}) {
        const RootSystem& rs = get_system(s);
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = random_weight(rs, rng, 2);
            INFO(std::string(s) + " " + weight_str(f));
            const GradedChar& c = irrep_character(rs, f);
            const auto [sym, alt] = square_chars(c);
            const GradedChar t = tensor_char(c, c);

            // graded counts: even part e and odd part o of the module
            const Int e = (c.mass_ordinary + c.mass_super) / 2;
            const Int o = (c.mass_ordinary - c.mass_super) / 2;
            CHECK(2 * sym.mass_ordinary == e * (e + 1) + 2 * e * o + o * (o - 1));
            CHECK(2 * alt.mass_ordinary == e * (e - 1) + 2 * e * o + o * (o + 1));
            const Int ns = c.mass_super;
            CHECK(2 * sym.mass_super == ns * (ns + 1));
            CHECK(2 * alt.mass_super == ns * (ns - 1));

            GradedChar::FullMap merged = sym.full;
            for (const auto& [w, eo] : alt.full) {
                auto& m = merged[w];
                m.first += eo.first;
                m.second += eo.second;
            }
            CHECK(merged == t.full);
        }
    }
}

TEST_CASE("random characters are Weyl-invariant") {
    std::mt19937 rng(7u);
    for (const char* s : {"A3", "B3", "BC3"}) {
        const RootSystem& rs = get_system(s);
        for (int trial = 0; trial < 5; ++trial) {
            const auto f = random_weight(rs, rng, 2);
            const GradedChar& c = irrep_character(rs, f);
            for (const auto& a : rs.simples)
                for (const auto& [w, eo] : c.full) {
                    const LVec img = w - rs.pairing(w, a) * a;
                    const auto it = c.full.find(img);
                    REQUIRE(it != c.full.end());
                    CHECK(it->second == eo);
                }
        }
    }
}

TEST_CASE("superdimension formula matches the graded character mass") {
    std::mt19937 rng(99u);
    for (const char* s : {"BC2", "BC3"}) {
        const RootSystem& rs = get_system(s);
        for (int trial = 0; trial < 8; ++trial) {
            const auto f = random_weight(rs, rng, 3);
            INFO(std::string(s) + " " + weight_str(f));
            const GradedChar& c = irrep_character(rs, f);
            CHECK(to_big(c.mass_super) == dim_irrep(rs, f));
        }
    }
}

TEST_CASE("classical multiplicity recursion matches tensor-ring induction") {
    std::mt19937 rng(1234u);
    for (const char* s : {"A3", "B3", "C3", "D4"}) {
        const RootSystem& rs = get_system(s);
        for (int trial = 0; trial < 4; ++trial) {
            const auto f = random_weight(rs, rng, 2);
            INFO(std::string(s) + " " + weight_str(f));
            const GradedChar built = induced_irrep_classical(rs, f);
            const GradedChar& ref = irrep_character(rs, f);
            CHECK(built.dom == ref.dom);
            CHECK(built.mass_ordinary == ref.mass_ordinary);
        }
    }
}

TEST_CASE("random tensor products peel back to their constituents") {
    std::mt19937 rng(2026u);
    for (const char* s : {"A2", "B2", "BC2"}) {
        const RootSystem& rs = get_system(s);
        for (int trial = 0; trial < 5; ++trial) {
            const auto f = random_weight(rs, rng, 2);
            const auto g = random_weight(rs, rng, 1);
            INFO(std::string(s) + " " + weight_str(f) + " x " + weight_str(g));
            const GradedChar t = tensor_char(irrep_character(rs, f), irrep_character(rs, g));
            const Decomposition d = decompose(t);
            CHECK(reconstruct_dominant(rs, d) == t.dom);
            // the top constituent f+g appears exactly once, unflipped
            std::vector<int> top(f);
            for (std::size_t i = 0; i < g.size(); ++i) top[i] += g[i];
            bool saw_top = false;
            for (const auto& sm : d.summands)
                if (sm.f == top) {
                    saw_top = true;
                    CHECK(sm.mult == 1);
                    CHECK_FALSE(sm.flipped);
                }
            CHECK(saw_top);
        }
    }
}

TEST_CASE("dimension grows along the dominance order") {
    std::mt19937 rng(5u);
    for (const char* s : {"A4", "B3", "C4", "BC3", "D4"}) {
        const RootSystem& rs = get_system(s);
        for (int trial = 0; trial < 6; ++trial) {
            const auto f = random_weight(rs, rng, 2);
            const Big base = dim_irrep(rs, f);
            CHECK(base >= 1);
            for (int i = 0; i < rs.rank; ++i) {
                auto g = f;
                g[static_cast<std::size_t>(i)] +=
                    (rs.id.family == Family::BC && i == rs.rank - 1) ? 2 : 1;
                CHECK(dim_irrep(rs, g) > base);
            }
            CHECK(casimir(rs, f) > 0);
        }
    }
}

TEST_CASE("weight strings round-trip") {
    std::mt19937 rng(77u);
    for (const char* s : {"A3", "B4", "BC3", "E6"}) {
        const RootSystem& rs = get_system(s);
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = random_weight(rs, rng, 4);
            CHECK(parse_weight(rs, weight_str(f)) == f);
            CHECK(parse_weight(rs, "e:" + eps_str(rs.fund_to_eps(f), rs.L)) == f);
        }
    }
}
