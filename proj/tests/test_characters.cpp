#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "liesq/classify.hpp"
#include "liesq/serialize.hpp"

using namespace liesq;

namespace {

Big binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Big r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// even/odd totals over the full weight map
std::pair<Int, Int> graded_masses(const GradedChar& c) {
    return {(c.mass_ordinary + c.mass_super) / 2, (c.mass_ordinary - c.mass_super) / 2};
}

} // namespace

TEST_CASE("adjoint character of A2") {
    const RootSystem& rs = get_system("A2");
    const GradedChar& c = irrep_character(rs, rs.adjoint);
    REQUIRE(c.dom.size() == 2);
    const LVec theta = rs.fund_to_eps(rs.adjoint);
    CHECK(c.dom.at(theta) == std::pair<Int, Int>{1, 0});
    CHECK(c.dom.at(LVec(rs.amb)) == std::pair<Int, Int>{2, 0});
    CHECK(c.mass_ordinary == 8);
    CHECK(c.mass_super == 8);
    CHECK(c.full.size() == 7); // six roots and the origin
}

TEST_CASE("character masses of the basic osp modules") {
    // ch(mu_r) has binom(2m, r) even and binom(2m, r-1) odd weights in total
    for (int m : {2, 3, 4}) {
        const RootSystem& rs = get_system("BC" + std::to_string(m));
        for (int r = 1; r <= m; ++r) {
            const GradedChar& c = irrep_character(rs, mu_weight(rs, r));
            const auto [e, o] = graded_masses(c);
            CHECK(to_big(e) == binom(2 * m, r));
            CHECK(to_big(o) == binom(2 * m, r - 1));
        }
    }
}

TEST_CASE("graded tensor products") {
    const RootSystem& bc1 = get_system("BC1");
    const GradedChar& st = irrep_character(bc1, {2}); // eps_1: 2 even + 1 odd weights
    const GradedChar t = tensor_char(st, st);
    const auto [e, o] = graded_masses(t);
    CHECK(e == 5);
    CHECK(o == 4);
    CHECK(t.mass_ordinary == st.mass_ordinary * st.mass_ordinary);
    CHECK(t.mass_super == st.mass_super * st.mass_super);

    // tensoring with the trivial module is the identity
    const RootSystem& b3 = get_system("B3");
    const GradedChar& spin = irrep_character(b3, {0, 0, 1});
    const GradedChar same = tensor_char(spin, GradedChar::trivial(b3));
    CHECK(same.dom == spin.dom);
    CHECK(same.mass_ordinary == spin.mass_ordinary);

    // mass is multiplicative
    const GradedChar& v7 = irrep_character(b3, {1, 0, 0});
    CHECK(tensor_char(spin, v7).mass_ordinary == spin.mass_ordinary * v7.mass_ordinary);

    // mixing systems is an error
    const GradedChar& a2 = irrep_character(get_system("A2"), {1, 0});
    const GradedChar& a3 = irrep_character(get_system("A3"), {1, 0, 0});
    CHECK_THROWS_AS(tensor_char(a2, a3), Error);
}

TEST_CASE("character rendering") {
    const RootSystem& b2 = get_system("B2");
    const GradedChar& c = irrep_character(b2, {1, 0});
    CHECK(dump_character(c) == "e:1,0 1 0\ne:0,0 1 0\n");

    const auto js = character_json(c);
    CHECK(js["system"] == "B2");
    REQUIRE(js["entries"].size() == 2);
    CHECK(js["entries"][0]["e"] == "1,0");
    CHECK(js["entries"][0]["even"] == 1);
    CHECK(js["entries"][0]["odd"] == 0);
}

TEST_CASE("weight enumeration respects its budget") {
    const RootSystem& b3 = get_system("B3");
    CHECK_THROWS_AS(irrep_character(b3, {2, 2, 2}, 3), Error);
    try {
        irrep_character(b3, {2, 2, 2}, 3);
    } catch (const Error& e) {
        CHECK(e.kind() == err::BudgetExceeded);
    }
}

TEST_CASE("flipping swaps the grading") {
    const RootSystem& rs = get_system("BC2");
    const GradedChar& c = irrep_character(rs, mu_weight(rs, 2));
    const GradedChar f = c.flipped();
    CHECK(f.mass_ordinary == c.mass_ordinary);
    CHECK(f.mass_super == -c.mass_super);
    for (const auto& [w, eo] : c.dom) {
        const auto& g = f.dom.at(w);
        CHECK(g.first == eo.second);
        CHECK(g.second == eo.first);
    }
}

TEST_CASE("irreducible weight spaces are parity-pure") {
    const RootSystem& rs = get_system("BC2");
    const GradedChar& c = irrep_character(rs, {1, 2});
    for (const auto& [w, eo] : c.dom) {
        INFO(eps_str(w, rs.L));
        CHECK((eo.first == 0 || eo.second == 0));
        CHECK(eo.first + eo.second > 0);
    }
}

TEST_CASE("peeling recovers a composed character") {
    const RootSystem& rs = get_system("BC2");
    const GradedChar& c1 = irrep_character(rs, {1, 0});
    const GradedChar& c2 = irrep_character(rs, {0, 2});
    GradedChar::DomMap mix;
    for (const auto& [w, eo] : c1.dom) {
        auto& t = mix[w];
        t.first += 2 * eo.first;
        t.second += 2 * eo.second;
    }
    for (const auto& [w, eo] : c2.dom) { // flipped, multiplicity 3
        auto& t = mix[w];
        t.first += 3 * eo.second;
        t.second += 3 * eo.first;
    }
    mix[LVec(rs.amb)].first += 4;
    const GradedChar composed = GradedChar::from_dominant(rs, mix);

    const Decomposition d = decompose(composed);
    REQUIRE(d.summands.size() == 2);
    CHECK(d.summands[0] == Summand{{0, 2}, true, 3});
    CHECK(d.summands[1] == Summand{{1, 0}, false, 2});
    CHECK(d.trivial_count == 4);
    CHECK(reconstruct_dominant(rs, d) == composed.dom);
}

TEST_CASE("one-step induction agrees with the multiplicity formula") {
    for (const char* s : {"A3", "B3", "C3"}) {
        const RootSystem& rs = get_system(s);
        const std::vector<int> f = {1, 1, 0};
        const GradedChar built = induced_irrep_classical(rs, f);
        CHECK(built.dom == irrep_character(rs, f).dom);
    }
}

TEST_CASE("closed-form squares for the rank-one systems") {
    const RootSystem& a1 = get_system("A1");
    for (int n = 1; n <= 6; ++n) {
        const auto [sym, alt] = square_table(a1, {n});
        const auto cs = a1_square(n, SquareKind::Symmetric);
        const auto ca = a1_square(n, SquareKind::Alternating);
        CHECK(sym.summands == cs.summands);
        CHECK(sym.trivial_count == cs.trivial_count);
        CHECK(alt.summands == ca.summands);
        CHECK(alt.trivial_count == ca.trivial_count);
    }
    const RootSystem& bc1 = get_system("BC1");
    for (int n = 1; n <= 5; ++n) {
        const auto [sym, alt] = square_table(bc1, {2 * n});
        const auto cs = bc1_square(n, SquareKind::Symmetric);
        const auto ca = bc1_square(n, SquareKind::Alternating);
        CHECK(sym.summands == cs.summands);
        CHECK(sym.trivial_count == cs.trivial_count);
        CHECK(alt.summands == ca.summands);
        CHECK(alt.trivial_count == ca.trivial_count);
    }
    // two-dimensional special cases
    CHECK(a1_square(1, SquareKind::Alternating).summands.empty());
    CHECK(a1_square(1, SquareKind::Alternating).trivial_count == 1);
}

TEST_CASE("even part of an osp rank-one symmetric square as an sl2 module") {
    // S^2 L(n eps) restricted to the even subalgebra contains the ladders
    // 2n, 2n-4, 2n-4i (the latter each twice), i = 1..floor(n/2).
    const RootSystem& rs = get_system("BC1");
    for (int n = 1; n <= 5; ++n) {
        const GradedChar sym = sym_square_char(irrep_character(rs, {2 * n}));
        std::vector<int> actual;
        for (const auto& [w, eo] : sym.full)
            for (Int k = 0; k < eo.first; ++k)
                actual.push_back(static_cast<int>(w[0] / rs.L));
        std::vector<int> expected;
        auto ladder = [&](int top, int copies) {
            for (int j = top; j >= -top; j -= 2)
                for (int k = 0; k < copies; ++k) expected.push_back(j);
        };
        ladder(2 * n, 1);
        for (int i = 1; i <= n / 2; ++i) ladder(2 * n - 4 * i, 2);
        std::sort(actual.begin(), actual.end());
        std::sort(expected.begin(), expected.end());
        CHECK(actual == expected);
    }
}

TEST_CASE("squares of distinguished modules") {
    // adjoint of E8: S^2 g = V(theta_2) + V(x_3875) + trivial, L^2 g = g + V(x_30380)
    const RootSystem& e8 = get_system("E8");
    const auto [sym, alt] = square_table(e8, e8.adjoint);
    REQUIRE(sym.summands.size() == 2);
    CHECK(sym.trivial_count == 1);
    std::vector<Big> sym_dims;
    for (const auto& s : sym.summands) {
        CHECK(s.mult == 1);
        CHECK_FALSE(s.flipped);
        sym_dims.push_back(dim_irrep(e8, s.f));
    }
    std::sort(sym_dims.begin(), sym_dims.end());
    CHECK(sym_dims == std::vector<Big>{3875, 27000});
    REQUIRE(alt.summands.size() == 2);
    CHECK(alt.trivial_count == 0);
    const bool has_adjoint = alt.summands[0].f == e8.adjoint || alt.summands[1].f == e8.adjoint;
    CHECK(has_adjoint);
    CHECK(dim_irrep(e8, alt.summands[0].f) + dim_irrep(e8, alt.summands[1].f) ==
          Big(248) * 247 / 2);

    // second fundamental of A4
    const RootSystem& a4 = get_system("A4");
    const auto [s4, l4] = square_table(a4, {0, 1, 0, 0});
    REQUIRE(s4.summands.size() == 2);
    CHECK(s4.summands[0] == Summand{{0, 0, 0, 1}, false, 1});
    CHECK(s4.summands[1] == Summand{{0, 2, 0, 0}, false, 1});
    CHECK(s4.trivial_count == 0);
    REQUIRE(l4.summands.size() == 1);
    CHECK(l4.summands[0] == Summand{{1, 0, 1, 0}, false, 1});

    // standard module of C3
    const auto [sc, lc] = square_table(get_system("C3"), {1, 0, 0});
    REQUIRE(sc.summands.size() == 1);
    CHECK(sc.summands[0] == Summand{{2, 0, 0}, false, 1});
    CHECK(sc.trivial_count == 0);
    REQUIRE(lc.summands.size() == 1);
    CHECK(lc.summands[0] == Summand{{0, 1, 0}, false, 1});
    CHECK(lc.trivial_count == 1);

    // mu_2 of BC2: the alternating square mixes parities
    const RootSystem& bc2 = get_system("BC2");
    const auto [sb, lb] = square_table(bc2, mu_weight(bc2, 2));
    REQUIRE(lb.summands.size() == 2);
    CHECK(lb.summands[0] == Summand{{1, 2}, true, 1});
    CHECK(lb.summands[1] == Summand{{2, 0}, false, 1});
    CHECK(lb.trivial_count == 0);
    CHECK(sb.trivial_count == 1);

    // alternating square of the two-dimensional A1 module is trivial
    const auto [sa, la] = square_table(get_system("A1"), {1});
    CHECK(la.summands.empty());
    CHECK(la.trivial_count == 1);
    REQUIRE(sa.summands.size() == 1);
    CHECK(sa.summands[0] == Summand{{2}, false, 1});
}

TEST_CASE("squares account for the full tensor square") {
    for (const char* s : {"A2", "B2", "G2"}) {
        const RootSystem& rs = get_system(s);
        const GradedChar& c = irrep_character(rs, rs.adjoint);
        const auto [sym, alt] = square_chars(c);
        const GradedChar t = tensor_char(c, c);
        CHECK(sym.mass_ordinary + alt.mass_ordinary == t.mass_ordinary);
        const Int n = c.mass_ordinary;
        CHECK(2 * sym.mass_ordinary == n * (n + 1));
        CHECK(2 * alt.mass_ordinary == n * (n - 1));
        // entrywise: sym + alt = tensor on the full weight maps
        GradedChar::FullMap merged = sym.full;
        for (const auto& [w, eo] : alt.full) {
            auto& m = merged[w];
            m.first += eo.first;
            m.second += eo.second;
        }
        for (const auto& [w, eo] : t.full) {
            auto it = merged.find(w);
            REQUIRE(it != merged.end());
            CHECK(it->second == eo);
        }
    }
}
