#include <catch2/catch_amalgamated.hpp>

#include "liesq/root_system.hpp"

using namespace liesq;

namespace {

std::vector<std::string> all_labels() {
    std::vector<std::string> out;
    for (int m = 1; m <= 8; ++m)
        for (const char* fam : {"A", "B", "C", "BC"}) out.push_back(fam + std::to_string(m));
    for (int m = 3; m <= 8; ++m) out.push_back("D" + std::to_string(m));
    out.insert(out.end(), {"E6", "E7", "E8", "F4", "G2"});
    return out;
}

} // namespace

TEST_CASE("labels parse case-insensitively and validate rank") {
    CHECK(parse_system("b3") == SystemId{Family::B, 3});
    CHECK(parse_system("BC4") == SystemId{Family::BC, 4});
    CHECK(parse_system("e7") == SystemId{Family::E, 7});
    CHECK_THROWS_AS(parse_system("X9"), Error);
    CHECK_THROWS_AS(parse_system("D2"), Error);
    CHECK_THROWS_AS(parse_system("E9"), Error);
    CHECK_THROWS_AS(parse_system("F3"), Error);
    CHECK_THROWS_AS(parse_system("G1"), Error);
    CHECK_THROWS_AS(parse_system(""), Error);
}

TEST_CASE("construction invariants hold for every system") {
    for (const auto& label : all_labels()) {
        INFO(label);
        const RootSystem& rs = get_system(label);
        REQUIRE(static_cast<int>(rs.simples.size()) == rs.rank);
        REQUIRE(static_cast<int>(rs.fund.size()) == rs.rank);

        // fundamental weights pair dually with the simple roots
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j)
                CHECK(rs.pairing(rs.fund[static_cast<std::size_t>(j)],
                                 rs.simples[static_cast<std::size_t>(i)]) == (i == j ? 1 : 0));

        // rho is the fundamental-weight sum and the half-sum of positive
        // roots (odd roots counted negatively)
        LVec fsum(rs.amb);
        for (const auto& b : rs.fund) fsum = fsum + b;
        CHECK(fsum == rs.rho);
        LVec psum(rs.amb);
        for (const auto& a : rs.pos) psum = psum + a;
        for (const auto& a : rs.pos_odd) psum = psum - a;
        // psum now = sum(even) - sum(odd) = 2 rho
        CHECK(psum == 2 * rs.rho);

        // positive roots have positive height and dominize fixes dominants
        for (const auto& a : rs.pos) CHECK(rs.height_key(a) > 0);
        CHECK(rs.dominize(rs.rho) == rs.rho);
        CHECK(rs.is_dominant(rs.rho));

        // the adjoint weight is dominant and reproduces dim_g
        CHECK(rs.is_dominant(rs.fund_to_eps(rs.adjoint)));
    }
}

TEST_CASE("scale-cleared coordinates match the known denominators") {
    CHECK(get_system("A4").L == 5);
    CHECK(get_system("B3").L == 2);
    CHECK(get_system("C3").L == 1);
    CHECK(get_system("D4").L == 2);
    CHECK(get_system("BC3").L == 2);
    CHECK(get_system("E6").L == 6);
    CHECK(get_system("E7").L == 2);
    CHECK(get_system("E8").L == 2);
    CHECK(get_system("F4").L == 2);
    CHECK(get_system("G2").L == 1);
}

TEST_CASE("invariant rows for selected systems") {
    const auto b3 = get_system("B3").table1_row();
    CHECK(b3.rho_norm_sq == make_rat(35, 4));
    CHECK(b3.max_coroot_norm_sq == make_rat(4, 1));
    CHECK(b3.dim_g == 21);

    const auto e8 = get_system("E8").table1_row();
    CHECK(e8.rho_norm_sq == make_rat(620, 1));
    CHECK(e8.max_coroot_norm_sq == make_rat(2, 1));
    CHECK(e8.dim_g == 248);

    const auto e7 = get_system("E7").table1_row();
    CHECK(e7.rho_norm_sq == make_rat(399, 2));
    CHECK(e7.max_coroot_norm_sq == make_rat(2, 1));
    CHECK(e7.dim_g == 133);

    const auto bc2 = get_system("BC2").table1_row();
    CHECK(bc2.dim_g == 6);
}

TEST_CASE("odd roots exist exactly for BC systems") {
    CHECK(get_system("BC3").pos_odd.size() == 3);
    CHECK(get_system("B3").pos_odd.empty());
    CHECK(get_system("BC1").pos_odd.size() == 1);
    // pos holds only the even positives, odd ones live in pos_odd
    CHECK(get_system("BC2").pos.size() == 4);
    CHECK(get_system("BC2").pos_odd.size() == 2);
    CHECK(get_system("A2").pos.size() == 3);
    CHECK(get_system("B3").pos.size() == 9);
    CHECK(get_system("E8").pos.size() == 120);
}

TEST_CASE("orbit sizes and reflection closure") {
    const RootSystem& a2 = get_system("A2");
    CHECK(a2.weyl_orbit(a2.fund[0]).size() == 3);
    const RootSystem& b2 = get_system("B2");
    CHECK(b2.weyl_orbit(b2.fund[0]).size() == 4); // +-eps1, +-eps2
    CHECK(b2.weyl_orbit(LVec(b2.amb)).size() == 1);

    // orbits are reflection-closed
    const RootSystem& g2 = get_system("G2");
    const auto orb = g2.weyl_orbit(g2.fund[1]);
    CHECK(orb.size() == 6);
    for (const auto& w : orb)
        for (const auto& a : g2.simples) {
            const LVec r = w - g2.pairing(w, a) * a;
            CHECK(std::find(orb.begin(), orb.end(), r) != orb.end());
        }
}

TEST_CASE("coordinate conversions round-trip") {
    for (const auto& label : {"A3", "B4", "C2", "D5", "BC3", "E6", "F4", "G2"}) {
        const RootSystem& rs = get_system(label);
        std::vector<int> f(static_cast<std::size_t>(rs.rank), 0);
        f[0] = 2;
        f[static_cast<std::size_t>(rs.rank - 1)] = rs.id.family == Family::BC ? 2 : 1;
        const LVec w = rs.fund_to_eps(f);
        CHECK(rs.eps_to_fund(w) == f);
        CHECK(rs.is_dominant(w));
        // dominize recovers the dominant representative from any orbit element
        const auto orb = rs.weyl_orbit(rs.fund[0]);
        for (const auto& v : orb) CHECK(rs.dominize(v) == rs.fund[0]);
    }
}

TEST_CASE("dual weights") {
    const RootSystem& a3 = get_system("A3");
    CHECK(a3.dual_weight({1, 0, 0}) == std::vector<int>{0, 0, 1});
    CHECK(a3.dual_weight({0, 1, 0}) == std::vector<int>{0, 1, 0});
    CHECK(a3.dual_weight({2, 1, 0}) == std::vector<int>{0, 1, 2});

    const RootSystem& d3 = get_system("D3");
    CHECK(d3.dual_weight({0, 1, 0}) == std::vector<int>{0, 0, 1});

    const RootSystem& e6 = get_system("E6");
    std::vector<int> b1 = {1, 0, 0, 0, 0, 0}, b6 = {0, 0, 0, 0, 0, 1};
    CHECK(e6.dual_weight(b1) == b6);

    // self-dual families
    const RootSystem& b4 = get_system("B4");
    CHECK(b4.dual_weight({1, 2, 0, 1}) == std::vector<int>{1, 2, 0, 1});
    const RootSystem& bc3 = get_system("BC3");
    CHECK(bc3.dual_weight({1, 0, 2}) == std::vector<int>{1, 0, 2});

    CHECK_THROWS_AS(a3.dual_weight({-1, 0, 0}), Error);
}

TEST_CASE("pairing rejects off-lattice vectors") {
    const RootSystem& b2 = get_system("B2");
    // a vector with an odd coordinate at scale L=2 pairs non-integrally
    LVec v(b2.amb);
    v[0] = 1; // = eps1/2
    CHECK_THROWS_AS(b2.pairing(v, b2.simples[0]), Error);
}

TEST_CASE("height order refines dominance") {
    const RootSystem& rs = get_system("C3");
    const LVec lam = rs.fund_to_eps({1, 1, 0});
    for (const auto& a : rs.pos) {
        CHECK(rs.height_key(lam) > rs.height_key(lam - a));
    }
}
