#pragma once

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "liesq/family.hpp"
#include "liesq/numeric.hpp"

namespace liesq {

struct GoldenSummand {
    std::vector<int> f;
    bool flip = false;
    Int mult = 0;
};

struct GoldenHalf {
    std::vector<GoldenSummand> summands;
    Int trivial = 0;
};

struct GoldenSquare {
    SystemId sys;
    std::vector<int> lambda;
    Big dim;
    GoldenHalf sym, alt;
};

struct GoldenTable1 {
    SystemId sys;
    Rat rho_norm_sq;
    Rat max_coroot_norm_sq;
    Int dim_g = 0;
};

struct GoldenTable2 {
    SystemId sys;
    std::vector<Rat> r;
};

// (family label, rank, fundamental coordinates), duals canonicalized.
using TheoremEntry = std::tuple<std::string, int, std::vector<int>>;

struct Corpus {
    int version = 0;
    int rank_bound = 0;
    std::vector<GoldenTable1> table1;
    std::vector<GoldenTable2> table2;
    std::vector<GoldenSquare> squares;
    std::map<std::string, std::set<TheoremEntry>> theorem;
};

namespace detail {

inline Rat json_rat(const nlohmann::json& v) {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    return Rat(static_cast<long>(v.get<long long>()));
}

inline SystemId json_sys(const nlohmann::json& row) {
    return system_from_label(row.at("family").get<std::string>(), row.at("rank").get<int>());
}

inline GoldenHalf json_half(const nlohmann::json& h) {
    GoldenHalf out;
    for (const auto& s : h.at("summands")) {
        GoldenSummand g;
        g.f = s.at("f").get<std::vector<int>>();
        g.flip = s.at("flip").get<bool>();
        g.mult = s.at("mult").get<Int>();
        out.summands.push_back(std::move(g));
    }
    out.trivial = h.at("trivial").get<Int>();
    return out;
}

} // namespace detail

inline Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(err::ParseError, "cannot open corpus file: " + path);
    nlohmann::json js;
    try {
        in >> js;
    } catch (const nlohmann::json::exception& e) {
        fail(err::ParseError, std::string("corpus is not valid JSON: ") + e.what());
    }
    try {
        Corpus c;
        c.version = js.at("version").get<int>();
        c.rank_bound = js.at("rank_bound").get<int>();
        for (const auto& row : js.at("table1")) {
            GoldenTable1 t;
            t.sys = detail::json_sys(row);
            t.rho_norm_sq = detail::json_rat(row.at("rho_norm_sq"));
            t.max_coroot_norm_sq = detail::json_rat(row.at("max_coroot_norm_sq"));
            t.dim_g = row.at("dim_g").get<Int>();
            c.table1.push_back(std::move(t));
        }
        for (const auto& row : js.at("table2")) {
            GoldenTable2 t;
            t.sys = detail::json_sys(row);
            for (const auto& x : row.at("r")) t.r.push_back(detail::json_rat(x));
            c.table2.push_back(std::move(t));
        }
        for (const auto& row : js.at("squares")) {
            GoldenSquare q;
            q.sys = detail::json_sys(row);
            q.lambda = row.at("lambda").get<std::vector<int>>();
            q.dim = to_big(row.at("dim").get<Int>());
            q.sym = detail::json_half(row.at("sym"));
            q.alt = detail::json_half(row.at("alt"));
            c.squares.push_back(std::move(q));
        }
        for (const auto& [bucket, rows] : js.at("theorem1").items()) {
            auto& dst = c.theorem[bucket];
            for (const auto& row : rows)
                dst.emplace(row.at("family").get<std::string>(), row.at("rank").get<int>(),
                            row.at("lambda").get<std::vector<int>>());
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        fail(err::ParseError, std::string("corpus schema error: ") + e.what());
    }
}

} // namespace liesq
