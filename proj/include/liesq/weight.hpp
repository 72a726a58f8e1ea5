#pragma once

#include <string>
#include <vector>

#include "liesq/root_system.hpp"

namespace liesq {

namespace detail {

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline int parse_nonneg_int(const std::string& s) {
    if (s.empty()) fail(err::ParseError, "empty integer");
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            fail(err::ParseError, "bad coordinate '" + s + "'");
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        fail(err::ParseError, "bad coordinate '" + s + "'");
    }
}

} // namespace detail

// Fundamental coordinates of mu_r = eps_1 + ... + eps_r (BC systems): the
// r-th basis vector for r < m, twice the last basis vector for r = m.
inline std::vector<int> mu_weight(const RootSystem& rs, int r) {
    if (rs.id.family != Family::BC)
        fail(err::ParseError, "mu: weights are only defined for BC systems");
    if (r < 1 || r > rs.rank) fail(err::IndexOutOfRange, "mu:" + std::to_string(r));
    std::vector<int> f(static_cast<std::size_t>(rs.rank), 0);
    f[static_cast<std::size_t>(r - 1)] = (r == rs.rank) ? 2 : 1;
    return f;
}

// Highest-weight validity: dominant integral; for BC additionally the last
// fundamental coordinate must be even (epsilon-coordinates integral).
inline void check_highest_weight(const RootSystem& rs, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != rs.rank)
        fail(err::DimensionMismatch, "weight has " + std::to_string(f.size()) +
                                         " coords, want " + std::to_string(rs.rank));
    for (int c : f)
        if (c < 0) fail(err::NotDominant, "negative fundamental coordinate");
    if (rs.id.family == Family::BC && f.back() % 2 != 0)
        fail(err::NonIntegerResult,
             "BC highest weight needs an even last fundamental coordinate");
}

// Grammar: `f:c1,...,cm` (nonnegative integers), `e:q1,...,qd` (rationals,
// ambient epsilon-coordinates), `mu:r` (BC only). Returns fundamental coords.
inline std::vector<int> parse_weight(const RootSystem& rs, const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        fail(err::ParseError, "weight must look like f:..., e:... or mu:...");
    const std::string tag = s.substr(0, colon);
    const std::string body = s.substr(colon + 1);

    if (tag == "f") {
        std::vector<int> f;
        for (const auto& part : detail::split_commas(body))
            f.push_back(detail::parse_nonneg_int(part));
        if (static_cast<int>(f.size()) != rs.rank)
            fail(err::ParseError, "expected " + std::to_string(rs.rank) + " coordinates");
        return f;
    }
    if (tag == "e") {
        const auto parts = detail::split_commas(body);
        if (static_cast<int>(parts.size()) != rs.amb)
            fail(err::ParseError, "expected " + std::to_string(rs.amb) +
                                      " epsilon-coordinates");
        LVec v(rs.amb);
        for (int i = 0; i < rs.amb; ++i) {
            Rat x = parse_rat(parts[static_cast<std::size_t>(i)]) * Rat(static_cast<long>(rs.L));
            if (x.get_den() != 1)
                fail(err::ParseError, "epsilon-coordinate not in the weight lattice");
            v[i] = static_cast<std::int32_t>(x.get_num().get_si());
        }
        const auto fr = rs.to_fund_rat(v);
        std::vector<int> f;
        for (const auto& x : fr) {
            if (x.get_den() != 1)
                fail(err::ParseError, "not a weight-lattice point");
            f.push_back(static_cast<int>(x.get_num().get_si()));
        }
        return f;
    }
    if (tag == "mu") return mu_weight(rs, detail::parse_nonneg_int(body));
    fail(err::ParseError, "unknown weight tag '" + tag + "'");
}

inline std::string weight_str(const std::vector<int>& f) {
    std::string out = "f:";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f[i]);
    }
    return out;
}

} // namespace liesq
