#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "liesq/classify.hpp"

namespace liesq {

// One line per dominant weight, top of the module first:
//   e:<epsilon coordinates> <even multiplicity> <odd multiplicity>
inline std::string dump_character(const GradedChar& c) {
    const RootSystem& rs = *c.rs;
    std::vector<LVec> keys;
    keys.reserve(c.dom.size());
    for (const auto& [w, eo] : c.dom) keys.push_back(w);
    std::sort(keys.begin(), keys.end(),
              [&](const LVec& a, const LVec& b) { return height_before(rs, a, b); });
    std::ostringstream os;
    for (const auto& w : keys) {
        const auto& eo = c.dom.at(w);
        os << "e:" << eps_str(w, rs.L) << ' ' << eo.first << ' ' << eo.second << '\n';
    }
    return os.str();
}

inline std::string summand_str(const Summand& s) {
    std::ostringstream os;
    if (s.mult != 1) os << s.mult << ' ';
    os << (s.flipped ? "Pi V(f:" : "V(f:") << weight_str(s.f).substr(2) << ')';
    return os.str();
}

inline std::string decomposition_text(const Decomposition& d) {
    std::ostringstream os;
    for (const auto& s : d.summands) os << summand_str(s) << '\n';
    os << "trivial: " << d.trivial_count << '\n';
    return os.str();
}

inline nlohmann::json decomposition_json(const Decomposition& d) {
    nlohmann::json js;
    js["summands"] = nlohmann::json::array();
    for (const auto& s : d.summands)
        js["summands"].push_back({{"weight_f", s.f}, {"flipped", s.flipped}, {"mult", s.mult}});
    js["trivial"] = d.trivial_count;
    return js;
}

inline nlohmann::json character_json(const GradedChar& c) {
    const RootSystem& rs = *c.rs;
    std::vector<LVec> keys;
    for (const auto& [w, eo] : c.dom) keys.push_back(w);
    std::sort(keys.begin(), keys.end(),
              [&](const LVec& a, const LVec& b) { return height_before(rs, a, b); });
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& w : keys) {
        const auto& eo = c.dom.at(w);
        entries.push_back({{"e", eps_str(w, rs.L)}, {"even", eo.first}, {"odd", eo.second}});
    }
    return {{"system", system_name(rs.id)}, {"entries", entries}};
}

inline nlohmann::json entry_json(const TheoremEntry& e) {
    return {{"family", std::get<0>(e)}, {"rank", std::get<1>(e)}, {"lambda", std::get<2>(e)}};
}

inline std::string entry_str(const TheoremEntry& e) {
    std::ostringstream os;
    os << std::get<0>(e) << std::get<1>(e) << ' ';
    const auto& f = std::get<2>(e);
    os << "f:";
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    return os.str();
}

inline std::string theorem_report_text(const TheoremReport& rep) {
    std::ostringstream os;
    for (const char* bucket : kTheoremBuckets) {
        const auto it = rep.computed.find(bucket);
        os << bucket << ": " << (it == rep.computed.end() ? 0 : it->second.size())
           << " entries\n";
    }
    if (rep.pass()) {
        os << "match: all buckets agree with the golden list (rank bound " << rep.rank_bound
           << ")\n";
    } else {
        for (const auto& d : rep.diffs) {
            for (const auto& e : d.missing) os << "MISSING " << d.bucket << ": " << entry_str(e) << '\n';
            for (const auto& e : d.extra) os << "EXTRA   " << d.bucket << ": " << entry_str(e) << '\n';
        }
    }
    return os.str();
}

inline nlohmann::json theorem_report_json(const TheoremReport& rep) {
    nlohmann::json js;
    js["rank_bound"] = rep.rank_bound;
    js["pass"] = rep.pass();
    nlohmann::json buckets = nlohmann::json::object();
    for (const auto& [bucket, entries] : rep.computed) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : entries) arr.push_back(entry_json(e));
        buckets[bucket] = std::move(arr);
    }
    js["computed"] = std::move(buckets);
    nlohmann::json diffs = nlohmann::json::array();
    for (const auto& d : rep.diffs) {
        nlohmann::json jd;
        jd["bucket"] = d.bucket;
        jd["missing"] = nlohmann::json::array();
        for (const auto& e : d.missing) jd["missing"].push_back(entry_json(e));
        jd["extra"] = nlohmann::json::array();
        for (const auto& e : d.extra) jd["extra"].push_back(entry_json(e));
        diffs.push_back(std::move(jd));
    }
    js["diffs"] = std::move(diffs);
    return js;
}

} // namespace liesq
