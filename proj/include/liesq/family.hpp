#pragma once

#include <cctype>
#include <string>
#include <tuple>

#include "liesq/error.hpp"

namespace liesq {

enum class Family { A, B, C, D, BC, E, F, G };

struct SystemId {
    Family family;
    int rank;

    friend bool operator==(const SystemId&, const SystemId&) = default;
    friend auto operator<=>(const SystemId&, const SystemId&) = default;
};

// The label used in corpus files and CLI output: exceptional families carry
// their rank in the family string ("E6"), classical families do not ("B").
inline std::string family_label(const SystemId& id) {
    switch (id.family) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::BC: return "BC";
        case Family::E: return "E" + std::to_string(id.rank);
        case Family::F: return "F";
        case Family::G: return "G";
    }
    return "?";
}

inline std::string system_name(const SystemId& id) {
    switch (id.family) {
        case Family::A: return "A" + std::to_string(id.rank);
        case Family::B: return "B" + std::to_string(id.rank);
        case Family::C: return "C" + std::to_string(id.rank);
        case Family::D: return "D" + std::to_string(id.rank);
        case Family::BC: return "BC" + std::to_string(id.rank);
        case Family::E: return "E" + std::to_string(id.rank);
        case Family::F: return "F" + std::to_string(id.rank);
        case Family::G: return "G" + std::to_string(id.rank);
    }
    return "?";
}

inline void validate_rank(const SystemId& id) {
    const int m = id.rank;
    bool ok = false;
    switch (id.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::BC: ok = m >= 1; break;
        case Family::D: ok = m >= 3; break;
        case Family::E: ok = m == 6 || m == 7 || m == 8; break;
        case Family::F: ok = m == 4; break;
        case Family::G: ok = m == 2; break;
    }
    if (!ok) fail(err::InvalidRank, system_name(id));
}

// Parses "<FAMILY><rank>" case-insensitively: "b3", "BC2", "e8", ...
inline SystemId parse_system(const std::string& s) {
    std::string letters, digits;
    for (char ch : s) {
        if (std::isalpha(static_cast<unsigned char>(ch)) && digits.empty())
            letters += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        else if (std::isdigit(static_cast<unsigned char>(ch)))
            digits += ch;
        else
            fail(err::ParseError, "bad system '" + s + "'");
    }
    if (letters.empty() || digits.empty() || digits.size() > 2)
        fail(err::ParseError, "bad system '" + s + "'");

    Family fam;
    if (letters == "A") fam = Family::A;
    else if (letters == "B") fam = Family::B;
    else if (letters == "C") fam = Family::C;
    else if (letters == "D") fam = Family::D;
    else if (letters == "BC") fam = Family::BC;
    else if (letters == "E") fam = Family::E;
    else if (letters == "F") fam = Family::F;
    else if (letters == "G") fam = Family::G;
    else fail(err::ParseError, "unknown family '" + letters + "'");

    SystemId id{fam, std::stoi(digits)};
    validate_rank(id);
    return id;
}

// Matches a corpus (family-label, rank) pair against a SystemId.
inline SystemId system_from_label(const std::string& label, int rank) {
    if (label == "E6" || label == "E7" || label == "E8")
        return SystemId{Family::E, rank};
    return parse_system(label + std::to_string(rank));
}

} // namespace liesq
