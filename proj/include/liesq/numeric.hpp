#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "liesq/error.hpp"

namespace liesq {

using Int = long long;
using Big = mpz_class; // arbitrary-precision integer
using Rat = mpq_class; // arbitrary-precision rational, always canonicalized

// gmpxx has no long-long overloads; Int fits in long on this platform.
inline Big to_big(Int v) { return Big(static_cast<long>(v)); }

inline Rat make_rat(Int num, Int den) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Big& num, const Big& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p" or "p/q". Used for corpus values and `e:` weight coordinates.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) fail(err::ParseError, "empty rational");
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(err::ParseError, "bad rational '" + s + "'");
    }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Exact integer quotient; the callers' formulas guarantee divisibility.
inline Big exact_div(const Big& num, const Big& den, const char* what) {
    Big q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) fail(err::NonIntegerResult, what);
    return q;
}

inline std::size_t hash_mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

} // namespace liesq
