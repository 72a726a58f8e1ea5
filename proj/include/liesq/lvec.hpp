#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>

#include "liesq/numeric.hpp"

namespace liesq {

// Ambient-space vector with integer coordinates (the root system's scale L is
// carried separately; a stored vector represents coords/L). Fixed-capacity
// POD keeps hashing and copying cheap; 9 covers the largest embedding (A8).
struct LVec {
    static constexpr int kMax = 9;

    std::array<std::int32_t, kMax> c{};
    std::uint8_t n = 0;

    LVec() = default;
    explicit LVec(int dim) : n(static_cast<std::uint8_t>(dim)) {}

    int size() const { return n; }
    std::int32_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    std::int32_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    friend LVec operator+(const LVec& a, const LVec& b) {
        LVec r(a.n);
        for (int i = 0; i < a.n; ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend LVec operator-(const LVec& a, const LVec& b) {
        LVec r(a.n);
        for (int i = 0; i < a.n; ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend LVec operator*(Int s, const LVec& a) {
        LVec r(a.n);
        for (int i = 0; i < a.n; ++i) r[i] = static_cast<std::int32_t>(s * a[i]);
        return r;
    }
    LVec operator-() const {
        LVec r(n);
        for (int i = 0; i < n; ++i) r[i] = -c[static_cast<std::size_t>(i)];
        return r;
    }

    friend bool operator==(const LVec& a, const LVec& b) {
        return a.n == b.n &&
               std::memcmp(a.c.data(), b.c.data(), sizeof(std::int32_t) * a.n) == 0;
    }
    // Lexicographic; used for deterministic tie-breaks.
    friend std::strong_ordering operator<=>(const LVec& a, const LVec& b) {
        for (int i = 0; i < a.n && i < b.n; ++i)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return a.n <=> b.n;
    }

    bool is_zero() const {
        for (int i = 0; i < n; ++i)
            if (c[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }

    Int coord_sum() const {
        Int s = 0;
        for (int i = 0; i < n; ++i) s += c[static_cast<std::size_t>(i)];
        return s;
    }
};

inline Int dot(const LVec& a, const LVec& b) {
    Int s = 0;
    for (int i = 0; i < a.n; ++i) s += static_cast<Int>(a[i]) * b[i];
    return s;
}

struct LVecHash {
    std::size_t operator()(const LVec& v) const {
        std::size_t h = v.n;
        for (int i = 0; i < v.n; ++i)
            h = hash_mix(h, static_cast<std::size_t>(static_cast<std::uint32_t>(v[i])));
        return h;
    }
};

// Renders coords/L as comma-separated reduced rationals, e.g. "3/2,1,0".
inline std::string eps_str(const LVec& v, Int L) {
    std::string out;
    for (int i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += make_rat(v[i], L).get_str();
    }
    return out;
}

} // namespace liesq
