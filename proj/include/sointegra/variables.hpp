#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace sointegra {

// Variable order fixes the monomial order (lexicographic, X most significant).
enum class Var : int {
    X, Y, Z,
    R,   // radical: r^2 = x^2+y^2+z^2 (Cartesian) / plain radius (radial)
    S,   // radical: s^2 = 1 + beta*r^2
    T,   // radical: t^2 = 4*r^4 + c
    Hbar, Beta, Mu,
    A1, A2, A3,
    B1, B2, B3,
    Alpha1, Alpha2, Alpha3,
    Cst,
};

inline constexpr int kVarCount = 19;

inline constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "x", "y", "z", "r", "s", "t",
    "hbar", "beta", "mu",
    "a1", "a2", "a3",
    "b1", "b2", "b3",
    "alpha1", "alpha2", "alpha3",
    "c",
};

inline std::string_view var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

inline constexpr bool is_parameter(Var v) { return static_cast<int>(v) >= static_cast<int>(Var::Hbar); }

// exponent vector; only non-negative entries occur in a Poly
using Mono = std::array<int16_t, kVarCount>;

inline constexpr Mono kUnitMono{};

inline Mono mono_of(Var v, int e = 1) {
    Mono m{};
    m[static_cast<int>(v)] = static_cast<int16_t>(e);
    return m;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono m;
    for (int i = 0; i < kVarCount; ++i) m[i] = static_cast<int16_t>(a[i] + b[i]);
    return m;
}

inline bool mono_divides(const Mono& a, const Mono& b) { // a | b
    for (int i = 0; i < kVarCount; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Mono mono_div(const Mono& b, const Mono& a) { // b / a
    Mono m;
    for (int i = 0; i < kVarCount; ++i) m[i] = static_cast<int16_t>(b[i] - a[i]);
    return m;
}

inline int mono_total_degree(const Mono& m) {
    int d = 0;
    for (int i = 0; i < kVarCount; ++i) d += m[i];
    return d;
}

} // namespace sointegra
