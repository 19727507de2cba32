#pragma once

#include "field.hpp"

#include <array>

namespace sointegra {

// Coefficient of a differential operator term in the sigma basis:
// c[0]*1 + c[1]*s1 + c[2]*s2 + c[3]*s3.
struct PauliCoeff {
    std::array<FieldC, 4> c{};

    PauliCoeff() = default;
    explicit PauliCoeff(FieldC scalar) { c[0] = std::move(scalar); }
    PauliCoeff(FieldC c0, FieldC c1, FieldC c2, FieldC c3)
        : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    // k = 1..3
    static PauliCoeff sigma(int k, FieldC coeff = FieldC::one()) {
        PauliCoeff p;
        p.c[static_cast<size_t>(k)] = std::move(coeff);
        return p;
    }

    bool is_zero() const {
        return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
    }
    bool operator==(const PauliCoeff& o) const { return c == o.c; }
    bool operator!=(const PauliCoeff& o) const { return !(*this == o); }

    PauliCoeff operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
    PauliCoeff operator+(const PauliCoeff& o) const {
        return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
    }
    PauliCoeff operator-(const PauliCoeff& o) const {
        return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
    }

    // sigma_a sigma_b = delta_ab + i eps_abc sigma_c
    PauliCoeff operator*(const PauliCoeff& o) const {
        const FieldC i = FieldC::i();
        PauliCoeff r;
        r.c[0] = c[0] * o.c[0] + c[1] * o.c[1] + c[2] * o.c[2] + c[3] * o.c[3];
        r.c[1] = c[0] * o.c[1] + o.c[0] * c[1] + i * (c[2] * o.c[3] - c[3] * o.c[2]);
        r.c[2] = c[0] * o.c[2] + o.c[0] * c[2] + i * (c[3] * o.c[1] - c[1] * o.c[3]);
        r.c[3] = c[0] * o.c[3] + o.c[0] * c[3] + i * (c[1] * o.c[2] - c[2] * o.c[1]);
        return r;
    }

    PauliCoeff scaled(const FieldC& f) const { return {c[0] * f, c[1] * f, c[2] * f, c[3] * f}; }

    // conjugate-transpose; the sigma matrices themselves are hermitian
    PauliCoeff hermitian() const { return {c[0].conj(), c[1].conj(), c[2].conj(), c[3].conj()}; }

    PauliCoeff differentiate(Var v) const {
        return {c[0].differentiate(v), c[1].differentiate(v), c[2].differentiate(v),
                c[3].differentiate(v)};
    }

    std::string raw_str() const {
        std::string s = "[" + c[0].raw_str();
        for (int k = 1; k < 4; ++k) s += " | " + c[static_cast<size_t>(k)].raw_str();
        return s + "]";
    }
};

} // namespace sointegra
