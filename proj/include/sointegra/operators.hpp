#pragma once

#include "diffop.hpp"

namespace sointegra {

inline FieldC default_hbar() { return FieldC::var(Var::Hbar); }

inline FieldC coord(int k) {
    assert(1 <= k && k <= 3);
    return FieldC::var(k == 1 ? Var::X : (k == 2 ? Var::Y : Var::Z));
}

// p_k = -i hbar d_k
inline DiffOp momentum(int k, const FieldC& hbar = default_hbar()) {
    assert(1 <= k && k <= 3);
    DIdx idx{};
    idx[static_cast<size_t>(k - 1)] = 1;
    return DiffOp::derivative(idx, PauliCoeff(-FieldC::i() * hbar));
}

// L_1 = i hbar (z d_y - y d_z) and cyclic
inline DiffOp angular_momentum(int k, const FieldC& hbar = default_hbar()) {
    assert(1 <= k && k <= 3);
    int a = k % 3 + 1, b = (k + 1) % 3 + 1; // (k,a,b) cyclic
    return compose(DiffOp::scalar(coord(a)), momentum(b, hbar)) -
           compose(DiffOp::scalar(coord(b)), momentum(a, hbar));
}

inline DiffOp pauli_sigma(int k) { return DiffOp::coefficient(PauliCoeff::sigma(k)); }

inline DiffOp laplacian() {
    DiffOp d;
    d.add_term({2, 0, 0}, PauliCoeff(FieldC::one()));
    d.add_term({0, 2, 0}, PauliCoeff(FieldC::one()));
    d.add_term({0, 0, 2}, PauliCoeff(FieldC::one()));
    return d;
}

inline DiffOp sigma_dot_l(const FieldC& hbar = default_hbar()) {
    DiffOp d;
    for (int k = 1; k <= 3; ++k) d += compose(pauli_sigma(k), angular_momentum(k, hbar));
    return d;
}

inline DiffOp sigma_dot_x() {
    DiffOp d;
    for (int k = 1; k <= 3; ++k) d += DiffOp::coefficient(PauliCoeff::sigma(k, coord(k)));
    return d;
}

inline DiffOp sigma_dot_p(const FieldC& hbar = default_hbar()) {
    DiffOp d;
    for (int k = 1; k <= 3; ++k) d += compose(pauli_sigma(k), momentum(k, hbar));
    return d;
}

inline DiffOp x_dot_p(const FieldC& hbar = default_hbar()) {
    DiffOp d;
    for (int k = 1; k <= 3; ++k) d += compose(DiffOp::scalar(coord(k)), momentum(k, hbar));
    return d;
}

// J_k = L_k + (hbar/2) sigma_k
inline DiffOp angular_total(int k, const FieldC& hbar = default_hbar()) {
    FieldC half = FieldC::from_rational(BigRational(1, 2));
    return angular_momentum(k, hbar) + pauli_sigma(k).scaled(hbar * half);
}

// S_k = -(hbar/2) sigma_k + hbar (x_k/r^2)(x, sigma)
inline DiffOp spin_radial(int k, const FieldC& hbar = default_hbar()) {
    FieldC half = FieldC::from_rational(BigRational(1, 2));
    FieldC q = coord(1) * coord(1) + coord(2) * coord(2) + coord(3) * coord(3);
    return pauli_sigma(k).scaled(-hbar * half) + sigma_dot_x().scaled(hbar * coord(k) / q);
}

// Pi_k = p_k - (hbar/r^2) (x ^ sigma)_k
inline DiffOp momentum_dressed(int k, const FieldC& hbar = default_hbar()) {
    assert(1 <= k && k <= 3);
    int a = k % 3 + 1, b = (k + 1) % 3 + 1;
    FieldC q = coord(1) * coord(1) + coord(2) * coord(2) + coord(3) * coord(3);
    PauliCoeff cross = PauliCoeff::sigma(b, coord(a)) - PauliCoeff::sigma(a, coord(b));
    return momentum(k, hbar) - DiffOp::coefficient(cross.scaled(hbar / q));
}

// H = -(hbar^2/2) Lap + V0 + (1/2){V1, (sigma,L)}; the anticommutator is
// composed explicitly so non-radial V1 is handled correctly
inline DiffOp build_hamiltonian(const FieldC& V0, const FieldC& V1,
                                const FieldC& hbar = default_hbar()) {
    FieldC half = FieldC::from_rational(BigRational(1, 2));
    DiffOp h = laplacian().scaled(-half * hbar * hbar);
    h += DiffOp::scalar(V0);
    DiffOp sl = sigma_dot_l(hbar);
    h += anticommutator(DiffOp::scalar(V1), sl).scaled(half);
    return h;
}

// First-order ansatz data. The scalar parts of the momentum coefficients are
// the fixed linear forms A0 = b1 - a3 y + a2 z (and cyclic), derived on use.
struct IntegralAnsatz {
    FieldC a1, a2, a3, b1, b2, b3;
    std::array<FieldC, 3> A{}, B{}, C{}; // sigma components of the p1, p2, p3 coefficients
    FieldC phi0;
    std::array<FieldC, 3> phi{};
};

// X = (A0 + A.sigma) p1 + (B0 + B.sigma) p2 + (C0 + C.sigma) p3
//     + phi0 + phi.sigma - (i hbar / 2) (d_x + d_y + d_z divergence of the above)
inline DiffOp build_integral(const IntegralAnsatz& z, const FieldC& hbar = default_hbar()) {
    FieldC x = coord(1), y = coord(2), zc = coord(3);
    PauliCoeff pa{z.b1 - z.a3 * y + z.a2 * zc, z.A[0], z.A[1], z.A[2]};
    PauliCoeff pb{z.b2 + z.a3 * x - z.a1 * zc, z.B[0], z.B[1], z.B[2]};
    PauliCoeff pc{z.b3 - z.a2 * x + z.a1 * y, z.C[0], z.C[1], z.C[2]};

    DiffOp out;
    FieldC mih = -FieldC::i() * hbar;
    out.add_term({1, 0, 0}, pa.scaled(mih));
    out.add_term({0, 1, 0}, pb.scaled(mih));
    out.add_term({0, 0, 1}, pc.scaled(mih));

    PauliCoeff div =
        pa.differentiate(Var::X) + pb.differentiate(Var::Y) + pc.differentiate(Var::Z);
    PauliCoeff zero_order{z.phi0, z.phi[0], z.phi[1], z.phi[2]};
    zero_order = zero_order + div.scaled(mih * FieldC::from_rational(BigRational(1, 2)));
    out.add_term({0, 0, 0}, zero_order);
    return out;
}

} // namespace sointegra
