#pragma once

#include "operators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sointegra {

// Determining-equation systems for a first-order integral X of
// H = -(hbar^2/2) Lap + V0 + (1/2){V1, (sigma,L)}.  The second-order list has
// eighteen equations, the first-order list has nine phi-equations plus the
// three phi0-gradient equations, and the zero-order list has four equations.
// Residuals are stored exactly as the published forms read, so a report is
// all_zero precisely when every printed equation is satisfied.

struct ResidualReport {
    std::array<FieldC, 18> order2{};
    std::array<FieldC, 12> order1{}; // nine phi equations, then three phi0 gradients
    std::array<FieldC, 4> order0{};
    bool all_zero = false;
};

namespace detail {

inline FieldC dx(const FieldC& f) { return f.differentiate(Var::X); }
inline FieldC dy(const FieldC& f) { return f.differentiate(Var::Y); }
inline FieldC dz(const FieldC& f) { return f.differentiate(Var::Z); }

struct ScalarParts {
    FieldC A0, B0, C0;
};

inline ScalarParts scalar_parts(const std::array<FieldC, 3>& a, const std::array<FieldC, 3>& b) {
    FieldC x = coord(1), y = coord(2), z = coord(3);
    return {b[0] - a[2] * y + a[1] * z, b[1] + a[2] * x - a[0] * z, b[2] - a[1] * x + a[0] * y};
}

inline std::array<FieldC, 18> order2_equations(const std::array<FieldC, 3>& A,
                                               const std::array<FieldC, 3>& B,
                                               const std::array<FieldC, 3>& C, const FieldC& V1,
                                               const FieldC& hb) {
    FieldC x = coord(1), y = coord(2), z = coord(3);
    FieldC two = FieldC::from_int(2);
    std::array<FieldC, 18> e;
    e[0] = two * z * A[0] * V1 + hb * dx(A[2]);
    e[1] = two * y * A[0] * V1 + hb * dx(A[1]);
    e[2] = two * x * B[1] * V1 + hb * dy(B[0]);
    e[3] = two * z * B[1] * V1 + hb * dy(B[2]);
    e[4] = two * x * C[2] * V1 + hb * dz(C[0]);
    e[5] = two * y * C[2] * V1 + hb * dz(C[1]);
    e[6] = two * V1 * (y * A[1] + z * A[2]) - hb * dx(A[0]);
    e[7] = two * V1 * (x * B[0] + z * B[2]) - hb * dy(B[1]);
    e[8] = two * V1 * (x * C[0] + y * C[1]) - hb * dz(C[2]);
    e[9] = two * z * V1 * (A[1] + B[0]) + hb * dy(A[2]) + hb * dx(B[2]);
    e[10] = two * y * V1 * (A[2] + C[0]) + hb * dz(A[1]) + hb * dx(C[1]);
    e[11] = two * x * V1 * (B[2] + C[1]) + hb * dz(B[0]) + hb * dy(C[0]);
    e[12] = two * V1 * (x * A[0] + y * A[1] - z * C[0]) - hb * dz(A[2]) - hb * dx(C[2]);
    e[13] = two * V1 * (x * B[0] + y * B[1] - z * C[1]) - hb * dz(B[2]) - hb * dy(C[2]);
    e[14] = two * V1 * (x * A[1] - y * B[1] - z * B[2]) + hb * dy(A[0]) + hb * dx(B[0]);
    e[15] = two * V1 * (x * A[0] + z * A[2] - y * B[0]) - hb * dy(A[1]) - hb * dx(B[1]);
    e[16] = two * V1 * (x * A[2] - y * C[1] - z * C[2]) + hb * dz(A[0]) + hb * dx(C[0]);
    e[17] = two * V1 * (y * B[2] - x * C[0] - z * C[2]) + hb * dz(B[1]) + hb * dy(C[1]);
    return e;
}

inline std::array<FieldC, 9> phi_equations(const std::array<FieldC, 3>& a,
                                           const std::array<FieldC, 3>& b,
                                           const std::array<FieldC, 3>& phi, const FieldC& V1,
                                           const FieldC& hb) {
    FieldC x = coord(1), y = coord(2), z = coord(3);
    FieldC two = FieldC::from_int(2);
    ScalarParts s = scalar_parts(a, b);
    FieldC W = s.A0 * dx(V1) + s.B0 * dy(V1) + s.C0 * dz(V1);
    std::array<FieldC, 9> e;
    e[0] = V1 * (hb * (b[0] - a[2] * y) + two * y * phi[2]) + hb * (x * W + dz(phi[1]));
    e[1] = V1 * (hb * (b[0] + a[1] * z) - two * z * phi[1]) + hb * (x * W - dy(phi[2]));
    e[2] = V1 * (hb * (b[1] - a[0] * z) + two * z * phi[0]) + hb * (y * W + dx(phi[2]));
    e[3] = V1 * (hb * (b[1] + a[2] * x) - two * x * phi[2]) + hb * (y * W - dz(phi[0]));
    e[4] = V1 * (hb * (b[2] - a[1] * x) + two * x * phi[1]) + hb * (z * W + dy(phi[0]));
    e[5] = V1 * (hb * (b[2] + a[0] * y) - two * y * phi[0]) + hb * (z * W - dx(phi[1]));
    e[6] = V1 * (hb * (a[1] * y + a[2] * z) - two * y * phi[1] - two * z * phi[2]) + hb * dx(phi[0]);
    e[7] = V1 * (hb * (a[0] * x + a[2] * z) - two * x * phi[0] - two * z * phi[2]) + hb * dy(phi[1]);
    e[8] = V1 * (hb * (a[0] * x + a[1] * y) - two * x * phi[0] - two * y * phi[1]) + hb * dz(phi[2]);
    return e;
}

inline std::array<FieldC, 3> phi0_gradient_equations(const std::array<FieldC, 3>& A,
                                                     const std::array<FieldC, 3>& B,
                                                     const std::array<FieldC, 3>& C,
                                                     const FieldC& phi0, const FieldC& V1) {
    FieldC x = coord(1), y = coord(2), z = coord(3);
    FieldC V1x = dx(V1), V1y = dy(V1), V1z = dz(V1);
    std::array<FieldC, 3> e;
    e[0] = dx(phi0) -
           (V1 * ((y * dx(A[2]) - x * dy(A[2])) + (x * dz(A[1]) - z * dx(A[1])) +
                  (z * dy(A[0]) - y * dz(A[0])) + (C[1] - B[2])) +
            V1x * (z * A[1] - y * A[2]) + V1y * (z * B[1] - y * B[2]) + V1z * (z * C[1] - y * C[2]));
    e[1] = dy(phi0) -
           (V1 * ((y * dx(B[2]) - x * dy(B[2])) + (x * dz(B[1]) - z * dx(B[1])) +
                  (z * dy(B[0]) - y * dz(B[0])) + (A[2] - C[0])) +
            V1x * (x * A[2] - z * A[0]) + V1y * (x * B[2] - z * B[0]) + V1z * (x * C[2] - z * C[0]));
    e[2] = dz(phi0) -
           (V1 * ((y * dx(C[2]) - x * dy(C[2])) + (x * dz(C[1]) - z * dx(C[1])) +
                  (z * dy(C[0]) - y * dz(C[0])) + (B[0] - A[1])) +
            V1x * (y * A[0] - x * A[1]) + V1y * (y * B[0] - x * B[1]) + V1z * (y * C[0] - x * C[1]));
    return e;
}

inline std::array<FieldC, 4> order0_equations(const IntegralAnsatz& z, const FieldC& V0,
                                              const FieldC& V1, const FieldC& hb) {
    FieldC x = coord(1), y = coord(2), zc = coord(3);
    FieldC two = FieldC::from_int(2);
    ScalarParts s = scalar_parts({z.a1, z.a2, z.a3}, {z.b1, z.b2, z.b3});
    const auto &A = z.A, &B = z.B, &C = z.C;
    FieldC V0x = dx(V0), V0y = dy(V0), V0z = dz(V0);
    FieldC V1x = dx(V1), V1y = dy(V1), V1z = dz(V1);
    std::array<FieldC, 4> e;
    e[0] = s.A0 * V0x + s.B0 * V0y + s.C0 * V0z +
           V1 * (x * (dz(z.phi[1]) - dy(z.phi[2])) + y * (dx(z.phi[2]) - dz(z.phi[0])) +
                 zc * (dy(z.phi[0]) - dx(z.phi[1])));
    e[1] = hb * (V1 * (dz(A[0]) + dz(B[1]) - dy(C[1]) - dx(C[0])) +
                 V1x * ((x * dz(A[0]) - zc * dx(A[0])) + (y * dz(A[1]) - zc * dy(A[1]))) +
                 V1y * ((x * dz(B[0]) - zc * dx(B[0])) + (y * dz(B[1]) - zc * dy(B[1]))) +
                 V1z * ((x * dz(C[0]) - zc * dx(C[0])) + (y * dz(C[1]) - zc * dy(C[1])))) +
           two * (A[2] * V0x + B[2] * V0y + C[2] * V0z) +
           two * V1 * (y * dx(z.phi0) - x * dy(z.phi0));
    e[2] = hb * (V1 * (dx(B[1]) + dx(C[2]) - dz(A[2]) - dy(A[1])) +
                 V1x * ((zc * dx(A[2]) - x * dz(A[2])) + (y * dx(A[1]) - x * dy(A[1]))) +
                 V1y * ((zc * dx(B[2]) - x * dz(B[2])) + (y * dx(B[1]) - x * dy(B[1]))) +
                 V1z * ((zc * dx(C[2]) - x * dz(C[2])) + (y * dx(C[1]) - x * dy(C[1])))) +
           two * (A[0] * V0x + B[0] * V0y + C[0] * V0z) +
           two * V1 * (zc * dy(z.phi0) - y * dz(z.phi0));
    e[3] = hb * (V1 * (dy(A[0]) + dy(C[2]) - dz(B[2]) - dx(B[0])) +
                 V1x * ((zc * dy(A[2]) - y * dz(A[2])) + (x * dy(A[0]) - y * dx(A[0]))) +
                 V1y * ((zc * dy(B[2]) - y * dz(B[2])) + (x * dy(B[0]) - y * dx(B[0]))) +
                 V1z * ((zc * dy(C[2]) - y * dz(C[2])) + (x * dy(C[0]) - y * dx(C[0])))) +
           two * (A[1] * V0x + B[1] * V0y + C[1] * V0z) +
           two * V1 * (x * dz(z.phi0) - zc * dx(z.phi0));
    return e;
}

} // namespace detail

inline ResidualReport residuals(const IntegralAnsatz& z, const FieldC& V0, const FieldC& V1,
                                const FieldC& hbar = default_hbar()) {
    ResidualReport rep;
    rep.order2 = detail::order2_equations(z.A, z.B, z.C, V1, hbar);
    std::array<FieldC, 9> phi =
        detail::phi_equations({z.a1, z.a2, z.a3}, {z.b1, z.b2, z.b3}, z.phi, V1, hbar);
    std::array<FieldC, 3> grad = detail::phi0_gradient_equations(z.A, z.B, z.C, z.phi0, V1);
    for (int i = 0; i < 9; ++i) rep.order1[static_cast<size_t>(i)] = phi[static_cast<size_t>(i)];
    for (int i = 0; i < 3; ++i)
        rep.order1[static_cast<size_t>(9 + i)] = grad[static_cast<size_t>(i)];
    rep.order0 = detail::order0_equations(z, V0, V1, hbar);
    rep.all_zero = true;
    for (auto& e : rep.order2) rep.all_zero = rep.all_zero && e.is_zero();
    for (auto& e : rep.order1) rep.all_zero = rep.all_zero && e.is_zero();
    for (auto& e : rep.order0) rep.all_zero = rep.all_zero && e.is_zero();
    return rep;
}

// ---------------------------------------------------------------------------
// The algebraic system M.Phi = R obtained by requiring compatibility of the
// mixed phi derivatives.  The system lives at hbar = 1; the builder
// substitutes that value so callers may pass V1 with hbar kept symbolic.

struct MSystem {
    std::array<std::array<FieldC, 3>, 9> M{};
    std::array<FieldC, 9> R{};
    std::array<FieldC, 6> delta{};
};

inline MSystem build_M_system(const FieldC& V1_in, const std::array<FieldC, 3>& a,
                              const std::array<FieldC, 3>& b) {
    FieldC V1 = V1_in.substitute_param(Var::Hbar, BigRational(1));
    FieldC x = coord(1), y = coord(2), z = coord(3);
    FieldC zero = FieldC::zero(), two = FieldC::from_int(2), three = FieldC::from_int(3),
           four = FieldC::from_int(4);
    FieldC V1x = detail::dx(V1), V1y = detail::dy(V1), V1z = detail::dz(V1);
    FieldC V1sq = V1 * V1;

    MSystem sys;
    auto& d = sys.delta;
    d[0] = two * V1 - two * z * z * V1sq + y * V1y + x * V1x;
    d[1] = two * z * V1sq + V1z;
    d[2] = two * y * V1sq + V1y;
    d[3] = two * x * V1sq + V1x;
    d[4] = two * V1 - two * y * y * V1sq + z * V1z + x * V1x;
    d[5] = two * V1 - two * x * x * V1sq + y * V1y + z * V1z;

    sys.M[0] = {zero, two * d[0], two * z * d[2]};
    sys.M[1] = {zero, -two * x * d[1], two * x * d[2]};
    sys.M[2] = {zero, two * y * d[1], two * d[4]};
    sys.M[3] = {-two * d[0], zero, -two * z * d[3]};
    sys.M[4] = {two * x * d[1], zero, two * d[5]};
    sys.M[5] = {-two * y * d[1], zero, two * y * d[3]};
    sys.M[6] = {-two * z * d[2], two * z * d[3], zero};
    sys.M[7] = {-two * x * d[2], -two * d[5], zero};
    sys.M[8] = {-two * d[4], -two * y * d[3], zero};

    detail::ScalarParts s = detail::scalar_parts(a, b);
    FieldC W = s.A0 * V1x + s.B0 * V1y + s.C0 * V1z;
    FieldC S = x * V1x + y * V1y + z * V1z;
    FieldC V1xx = detail::dx(V1x), V1xy = detail::dy(V1x), V1xz = detail::dz(V1x);
    FieldC V1yy = detail::dy(V1y), V1yz = detail::dz(V1y), V1zz = detail::dz(V1z);
    FieldC GX = s.A0 * V1xx + s.B0 * V1xy + s.C0 * V1xz;
    FieldC GY = s.A0 * V1xy + s.B0 * V1yy + s.C0 * V1yz;
    FieldC GZ = s.A0 * V1xz + s.B0 * V1yz + s.C0 * V1zz;

    auto& R = sys.R;
    R[0] = two * V1 * (a[1] - two * x * z * W) + a[1] * S - two * (b[2] * x + z * s.A0) * V1sq -
           b[2] * V1x - z * GX;
    R[1] = y * GY + z * GZ - two * x * (b[0] + s.A0) * V1sq + (three - four * x * x * V1) * W -
           b[0] * V1x;
    R[2] = two * V1 * (a[2] + two * x * y * W) + a[2] * S + two * (b[1] * x + y * s.A0) * V1sq +
           b[1] * V1x + y * GX;
    R[3] = -two * V1 * (a[0] + two * y * z * W) - a[0] * S - two * (b[2] * y + z * s.B0) * V1sq -
           b[2] * V1y - z * GY;
    R[4] = two * V1 * (a[2] - two * x * y * W) + a[2] * S - two * (b[0] * y + x * s.B0) * V1sq -
           b[0] * V1y - x * GY;
    R[5] = -x * GX - z * GZ + two * y * (b[1] + s.B0) * V1sq - (three - four * y * y * V1) * W +
           b[1] * V1y;
    R[6] = x * GX + y * GY - two * z * (b[2] + s.C0) * V1sq + (three - four * z * z * V1) * W -
           b[2] * V1z;
    R[7] = -two * V1 * (a[1] + two * x * z * W) - a[1] * S - two * (b[0] * z + x * s.C0) * V1sq -
           b[0] * V1z - x * GZ;
    R[8] = two * V1 * (-a[0] + two * y * z * W) - a[0] * S + two * (b[1] * z + y * s.C0) * V1sq +
           b[1] * V1z + y * GZ;
    return sys;
}

namespace detail {

// probe points with rational radius, plus generic parameter assignments that
// keep s and t rational as well
inline std::vector<EvalPoint> rank_probe_points() {
    static const std::array<std::array<long, 3>, 5> pts{
        {{1, 2, 2}, {2, 3, 6}, {1, 4, 8}, {4, 4, 7}, {2, 6, 9}}};
    std::vector<EvalPoint> out;
    for (auto& p : pts) {
        EvalPoint ep = cartesian_point(p[0], p[1], p[2]);
        BigRational r2 = BigRational(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        ep.with(Var::Hbar, 1)
            .with(Var::Mu, 3)
            .with(Var::Beta, BigRational(3) / r2)
            .with(Var::Cst, 9 - 4 * r2 * r2)
            .with(Var::A1, 2)
            .with(Var::A2, 3)
            .with(Var::A3, 5)
            .with(Var::B1, 7)
            .with(Var::B2, 11)
            .with(Var::B3, 13)
            .with(Var::Alpha1, 17)
            .with(Var::Alpha2, 19)
            .with(Var::Alpha3, 23);
        out.push_back(std::move(ep));
    }
    return out;
}

// row echelon rank over the rationals; records pivot positions
inline int rational_rank(std::vector<std::vector<GaussRat>> m, std::vector<std::pair<int, int>>* pivots) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pr)]);
        for (int r = rank + 1; r < rows; ++r) {
            GaussRat f = m[static_cast<size_t>(r)][static_cast<size_t>(c)] /
                         m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (int k = c; k < cols; ++k)
                m[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
                    f * m[static_cast<size_t>(rank)][static_cast<size_t>(k)];
        }
        if (pivots) pivots->emplace_back(rank, c);
        ++rank;
    }
    return rank;
}

inline std::string describe_pivots(const EvalPoint& ep, int rank,
                                   const std::vector<std::pair<int, int>>& pivots) {
    std::ostringstream os;
    os << "rank " << rank << " at (" << ep.x << ", " << ep.y << ", " << ep.z << ")";
    if (!pivots.empty()) {
        os << " with pivots";
        for (auto& [r, c] : pivots) os << " (" << (r + 1) << "," << (c + 1) << ")";
    }
    return os.str();
}

inline int matrix_rank_probe(const std::vector<std::vector<FieldC>>& entries, std::string* witness) {
    int best = -1;
    std::string best_witness;
    int usable = 0;
    for (const EvalPoint& ep : rank_probe_points()) {
        std::vector<std::vector<GaussRat>> m;
        try {
            for (auto& row : entries) {
                std::vector<GaussRat> out;
                out.reserve(row.size());
                for (auto& f : row) out.push_back(f.eval_exact(ep));
                m.push_back(std::move(out));
            }
        } catch (const EvalError&) {
            continue;
        }
        ++usable;
        std::vector<std::pair<int, int>> pivots;
        int rank = rational_rank(std::move(m), &pivots);
        if (rank > best) {
            best = rank;
            best_witness = describe_pivots(ep, rank, pivots);
        }
    }
    if (usable == 0)
        throw Error("rank probe: every probe point was degenerate; supply more points");
    if (witness) *witness = best_witness;
    return best;
}

} // namespace detail

inline int rank_probe(const FieldC& V1, std::string* witness = nullptr) {
    std::array<FieldC, 3> zero3{FieldC::zero(), FieldC::zero(), FieldC::zero()};
    MSystem sys = build_M_system(V1, zero3, zero3);
    std::vector<std::vector<FieldC>> m;
    for (auto& row : sys.M) m.emplace_back(row.begin(), row.end());
    return detail::matrix_rank_probe(m, witness);
}

inline int extended_rank_probe(const FieldC& V1, const std::array<FieldC, 3>& a,
                               const std::array<FieldC, 3>& b, std::string* witness = nullptr) {
    MSystem sys = build_M_system(V1, a, b);
    std::vector<std::vector<FieldC>> m;
    for (int i = 0; i < 9; ++i) {
        std::vector<FieldC> row(sys.M[static_cast<size_t>(i)].begin(),
                                sys.M[static_cast<size_t>(i)].end());
        row.push_back(sys.R[static_cast<size_t>(i)]);
        m.push_back(std::move(row));
    }
    return detail::matrix_rank_probe(m, witness);
}

// ---------------------------------------------------------------------------
// Published solutions of the first-order phi system.

enum class PhiCase { gauge_case, radial_case };

struct PhiSolutionParams {
    std::array<FieldC, 3> a{FieldC::var(Var::A1), FieldC::var(Var::A2), FieldC::var(Var::A3)};
    std::array<FieldC, 3> b{FieldC::var(Var::B1), FieldC::var(Var::B2), FieldC::var(Var::B3)};
    std::array<FieldC, 3> alpha{FieldC::var(Var::Alpha1), FieldC::var(Var::Alpha2),
                                FieldC::var(Var::Alpha3)};
    std::optional<FieldC> V1{}; // radial case only; defaults to 1/(2 r^2)
};

inline std::array<FieldC, 3> gauge_case_phi(const std::array<FieldC, 3>& a,
                                            const std::array<FieldC, 3>& b,
                                            const std::array<FieldC, 3>& alpha) {
    FieldC x = coord(1), y = coord(2), z = coord(3);
    FieldC two = FieldC::from_int(2);
    FieldC q = x * x + y * y + z * z;
    FieldC half = FieldC::from_rational(BigRational(1, 2));
    std::array<FieldC, 3> phi;
    phi[0] = half * a[0] + ((x * x - y * y - z * z) * alpha[0] + two * x * y * alpha[1] +
                            two * x * z * alpha[2] - two * b[1] * z + two * b[2] * y) /
                               (two * q);
    phi[1] = half * a[1] + ((y * y - x * x - z * z) * alpha[1] + two * x * y * alpha[0] +
                            two * y * z * alpha[2] + two * b[0] * z - two * b[2] * x) /
                               (two * q);
    phi[2] = half * a[2] + ((z * z - x * x - y * y) * alpha[2] + two * x * z * alpha[0] +
                            two * y * z * alpha[1] - two * b[0] * y + two * b[1] * x) /
                               (two * q);
    return phi;
}

inline bool check_phi_solution(PhiCase which, const PhiSolutionParams& p = {}) {
    FieldC x = coord(1), y = coord(2), z = coord(3);
    FieldC q = x * x + y * y + z * z;
    FieldC half = FieldC::from_rational(BigRational(1, 2));
    FieldC V1;
    std::array<FieldC, 3> phi;
    if (which == PhiCase::gauge_case) {
        V1 = FieldC::one() / q;
        phi = gauge_case_phi(p.a, p.b, p.alpha);
    } else {
        V1 = p.V1.value_or(half / q);
        V1 = V1.substitute_param(Var::Hbar, BigRational(1));
        phi = {half * p.a[0], half * p.a[1], half * p.a[2]};
    }
    std::array<FieldC, 9> eqs = detail::phi_equations(p.a, p.b, phi, V1, FieldC::one());
    return std::all_of(eqs.begin(), eqs.end(), [](const FieldC& e) { return e.is_zero(); });
}

// ---------------------------------------------------------------------------
// Independent cross-check of the transcribed lists against coefficients of
// the raw commutator [H, X].  Each published equation is matched once, on
// fixed generic probes, to the real or imaginary part of a Pauli component
// of a momentum coefficient, together with the constant (a Gaussian-rational
// multiple of an hbar power) relating the two.  That table is frozen and
// reused for every later call.
//
// The four zero-order equations are printed after second- and third-order
// derivatives of A, B, C and the Laplacian of phi0 have been eliminated with
// the help of the other lists, so their raw coefficients match the printed
// forms only modulo the lower-precedence residuals.  Their table entries are
// therefore pinned on probes whose other residuals vanish identically, and a
// later call accepts a zero-order deviation only while some second- or
// first-order residual is nonzero on that same input.

namespace detail {

struct SlotKey {
    int order;
    DIdx idx;
    int comp; // Pauli component 0..3
    int part; // 0 real, 1 imaginary

    bool operator<(const SlotKey& o) const {
        return std::tie(order, idx, comp, part) < std::tie(o.order, o.idx, o.comp, o.part);
    }
    bool operator==(const SlotKey& o) const {
        return order == o.order && idx == o.idx && comp == o.comp && part == o.part;
    }
};

inline FieldC slot_value(const DiffOp& op, const SlotKey& key) {
    const FieldC& c = op.coefficient_at(key.idx).c[static_cast<size_t>(key.comp)];
    return key.part == 0 ? c.real_part() : c.imag_part();
}

inline std::map<SlotKey, FieldC> nonzero_slots(const DiffOp& op, int order) {
    std::map<SlotKey, FieldC> out;
    for (auto& [idx, pc] : op.momentum_coefficients(order)) {
        for (int comp = 0; comp < 4; ++comp) {
            FieldC re = pc.c[static_cast<size_t>(comp)].real_part();
            FieldC im = pc.c[static_cast<size_t>(comp)].imag_part();
            if (!re.is_zero()) out.emplace(SlotKey{order, idx, comp, 0}, re);
            if (!im.is_zero()) out.emplace(SlotKey{order, idx, comp, 1}, im);
        }
    }
    return out;
}

// true when f is q * hbar^k for a Gaussian rational q (possibly with an
// hbar power in the denominator)
inline bool is_hbar_monomial(const FieldC& f) {
    if (f.is_zero()) return false;
    auto pure_hbar = [](const auto& p) {
        if (p.size() != 1) return false;
        const Mono& m = p.terms().begin()->first;
        for (int i = 0; i < kVarCount; ++i)
            if (m[static_cast<size_t>(i)] != 0 && static_cast<Var>(i) != Var::Hbar) return false;
        return true;
    };
    return pure_hbar(f.numerator()) && pure_hbar(f.denominator());
}

inline std::array<FieldC, 34> flatten_residuals(const ResidualReport& rep) {
    std::array<FieldC, 34> out;
    for (int i = 0; i < 18; ++i) out[static_cast<size_t>(i)] = rep.order2[static_cast<size_t>(i)];
    for (int i = 0; i < 12; ++i)
        out[static_cast<size_t>(18 + i)] = rep.order1[static_cast<size_t>(i)];
    for (int i = 0; i < 4; ++i) out[static_cast<size_t>(30 + i)] = rep.order0[static_cast<size_t>(i)];
    return out;
}

inline std::string equation_label(int i) {
    std::ostringstream os;
    if (i < 18)
        os << "second-order equation " << (i + 1);
    else if (i < 27)
        os << "first-order phi equation " << (i - 17);
    else if (i < 30)
        os << "phi0 gradient equation " << (i - 26);
    else
        os << "zero-order equation " << (i - 29);
    return os.str();
}

struct CrosscheckTable {
    std::array<SlotKey, 34> slot{};
    std::array<FieldC, 34> kappa{};
    // every slot that can be nonzero at momentum orders 1 and 2, with the
    // equation it tracks, or -1 for the documented differential consequences
    std::vector<std::pair<SlotKey, int>> classified;
};

struct ProbeInput {
    IntegralAnsatz z;
    FieldC V0, V1;
};

inline FieldC c(long v) { return FieldC::from_int(v); }

inline ProbeInput generic_probe(int which) {
    FieldC x = coord(1), y = coord(2), z = coord(3);
    ProbeInput p;
    if (which == 0) {
        p.V1 = c(1) + x + x * x + c(2) * y * y + z * z + c(3) * x * z + y * z + x * y;
        p.V0 = c(5) + c(2) * x + y * y + x * z + y * z * z;
        p.z.a1 = c(2), p.z.a2 = c(3), p.z.a3 = c(5);
        p.z.b1 = FieldC::from_rational(BigRational(1, 2));
        p.z.b2 = FieldC::from_rational(BigRational(-1, 3));
        p.z.b3 = FieldC::from_rational(BigRational(1, 5));
        p.z.A = {x + y, z * z, x * y + c(1)};
        p.z.B = {y + c(2) * z, x * x, y * z + c(2)};
        p.z.C = {x * z, y * y + x, x + y + z + c(1)};
        p.z.phi = {x * x + y, y * z + z * z, x * y * z + x};
        p.z.phi0 = x * y + z * z + x;
    } else {
        p.V1 = c(2) - x + y + x * x + y * y + c(2) * z * z + x * z + c(2) * y * z + x * y;
        p.V0 = c(1) + z + x * x + x * y + z * z * y;
        p.z.a1 = c(1), p.z.a2 = c(-2), p.z.a3 = c(4);
        p.z.b1 = c(3);
        p.z.b2 = FieldC::from_rational(BigRational(1, 2));
        p.z.b3 = FieldC::from_rational(BigRational(-2, 5));
        p.z.A = {y * z, x + z * z, y + c(1)};
        p.z.B = {x * y + c(2), z + x * x, x * z};
        p.z.C = {y + z, x * y, z * z + y};
        p.z.phi = {y * y, x * z + c(1), x + y * z};
        p.z.phi0 = z * x + y * y;
    }
    return p;
}

// probes whose first- and second-order residuals vanish identically, used to
// pin the zero-order slots without elimination corrections
inline ProbeInput onshell_probe(int which) {
    FieldC x = coord(1), y = coord(2), z = coord(3);
    FieldC hb = default_hbar();
    FieldC q = x * x + y * y + z * z;
    ProbeInput p;
    if (which == 0) {
        // rotation generators a.J with a non-radial V0
        p.z.a1 = c(2), p.z.a2 = c(1), p.z.a3 = c(3);
        p.z.b1 = p.z.b2 = p.z.b3 = FieldC::zero();
        FieldC half = FieldC::from_rational(BigRational(1, 2));
        p.z.phi = {half * hb * c(2), half * hb * c(1), half * hb * c(3)};
        p.V1 = FieldC::one() / q;
        p.V0 = x * x * y + z * z * z + c(2) * y * z;
    } else if (which == 1) {
        // constant sigma coefficients with V1 = 0
        p.z.a1 = p.z.a2 = p.z.a3 = FieldC::zero();
        p.z.b1 = p.z.b2 = p.z.b3 = FieldC::zero();
        p.z.A = {c(2), c(3), c(5)};
        p.z.B = {c(-1), c(4), c(2)};
        p.z.C = {c(3), c(-2), c(1)};
        p.V1 = FieldC::zero();
        p.V0 = x * x * y + z * z * z + c(2) * y * z;
    } else {
        // a pure harmonic phi0 with radial V1
        p.z.a1 = p.z.a2 = p.z.a3 = FieldC::zero();
        p.z.b1 = p.z.b2 = p.z.b3 = FieldC::zero();
        p.z.phi0 = x * y + x * z + y * z;
        p.V1 = FieldC::one() / q;
        p.V0 = FieldC::zero();
    }
    return p;
}

inline DiffOp raw_commutator(const ProbeInput& p) {
    return commutator(build_hamiltonian(p.V0, p.V1), build_integral(p.z));
}

inline CrosscheckTable discover_normalization() {
    CrosscheckTable table;
    std::array<bool, 34> found{};

    auto match_orders12 = [&](const ProbeInput& p) {
        DiffOp K = raw_commutator(p);
        std::array<FieldC, 34> eqs = flatten_residuals(residuals(p.z, p.V0, p.V1));
        for (int order = 2; order >= 1; --order) {
            int lo = order == 2 ? 0 : 18, hi = order == 2 ? 18 : 30;
            for (auto& [key, value] : nonzero_slots(K, order)) {
                bool seen = false;
                for (auto& [k, eq] : table.classified)
                    if (k == key) seen = true;
                if (seen) continue;
                int matched = -1;
                FieldC kappa;
                for (int i = lo; i < hi; ++i) {
                    const FieldC& eq = eqs[static_cast<size_t>(i)];
                    if (eq.is_zero()) continue;
                    FieldC ratio = value / eq;
                    if (is_hbar_monomial(ratio)) {
                        matched = i;
                        kappa = ratio;
                        break;
                    }
                }
                table.classified.emplace_back(key, matched);
                if (matched >= 0 && !found[static_cast<size_t>(matched)]) {
                    found[static_cast<size_t>(matched)] = true;
                    table.slot[static_cast<size_t>(matched)] = key;
                    table.kappa[static_cast<size_t>(matched)] = kappa;
                }
            }
        }
    };
    match_orders12(generic_probe(0));
    match_orders12(generic_probe(1));
    for (int i = 0; i < 30; ++i)
        if (!found[static_cast<size_t>(i)])
            throw Error("crosscheck discovery failed to place " + equation_label(i));

    // second generic probe revalidates every placement
    {
        ProbeInput p = generic_probe(1);
        DiffOp K = raw_commutator(p);
        std::array<FieldC, 34> eqs = flatten_residuals(residuals(p.z, p.V0, p.V1));
        for (int i = 0; i < 30; ++i) {
            FieldC lhs = slot_value(K, table.slot[static_cast<size_t>(i)]);
            if (lhs != table.kappa[static_cast<size_t>(i)] * eqs[static_cast<size_t>(i)])
                throw Error("crosscheck discovery is inconsistent for " + equation_label(i));
        }
    }

    // zero-order placements from the on-shell probes
    auto match_order0 = [&](const ProbeInput& p, std::initializer_list<int> targets) {
        DiffOp K = raw_commutator(p);
        std::array<FieldC, 34> eqs = flatten_residuals(residuals(p.z, p.V0, p.V1));
        for (int i : targets) {
            const FieldC& eq = eqs[static_cast<size_t>(i)];
            if (eq.is_zero()) throw Error("degenerate zero-order probe for " + equation_label(i));
            SlotKey best{};
            FieldC kappa;
            bool ok = false;
            for (auto& [key, value] : nonzero_slots(K, 0)) {
                FieldC ratio = value / eq;
                if (is_hbar_monomial(ratio)) {
                    best = key;
                    kappa = ratio;
                    ok = true;
                    break;
                }
            }
            if (!ok) throw Error("crosscheck discovery failed to place " + equation_label(i));
            if (found[static_cast<size_t>(i)]) {
                if (!(table.slot[static_cast<size_t>(i)] == best) ||
                    table.kappa[static_cast<size_t>(i)] != kappa)
                    throw Error("zero-order probes disagree for " + equation_label(i));
            } else {
                found[static_cast<size_t>(i)] = true;
                table.slot[static_cast<size_t>(i)] = best;
                table.kappa[static_cast<size_t>(i)] = kappa;
            }
        }
    };
    match_order0(onshell_probe(0), {30});
    match_order0(onshell_probe(1), {31, 32, 33});
    match_order0(onshell_probe(2), {31, 32, 33}); // re-derives and compares the same slots
    return table;
}

inline const CrosscheckTable& crosscheck_table() {
    static const CrosscheckTable table = discover_normalization();
    return table;
}

} // namespace detail

inline bool crosscheck_commutator(const IntegralAnsatz& z, const FieldC& V0, const FieldC& V1,
                                  std::string* mismatch = nullptr) {
    const detail::CrosscheckTable& table = detail::crosscheck_table();
    DiffOp K = commutator(build_hamiltonian(V0, V1), build_integral(z));
    ResidualReport rep = residuals(z, V0, V1);
    std::array<FieldC, 34> eqs = detail::flatten_residuals(rep);

    auto fail = [&](const std::string& what) {
        if (mismatch) *mismatch = what;
        return false;
    };

    bool lower_zero = true;
    for (int i = 0; i < 30; ++i) {
        FieldC lhs = detail::slot_value(K, table.slot[static_cast<size_t>(i)]);
        if (lhs != table.kappa[static_cast<size_t>(i)] * eqs[static_cast<size_t>(i)])
            return fail(detail::equation_label(i) + " does not match the raw commutator");
        lower_zero = lower_zero && eqs[static_cast<size_t>(i)].is_zero();
    }
    for (int i = 30; i < 34; ++i) {
        FieldC diff = detail::slot_value(K, table.slot[static_cast<size_t>(i)]) -
                      table.kappa[static_cast<size_t>(i)] * eqs[static_cast<size_t>(i)];
        if (!diff.is_zero() && lower_zero)
            return fail(detail::equation_label(i) + " does not match the raw commutator");
    }

    // every slot that fires at orders 1 and 2 must be a placed equation or a
    // documented differential consequence
    for (int order = 1; order <= 2; ++order) {
        for (auto& [key, value] : detail::nonzero_slots(K, order)) {
            bool known = false;
            for (auto& [k, eq] : table.classified)
                if (k == key) {
                    known = true;
                    break;
                }
            if (!known) {
                std::ostringstream os;
                os << "unexpected momentum-order-" << order << " coefficient in the commutator";
                return fail(os.str());
            }
        }
    }
    if (!K.momentum_coefficients(3).empty())
        return fail("commutator has a third-order part");

    if (rep.all_zero != K.is_zero())
        return fail(rep.all_zero ? "residuals vanish but the commutator does not"
                                 : "commutator vanishes but some residual does not");
    return true;
}

} // namespace sointegra
