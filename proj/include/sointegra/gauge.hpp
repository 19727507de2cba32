#pragma once

#include <optional>
#include <string>
#include <vector>

#include "operators.hpp"

namespace sointegra {

// c1 = c2 +- pi and c3 = +-pi/2; c2 must be a multiple of pi/2 so that
// e^{i c2} stays Gaussian rational and the entries stay in the field
struct GaugeBranch {
    BigRational c2_over_pi{0};
    bool c1_plus = true;
    bool c3_plus = true;
};

class GaugeMatrix {
public:
    GaugeMatrix(std::array<std::array<FieldC, 2>, 2> m, GaugeBranch branch)
        : m_(std::move(m)), branch_(branch) {}

    static GaugeMatrix identity() {
        std::array<std::array<FieldC, 2>, 2> m{
            {{FieldC::one(), FieldC::zero()}, {FieldC::zero(), FieldC::one()}}};
        return GaugeMatrix(std::move(m), GaugeBranch{});
    }

    const FieldC& entry(int i, int j) const {
        return m_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    const GaugeBranch& branch() const { return branch_; }

    // sigma-basis form: M = c0 + c1 s1 + c2 s2 + c3 s3
    PauliCoeff as_pauli() const {
        FieldC half = FieldC::from_rational(BigRational(1, 2));
        FieldC ihalf = FieldC::i() * half;
        return {(m_[0][0] + m_[1][1]) * half, (m_[0][1] + m_[1][0]) * half,
                (m_[0][1] - m_[1][0]) * ihalf, (m_[0][0] - m_[1][1]) * half};
    }
    PauliCoeff dagger_pauli() const { return as_pauli().hermitian(); }

    FieldC det() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

    bool is_unitary() const {
        return dagger_pauli() * as_pauli() == PauliCoeff(FieldC::one());
    }

    std::array<std::array<GaussRat, 2>, 2> eval(const EvalPoint& pt) const {
        return {{{m_[0][0].eval_exact(pt), m_[0][1].eval_exact(pt)},
                 {m_[1][0].eval_exact(pt), m_[1][1].eval_exact(pt)}}};
    }

    // the azimuth is undefined on the z axis; the Cartesian entries extend
    // continuously there, so the singularity is removable
    static std::string removable_singularity() { return "x = y = 0"; }

private:
    std::array<std::array<FieldC, 2>, 2> m_;
    GaugeBranch branch_;
};

namespace detail {
// i^k as a field constant
inline FieldC gauss_unit(long k) {
    k = ((k % 4) + 4) % 4;
    switch (k) {
        case 0: return FieldC::one();
        case 1: return FieldC::i();
        case 2: return -FieldC::one();
        default: return -FieldC::i();
    }
}
} // namespace detail

inline GaugeMatrix build_U(const GaugeBranch& branch = {}) {
    BigRational two_c2 = branch.c2_over_pi * 2;
    if (denominator(two_c2) != 1)
        throw Error("gauge branch: c2 must be a multiple of pi/2 to keep the "
                    "entries Cartesian rational");
    FieldC w = detail::gauss_unit(static_cast<long>(numerator(two_c2) % 4));
    FieldC wbar = w.conj();
    FieldC s3 = branch.c3_plus ? FieldC::one() : -FieldC::one();

    FieldC x = coord(1), y = coord(2), z = coord(3);
    FieldC r = FieldC::var(Var::R);
    FieldC im = FieldC::i();

    std::array<std::array<FieldC, 2>, 2> m{
        {{-s3 * w * (x + im * y) / r, s3 * w * z / r},
         {-s3 * wbar * z / r, -s3 * wbar * (x - im * y) / r}}};
    return GaugeMatrix(std::move(m), branch);
}

// U^{-1} op U with U^{-1} = U^dagger
inline DiffOp conjugate(const DiffOp& op, const GaugeMatrix& U) {
    DiffOp right = compose(op, DiffOp::coefficient(U.as_pauli()));
    return compose(DiffOp::coefficient(U.dagger_pauli()), right);
}

inline FieldC default_gamma(const FieldC& hbar = default_hbar()) {
    FieldC q = coord(1) * coord(1) + coord(2) * coord(2) + coord(3) * coord(3);
    return -hbar / q;
}

// hbar^2 U^dagger (grad U) . grad = Gamma (sigma, L)
inline bool verify_generator_relation(const GaugeMatrix& U, const FieldC& gamma,
                                      const FieldC& hbar = default_hbar()) {
    PauliCoeff u = U.as_pauli();
    PauliCoeff ud = U.dagger_pauli();
    static const Var axes[3] = {Var::X, Var::Y, Var::Z};
    DiffOp lhs;
    for (int k = 0; k < 3; ++k) {
        DIdx idx{};
        idx[static_cast<size_t>(k)] = 1;
        lhs.add_term(idx, (ud * u.differentiate(axes[k])).scaled(hbar * hbar));
    }
    return lhs == compose(DiffOp::scalar(gamma), sigma_dot_l(hbar));
}

inline bool verify_generator_relation(const GaugeMatrix& U) {
    return verify_generator_relation(U, default_gamma());
}

enum class AlgebraFamily { six_dim, nine_dim };

struct AlgebraEntry {
    std::string bracket;  // e.g. "[J1, S2]"
    std::string expected; // e.g. "i*hbar*S3" or "0"
    bool ok;
};

struct AlgebraTable {
    AlgebraFamily family;
    std::vector<AlgebraEntry> entries;
    bool all_ok = true;
    std::string first_mismatch;
};

namespace detail {

inline int epsilon3(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1 && (k - j + 3) % 3 == 1) ? 1 : -1;
}

enum class GenKind { J, S, K, P };

inline std::string gen_name(GenKind kind, int i) {
    switch (kind) {
        case GenKind::J: return "J" + std::to_string(i);
        case GenKind::S: return "S" + std::to_string(i);
        case GenKind::K: return "J" + std::to_string(i) + " - S" + std::to_string(i);
        default: return "Pi" + std::to_string(i);
    }
}

inline DiffOp gen_op(GenKind kind, int i, const FieldC& hbar) {
    switch (kind) {
        case GenKind::J: return angular_total(i, hbar);
        case GenKind::S: return spin_radial(i, hbar);
        case GenKind::K: return angular_total(i, hbar) - spin_radial(i, hbar);
        default: return momentum_dressed(i, hbar);
    }
}

// published bracket pattern: which triple (if any) the commutator lands in
inline std::optional<GenKind> bracket_target(GenKind a, GenKind b) {
    auto same = [&](GenKind k) { return a == k && b == k; };
    if (same(GenKind::J)) return GenKind::J;
    if (same(GenKind::S)) return GenKind::S;
    if (same(GenKind::K)) return GenKind::K;
    if (same(GenKind::P)) return std::nullopt;
    if ((a == GenKind::J && b == GenKind::S) || (a == GenKind::S && b == GenKind::J))
        return GenKind::S;
    if ((a == GenKind::K && b == GenKind::P) || (a == GenKind::P && b == GenKind::K))
        return GenKind::P;
    return std::nullopt; // K-S, P-S pairs commute
}

} // namespace detail

inline AlgebraTable verify_algebra(AlgebraFamily family, const FieldC& hbar = default_hbar()) {
    using detail::GenKind;
    std::vector<GenKind> kinds;
    if (family == AlgebraFamily::six_dim)
        kinds = {GenKind::J, GenKind::S};
    else
        kinds = {GenKind::K, GenKind::P, GenKind::S};

    AlgebraTable table;
    table.family = family;
    FieldC ih = FieldC::i() * hbar;

    for (GenKind ka : kinds)
        for (int i = 1; i <= 3; ++i)
            for (GenKind kb : kinds)
                for (int j = 1; j <= 3; ++j) {
                    DiffOp got = commutator(detail::gen_op(ka, i, hbar),
                                            detail::gen_op(kb, j, hbar));
                    auto target = detail::bracket_target(ka, kb);
                    DiffOp want;
                    std::string expect_str = "0";
                    if (target) {
                        for (int k = 1; k <= 3; ++k) {
                            int e = detail::epsilon3(i, j, k);
                            if (e == 0) continue;
                            want += detail::gen_op(*target, k, hbar)
                                        .scaled(e > 0 ? ih : -ih);
                            expect_str = std::string(e > 0 ? "" : "-") + "i*hbar*(" +
                                         detail::gen_name(*target, k) + ")";
                        }
                    }
                    AlgebraEntry entry;
                    entry.bracket = "[" + detail::gen_name(ka, i) + ", " +
                                    detail::gen_name(kb, j) + "]";
                    entry.expected = expect_str;
                    entry.ok = (got == want);
                    if (!entry.ok && table.first_mismatch.empty())
                        table.first_mismatch = entry.bracket;
                    table.all_ok = table.all_ok && entry.ok;
                    table.entries.push_back(std::move(entry));
                }
    return table;
}

} // namespace sointegra
