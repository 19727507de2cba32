#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sointegra/gauge.hpp"
#include "sointegra/multiplets.hpp"

using namespace sointegra;

namespace {
FieldC one = FieldC::one();
FieldC zero = FieldC::zero();
FieldC im = FieldC::i();
FieldC half = FieldC::from_rational(BigRational(1, 2));
FieldC hb = FieldC::var(Var::Hbar);
FieldC fr = FieldC::var(Var::R);
FieldC fs = FieldC::var(Var::S);
FieldC mu = FieldC::var(Var::Mu);
FieldC beta = FieldC::var(Var::Beta);
FieldC ka = FieldC::var(Var::A1);
FieldC kb = FieldC::var(Var::A2);
FieldC fq = coord(1) * coord(1) + coord(2) * coord(2) + coord(3) * coord(3);

const std::vector<Family> kFamilies{Family::S, Family::P, Family::V,
                                    Family::A, Family::T, Family::Y};

int default_component(Family fam) {
    if (fam == Family::S || fam == Family::P) return 0;
    if (fam == Family::V || fam == Family::A) return 1;
    return 12;
}

FieldC random_radial(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3), pick(0, 4);
    FieldC c = FieldC::from_rational(BigRational(num(rng), den(rng)));
    switch (pick(rng)) {
        case 0: return c;
        case 1: return c * fr;
        case 2: return c / fr;
        case 3: return c / fq;
        default: return c * fq;
    }
}

RadialCombo random_combo(Family fam, std::mt19937& rng) {
    std::vector<FieldC> f;
    for (int j = 0; j < family_size(fam); ++j) f.push_back(random_radial(rng));
    return RadialCombo::of(fam, std::move(f));
}
} // namespace

TEST_CASE("family inventory") {
    CHECK(family_size(Family::S) == 3);
    CHECK(family_size(Family::P) == 3);
    CHECK(family_size(Family::V) == 8);
    CHECK(family_size(Family::A) == 7);
    CHECK(family_size(Family::T) == 10);
    CHECK(family_size(Family::Y) == 9);

    CHECK_THROWS_AS(basis_element(Family::S, 4), Error);
    CHECK_THROWS_AS(basis_element(Family::S, 0), Error);
    CHECK_THROWS_AS(basis_element(Family::S, 1, 1), Error);
    CHECK_THROWS_AS(basis_element(Family::V, 1, 0), Error);
    CHECK_THROWS_AS(basis_element(Family::V, 1, 4), Error);
    CHECK_THROWS_AS(basis_element(Family::T, 1, 1), Error);
    CHECK_THROWS_AS(basis_element(Family::Y, 1, 21), Error);
    CHECK_NOTHROW(basis_element(Family::T, 1, 12));
}

TEST_CASE("parity of every basis element") {
    for (Family fam : kFamilies) {
        for (int j = 1; j <= family_size(fam); ++j) {
            DiffOp e = basis_element(fam, j, default_component(fam), hb);
            DiffOp pc = parity_conjugate(e);
            INFO(family_name(fam) << " element " << j);
            if (parity_sign(fam) > 0)
                CHECK(pc == e);
            else
                CHECK(pc == -e);
        }
    }
}

TEST_CASE("parity conjugation is an involution and an algebra map") {
    std::mt19937 rng(40412);
    for (int trial = 0; trial < 20; ++trial) {
        DiffOp a = assemble(random_combo(Family::V, rng), 2, hb);
        DiffOp b = assemble(random_combo(Family::P, rng), 0, hb);
        CHECK(parity_conjugate(parity_conjugate(a)) == a);
        CHECK(parity_conjugate(compose(a, b)) ==
              compose(parity_conjugate(a), parity_conjugate(b)));
    }
}

TEST_CASE("radial derivative handles the radical chain rules") {
    CHECK(radial_derivative(fr) == one);
    CHECK(radial_derivative(one / fq) == -FieldC::from_int(2) / (fq * fr));
    CHECK(radial_derivative(fs) == beta * fr / fs);
    FieldC t = FieldC::var(Var::T);
    CHECK(radial_derivative(t) == FieldC::from_int(8) * fr * fq / t);
    CHECK(radial_derivative(mu) == zero);
}

TEST_CASE("assembled operators against hand-built forms") {
    SECTION("scalar combo with constant coefficients") {
        DiffOp x = assemble(RadialCombo::of(Family::S, {ka, zero, kb}), 0, hb);
        CHECK(x == DiffOp::scalar(ka) + sigma_dot_l(hb).scaled(kb));
    }
    SECTION("total angular momentum") {
        RadialCombo c = RadialCombo::of(Family::A, {one, hb * half, zero, zero, zero, zero, zero});
        for (int k = 1; k <= 3; ++k) CHECK(assemble(c, k, hb) == angular_total(k, hb));
    }
    SECTION("dressed momentum") {
        RadialCombo c =
            RadialCombo::of(Family::V, {zero, one, zero, zero, zero, zero, hb / fq, zero});
        for (int k = 1; k <= 3; ++k) CHECK(assemble(c, k, hb) == momentum_dressed(k, hb));
    }
    SECTION("pseudoscalar pair at the half coupling") {
        DiffOp xp1 = sigma_dot_x().scaled(one / fr);
        DiffOp xp2 = sigma_dot_p(one).scaled(-fr) +
                     compose(sigma_dot_x(), x_dot_p(one)).scaled(one / fr) +
                     sigma_dot_x().scaled(-im / fr);
        DiffOp x = assemble(RadialCombo::of(Family::P, {kb / fr, -ka * fr, ka / fr}), 0, one);
        CHECK(x == xp2.scaled(ka) + xp1.scaled(kb));
    }
    SECTION("a constant momentum slot needs no correction") {
        RadialCombo c =
            RadialCombo::of(Family::V, {zero, ka, zero, zero, zero, zero, zero, zero});
        CHECK(assemble(c, 3, hb) == momentum(3, hb).scaled(ka));
    }
}

TEST_CASE("one direction of the vector ansatz assembles to zero") {
    for (int k = 1; k <= 3; ++k) {
        DiffOp lhs = compose(DiffOp::scalar(coord(k)), sigma_dot_l(hb)) -
                     compose(x_dot_p(hb), sigma_cross_x(k)) +
                     sigma_cross_p(k, hb).scaled(fq) -
                     compose(sigma_dot_x(), angular_momentum(k, hb));
        CHECK(lhs == sigma_cross_x(k).scaled(im * hb));
    }
    RadialCombo ker = RadialCombo::of(
        Family::V, {zero, zero, zero, one / fq, -one / fq, one, zero, -one / fq});
    for (int k = 1; k <= 3; ++k) CHECK(assemble(ker, k, hb).is_zero());
}

TEST_CASE("assembled operators are self-adjoint for real radial profiles") {
    std::mt19937 rng(52288);
    for (Family fam : kFamilies) {
        for (int trial = 0; trial < 8; ++trial) {
            RadialCombo c = random_combo(fam, rng);
            DiffOp x = assemble(c, default_component(fam), hb);
            INFO(family_name(fam) << " trial " << trial);
            CHECK(x.adjoint() == x);
        }
    }
}

TEST_CASE("scalar and pseudoscalar assemblies are rotation invariant") {
    std::mt19937 rng(77911);
    for (int trial = 0; trial < 5; ++trial) {
        DiffOp xs = assemble(random_combo(Family::S, rng), 0, hb);
        DiffOp xp = assemble(random_combo(Family::P, rng), 0, hb);
        for (int k = 1; k <= 3; ++k) {
            CHECK(commutator(angular_total(k, hb), xs).is_zero());
            CHECK(commutator(angular_total(k, hb), xp).is_zero());
        }
    }
}

TEST_CASE("vector and axial assemblies transform as vectors under J") {
    std::mt19937 rng(30517);
    for (Family fam : {Family::V, Family::A}) {
        RadialCombo c = random_combo(fam, rng);
        std::array<DiffOp, 4> x{DiffOp(), assemble(c, 1, hb), assemble(c, 2, hb),
                                assemble(c, 3, hb)};
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                DiffOp lhs = commutator(angular_total(a, hb), x[static_cast<size_t>(b)]);
                DiffOp rhs;
                int e = detail::epsilon3(a, b, 6 - a - b);
                if (e != 0)
                    rhs = x[static_cast<size_t>(6 - a - b)].scaled(im * hb * FieldC::from_int(e));
                INFO(family_name(fam) << " [J" << a << ", X" << b << "]");
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("radial systems of the published case analysis") {
    SECTION("pseudoscalar catalog combos solve their systems") {
        RadialCombo c = RadialCombo::of(Family::P, {kb / fr, -ka * fr, ka / fr});
        for (auto& res : radial_ode_residuals(Family::P, c, half / fq)) CHECK(res.is_zero());
        for (int sign : {1, -1}) {
            FieldC alpha = FieldC::from_int(sign);
            FieldC v1 = half / fq * (one + alpha / fs);
            RadialCombo b = RadialCombo::of(Family::P, {zero, -ka * fs / beta, ka / (fs - alpha)});
            for (auto& res : radial_ode_residuals(Family::P, b, v1)) CHECK(res.is_zero());
        }
    }
    SECTION("pseudoscalar compatibility picks out the couplings") {
        RadialCombo c = RadialCombo::of(Family::P, {zero, -fr, one / fr});
        CHECK(radial_ode_residuals(Family::P, c, half / fq)[2].is_zero());
        CHECK(radial_ode_residuals(Family::P, c, one / fq)[2].is_zero());
        CHECK_FALSE(radial_ode_residuals(Family::P, c, mu / fq)[2].is_zero());
        CHECK_FALSE(radial_ode_residuals(Family::P, c, one / (one + fq))[2].is_zero());
    }
    SECTION("axial profile printed with the wrong exponent") {
        FieldC v1 = half / fq;
        RadialCombo wrong =
            RadialCombo::of(Family::A, {ka, ka * half, zero, zero, zero, one / fq, zero});
        RadialCombo right =
            RadialCombo::of(Family::A, {ka, ka * half, zero, zero, zero, one / fr, zero});
        CHECK_FALSE(radial_ode_residuals(Family::A, wrong, v1)[3].is_zero());
        for (auto& res : radial_ode_residuals(Family::A, right, v1)) CHECK(res.is_zero());
    }
    SECTION("tensor compatibility accepts both radical branches") {
        FieldC t = FieldC::var(Var::T);
        RadialCombo probe = RadialCombo::of(
            Family::T, {zero, zero, zero, zero, zero, zero, zero, zero, zero, one});
        for (int sign : {1, -1}) {
            FieldC v1 = half / fq + FieldC::from_int(sign) / t;
            CHECK(radial_ode_residuals(Family::T, probe, v1)[9].is_zero());
        }
        CHECK_FALSE(radial_ode_residuals(Family::T, probe, mu / fq)[9].is_zero());
    }
    SECTION("mismatched combo is rejected") {
        RadialCombo c = RadialCombo::of(Family::P, {zero, zero, zero});
        CHECK_THROWS_AS(radial_ode_residuals(Family::V, c, one / fq), Error);
    }
}

TEST_CASE("theorem 1 catalog commutes exactly") {
    auto cases = theorem1_catalog(hb);
    REQUIRE(cases.size() == 5);
    CHECK(cases[0].id == 1);
    CHECK(cases[3].id == 4);
    CHECK(cases[4].id == 4);

    CHECK(cases[0].V0 == hb * hb / fq);
    CHECK(cases[0].V1 == hb / fq);
    CHECK(cases[1].V0 == mu / fr);
    CHECK(cases[2].integrals.size() == 5);
    CHECK(cases[3].V0 == hb * cases[3].V1);
    CHECK(cases[4].V0 == hb * cases[4].V1);

    for (auto& c : cases) {
        for (auto& [name, ok] : catalog_commutator_checks(c, hb)) {
            INFO("case " << c.id << " integral " << name);
            CHECK(ok);
        }
    }
}

TEST_CASE("case 1 extras sit in the enveloping algebra of J, S, Pi") {
    for (auto& [label, ok] : case1_enveloping_identities(hb)) {
        INFO(label);
        CHECK(ok);
    }
}

TEST_CASE("the printed case 1 axial vector needs its spin term repaired") {
    DiffOp H = build_hamiltonian(one / fq, one / fq, one);
    int k = 2;
    FieldC xk = coord(k);
    DiffOp printed = compose(DiffOp::scalar(xk), sigma_dot_p(one)).scaled(-half) +
                     pauli_sigma(k).scaled(half) -
                     compose(sigma_dot_x(), momentum(k, one)).scaled(half) +
                     compose(sigma_dot_x().scaled(xk / fq), x_dot_p(one)) +
                     sigma_dot_x().scaled(-FieldC::from_int(3) * im * xk * half / fq);
    DiffOp repaired = printed + pauli_sigma(k).scaled(half * (im - one));
    CHECK_FALSE(commutator(H, printed).is_zero());
    CHECK(commutator(H, repaired).is_zero());
    RadialCombo c = RadialCombo::of(Family::A, {zero, zero, zero, -half, zero, -half, one / fq});
    CHECK(assemble(c, k, one) == repaired);
}

TEST_CASE("case closures of the published analysis") {
    auto checks = verify_case_closures();
    REQUIRE(checks.size() == 14);
    for (auto& c : checks) {
        INFO(family_name(c.family) << ": " << c.label << " (" << c.detail << ")");
        CHECK(c.ok);
    }
    int tensors = 0;
    for (auto& c : checks)
        if (c.family == Family::T) ++tensors;
    CHECK(tensors == 3);
}
