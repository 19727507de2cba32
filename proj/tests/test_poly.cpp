#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sointegra/poly.hpp"

using namespace sointegra;

using PC = Poly<CartesianCtx>;
using PR = Poly<RadialCtx>;

namespace {
PC X = PC::variable(Var::X);
PC Y = PC::variable(Var::Y);
PC Z = PC::variable(Var::Z);
PC R = PC::variable(Var::R);
PC S = PC::variable(Var::S);
PC T = PC::variable(Var::T);
PC B = PC::variable(Var::Beta);
PC C = PC::variable(Var::Cst);
PC Q = X * X + Y * Y + Z * Z;
} // namespace

TEST_CASE("radical squares collapse eagerly") {
    CHECK(R * R == Q);
    CHECK(S * S == PC::one() + B * Q);
    CHECK(T * T == PC::constant(4) * Q * Q + C);
    CHECK(R.pow(3) == Q * R);
    CHECK(R.pow(4) == Q * Q);
    CHECK((R + X) * (R - X) == Y * Y + Z * Z);
    CHECK((S - PC::one()) * (S + PC::one()) == B * Q);
    CHECK(!(R * S).has_var(Var::T));

    PR r = PR::variable(Var::R);
    PR s = PR::variable(Var::S);
    PR t = PR::variable(Var::T);
    PR b = PR::variable(Var::Beta);
    PR c = PR::variable(Var::Cst);
    CHECK(r * r == r.pow(2));                       // r is a plain variable radially
    CHECK(s * s == PR::one() + b * r * r);
    CHECK(t * t == PR::constant(4) * r.pow(4) + c);
}

TEST_CASE("lex order and leading data") {
    PC p = Y * Y + X + PC::constant(5);
    CHECK(p.lead_mono() == mono_of(Var::X));
    CHECK(p.lead_coeff() == GaussRat(1));
    CHECK(p.degree(Var::Y) == 2);
    CHECK(p.total_degree() == 2);
}

TEST_CASE("ring arithmetic") {
    CHECK((X + Y).pow(2) == X * X + PC::constant(2) * X * Y + Y * Y);
    CHECK((X - X).is_zero());
    CHECK(PC::one().is_constant());
    PC p = (X + Y + Z).pow(3);
    CHECK(p.degree(Var::X) == 3);
    CHECK(p.size() == 10);

    PC g = X.scaled(GaussRat::i()) + Y;
    CHECK(!g.is_real());
    CHECK(g.conj() == X.scaled(-GaussRat::i()) + Y);
    CHECK(g.real_part() == Y);
    CHECK(g.imag_part() == X);
}

TEST_CASE("evaluation and substitution") {
    PC p = X * X + B * Y;
    auto val = p.eval([](Var v) {
        switch (v) {
            case Var::X: return GaussRat(3);
            case Var::Y: return GaussRat(2);
            case Var::Beta: return GaussRat(BigRational(1, 2));
            default: return GaussRat(0);
        }
    });
    CHECK(val == GaussRat(10));
    CHECK(p.substitute(Var::Beta, GaussRat(7)) == X * X + PC::constant(7) * Y);
}

TEST_CASE("rational content") {
    PC p = X.scaled(BigRational(2, 3)) + Y.scaled(BigRational(4, 9));
    CHECK(p.content_rational() == BigRational(2, 9));
    CHECK((-X).content_rational() == BigRational(1));
    CHECK(PC::zero().content_rational() == BigRational(1));
}

TEST_CASE("exact division") {
    auto q1 = (X * X - Y * Y).divided_by(X - Y);
    REQUIRE(q1.has_value());
    CHECK(*q1 == X + Y);
    CHECK(!(X * X + Y).divided_by(X - Y).has_value());

    // radical-bearing dividend over a plain divisor, componentwise
    PC p = Q * S + Q * X * R;
    auto q2 = p.divided_by(Q);
    REQUIRE(q2.has_value());
    CHECK(*q2 == S + X * R);
    CHECK(!(S + X * R).divided_by(X).has_value());
}

TEST_CASE("polynomial gcd") {
    CHECK(detail::plain_gcd(X * X - Y * Y, (X + Y) * (X + Y)) == X + Y);
    CHECK(detail::plain_gcd(B * X, B * Y) == B);
    CHECK(detail::plain_gcd(X, Y).is_constant());
    CHECK(detail::plain_gcd(PC::zero(), X * Y) == X * Y);
    PC f = (X + Y + PC::one()).pow(2) * (Z - Y);
    PC g = (X + Y + PC::one()) * (Z + Y);
    CHECK(detail::plain_gcd(f, g) == X + Y + PC::one());

    PC n = (S + X) * (X + Y);
    CHECK(fraction_gcd(n * Q, Q * (X - Y)) == Q);
}

TEST_CASE("randomized gcd and division invariants") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> pick(0, 4);
    auto rnd_plain = [&]() {
        const Var pool[5] = {Var::X, Var::Y, Var::Z, Var::Beta, Var::Hbar};
        PC p;
        for (int t = 0; t < 3; ++t) {
            Mono m = kUnitMono;
            m[static_cast<int>(pool[pick(rng)])] += 1;
            m[static_cast<int>(pool[pick(rng)])] += 1;
            p += PC::term(m, GaussRat(coef(rng)));
        }
        return p;
    };
    for (int k = 0; k < 500; ++k) {
        PC a = rnd_plain(), b = rnd_plain(), m = rnd_plain();
        if (m.is_zero()) continue;
        PC am = a * m, bm = b * m;
        PC g = detail::plain_gcd(am, bm);
        if (am.is_zero() && bm.is_zero()) continue;
        // gcd divides both arguments and is divisible by the common factor
        if (!am.is_zero()) CHECK(am.divided_by(g).has_value());
        if (!bm.is_zero()) CHECK(bm.divided_by(g).has_value());
        CHECK(g.divided_by(m).has_value()); // the common factor divides the gcd
        if (!a.is_zero()) {
            auto q = am.divided_by(m);
            REQUIRE(q.has_value());
            CHECK(*q == a);
        }
    }
}
