#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "sointegra/gauge.hpp"

using namespace sointegra;

namespace {
FieldC fx = FieldC::var(Var::X);
FieldC fy = FieldC::var(Var::Y);
FieldC fz = FieldC::var(Var::Z);
FieldC fr = FieldC::var(Var::R);
FieldC hb = FieldC::var(Var::Hbar);
FieldC fq = fx * fx + fy * fy + fz * fz;
FieldC one = FieldC::one();
FieldC im = FieldC::i();
FieldC half = FieldC::from_rational(BigRational(1, 2));

GaussRat gr(long re_n, long re_d, long im_n, long im_d) {
    return GaussRat(BigRational(re_n, re_d), BigRational(im_n, im_d));
}
} // namespace

TEST_CASE("gauge matrix construction") {
    GaugeMatrix u = build_U();
    CHECK(u.entry(0, 0) == -(fx + im * fy) / fr);
    CHECK(u.entry(0, 1) == fz / fr);
    CHECK(u.entry(1, 0) == -fz / fr);
    CHECK(u.entry(1, 1) == -(fx - im * fy) / fr);

    auto at122 = u.eval(cartesian_point(1, 2, 2));
    CHECK(at122[0][0] == gr(-1, 3, -2, 3));
    CHECK(at122[0][1] == gr(2, 3, 0, 1));
    CHECK(at122[1][0] == gr(-2, 3, 0, 1));
    CHECK(at122[1][1] == gr(-1, 3, 2, 3));

    // on the z axis the azimuth is undefined but the entries extend
    auto pole = u.eval(cartesian_point(0, 0, 1));
    CHECK(pole[0][0] == gr(0, 1, 0, 1));
    CHECK(pole[0][1] == gr(1, 1, 0, 1));
    CHECK(GaugeMatrix::removable_singularity() == "x = y = 0");

    for (bool c1p : {true, false})
        for (bool c3p : {true, false})
            for (int k : {0, 1, 2, 3}) {
                GaugeMatrix b = build_U({BigRational(k, 2), c1p, c3p});
                CHECK(b.is_unitary());
                CHECK(b.det() == one);
            }

    CHECK_THROWS_AS(build_U({BigRational(1, 3), true, true}), Error);

    // the c1 and c3 sign choices only change the overall sign
    CHECK(build_U({0, false, true}).entry(0, 0) == u.entry(0, 0));
    CHECK(build_U({0, true, false}).entry(0, 0) == -u.entry(0, 0));
}

TEST_CASE("conjugation induces the spin-orbit potential") {
    GaugeMatrix u = build_U();
    FieldC v0g = hb * hb / fq;
    FieldC v1g = hb / fq;

    DiffOp free_h = laplacian().scaled(-half * hb * hb);
    CHECK(conjugate(free_h, u) == build_hamiltonian(v0g, v1g));

    FieldC v0 = FieldC::var(Var::Mu) / fr;
    CHECK(conjugate(free_h + DiffOp::scalar(v0), u) == build_hamiltonian(v0 + v0g, v1g));

    CHECK(conjugate(DiffOp::identity(), u) == DiffOp::identity());

    // every branch induces the same transformed Hamiltonian
    for (bool c3p : {true, false})
        for (int k : {0, 1, 2}) {
            GaugeMatrix b = build_U({BigRational(k, 2), true, c3p});
            CHECK(conjugate(free_h, b) == build_hamiltonian(v0g, v1g));
        }
}

TEST_CASE("generator relation") {
    CHECK(verify_generator_relation(build_U()));
    CHECK(verify_generator_relation(build_U({0, true, false})));
    CHECK(verify_generator_relation(build_U({0, false, true})));
    CHECK(verify_generator_relation(build_U({BigRational(1, 2), true, true})));

    CHECK(verify_generator_relation(GaugeMatrix::identity(), FieldC::zero()));
    CHECK(!verify_generator_relation(GaugeMatrix::identity(), default_gamma()));
    CHECK(!verify_generator_relation(build_U(), -FieldC::from_int(2) * hb / fq));
    CHECK(!verify_generator_relation(build_U(), FieldC::zero()));
}

TEST_CASE("gauge transforms of the scalar integrals") {
    GaugeMatrix u = build_U();
    DiffOp S[3] = {spin_radial(1), spin_radial(2), spin_radial(3)};
    DiffOp J[3] = {angular_total(1), angular_total(2), angular_total(3)};
    DiffOp Pi[3] = {momentum_dressed(1), momentum_dressed(2), momentum_dressed(3)};

    DiffOp Sp[3], Jp[3], Pp[3];
    for (int i = 0; i < 3; ++i) {
        DiffOp halfsig = pauli_sigma(i + 1).scaled(hb * half);
        Sp[i] = conjugate(halfsig, u);
        Jp[i] = conjugate(angular_momentum(i + 1) + halfsig, u);
        Pp[i] = conjugate(momentum(i + 1), u);
    }

    // each transform is an integer combination of the published generators;
    // recover the coefficient matrix by exhaustion
    int R[3][3] = {};
    for (int i = 0; i < 3; ++i) {
        bool found = false;
        for (int c1 = -1; c1 <= 1 && !found; ++c1)
            for (int c2 = -1; c2 <= 1 && !found; ++c2)
                for (int c3 = -1; c3 <= 1 && !found; ++c3) {
                    DiffOp cand = S[0].scaled(FieldC::from_int(c1)) +
                                  S[1].scaled(FieldC::from_int(c2)) +
                                  S[2].scaled(FieldC::from_int(c3));
                    if (cand == Sp[i]) {
                        R[i][0] = c1;
                        R[i][1] = c2;
                        R[i][2] = c3;
                        found = true;
                    }
                }
        REQUIRE(found);
    }

    // the orbital and momentum parts map cleanly: L_i -> J_i - S_i, p_i -> Pi_i
    for (int i = 0; i < 3; ++i) {
        CHECK(conjugate(angular_momentum(i + 1), u) == J[i] - S[i]);
        CHECK(Pp[i] == Pi[i]);
        DiffOp jc = J[i] - S[i];
        for (int j = 0; j < 3; ++j) jc += S[j].scaled(FieldC::from_int(R[i][j]));
        CHECK(Jp[i] == jc);
    }

    // the spin twist is a rotation
    int det = R[0][0] * (R[1][1] * R[2][2] - R[1][2] * R[2][1]) -
              R[0][1] * (R[1][0] * R[2][2] - R[1][2] * R[2][0]) +
              R[0][2] * (R[1][0] * R[2][1] - R[1][1] * R[2][0]);
    CHECK(det == 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int dot = 0;
            for (int k = 0; k < 3; ++k) dot += R[i][k] * R[j][k];
            CHECK(dot == (i == j ? 1 : 0));
        }

    // the transform of L3 + (hbar/2) s3 stays inside span{J3, S3}
    CHECK(Jp[2] == J[2] - S[2].scaled(FieldC::from_int(2)));

    // the transformed set closes into the same bracket pattern
    FieldC ih = im * hb;
    for (int k = 0; k < 3; ++k) {
        int a = (k + 1) % 3, b = (k + 2) % 3;
        CHECK(commutator(Sp[a], Sp[b]) == Sp[k].scaled(ih));
        CHECK(commutator(Jp[a], Jp[b]) == Jp[k].scaled(ih));
        CHECK(commutator(Jp[a], Sp[b]) == Sp[k].scaled(ih));
    }
}

TEST_CASE("commutation algebra tables") {
    AlgebraTable six = verify_algebra(AlgebraFamily::six_dim);
    CHECK(six.all_ok);
    CHECK(six.first_mismatch.empty());
    CHECK(six.entries.size() == 36);

    AlgebraTable nine = verify_algebra(AlgebraFamily::nine_dim);
    CHECK(nine.all_ok);
    CHECK(nine.entries.size() == 81);

    int zero_count = 0;
    for (const auto& e : nine.entries)
        if (e.expected == "0") ++zero_count;
    // P-P, K-S, S-K, P-S, S-P blocks plus the diagonal of the rest
    CHECK(zero_count == 5 * 9 + 4 * 3);
}

TEST_CASE("nine generators commute with the transformed hamiltonian") {
    DiffOp h = build_hamiltonian(hb * hb / fq, hb / fq);
    for (int k = 1; k <= 3; ++k) {
        CHECK(commutator(h, angular_total(k)).is_zero());
        CHECK(commutator(h, spin_radial(k)).is_zero());
        CHECK(commutator(h, momentum_dressed(k)).is_zero());
        CHECK(commutator(h, angular_total(k) - spin_radial(k)).is_zero());
    }
}

namespace {

FieldC random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> pick(0, 4);
    static const Var pool[4] = {Var::X, Var::Y, Var::Z, Var::Hbar};
    FieldC e = FieldC::from_int(coef(rng));
    if (pick(rng) < 4) e = e + FieldC::from_int(coef(rng)) * FieldC::var(pool[pick(rng) % 4]);
    if (pick(rng) == 0) e = e * im;
    return e;
}

DiffOp random_op(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> slot(0, 3);
    DIdx idx{};
    idx[static_cast<size_t>(slot(rng) % 3)] = slot(rng) < 2 ? 1 : 0;
    PauliCoeff p;
    p.c[static_cast<size_t>(slot(rng))] = random_coeff(rng);
    DiffOp d;
    d.add_term(idx, p);
    return d;
}

} // namespace

TEST_CASE("conjugation is an algebra automorphism") {
    std::mt19937_64 rng(31337u);
    GaugeMatrix u = build_U();
    for (int iter = 0; iter < 500; ++iter) {
        DiffOp a = random_op(rng);
        DiffOp b = random_op(rng);
        CHECK(conjugate(commutator(a, b), u) ==
              commutator(conjugate(a, u), conjugate(b, u)));
        CHECK(conjugate(a.adjoint(), u) == conjugate(a, u).adjoint());
    }
}

TEST_CASE("beta equations hold in floating point") {
    std::mt19937_64 rng(5150u);
    std::uniform_real_distribution<double> th(0.2, M_PI - 0.2);
    std::uniform_real_distribution<double> ph(0.0, 2 * M_PI);
    std::uniform_real_distribution<double> rad(0.5, 2.0);

    for (bool c3_plus : {true, false}) {
        double c2 = 0.0, c1 = c2 + M_PI, c3 = c3_plus ? M_PI / 2 : -M_PI / 2;
        for (int iter = 0; iter < 20; ++iter) {
            double theta = th(rng), phi = ph(rng), r = rad(rng);
            double x = r * std::sin(theta) * std::cos(phi);
            double y = r * std::sin(theta) * std::sin(phi);
            double z = r * std::cos(theta);
            double rho2 = x * x + y * y, rho = std::sqrt(rho2), r2 = r * r;

            double phx = -y / rho2, phy = x / rho2, phz = 0.0;
            double thx = x * z / (r2 * rho), thy = y * z / (r2 * rho), thz = -rho / r2;
            double b1x = phx, b1y = phy, b1z = phz;
            double b2x = 0, b2y = 0, b2z = 0;
            double b3x = -thx, b3y = -thy, b3z = -thz;

            double b3 = -theta + c3;
            double cc = std::cos(b3) * std::cos(b3), ss = std::sin(b3) * std::sin(b3);
            double s2b = std::sin(2 * b3);
            double cd = std::cos(c2 - (phi + c1)), sd = std::sin(c2 - (phi + c1));
            double spx = b1x + b2x, spy = b1y + b2y, spz = b1z + b2z;
            double G = -1.0 / r2;

            // the x-component equation balances against y*Gamma
            double e[9] = {
                cc * b1z - ss * b2z,
                cc * b1x - ss * b2x - y * G,
                (cc * b1y - ss * b2y) + x * G,
                (cd * b3x - 0.5 * sd * s2b * spx) + z * G,
                (cd * b3z - 0.5 * sd * s2b * spz) - x * G,
                (sd * b3y + 0.5 * cd * s2b * spy) - z * G,
                (sd * b3z + 0.5 * cd * s2b * spz) + y * G,
                cd * b3y - 0.5 * sd * s2b * spy,
                sd * b3x + 0.5 * cd * s2b * spx,
            };
            for (int k = 0; k < 9; ++k) {
                INFO("equation " << k + 1 << " at theta=" << theta << " phi=" << phi);
                CHECK(std::abs(e[k]) < 1e-12);
            }
        }
    }
}
