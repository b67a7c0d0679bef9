#include <doctest.h>

#include <cmath>

#include "kudla/errors.hpp"
#include "kudla/siegel.hpp"
#include "oracles.hpp"

using namespace kudla;

namespace {
const Complex I(0.0, 1.0);

double q_of(const std::array<double, 5>& x) { return x[2] * x[2] - x[0] * x[4] - x[1] * x[3]; }
double pair_of(const std::array<double, 5>& x, const std::array<double, 5>& y) {
    return 2.0 * x[2] * y[2] - x[0] * y[4] - x[4] * y[0] - x[1] * y[3] - x[3] * y[1];
}
}  // namespace

TEST_CASE("SiegelPoint validation") {
    const SiegelPoint z(I, 0.0, I);
    CHECK(z.eta2() == 1.0);
    CHECK_THROWS_AS(SiegelPoint(I, 2.0 * I, I), OutsideHalfSpaceError);
    CHECK_THROWS_AS(SiegelPoint(-1.0 * I, 0.0, -1.0 * I), OutsideHalfSpaceError);
    CHECK_THROWS_AS(SiegelPoint(I, I, I), DomainError);
}

TEST_CASE("embed_u spans a negative 2-plane") {
    const auto u = embed_u(SiegelPoint(I, 0.0, I));
    CHECK(u[0] == Complex(1.0, 0.0));
    CHECK(u[1] == -I);
    CHECK(u[3] == -I);
    CHECK(u[4] == Complex(1.0, 0.0));
    oracle::Draw d(7);
    for (int k = 0; k < 200; ++k) {
        const SiegelPoint z = oracle::random_point(d);
        const auto w = embed_u(z);
        std::array<double, 5> re{}, im{};
        for (int i = 0; i < 5; ++i) {
            re[i] = w[i].real();
            im[i] = w[i].imag();
        }
        CHECK(w[4] == Complex(1.0, 0.0));
        CHECK(q_of(re) < 0.0);
        CHECK(q_of(im) < 0.0);
        CHECK(std::fabs(pair_of(re, im)) < 1e-12);
        const Complex qu = w[2] * w[2] - w[0] * w[4] - w[1] * w[3];
        CHECK(std::abs(qu) < 1e-12);
    }
}

TEST_CASE("psi and R examples") {
    const SiegelPoint z(I, 0.0, I);
    CHECK(psi(z, std::array<double, 5>{1, 0, 0, 0, 0}) == Complex(1.0, 0.0));
    CHECK(std::abs(psi(z, std::array<double, 5>{0, 0, 0, 0, 1}) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(majorant_R(z, std::array<double, 5>{1, 0, 0, 0, 0}) == doctest::Approx(0.5));
    CHECK(majorant_R(z, std::array<double, 5>{1, 0, 0, 0, -1}) == 0.0);
    // z2^2 - z1 z3 = -m  is the Humbert surface of (m, 0, 0, 0, 1).
    const SiegelPoint on(2.0 * I, 0.0, 1.5 * I);
    CHECK(majorant_R(on, std::array<double, 5>{-3, 0, 0, 0, 1}) < 1e-28);
    oracle::Draw d(11);
    for (int k = 0; k < 100; ++k) {
        const SiegelPoint zz = oracle::random_point(d);
        std::array<double, 5> x{}, mx{}, y{}, comb{};
        for (int i = 0; i < 5; ++i) {
            x[i] = static_cast<double>(d.integer(-6, 6));
            y[i] = static_cast<double>(d.integer(-6, 6));
            mx[i] = -x[i];
            comb[i] = 3.0 * x[i] - 2.0 * y[i];
        }
        CHECK(majorant_R(zz, x) == majorant_R(zz, mx));
        CHECK(std::abs(psi(zz, comb) - (3.0 * psi(zz, x) - 2.0 * psi(zz, y))) < 1e-11);
    }
}

TEST_CASE("majorant Gram matrix") {
    const Matrix5 P = majorant_gram(SiegelPoint(I, 0.0, I));
    Matrix5 expected = Matrix5::Zero();
    expected.diagonal() << 1.0, 1.0, 2.0, 1.0, 1.0;
    CHECK((P - expected).cwiseAbs().maxCoeff() < 1e-15);
    oracle::Draw d(3);
    for (int k = 0; k < 100; ++k) {
        const SiegelPoint z = oracle::random_point(d);
        const Matrix5 Pz = majorant_gram(z);
        CHECK((Pz - Pz.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(Eigen::SelfAdjointEigenSolver<Matrix5>(Pz).eigenvalues().minCoeff() > 0.0);
        CHECK(siegel_condition_residual(z) <= 1e-10);
        std::array<double, 5> x{};
        Vector5 xv;
        for (int i = 0; i < 5; ++i) xv(i) = x[i] = static_cast<double>(d.integer(-5, 5));
        const double xx = 2.0 * q_of(x);
        const double R = majorant_R(z, x);
        CHECK(xv.dot(Pz * xv) == doctest::Approx(xx + 2.0 * R).epsilon(1e-10).scale(1.0));
        CHECK(xx + 2.0 * R >= std::fabs(xx) - 1e-9);
    }
}

TEST_CASE("Humbert discriminant") {
    const AmbientVector x{{ExactRational(1), ExactRational(0), ExactRational(0), ExactRational(0), ExactRational(-1)}};
    CHECK(humbert_discriminant(x) == ExactRational(4));
    const AmbientVector a{{ExactRational(1), ExactRational(0), ExactRational(0), ExactRational(0), ExactRational(-7)}};
    CHECK(humbert_discriminant(a) == ExactRational(28));
    oracle::Draw d(5);
    for (int k = 0; k < 200; ++k) {
        AmbientVector r;
        for (auto& c : r.x) c = ExactRational(d.integer(-20, 20), d.integer(1, 9));
        CHECK(humbert_discriminant(r) == ExactRational(4) * r.q());
        CHECK(pairing(r, r) == ExactRational(2) * r.q());
    }
}
