#include <doctest.h>

#include <cmath>

#include "kudla/errors.hpp"
#include "kudla/quadrature.hpp"
#include "kudla/specfun.hpp"
#include "oracles.hpp"

using namespace kudla;

namespace {
// Asymptotic expansion J_+(s, a) ~ sum_{k>=1} binom(s, k) (k-1)! / a^k,
// truncated at its smallest term.
double j_plus_asymptotic(double s, double a) {
    double sum = 0.0, binom = 1.0, fact = 1.0, prev = INFINITY;
    for (int k = 1; k < 60; ++k) {
        binom *= (s - (k - 1)) / k;
        if (k > 1) fact *= (k - 1);
        const double term = binom * fact / std::pow(a, k);
        if (std::fabs(term) > prev) break;
        prev = std::fabs(term);
        sum += term;
    }
    return sum;
}
}  // namespace

TEST_CASE("integrate_adaptive on smooth integrands") {
    Precision p;
    p.abs_tol = 1e-14;
    CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, kPi, p).value == doctest::Approx(2.0));
    CHECK(integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, p).value ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    Precision tiny;
    tiny.max_subdivisions = 2;
    tiny.abs_tol = 1e-15;
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, tiny), ToleranceError);
    CHECK(exp_power_tail_bound(1.0, 10.0, 0.0) == doctest::Approx(std::exp(-10.0)));
}

TEST_CASE("beta_s examples") {
    CHECK(beta_s(0.0, 1.0).value == doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
    CHECK(beta_s(1.0, 1.0).value == doctest::Approx(0.2193839343955203).epsilon(1e-12));
    for (double x : {1e-6, 1e-9, 1e-12}) CHECK(beta_s(1.0, x).value + std::log(x) == doctest::Approx(-oracle::kGammaE).epsilon(1e-5));
    CHECK_THROWS_AS(beta_s(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(beta_s(-1.0, 1.0), DomainError);
}

TEST_CASE("beta_1 matches the E_1 series on (0, 5]") {
    for (double x = 0.01; x <= 5.0; x += 0.0713) {
        const QuadratureResult r = beta_s(1.0, x);
        CHECK(std::fabs(r.value - oracle::e1_series(x)) < 1e-10);
        CHECK(r.err_estimate <= 1e-12);
    }
}

TEST_CASE("beta_s closed forms for integer s") {
    // beta_2(x) = e^{-x} - x E_1(x)
    for (double x : {0.1, 1.0, 3.0}) {
        CHECK(beta_s(2.0, x).value == doctest::Approx(std::exp(-x) - x * oracle::e1_series(x)).epsilon(1e-11));
        CHECK(beta_s(0.0, x).value == doctest::Approx(std::exp(-x) / x).epsilon(1e-12));
    }
    CHECK(beta_s(1.0, 200.0).value > 0.0);
    CHECK(beta_s(1.0, 200.0).value == doctest::Approx(std::exp(-200.0) / 200.0).epsilon(1e-2));
}

TEST_CASE("J_plus") {
    CHECK(J_plus(1.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-13));
    for (double a : {0.5, 2.0, 7.0}) CHECK(J_plus(1.0, a).value == doctest::Approx(1.0 / a).epsilon(1e-12));
    CHECK(J_plus(1.5, 1.0).value == doctest::Approx(1.8058440478763658).epsilon(1e-12));
    const double j10 = J_plus(1.5, 10.0).value;
    CHECK(j10 == doctest::Approx(0.15363685247438275).epsilon(1e-12));
    CHECK(std::fabs(j10 - j_plus_asymptotic(1.5, 10.0)) < 1e-6);
    CHECK(J_plus(1.5, 40.0).value == doctest::Approx(j_plus_asymptotic(1.5, 40.0)).epsilon(1e-12));
    CHECK(J_plus(1.5, 1.0).value > J_plus(1.5, 2.0).value);
    CHECK(J_plus(1.5, 1e4).value < 2e-4);
    // s = 2: ((w+1)^2 - 1)/w = w + 2
    CHECK(J_plus(2.0, 3.0).value == doctest::Approx(1.0 / 9.0 + 2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("J_minus") {
    const double e1 = oracle::e1_series(1.0);
    CHECK(J_minus(1.0, 1.0).value == doctest::Approx(1.0 - std::exp(1.0) * e1).epsilon(1e-12));
    CHECK(J_minus(1.0, 1.0).value == doctest::Approx(0.4036526376768059).epsilon(1e-12));
    for (double a : {0.5, 1.0, 2.0, 5.0}) {
        const double j = J_minus(1.5, a).value;
        CHECK(j > 0.0);
        CHECK(j < std::tgamma(2.5) / std::pow(a, 2.5));
    }
    const double a = 1e3;
    const double scaled = std::pow(a, 2.5) * J_minus(1.5, a).value;
    CHECK(scaled == doctest::Approx(std::tgamma(2.5)).epsilon(3e-3));
    // Watson's lemma with the next term: 1/(w+1) = 1 - w + ...
    CHECK(scaled == doctest::Approx(std::tgamma(2.5) - std::tgamma(3.5) / a).epsilon(1e-5));
}

TEST_CASE("monotone in the second argument") {
    double pb = INFINITY, pp = INFINITY, pm = INFINITY;
    for (double a = 0.1; a < 20.0; a *= 1.7) {
        const double b = beta_s(1.0, a).value, jp = J_plus(1.5, a).value, jm = J_minus(1.5, a).value;
        CHECK(b < pb);
        CHECK(jp < pp);
        CHECK(jm < pm);
        pb = b;
        pp = jp;
        pm = jm;
    }
}

TEST_CASE("I3_plus reduces to J_plus / 3") {
    for (double a : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const QuadratureResult r = I3_plus(a / (4.0 * kPi), 1.0);
        CHECK(std::fabs(r.value - J_plus(1.5, a).value / 3.0) <= 2e-12);
        // Depends on (v, m) only through a.
        CHECK(I3_plus(a / (8.0 * kPi), 2.0).value == doctest::Approx(r.value).epsilon(1e-12));
    }
        // Only algebraic decay: J_+(3/2, a) ~ 3/(2a).
    const double a_big = 4.0 * kPi * 100.0;
    CHECK(I3_plus(100.0, 1.0).value == doctest::Approx(0.5 / a_big).epsilon(2e-3));
    CHECK_THROWS_AS(I3_plus(1.0, -1.0), DomainError);
}

TEST_CASE("I3_minus prefactor is e^{-|a|}") {
    const PrefactorResolution res = resolve_I3_minus_prefactor({0.1, 0.5, 1.0, 2.0, 5.0, 10.0});
    CHECK(res.exponent_sign == -1);
    CHECK(res.max_rel_dev_chosen < 1e-11);
    CHECK(res.max_rel_dev_rejected > 0.1);
    for (double a : {0.1, 1.0, 5.0}) {
        const double direct = I3_minus(a / (4.0 * kPi), -1.0).value;
        CHECK(direct > 0.0);
        CHECK(direct == doctest::Approx(I3_minus_gamma_form(a)).epsilon(1e-11));
    }
    CHECK(I3_minus(100.0, -1.0).value < 1e-100);
    CHECK_THROWS_AS(I3_minus(1.0, 1.0), DomainError);
}

TEST_CASE("quadrature is bit-for-bit reproducible") {
    const QuadratureResult a = I3_plus(0.3, 1.0), b = I3_plus(0.3, 1.0);
    CHECK(a.value == b.value);
    CHECK(a.err_estimate == b.err_estimate);
    CHECK(a.evaluations == b.evaluations);
    CHECK(J_minus(1.5, 0.7).value == J_minus(1.5, 0.7).value);
}
