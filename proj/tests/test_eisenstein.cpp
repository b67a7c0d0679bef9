#include <doctest.h>

#include <cmath>

#include "kudla/eisenstein.hpp"
#include "kudla/errors.hpp"
#include "kudla/specfun.hpp"

using namespace kudla;

namespace {
// Cohen's H(2, N) from its definition through L(-1, chi) and the twisted
// divisor sum, written out independently of the library.
ExactRational cohen_reference(long N) {
    // N = D0 c^2
    long best_c = 1;
    for (long c = 1; c * c <= N; ++c)
        if (N % (c * c) == 0 && is_fundamental_discriminant(N / (c * c))) best_c = c;
    const long D0 = N / (best_c * best_c);
    ExactRational sum(0);
    for (long a = 1; a <= D0; ++a) {
        const int chi = kronecker_chi(D0, a);
        sum += ExactRational(chi) * (ExactRational(a * a - D0 * a) + ExactRational(D0 * D0, 6));
    }
    const ExactRational Lm1 = -(sum / ExactRational(D0)) / ExactRational(2);
    long xi = 0;
    for (long d = 1; d <= best_c; ++d) {
        if (best_c % d) continue;
        long dd = d, mu = 1;
        for (long p = 2; p <= dd; ++p) {
            if (dd % p) continue;
            dd /= p;
            if (dd % p == 0) mu = 0;
            mu = -mu;
            while (dd % p == 0) dd /= p;
        }
        long s3 = 0;
        for (long e = 1; e <= best_c / d; ++e)
            if ((best_c / d) % e == 0) s3 += e * e * e;
        xi += mu * kronecker_chi(D0, d) * d * s3;
    }
    return Lm1 * ExactRational(xi);
}
}  // namespace

TEST_CASE("Cohen numbers") {
    CHECK(cohen_H(case_from_m4(4)).value == ExactRational(-7, 12));
    CHECK(cohen_H(case_from_m4(1)).value == ExactRational(-1, 12));
    CHECK(cohen_H(case_from_m4(5)).value == ExactRational(-2, 5));
    CHECK(cohen_H(case_from_m4(8)).value == ExactRational(-1));
    CHECK(cohen_H(case_from_m4(9)).value == ExactRational(-25, 12));
    CHECK(cohen_H(case_from_m4(20)).value == ExactRational(-22, 5));
    CHECK(cohen_H(case_from_m4(4)).m4 == 4);
    CHECK(cohen_H0() == ExactRational(1, 120));
    CHECK(kKudlaConstantTerm == 1);
    CHECK_THROWS_AS(cohen_H(case_from_m4(-4)), DomainError);
    for (long N = 1; N <= 300; ++N) {
        if (N % 4 == 2 || N % 4 == 3) continue;
        CHECK(cohen_H(case_from_m4(N)).value == cohen_reference(N));
    }
}

TEST_CASE("C(gamma, m, 0)") {
    CHECK(coefficient_C(case_from_m4(4)) == doctest::Approx(-140.0).epsilon(1e-13));
    CHECK(coefficient_C_exact(case_from_m4(4)) == ExactRational(-140));
    const double c5 = coefficient_C(case_from_m4(20));
    CHECK(c5 == doctest::Approx(-960.0 / (kPi * kPi) * std::pow(5.0, 1.5) * L_chi_2(5) * (11.0 / 8.0)).epsilon(1e-12));
    CHECK(coefficient_C(case_from_m4(-4)) < 0.0);
    CHECK_THROWS_AS(coefficient_C_exact(case_from_m4(-4)), DomainError);
}

TEST_CASE("|C| = 2 |A| and the exact form") {
    for (long m4 = 1; m4 <= 204; ++m4) {
        if (m4 % 4 == 2 || m4 % 4 == 3) continue;
        const CaseIndex c = case_from_m4(m4);
        const double C = coefficient_C(c);
        CHECK(std::fabs(C) == doctest::Approx(2.0 * std::fabs(kudla_A(c).to_double())).epsilon(1e-9));
        CHECK(C == doctest::Approx(coefficient_C_exact(c).to_double()).epsilon(1e-12));
        // Functional-equation form of H(2, 4m).
        const double h2 = -1.0 / (2.0 * kPi * kPi) * L_chi_2_series(c.D0).value * std::pow(c.D0, 1.5) *
                          static_cast<double>(xi_twisted(c.D0, c.humbert_conductor()));
        CHECK(cohen_H(c).value.to_double() == doctest::Approx(h2).epsilon(1e-9));
    }
    CHECK(kudla_A(case_from_m4(4)) == ExactRational(-70));
    CHECK(kudla_A(case_from_m4(5)) == ExactRational(120) * ExactRational(-2, 5));
}

TEST_CASE("c0 and its derivative") {
    const CaseIndex one = case_from_m4(4);
    const double v = 1.0 / (4.0 * kPi);
    CHECK(coefficient_c0(one, v) == doctest::Approx(-140.0 * std::exp(-0.5)).epsilon(1e-12));
    CHECK(coefficient_c0(case_from_m4(-4), v) == 0.0);
    CHECK(std::fabs(coefficient_c0(one, 50.0)) < 1e-100);
    CHECK(coefficient_c0_prime(one, v, 0.0) ==
          doctest::Approx(-140.0 * std::exp(-0.5) * J_plus(1.5, 1.0).value).epsilon(1e-12));
    const CaseIndex neg = case_from_m4(-4);
    CHECK(coefficient_c0_prime(neg, v, 0.0) == coefficient_c0_prime(neg, v, 7.0));
    CHECK(std::fabs(coefficient_c0_prime(one, 20.0, 0.0)) < 1e-50);
    for (double vv : {0.01, 0.1, 1.0}) CHECK(coefficient_c0(case_from_m4(20), vv) < 0.0);
    const EisensteinValue ev = eisenstein_value(one, v, 0.5);
    CHECK(ev.a == doctest::Approx(1.0));
    CHECK(ev.kappa.value() == 0.5);
    CHECK(eisenstein_value(neg, v).c0 == 0.0);
    CHECK(eisenstein_value(neg, v).a < 0.0);
    CHECK_THROWS_AS(coefficient_c0(one, -1.0), DomainError);
}
