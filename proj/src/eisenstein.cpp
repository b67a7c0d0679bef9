#include "kudla/eisenstein.hpp"

#include <cmath>

#include "kudla/errors.hpp"
#include "kudla/specfun.hpp"

namespace kudla {
namespace {

void require_positive_index(const CaseIndex& c, const char* who) {
    if (c.m4 <= 0) throw DomainError(std::string(who) + ": m must be positive");
}

void require_v(double v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("v must be positive and finite");
}

}  // namespace

CohenNumber cohen_H(const CaseIndex& c) {
    require_positive_index(c, "cohen_H");
    const ExactRational h = bernoulli_L_minus1(c.D0) * ExactRational(xi_twisted(c.D0, c.humbert_conductor()));
    return {h, c.m4};
}

ExactRational cohen_H0() { return ExactRational(1, 120); }

double coefficient_C(const CaseIndex& c, const Precision& prec) {
    if (c.m4 == 0) throw DomainError("coefficient_C: m = 0");
    const double L2 = L_chi_2_series(c.D0, prec).value;
    const double abs_m = std::fabs(c.m_double());
    return -960.0 / (kPi * kPi) * std::pow(abs_m, 1.5) * L2 * sigma_gamma_m(c).to_double();
}

ExactRational coefficient_C_exact(const CaseIndex& c) {
    require_positive_index(c, "coefficient_C_exact");
    return ExactRational(240) * cohen_H(c).value;
}

double coefficient_c0(const CaseIndex& c, double v, const Precision& prec) {
    require_v(v);
    if (c.m4 < 0) return 0.0;
    const double a = 4.0 * kPi * c.m_double() * v;
    return coefficient_C(c, prec) * std::exp(-a / 2.0);
}

double coefficient_c0_prime(const CaseIndex& c, double v, double kappa, const Precision& prec) {
    require_v(v);
    const double C = coefficient_C(c, prec);
    const double abs_a = 4.0 * kPi * std::fabs(c.m_double()) * v;
    if (c.m4 > 0) return C * std::exp(-abs_a / 2.0) * (J_plus(1.5, abs_a, prec).value + kappa);
    return C * std::exp(-abs_a / 2.0) * J_minus(1.5, abs_a, prec).value;
}

ExactRational kudla_A(const CaseIndex& c) {
    require_positive_index(c, "kudla_A");
    return ExactRational(120) * cohen_H(c).value;
}

EisensteinValue eisenstein_value(const CaseIndex& c, double v, std::optional<double> kappa, const Precision& prec) {
    require_v(v);
    EisensteinValue out;
    out.C = coefficient_C(c, prec);
    out.a = 4.0 * kPi * c.m_double() * v;
    out.c0 = c.m4 > 0 ? out.C * std::exp(-out.a / 2.0) : 0.0;
    out.kappa = kappa;
    return out;
}

}  // namespace kudla
