#include "kudla/green_integrals.hpp"

#include <cmath>

#include "kudla/eisenstein.hpp"
#include "kudla/errors.hpp"
#include "kudla/lattice.hpp"
#include "kudla/specfun.hpp"
#include "kudla/volumes.hpp"

namespace kudla {
namespace {

void require_v(double v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("v must be positive and finite");
}

double four_over(const ExactRational& B) { return 4.0 / B.to_double(); }

// log(4 pi) - Gamma'(1)
double bk_constant() { return std::log(4.0 * kPi) + kEulerGamma; }

struct DerivativeParts {
    double lhs, a, integral_term, bk_term, c0;
};

DerivativeParts derivative_parts(const CaseIndex& c, double v, double kappa, const Precision& prec) {
    require_v(v);
    DerivativeParts p{};
    p.lhs = coefficient_c0_prime(c, v, kappa, prec);
    p.a = 4.0 * kPi * c.m_double() * v;
    p.integral_term = four_over(constant_B_signed()) * kudla_integral(c, v, prec);
    // (4/B) I_BK with the same signed B: -C (kappa + log 4 pi - Gamma'(1)).
    p.bk_term = c.m4 > 0 ? -coefficient_C(c, prec) * (kappa + bk_constant()) : 0.0;
    p.c0 = coefficient_c0(c, v, prec);
    return p;
}

}  // namespace

double IdentityReport::abs_diff() const { return std::fabs(lhs - rhs); }

double IdentityReport::rel_diff() const {
    const double scale = std::fabs(rhs);
    return scale > 0.0 ? abs_diff() / scale : abs_diff();
}

DegreeValue heegner_degree(const CaseIndex& c, const Precision& prec) {
    if (c.m4 <= 0) throw DomainError("heegner_degree: m must be positive");
    const ExactRational halfB = constant_B() / ExactRational(2);
    DegreeValue d;
    d.value = -halfB.to_double() * coefficient_C(c, prec);
    d.exact = -halfB * coefficient_C_exact(c);
    d.cohen_route = ExactRational(-1, 12) * cohen_H(c).value;
    return d;
}

double integral_prefactor(bool positive_m) {
    const double haar = 0.5 * 6.0 / std::pow(2.0 * kPi, 3);
    return haar * (positive_m ? kVolSO2 : kVolSO3modSO2);
}

double kudla_integral(const CaseIndex& c, double v, const Precision& prec) {
    require_v(v);
    if (c.m4 == 0) throw DomainError("kudla_integral: m = 0");
    const bool positive = c.m4 > 0;
    const SymmetricSpace space = positive ? SymmetricSpace::D22 : SymmetricSpace::D13;
    double volume_sum = 0.0;
    for (const auto& [n, child] : primitive_decomposition(c)) {
        (void)n;
        volume_sum += vol_sie(child, space, prec).value;
    }
    const double m = c.m_double();
    const double I3 = positive ? I3_plus(v, m, prec).value : I3_minus(v, m, prec).value;
    return integral_prefactor(positive) * volume_sum * I3;
}

double frozen_normalization(const Precision& prec) {
    const CaseIndex c = case_from_m4(4);
    const double v = 1.0 / (4.0 * kPi);
    const double lhs_raw = four_over(constant_B()) * kudla_integral(c, v, prec);
    const double rhs = coefficient_C(c, prec) * J_plus(1.5, 1.0, prec).value;
    return rhs / lhs_raw;
}

IdentityReport integral_identity_check(const CaseIndex& c, double v, double normalization, const Precision& prec) {
    require_v(v);
    IdentityReport r;
    r.index = c;
    r.v = v;
    const double abs_a = 4.0 * kPi * std::fabs(c.m_double()) * v;
    const double lhs_raw = four_over(constant_B()) * kudla_integral(c, v, prec);
    const double C = coefficient_C(c, prec);
    if (c.m4 > 0) {
        r.rhs = C * J_plus(1.5, abs_a, prec).value;
        r.route_labels = {"(4/B) I via stabilizer volumes and I3_+", "C J_+(3/2, a)"};
    } else {
        r.rhs = C * J_minus(1.5, abs_a, prec).value * std::exp(-abs_a);
        r.route_labels = {"(4/B) I via stabilizer volumes and I3_-", "C J_-(3/2, |a|) e^{-|a|}"};
    }
    r.lhs = normalization * lhs_raw;
    r.raw_ratio = lhs_raw / r.rhs;
    return r;
}

IdentityReport integral_identity_check(const CaseIndex& c, double v, const Precision& prec) {
    return integral_identity_check(c, v, frozen_normalization(prec), prec);
}

double ibk_integral(const CaseIndex& c, double kappa, const Precision& prec) {
    if (c.m4 < 0) return 0.0;
    return constant_B().to_double() / 4.0 * (-coefficient_C(c, prec)) * (kappa + bk_constant());
}

IdentityReport derivative_identity_check(const CaseIndex& c, double v, double kappa, double star, const Precision& prec) {
    const DerivativeParts p = derivative_parts(c, v, kappa, prec);
    IdentityReport r;
    r.index = c;
    r.v = v;
    r.lhs = p.lhs;
    r.rhs = std::exp(-p.a / 2.0) * (p.integral_term - p.bk_term + star * p.c0);
    r.raw_ratio = r.lhs / r.rhs;
    r.route_labels = {"c0'(gamma, m, 0, v)", "e^{-a/2}((4/B)(I - I_BK) + star c0)"};
    return r;
}

std::optional<double> solve_derivative_star(const CaseIndex& c, double v, double kappa, const Precision& prec) {
    if (c.m4 < 0) return std::nullopt;
    const DerivativeParts p = derivative_parts(c, v, kappa, prec);
    return (p.lhs * std::exp(p.a / 2.0) - p.integral_term + p.bk_term) / p.c0;
}

}  // namespace kudla
