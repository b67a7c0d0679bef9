#pragma once

// Degrees of Heegner divisors, the integral of the Green function over the
// Shimura variety assembled from stabilizer volumes, and the comparisons of
// that integral with Eisenstein coefficients.

#include <optional>
#include <string>
#include <utility>

#include "kudla/arith.hpp"
#include "kudla/precision.hpp"
#include "kudla/rational.hpp"

namespace kudla {

struct IdentityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    CaseIndex index;
    double v = 0.0;
    std::pair<std::string, std::string> route_labels;
    /// Unnormalized lhs / rhs, i.e. the ratio before the frozen constant is
    /// applied; records the sign convention the data selects.
    double raw_ratio = 0.0;

    double abs_diff() const;
    double rel_diff() const;
};

struct DegreeValue {
    double value = 0.0;        // -(B/2) C with numeric L(2, chi)
    ExactRational exact;       // -(B/2) * 240 L(-1, chi) xi
    ExactRational cohen_route; // -(1/12) H(2, 4m)
};

/// deg = -(B/2) C(gamma, m, 0), B = 1/1440. m > 0.
DegreeValue heegner_degree(const CaseIndex& c, const Precision& prec = {});

/// (1/2)(3!/(2 pi)^3) vol(K-part): 3/(4 pi^2) for m > 0, 3/(2 pi^2) for m < 0.
double integral_prefactor(bool positive_m);

/// Sum over the primitive decomposition of prefactor * vol_sie(m/n^2) * I3(v, m);
/// all terms share a = 4 pi m v.
double kudla_integral(const CaseIndex& c, double v, const Precision& prec = {});

/// Ratio rhs / ((4/B) I) at m = 1, a = 1, the single constant that is then
/// reused for every other (m, v).
double frozen_normalization(const Precision& prec = {});

/// lhs = K (4/B) I(gamma, m, v) with K frozen, rhs = C J_+(3/2, a) (m > 0)
/// or C J_-(3/2, |a|) e^{-|a|} (m < 0).
IdentityReport integral_identity_check(const CaseIndex& c, double v, double normalization, const Precision& prec = {});
IdentityReport integral_identity_check(const CaseIndex& c, double v, const Precision& prec = {});

/// (B/4)(-C)(kappa + log 4 pi + gamma_E) for m > 0, 0 for m < 0.
double ibk_integral(const CaseIndex& c, double kappa, const Precision& prec = {});

/// lhs = c0'(gamma, m, 0, v), rhs = e^{-a/2}((4/B)(I - I_BK) + star c0) with
/// the signed B = zeta(-1) zeta(-3).
IdentityReport derivative_identity_check(const CaseIndex& c, double v, double kappa, double star, const Precision& prec = {});

/// The star that zeroes the derivative-identity residual; nullopt for m < 0 where c0 = 0
/// and every star works.
std::optional<double> solve_derivative_star(const CaseIndex& c, double v, double kappa, const Precision& prec = {});

}  // namespace kudla
