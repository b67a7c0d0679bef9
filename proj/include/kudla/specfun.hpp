#pragma once

// Special functions of the Green-function integrals:
//   beta_s(x)  = int_1^inf e^{-x t} t^{-s} dt
//   J_+(s, a)  = int_0^inf e^{-a w} ((w+1)^s - 1) dw / w
//   J_-(s, a)  = int_0^inf e^{-a w} w^s dw / (w+1)
//   I3_+(v, m) = int_0^inf int_1^inf e^{-4 pi v m sinh^2(t) r} sinh t cosh^2 t dr/r dt
//   I3_-(v, m) = int_0^inf int_1^inf e^{-4 pi v |m| cosh^2(t) r} sinh^2 t cosh t dr/r dt
// Every result carries an error estimate that includes the analytic bound on
// the truncated exponential tail.

#include <vector>

#include "kudla/precision.hpp"

namespace kudla {

QuadratureResult beta_s(double s, double x, const Precision& prec = {});
QuadratureResult J_plus(double s, double a, const Precision& prec = {});
QuadratureResult J_minus(double s, double a, const Precision& prec = {});

/// Direct double integral; the inner r-integral is beta_1 of the exponent
/// coefficient, the outer t-integral is adaptive.
QuadratureResult I3_plus(double v, double m, const Precision& prec = {});
QuadratureResult I3_minus(double v, double m, const Precision& prec = {});

/// (1/3) e^{sign |a|} J_-(3/2, |a|): the two prefactors printed for I3_-.
double I3_minus_closed_form(double abs_a, int exponent_sign, const Precision& prec = {});
/// sqrt(pi) / (4 |a|^{3/2}) * beta_{5/2}(|a|).
double I3_minus_gamma_form(double abs_a, const Precision& prec = {});

struct PrefactorResolution {
    int exponent_sign = 0;           // sign s in e^{s|a|} that matches quadrature
    double max_rel_dev_chosen = 0;   // worst |I3_- / closed - 1| on the grid
    double max_rel_dev_rejected = 0;
};

/// Compares direct I3_- quadrature with both printed prefactors on `abs_a_grid`.
PrefactorResolution resolve_I3_minus_prefactor(const std::vector<double>& abs_a_grid,
                                               const Precision& prec = {});

}  // namespace kudla
