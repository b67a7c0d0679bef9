#pragma once

#include <functional>
#include <vector>

#include "kudla/precision.hpp"

namespace kudla {

using Integrand = std::function<double(double)>;

/// Adaptive 7/15-point Gauss–Kronrod quadrature over [a, b].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate (|K15 - G7| per panel) is within `prec.budget(value)` or
/// `prec.max_subdivisions` panels exist. Panels are summed left to right, so
/// identical inputs give bit-identical results. `breakpoints` seeds the
/// initial partition (must lie inside (a, b), ascending).
///
/// Throws ToleranceError when the budget is not met.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const Precision& prec,
                                    const std::vector<double>& breakpoints = {});

/// Bound for int_W^inf e^{-a w} w^p dw (a > 0, W > 0); requires a W > p when p > 0.
double exp_power_tail_bound(double a, double W, double p);

}  // namespace kudla
