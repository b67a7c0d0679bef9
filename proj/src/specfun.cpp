#include "kudla/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kudla/arith.hpp"
#include "kudla/errors.hpp"
#include "kudla/quadrature.hpp"

namespace kudla {
namespace {

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(what) + " must be positive and finite");
}

// Integrate a decaying integrand on [lo, W] and grow W until the analytic
// tail bound fits into a quarter of the budget.
template <typename F, typename TailBound>
QuadratureResult integrate_with_tail(const F& f, double lo, double W, const TailBound& tail_bound,
                                     const Precision& prec, std::vector<double> breaks = {}) {
    Precision panel = prec;
    panel.abs_tol = 0.75 * prec.abs_tol;
    panel.rel_tol = 0.75 * prec.rel_tol;
    for (int attempt = 0; attempt < 16; ++attempt, W *= 1.5) {
        double tail = tail_bound(W);
        if (!std::isfinite(tail)) continue;
        QuadratureResult r = integrate_adaptive(f, lo, W, panel, breaks);
        if (tail <= 0.25 * prec.budget(r.value)) {
            r.err_estimate += tail;
            return r;
        }
    }
    throw ToleranceError("exponential tail bound could not be met");
}

Precision inner_precision() {
    Precision p;
    p.abs_tol = 1e-300;
    p.rel_tol = 1e-13;
    return p;
}

}  // namespace

QuadratureResult beta_s(double s, double x, const Precision& prec) {
    prec.validate();
    require_positive(x, "beta_s: x");
    if (s < 0.0) throw DomainError("beta_s: s must be nonnegative");
    // t = e^u maps [1, inf) to [0, inf) and turns the log singularity at
    // x -> 0 into a plateau of length log(1/x).
    const auto g = [s, x](double u) { return std::exp(-x * std::exp(u) + (1.0 - s) * u); };
    const auto tail = [s, x](double U) {
        const double T = std::exp(U);
        return std::exp(-x * T) * std::pow(T, -s) / x;
    };
    const double U0 = std::log1p(prec.tail_cut / x);
    std::vector<double> breaks;
    if (x < 1.0) breaks.push_back(std::log1p(1.0 / x));
    return integrate_with_tail(g, 0.0, U0, tail, prec, breaks);
}

QuadratureResult J_plus(double s, double a, const Precision& prec) {
    prec.validate();
    require_positive(s, "J_plus: s");
    require_positive(a, "J_plus: a");
    // ((w+1)^s - 1)/w via expm1/log1p; the removable value at w = 0 is s.
    const auto g = [s, a](double w) {
        if (w == 0.0) return s;
        return std::exp(-a * w) * std::expm1(s * std::log1p(w)) / w;
    };
    const auto tail = [s, a](double W) { return std::pow(1.0 + 1.0 / W, s) * exp_power_tail_bound(a, W, s - 1.0); };
    const double W0 = (prec.tail_cut + std::max(0.0, s - 1.0) * std::log1p(prec.tail_cut / a)) / a;
    return integrate_with_tail(g, 0.0, W0, tail, prec, {std::min(1.0, 1.0 / a), 1.0 / a, 4.0 / a});
}

QuadratureResult J_minus(double s, double a, const Precision& prec) {
    prec.validate();
    require_positive(s, "J_minus: s");
    require_positive(a, "J_minus: a");
    const auto g = [s, a](double w) { return std::exp(-a * w) * std::pow(w, s) / (w + 1.0); };
    const auto tail = [s, a](double W) { return exp_power_tail_bound(a, W, s - 1.0); };
    const double W0 = (prec.tail_cut + std::max(0.0, s - 1.0) * std::log1p(prec.tail_cut / a)) / a;
    return integrate_with_tail(g, 0.0, W0, tail, prec, {std::min(1.0, 1.0 / a), 1.0 / a, 4.0 / a});
}

QuadratureResult I3_plus(double v, double m, const Precision& prec) {
    prec.validate();
    require_positive(v, "I3_plus: v");
    require_positive(m, "I3_plus: m");
    const double a = 4.0 * kPi * m * v;
    const Precision inner = inner_precision();
    const auto g = [a, &inner](double t) {
        if (t == 0.0) return 0.0;
        const double sh = std::sinh(t), ch = std::cosh(t);
        return beta_s(1.0, a * sh * sh, inner).value * sh * ch * ch;
    };
    // For t >= T: beta_1(c) <= e^{-c}/c; substitute c = cosh t.
    const auto tail = [a](double T) {
        const double C = std::cosh(T), C2 = C * C;
        return (C2 / (C2 - 1.0)) / a * std::exp(-a * (C2 - 1.0)) / (2.0 * a * C);
    };
    const double T0 = std::asinh(std::sqrt(prec.tail_cut / a));
    QuadratureResult r = integrate_with_tail(g, 0.0, T0, tail, prec, {0.25 * T0, 0.5 * T0});
    r.err_estimate += inner.rel_tol * std::fabs(r.value);
    return r;
}

QuadratureResult I3_minus(double v, double m, const Precision& prec) {
    prec.validate();
    require_positive(v, "I3_minus: v");
    if (!(m < 0.0)) throw DomainError("I3_minus: m must be negative");
    const double a = 4.0 * kPi * (-m) * v;
    const Precision inner = inner_precision();
    const auto g = [a, &inner](double t) {
        const double sh = std::sinh(t), ch = std::cosh(t);
        return beta_s(1.0, a * ch * ch, inner).value * sh * sh * ch;
    };
    // With s = sinh t: beta_1(a(1+s^2)) s^2 <= e^{-a(1+s^2)} / a.
    const auto tail = [a](double T) {
        const double S = std::sinh(T);
        return std::exp(-a * (1.0 + S * S)) / (2.0 * a * a * S);
    };
    const double T0 = std::asinh(std::sqrt(prec.tail_cut / a));
    QuadratureResult r = integrate_with_tail(g, 0.0, T0, tail, prec, {0.25 * T0, 0.5 * T0});
    r.err_estimate += inner.rel_tol * std::fabs(r.value);
    return r;
}

double I3_minus_closed_form(double abs_a, int exponent_sign, const Precision& prec) {
    require_positive(abs_a, "I3_minus_closed_form: |a|");
    return std::exp(exponent_sign * abs_a) * J_minus(1.5, abs_a, prec).value / 3.0;
}

double I3_minus_gamma_form(double abs_a, const Precision& prec) {
    require_positive(abs_a, "I3_minus_gamma_form: |a|");
    return std::sqrt(kPi) / (4.0 * std::pow(abs_a, 1.5)) * beta_s(2.5, abs_a, prec).value;
}

PrefactorResolution resolve_I3_minus_prefactor(const std::vector<double>& abs_a_grid, const Precision& prec) {
    if (abs_a_grid.empty()) throw DomainError("resolve_I3_minus_prefactor: empty grid");
    double dev_minus = 0.0, dev_plus = 0.0;
    for (double abs_a : abs_a_grid) {
        // v chosen so that 4 pi |m| v = |a| with m = -1.
        const double direct = I3_minus(abs_a / (4.0 * kPi), -1.0, prec).value;
        dev_minus = std::max(dev_minus, std::fabs(direct / I3_minus_closed_form(abs_a, -1, prec) - 1.0));
        dev_plus = std::max(dev_plus, std::fabs(direct / I3_minus_closed_form(abs_a, +1, prec) - 1.0));
    }
    PrefactorResolution out;
    out.exponent_sign = dev_minus <= dev_plus ? -1 : +1;
    out.max_rel_dev_chosen = std::min(dev_minus, dev_plus);
    out.max_rel_dev_rejected = std::max(dev_minus, dev_plus);
    return out;
}

}  // namespace kudla
