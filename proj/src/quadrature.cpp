#include "kudla/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kudla/errors.hpp"

namespace kudla {
namespace {

// Nodes and weights of the 15-point Kronrod rule and its embedded 7-point
// Gauss rule (QUADPACK qk15).
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, err;
};

Panel gauss_kronrod(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b), half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    resk *= half;
    resg *= half;
    double err = std::fabs(resk - resg);
    // Panel error cannot be resolved below the rounding level of its value.
    err = std::max(err, 10.0 * std::numeric_limits<double>::epsilon() * std::fabs(resk));
    return {a, b, resk, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const Precision& prec,
                                    const std::vector<double>& breakpoints) {
    prec.validate();
    if (!(b > a)) return {};

    std::vector<double> cuts{a};
    for (double x : breakpoints)
        if (x > cuts.back() && x < b) cuts.push_back(x);
    cuts.push_back(b);

    std::vector<Panel> panels;
    panels.reserve(static_cast<std::size_t>(prec.max_subdivisions) + cuts.size());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) panels.push_back(gauss_kronrod(f, cuts[i], cuts[i + 1]));
    long evals = 15 * static_cast<long>(panels.size());

    const auto totals = [&panels]() {
        double v = 0.0, e = 0.0;
        for (const Panel& p : panels) {
            v += p.value;
            e += p.err;
        }
        return std::pair{v, e};
    };

    auto [value, err] = totals();
    while (err > prec.budget(value)) {
        if (static_cast<int>(panels.size()) >= prec.max_subdivisions) {
            std::ostringstream os;
            os.precision(3);
            os << "integrate_adaptive: tolerance not reached on [" << a << ", " << b << "] after "
               << panels.size() << " panels (err " << err << ")";
            throw ToleranceError(os.str());
        }
        // Worst panel; ties broken by position for determinism.
        const auto worst = std::max_element(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) {
            return x.err < y.err || (x.err == y.err && x.a > y.a);
        });
        const double mid = 0.5 * (worst->a + worst->b);
        if (!(mid > worst->a && mid < worst->b)) {
            throw ToleranceError("integrate_adaptive: panel width reached machine resolution");
        }
        const Panel left = gauss_kronrod(f, worst->a, mid);
        const Panel right = gauss_kronrod(f, mid, worst->b);
        evals += 30;
        *worst = left;
        panels.insert(worst + 1, right);
        std::tie(value, err) = totals();
    }
    return {value, err, evals};
}

double exp_power_tail_bound(double a, double W, double p) {
    if (p <= 0.0) return std::exp(-a * W) * std::pow(W, p) / a;
    const double denom = a - p / W;
    if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
    return std::exp(-a * W) * std::pow(W, p) / denom;
}

}  // namespace kudla
