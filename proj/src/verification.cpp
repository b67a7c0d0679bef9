#include "kudla/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>

#include "kudla/arith.hpp"
#include "kudla/eisenstein.hpp"
#include "kudla/errors.hpp"
#include "kudla/green_integrals.hpp"
#include "kudla/lattice.hpp"
#include "kudla/siegel.hpp"
#include "kudla/specfun.hpp"
#include "kudla/volumes.hpp"

namespace kudla {
namespace {

constexpr double kCatalan = 0.915965594177219015054603514932384110774;

double rel(double a, double b) {
    const double s = std::max(std::fabs(a), std::fabs(b));
    return s > 0.0 ? std::fabs(a - b) / s : 0.0;
}

// Tracks the worst row of a check.
struct Worst {
    double lhs = 0.0, rhs = 0.0, diff = -1.0;
    void offer(double l, double r, double d) {
        if (d > diff) {
            lhs = l;
            rhs = r;
            diff = d;
        }
    }
};

CheckResult make(std::string name, std::string description, const Worst& w, double tol, bool absolute = false) {
    CheckResult c;
    c.name = std::move(name);
    c.description = std::move(description);
    c.lhs = w.lhs;
    c.rhs = w.rhs;
    c.diff = std::max(w.diff, 0.0);
    c.absolute = absolute;
    c.pass = std::isfinite(c.diff) && c.diff <= tol;
    return c;
}

CheckResult make_exact(std::string name, std::string description, double lhs, double rhs, bool equal) {
    CheckResult c;
    c.name = std::move(name);
    c.description = std::move(description);
    c.lhs = lhs;
    c.rhs = rhs;
    c.diff = equal ? 0.0 : 1.0;
    c.exact = true;
    c.pass = equal;
    return c;
}

std::vector<long> fundamental_discriminants(long bound) {
    std::vector<long> out;
    for (long D = -bound; D <= bound; ++D)
        if (is_fundamental_discriminant(D)) out.push_back(D);
    return out;
}

// Deterministic uniform draws independent of the standard library's
// distribution implementations.
struct Draw {
    std::mt19937_64 gen{20240917};
    double uniform(double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(gen() >> 11) * 0x1.0p-53); }
    long integer(long lo, long hi) { return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

SiegelPoint random_point(Draw& d) {
    const double y1 = d.uniform(0.3, 2.0), y3 = d.uniform(0.3, 2.0);
    const double lim = std::sqrt(y1 * y3) * 0.9;
    return SiegelPoint({d.uniform(-0.5, 0.5), y1}, {d.uniform(-0.5, 0.5), d.uniform(-lim, lim)},
                       {d.uniform(-0.5, 0.5), y3});
}

CheckResult check_divisor_sum() {
    bool all = true;
    long pairs = 0;
    for (long D0 : fundamental_discriminants(200)) {
        for (long f = 1; f <= 50; ++f) {
            ++pairs;
            if (ExactRational(f * f * f) * twisted_divisor_ratio(D0, f) != ExactRational(xi_twisted(D0, f)))
                all = false;
        }
    }
    const double p = static_cast<double>(pairs);
    return make_exact("divisor_sum", "f^3 sigma(D0, f) = xi(D0, f) for |D0| <= 200, f <= 50", p, p, all);
}

CheckResult check_cohen_dual(double tol) {
    Worst w;
    for (long m4 = 1; m4 <= 400; ++m4) {
        if (m4 % 4 == 2 || m4 % 4 == 3) continue;
        const CaseIndex c = case_from_m4(m4);
        const double exact = cohen_H(c).value.to_double();
        const double numeric = -1.0 / (2.0 * kPi * kPi) * L_chi_2_series(c.D0).value *
                               std::pow(static_cast<double>(c.D0), 1.5) *
                               static_cast<double>(xi_twisted(c.D0, c.humbert_conductor()));
        w.offer(exact, numeric, rel(exact, numeric));
    }
    return make("cohen_dual", "H(2,4m) Bernoulli route vs L(2, chi) series route, 4m <= 400", w, tol);
}

CheckResult check_degree_dual(double tol) {
    Worst w;
    for (long m4 = 1; m4 <= 120; ++m4) {
        if (m4 % 4 == 2 || m4 % 4 == 3) continue;
        if (m4 % 4 == 1 && m4 > 61) continue;
        const CaseIndex c = case_from_m4(m4);
        const double deg = std::fabs(heegner_degree(c).value);
        const double via_h = std::fabs(cohen_H(c).value.to_double()) / 12.0;
        w.offer(deg, via_h, rel(deg, via_h));
    }
    return make("degree_dual", "|-(B/2) C| vs |H(2,4m)|/12, m in 1..30 and 1/4..61/4", w, tol);
}

CheckResult check_degree_exact() {
    const CaseIndex c = case_from_m4(4);
    const DegreeValue d = heegner_degree(c);
    const bool ok = coefficient_C_exact(c) == ExactRational(-140) && d.exact == ExactRational(7, 144) &&
                    d.cohen_route == ExactRational(7, 144);
    return make_exact("degree_exact", "m = 1: C = -140 and degree 7/144 as exact rationals", d.exact.to_double(),
                      7.0 / 144.0, ok);
}

const std::vector<double>& a_grid() {
    static const std::vector<double> grid{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
    return grid;
}

CheckResult check_i3_reduction(double tol) {
    Worst w;
    for (double a : a_grid()) {
        const double lhs = I3_plus(a / (4.0 * kPi), 1.0).value;
        const double rhs = J_plus(1.5, a).value / 3.0;
        w.offer(lhs, rhs, std::fabs(lhs - rhs));
    }
    return make("i3_reduction", "|I3_+(v,m) - J_+(3/2, a)/3| on a in {0.1,...,10}", w, tol, true);
}

CheckResult check_i3_minus(double tol) {
    Worst w;
    const PrefactorResolution res = resolve_I3_minus_prefactor(a_grid());
    for (double a : a_grid()) {
        const double lhs = I3_minus(a / (4.0 * kPi), -1.0).value;
        const double rhs = I3_minus_closed_form(a, res.exponent_sign);
        w.offer(lhs, rhs, std::fabs(lhs - rhs));
        const double third = I3_minus_gamma_form(a);
        w.offer(lhs, third, std::fabs(lhs - third));
    }
    CheckResult c = make("i3_minus_prefactor",
                         "I3_- quadrature vs (1/3) e^{-|a|} J_-(3/2,|a|) and the beta_{5/2} form", w, tol, true);
    c.pass = c.pass && res.exponent_sign == -1;
    return c;
}

CheckResult check_integral_identity(double tol) {
    Worst w;
    const double K = frozen_normalization();
    for (long m : {1L, 2L, 5L, -1L, -2L}) {
        const CaseIndex c = case_from_m4(4 * m);
        for (double a : {0.5, 1.0, 2.0, 5.0}) {
            if (m == 1 && a == 1.0) continue;  // the freezing point itself
            const IdentityReport r = integral_identity_check(c, a / (4.0 * kPi * std::fabs(static_cast<double>(m))), K);
            w.offer(r.lhs, r.rhs, r.rel_diff());
        }
    }
    return make("integral_identity", "K (4/B) I(gamma,m,v) vs C J(3/2,a), K frozen at m = 1, a = 1", w, tol);
}

CheckResult check_majorant(double tol) {
    Draw d;
    Worst w;
    double worst_gap = 0.0;
    for (int i = 0; i < 100; ++i) {
        const SiegelPoint z = random_point(d);
        const double res = siegel_condition_residual(z);
        w.offer(res, 0.0, res);
        std::array<double, 5> x{};
        for (double& xi : x) xi = static_cast<double>(d.integer(-5, 5));
        const double xx = 2.0 * (x[2] * x[2] - x[0] * x[4] - x[1] * x[3]);
        const double gap = xx + 2.0 * majorant_R(z, x) - std::fabs(xx);
        worst_gap = std::min(worst_gap, gap);
    }
    CheckResult c = make("majorant", "max |P Q^{-1} P - Q| and (x,x) + 2R >= |(x,x)| at 100 random (z, x)", w,
                         std::max(tol, 1e-10), true);
    c.pass = c.pass && worst_gap >= -1e-9;
    return c;
}

std::vector<LatticeVector> box_scan(const SiegelPoint& z, double bound) {
    Matrix5 G = majorant_gram(z);
    G.row(2) *= 0.5;
    G.col(2) *= 0.5;
    const Matrix5 Ginv = G.inverse();
    std::array<long, 5> lim{};
    for (int i = 0; i < 5; ++i) lim[i] = static_cast<long>(std::floor(std::sqrt(2.0 * bound * Ginv(i, i)) + 1e-9));
    std::vector<LatticeVector> out;
    LatticeVector v;
    std::function<void(int)> rec = [&](int i) {
        if (i == 5) {
            if (v.u != std::array<long, 5>{} && majorant_value(z, v) <= bound) out.push_back(v);
            return;
        }
        for (long x = -lim[i]; x <= lim[i]; ++x) {
            v.u[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

CheckResult check_lattice() {
    Draw d;
    bool all = true;
    double count = 0.0;
    for (int i = 0; i < 5; ++i) {
        const SiegelPoint z = random_point(d);
        const double bound = d.uniform(1.0, 3.0);
        const auto fp = enumerate_bounded(z, bound);
        all = all && fp == box_scan(z, bound);
        count += static_cast<double>(fp.size());
    }
    return make_exact("lattice", "enumerate_bounded equals a coordinate-box scan at 5 random z", count, count, all);
}

CheckResult check_log_singularity(double tol) {
    // Generic point of the Humbert surface of x0 = (1,0,0,0,-1), pushed off
    // by a real shift of z3 so that R(x0, z) = 1e-8.
    const Complex z1(0.3, 1.1), z2(0.2, 0.4);
    const Complex z3_on = (z2 * z2 - 1.0) / z1;
    const double eta2 = z1.imag() * z3_on.imag() - z2.imag() * z2.imag();
    const double R_target = 1e-8;
    const double eps = std::sqrt(2.0 * eta2 * R_target) / std::abs(z1);
    const SiegelPoint z(z1, z2, z3_on + eps);
    const double v = 1.0;
    const GreenEvaluation g = green_function(case_from_m4(4), v, z, 2.0);
    const LatticeVector x0{{1, 0, 0, 0, -1}};
    Worst w;
    for (const GreenTerm& t : g.terms) {
        if (t.u != x0) continue;
        const double lhs = t.beta + std::log(2.0 * kPi * v * t.R);
        w.offer(lhs, -kEulerGamma, std::fabs(lhs + kEulerGamma));
    }
    return make("log_singularity", "x0 term + log(2 pi v R) -> -gamma_E at R = 1e-8", w, tol, true);
}

CheckResult check_volumes(double tol) {
    Worst w;
    const double v13 = humbert_V13(-4).value;
    w.offer(v13, kCatalan / 3.0, rel(v13, kCatalan / 3.0));
    w.offer(v13, humbert_V13_dedekind(-4), rel(v13, humbert_V13_dedekind(-4)));
    for (long dK : {5L, 8L, 12L, 13L}) {
        const VolumeValue v22 = V22(dK);
        const double exact_route = v22.exact_part->to_double() * kPi * kPi;
        w.offer(v22.value, exact_route, rel(v22.value, exact_route));
        const double ratio = v22.value / hirzebruch_vol(dK, 1).value;
        w.offer(ratio, 4.0 * kPi * kPi, rel(ratio, 4.0 * kPi * kPi));
        const HirzebruchLines lines = hirzebruch_vol_lines(dK, 3);
        w.offer(lines.exact_zeta, lines.l_series, rel(lines.exact_zeta, lines.l_series));
        w.offer(lines.zeta_two, lines.l_series, rel(lines.zeta_two, lines.l_series));
    }
    CheckResult c = make("volumes", "Bianchi, Hilbert and V22 volume routes; hirzebruch_vol(5,1) = 1/15 exactly", w,
                         tol);
    c.pass = c.pass && hirzebruch_vol(5, 1).exact_part == ExactRational(1, 15) &&
             hirzebruch_vol(5, 2).exact_part == ExactRational(2, 3);
    return c;
}

CheckResult check_zeta_functional(double tol) {
    Worst w;
    for (long dK : {5L, 8L, 12L, 13L}) {
        const double lhs = dedekind_zeta_minus1(dK).to_double();
        const double zetaK2 = kPi * kPi / 6.0 * L_chi_2_series(dK).value;
        const double rhs = zetaK2 * std::pow(static_cast<double>(dK), 1.5) / (4.0 * std::pow(kPi, 4));
        w.offer(lhs, rhs, std::fabs(lhs - rhs));
    }
    return make("zeta_functional", "zeta_K(-1) = zeta_K(2) dK^{3/2} / (4 pi^4), dK in {5,8,12,13}", w, tol, true);
}

CheckResult check_derivative_identity(double tol) {
    Worst w;
    const CaseIndex c = case_from_m4(4);
    const double kappa = 0.25;
    const double v0 = 1.0 / (4.0 * kPi);
    const double ref = *solve_derivative_star(c, v0, kappa) * coefficient_c0(c, v0);
    for (double a : {0.5, 2.0, 5.0}) {
        const double v = a / (4.0 * kPi);
        const double sc = *solve_derivative_star(c, v, kappa) * coefficient_c0(c, v);
        w.offer(sc, ref, rel(sc, ref));
    }
    const CaseIndex neg = case_from_m4(-4);
    for (double a : {0.5, 1.0, 2.0}) {
        const IdentityReport r = derivative_identity_check(neg, a / (4.0 * kPi), kappa, 1.7);
        w.offer(r.lhs, r.rhs, r.rel_diff());
    }
    return make("derivative_identity", "star * c0 independent of v (m = 1); m = -1 residual vanishes for any star", w, tol);
}

using Runner = std::function<CheckResult(double)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
    static const std::vector<std::pair<std::string, Runner>> r{
        {"divisor_sum", [](double) { return check_divisor_sum(); }},
        {"cohen_dual", check_cohen_dual},
        {"degree_dual", check_degree_dual},
        {"degree_exact", [](double) { return check_degree_exact(); }},
        {"i3_reduction", check_i3_reduction},
        {"i3_minus_prefactor", check_i3_minus},
        {"integral_identity", check_integral_identity},
        {"majorant", check_majorant},
        {"lattice", [](double) { return check_lattice(); }},
        {"log_singularity", check_log_singularity},
        {"volumes", check_volumes},
        {"zeta_functional", check_zeta_functional},
        {"derivative_identity", check_derivative_identity},
    };
    return r;
}

}  // namespace

std::vector<std::string> verification_names() {
    std::vector<std::string> names;
    for (const auto& [name, run] : registry()) names.push_back(name);
    return names;
}

std::vector<CheckResult> run_verification(double tol, const std::optional<std::string>& only) {
    if (!(tol > 0.0)) throw DomainError("run_verification: tol must be positive");
    std::vector<CheckResult> out;
    for (const auto& [name, run] : registry()) {
        if (only && *only != name) continue;
        out.push_back(run(tol));
    }
    if (only && out.empty()) throw DomainError("unknown check '" + *only + "'");
    return out;
}

}  // namespace kudla
