#include "kudla/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kudla/errors.hpp"
#include "kudla/specfun.hpp"

namespace kudla {
namespace {

using Basis = std::array<std::array<long, 5>, 5>;  // columns are basis vectors

Matrix5 lattice_gram(const SiegelPoint& z) {
    Matrix5 G = majorant_gram(z);
    G.row(2) *= 0.5;
    G.col(2) *= 0.5;
    return G;
}

Matrix5 transformed(const Matrix5& G0, const Basis& T) {
    Matrix5 Tm;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) Tm(i, j) = static_cast<double>(T[j][i]);
    return Tm.transpose() * G0 * Tm;
}

void gram_schmidt(const Matrix5& G, double mu[5][5], double bstar[5]) {
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < i; ++j) {
            double s = G(i, j);
            for (int l = 0; l < j; ++l) s -= mu[i][l] * mu[j][l] * bstar[l];
            mu[i][j] = s / bstar[j];
        }
        double b = G(i, i);
        for (int l = 0; l < i; ++l) b -= mu[i][l] * mu[i][l] * bstar[l];
        bstar[i] = b;
    }
}

// LLL on a Gram matrix; returns the unimodular change of basis.
Basis lll_reduce(const Matrix5& G0) {
    Basis T{};
    for (int i = 0; i < 5; ++i) T[i][i] = 1;
    constexpr double delta = 0.99;
    double mu[5][5] = {}, bstar[5] = {};
    int k = 1;
    for (int iter = 0; k < 5; ++iter) {
        if (iter > 100000) throw std::logic_error("lll_reduce: no convergence");
        Matrix5 G = transformed(G0, T);
        gram_schmidt(G, mu, bstar);
        for (int j = k - 1; j >= 0; --j) {
            const double r = std::round(mu[k][j]);
            if (r == 0.0) continue;
            const long ri = static_cast<long>(r);
            for (int i = 0; i < 5; ++i) T[k][i] -= ri * T[j][i];
            G = transformed(G0, T);
            gram_schmidt(G, mu, bstar);
        }
        if (bstar[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
            std::swap(T[k], T[k - 1]);
            k = std::max(k - 1, 1);
        } else {
            ++k;
        }
    }
    return T;
}

// Visits every nonzero u with u^T G u <= limit (plus rounding slack).
void fincke_pohst(const Matrix5& G0, double limit, const std::function<void(const LatticeVector&)>& visit) {
    const Basis T = lll_reduce(G0);
    const Matrix5 G = transformed(G0, T);
    Eigen::LLT<Matrix5> llt(G);
    if (llt.info() != Eigen::Success) throw std::logic_error("fincke_pohst: Gram matrix not positive definite");
    const Matrix5 R = llt.matrixU();
    double qd[5], qo[5][5];
    for (int i = 0; i < 5; ++i) {
        qd[i] = R(i, i) * R(i, i);
        for (int j = i + 1; j < 5; ++j) qo[i][j] = R(i, j) / R(i, i);
    }
    const double slack = 1e-9 * std::max(1.0, limit);
    long w[5] = {};

    std::function<void(int, double)> recurse = [&](int i, double remaining) {
        double center = 0.0;
        for (int j = i + 1; j < 5; ++j) center -= qo[i][j] * static_cast<double>(w[j]);
        const double r = std::sqrt(std::max(0.0, remaining + slack) / qd[i]);
        const long lo = static_cast<long>(std::ceil(center - r));
        const long hi = static_cast<long>(std::floor(center + r));
        for (long x = lo; x <= hi; ++x) {
            const double d = static_cast<double>(x) - center;
            const double t = qd[i] * d * d;
            if (t > remaining + slack) continue;
            w[i] = x;
            if (i == 0) {
                LatticeVector v;
                for (int a = 0; a < 5; ++a) {
                    long s = 0;
                    for (int b = 0; b < 5; ++b) s += T[b][a] * w[b];
                    v.u[a] = s;
                }
                if (v.u != std::array<long, 5>{}) visit(v);
            } else {
                recurse(i - 1, remaining - t);
            }
        }
        w[i] = 0;
    };
    recurse(4, limit);
}

}  // namespace

bool LatticeVector::primitive() const {
    long g = 0;
    for (long x : u) g = std::gcd(g, x);
    return g == 1;
}

AmbientVector LatticeVector::ambient() const {
    return {{ExactRational(u[0]), ExactRational(u[1]), ExactRational(u[2], 2), ExactRational(u[3]),
             ExactRational(u[4])}};
}

LatticeVector orbit_representative(int gamma, const ExactRational& m) {
    const CaseIndex c = split_discriminant(gamma, m);
    return orbit_representative(c);
}

LatticeVector orbit_representative(const CaseIndex& c) {
    if (c.gamma == 0) return {{1, 0, 0, 0, -(c.m4 / 4)}};
    // 4m = 4M + 1
    const long M = (c.m4 - 1) / 4;
    return {{0, 1, 1, -M, 0}};
}

double lattice_R(const SiegelPoint& z, const LatticeVector& v) {
    const std::array<double, 5> y{static_cast<double>(v.u[0]), static_cast<double>(v.u[1]),
                                  0.5 * static_cast<double>(v.u[2]), static_cast<double>(v.u[3]),
                                  static_cast<double>(v.u[4])};
    return majorant_R(z, y);
}

double majorant_value(const SiegelPoint& z, const LatticeVector& v) {
    return static_cast<double>(v.qhat()) / 4.0 + lattice_R(z, v);
}

std::vector<LatticeVector> enumerate_bounded(const SiegelPoint& z, double bound, const Precision& prec,
                                             std::size_t max_points) {
    prec.validate();
    if (!(bound > 0.0) || !std::isfinite(bound)) throw DomainError("enumerate_bounded: bound must be positive");
    std::vector<LatticeVector> out;
    fincke_pohst(lattice_gram(z), 2.0 * bound, [&](const LatticeVector& v) {
        if (majorant_value(z, v) > bound) return;
        if (out.size() >= max_points)
            throw ResourceError("enumerate_bounded: more than " + std::to_string(max_points) + " lattice points");
        out.push_back(v);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<long, CaseIndex>> primitive_decomposition(const CaseIndex& c) {
    if (c.m4 == 0) throw DomainError("primitive_decomposition: m = 0");
    std::vector<std::pair<long, CaseIndex>> out;
    const long n4 = std::labs(c.m4);
    for (long n = 1; n * n <= n4; ++n) {
        if (n4 % (n * n) != 0) continue;
        const long child = c.m4 / (n * n);
        const long r = ((child % 4) + 4) % 4;
        if (r == 0 || r == 1) out.emplace_back(n, case_from_m4(child));
    }
    return out;
}

GreenEvaluation green_function(const CaseIndex& c, double v, const SiegelPoint& z, double radius,
                               const Precision& prec, std::size_t max_points) {
    prec.validate();
    if (c.m4 == 0) throw DomainError("green_function: m = 0");
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("green_function: v must be positive");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("green_function: radius must be positive");

    GreenEvaluation out;
    out.radius = radius;
    const double bound = c.m_double() + radius;
    if (bound > 0.0) {
        std::vector<LatticeVector> found;
        std::size_t visited = 0;
        fincke_pohst(lattice_gram(z), 2.0 * bound, [&](const LatticeVector& u) {
            if (++visited > max_points)
                throw ResourceError("green_function: enumeration exceeded " + std::to_string(max_points) + " points");
            if (u.qhat() != c.m4) return;
            if (lattice_R(z, u) <= radius) found.push_back(u);
        });
        std::sort(found.begin(), found.end());
        for (const LatticeVector& u : found) {
            const double R = lattice_R(z, u);
            if (R < kSingularThreshold)
                throw SingularPointError("green_function: z lies on the Humbert surface of a lattice vector");
            out.terms.push_back({u, R, 0.0});
        }
    }

    Precision inner;
    inner.abs_tol = 1e-300;
    inner.rel_tol = 1e-13;
    inner.max_subdivisions = prec.max_subdivisions;
    for (GreenTerm& t : out.terms) {
        t.beta = beta_s(1.0, 2.0 * kPi * v * t.R, inner).value;
        out.value += t.beta;
    }
    out.terms_used = static_cast<long>(out.terms.size());
    out.empty = out.terms.empty();

    // N(r) ~ c r^{3/2}, c calibrated on the enumerated shell; then
    // sum_{R > rho} beta_1(2 pi v R) <= int_rho^inf e^{-2 pi v r}/(2 pi v r) dN(r).
    const auto count_upto = [&out](double r) {
        return static_cast<double>(std::count_if(out.terms.begin(), out.terms.end(),
                                                 [r](const GreenTerm& t) { return t.R <= r; }));
    };
    const double rho = radius;
    double cz = std::max(count_upto(rho), 1.0) / std::pow(rho, 1.5);
    cz = std::max(cz, count_upto(rho / 2.0) / std::pow(rho / 2.0, 1.5));
    out.tail_bound = 3.0 * cz * std::exp(-2.0 * kPi * v * rho) / (8.0 * kPi * kPi * v * v * std::sqrt(rho));
    return out;
}

}  // namespace kudla
