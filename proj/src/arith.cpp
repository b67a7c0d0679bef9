#include "kudla/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "kudla/errors.hpp"

namespace kudla {
namespace {

long mod_pos(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

bool is_squarefree(long n) {
    for (const auto& [p, e] : factorize(n < 0 ? -n : n))
        if (e > 1) return false;
    return true;
}

// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(long a, long n) {
    a = mod_pos(a, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const long r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

void require_fundamental(long D, const char* who) {
    if (!is_fundamental_discriminant(D))
        throw DomainError(std::string(who) + ": " + std::to_string(D) + " is not a fundamental discriminant");
}

// Neumaier compensated summation.
struct CompensatedSum {
    double sum = 0.0, comp = 0.0, abs_sum = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
        abs_sum += std::fabs(x);
    }
    double value() const { return sum + comp; }
};

// Hurwitz zeta(2, x) for x >= 32 by Euler–Maclaurin through the x^{-9} term;
// `remainder` receives a bound on the omitted terms.
double hurwitz_zeta2_large(double x, double& remainder) {
    const double inv = 1.0 / x, inv2 = inv * inv;
    // Bernoulli numbers B_2 .. B_8
    constexpr double b[] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0};
    double term_pow = inv2 * inv;  // x^{-3}
    double s = inv + 0.5 * inv2;
    for (double bj : b) {
        s += bj * term_pow;
        term_pow *= inv2;
    }
    remainder = (5.0 / 66.0) * term_pow;  // |B_10| x^{-11}
    return s;
}

}  // namespace

std::vector<std::pair<long, int>> factorize(long n) {
    if (n <= 0) throw DomainError("factorize: n must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long> divisors(long n) {
    if (n <= 0) throw DomainError("divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius(long n) {
    int mu = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

long sigma3(long n) {
    if (n <= 0) throw DomainError("sigma3: n must be positive");
    long s = 0;
    for (long d : divisors(n)) s += d * d * d;
    return s;
}

bool is_fundamental_discriminant(long D) {
    if (D == 1) return true;
    if (D == 0) return false;
    const long r = mod_pos(D, 4);
    if (r == 1) return is_squarefree(D);
    if (r == 0) {
        const long k = D / 4;
        const long rk = mod_pos(k, 4);
        return (rk == 2 || rk == 3) && is_squarefree(k);
    }
    return false;
}

int kronecker_chi(long D, long n) {
    const long r = mod_pos(D, 4);
    if (r != 0 && r != 1)
        throw DomainError("kronecker_chi: D = " + std::to_string(D) + " is not 0 or 1 mod 4");
    if (n < 1) throw DomainError("kronecker_chi: n must be >= 1");
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (D % 2 == 0) return 0;
        const long r8 = mod_pos(D, 8);
        if (r8 == 3 || r8 == 5) result = -result;
    }
    return result * jacobi(D, n);
}

CaseIndex case_from_m4(long m4) {
    if (m4 == 0) throw DomainError("split_discriminant: m = 0 has no discriminant split");
    const long r = mod_pos(m4, 4);
    if (r != 0 && r != 1)
        throw DomainError("split_discriminant: 4m = " + std::to_string(m4) + " is not 0 or 1 mod 4");
    CaseIndex c;
    c.gamma = r == 0 ? 0 : 1;
    c.m4 = m4;
    c.delta_gamma = c.gamma == 0 ? 1 : 4;

    // Delta = 4m = d s^2 with d squarefree (signed).
    const long delta = m4;
    long d = delta < 0 ? -1 : 1, s = 1;
    for (const auto& [p, e] : factorize(std::labs(delta))) {
        if (e % 2) d *= p;
        for (int i = 0; i < e / 2; ++i) s *= p;
    }
    long conductor = s;
    if (mod_pos(d, 4) == 1) {
        c.D0 = d;
    } else {
        c.D0 = 4 * d;
        if (s % 2 != 0) throw std::logic_error("split_discriminant: odd cofactor for D0 = 4d");
        conductor = s / 2;
    }
    if (!is_fundamental_discriminant(c.D0) || c.D0 * conductor * conductor != delta)
        throw std::logic_error("split_discriminant: no fundamental split of " + std::to_string(delta));
    // (mA): Case A splits 4m, Case B splits 16m = D0 (2c)^2.
    c.f = c.gamma == 0 ? conductor : 2 * conductor;
    return c;
}

CaseIndex split_discriminant(int gamma, const ExactRational& m) {
    if (gamma != 0 && gamma != 1) throw DomainError("split_discriminant: gamma must be 0 or 1");
    const ExactRational m4q = m * ExactRational(4);
    if (!m4q.is_integer()) throw DomainError("split_discriminant: m = " + m.str() + " is not in Z/4");
    const long m4 = m4q.to_long();
    if (m4 == 0) throw DomainError("split_discriminant: m = 0 has no discriminant split");
    const long r = mod_pos(m4, 4);
    if ((gamma == 0 && r != 0) || (gamma == 1 && r != 1))
        throw DomainError("split_discriminant: m = " + m.str() + " does not belong to component gamma = " +
                          std::to_string(gamma));
    return case_from_m4(m4);
}

long xi_twisted(long D0, long f) {
    if (f < 1) throw DomainError("xi_twisted: f must be positive");
    long s = 0;
    for (long d : divisors(f)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        s += mu * kronecker_chi(D0, d) * d * sigma3(f / d);
    }
    return s;
}

ExactRational twisted_divisor_ratio(long D0, long f) {
    if (f < 1) throw DomainError("twisted_divisor_ratio: f must be positive");
    ExactRational total(0);
    for (long d : divisors(f)) {
        const long e = f / d;
        ExactRational term(e * e * e);
        for (const auto& [p, k] : factorize(e)) {
            (void)k;
            term *= ExactRational(1) - ExactRational(kronecker_chi(D0, p), p * p);
        }
        total += term;
    }
    return total / ExactRational(f * f * f);
}

ExactRational sigma_gamma_m(const CaseIndex& c) { return twisted_divisor_ratio(c.D0, c.humbert_conductor()); }

ExactRational bernoulli_L_minus1(long D0) {
    require_fundamental(D0, "bernoulli_L_minus1");
    const long q = std::labs(D0);
    // B_{2,chi} = (1/q) sum_{a=1}^{q} chi(a) (a^2 - q a + q^2/6)
    ExactRational sum(0);
    const ExactRational q2_6(q * q, 6);
    for (long a = 1; a <= q; ++a) {
        const int chi = kronecker_chi(D0, a);
        if (chi == 0) continue;
        sum += ExactRational(chi) * (ExactRational(a * a - q * a) + q2_6);
    }
    const ExactRational b2 = sum / ExactRational(q);
    return -b2 / ExactRational(2);
}

SeriesResult L_chi_2_series(long D0, const Precision& prec) {
    prec.validate();
    require_fundamental(D0, "L_chi_2_series");
    const long q = std::labs(D0);
    std::vector<int> chi(static_cast<std::size_t>(q) + 1);
    for (long a = 1; a <= q; ++a) chi[static_cast<std::size_t>(a)] = kronecker_chi(D0, a);

    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double floor_err = 4.0 * eps * 1.6449340668482264;
    if (prec.abs_tol < floor_err)
        throw ToleranceError("L_chi_2_series: abs_tol below double-precision summation floor");

    // Whole periods up to n = K q, then Hurwitz tails per residue class.
    const long K = 64;
    CompensatedSum partial;
    for (long n = K * q; n >= 1; --n) {
        const int c = chi[static_cast<std::size_t>(n % q == 0 ? q : n % q)];
        if (c == 0) continue;
        const double dn = static_cast<double>(n);
        partial.add(c / (dn * dn));
    }
    double rem_bound = 0.0;
    const double inv_q2 = 1.0 / (static_cast<double>(q) * static_cast<double>(q));
    for (long a = 1; a <= q; ++a) {
        const int c = chi[static_cast<std::size_t>(a)];
        if (c == 0) continue;
        double rem = 0.0;
        const double h = hurwitz_zeta2_large(static_cast<double>(K) + static_cast<double>(a) / q, rem);
        partial.add(c * inv_q2 * h);
        rem_bound += inv_q2 * rem;
    }
    SeriesResult out;
    out.value = partial.value();
    out.err_estimate = rem_bound + 2.0 * eps * partial.abs_sum;
    out.terms = K * q;
    if (out.err_estimate > prec.abs_tol)
        throw ToleranceError("L_chi_2_series: error bound exceeds requested tolerance");
    return out;
}

double L_chi_2(long D0, const Precision& prec) {
    require_fundamental(D0, "L_chi_2");
    if (D0 > 0) {
        const double lm1 = bernoulli_L_minus1(D0).to_double();
        return -2.0 * kPi * kPi * std::pow(static_cast<double>(D0), -1.5) * lm1;
    }
    return L_chi_2_series(D0, prec).value;
}

}  // namespace kudla
