#pragma once

// Exact number-theoretic primitives: real Kronecker characters, divisor sums,
// the fundamental-discriminant split of 4m / 16m, generalized Bernoulli
// numbers and L(s, chi_D) at s = -1 and s = 2.

#include <cstdint>
#include <utility>
#include <vector>

#include "kudla/precision.hpp"
#include "kudla/rational.hpp"

namespace kudla {

/// Component/caseness data of a Fourier index.
///
/// `m4` is the integer 4m; gamma = 0 iff m is an integer, gamma = 1 iff
/// m is in Z + 1/4. `f` follows the split D0 f^2 = 4m (gamma = 0) resp.
/// D0 f^2 = 16m (gamma = 1); `humbert_conductor()` is the c with D0 c^2 = 4m,
/// the discriminant of the Humbert surfaces indexed by m.
struct CaseIndex {
    int gamma = 0;
    long m4 = 0;
    int delta_gamma = 1;
    long D0 = 1;
    long f = 1;

    ExactRational m() const { return ExactRational(m4, 4); }
    double m_double() const { return static_cast<double>(m4) / 4.0; }
    long humbert_conductor() const { return gamma == 0 ? f : f / 2; }
    /// Humbert discriminant Delta = 4m.
    long discriminant() const { return m4; }

    friend bool operator==(const CaseIndex&, const CaseIndex&) = default;
};

bool is_fundamental_discriminant(long D);

/// Kronecker symbol (D/n) for a discriminant D (D = 0, 1 mod 4) and n >= 1.
int kronecker_chi(long D, long n);

/// Unique (D0, f) with D0 fundamental (or 1) and D0 f^2 = 4m resp. 16m.
CaseIndex split_discriminant(int gamma, const ExactRational& m);
/// Same, with the class read off from 4m mod 4.
CaseIndex case_from_m4(long m4);

std::vector<long> divisors(long n);
std::vector<std::pair<long, int>> factorize(long n);
int mobius(long n);
long sigma3(long n);

/// xi(D0, f) = sum_{d | f} mu(d) chi_{D0}(d) d sigma_3(f/d).
long xi_twisted(long D0, long f);

/// f^{-3} sum_{d | f} (f/d)^3 prod_{p | f/d} (1 - chi_{D0}(p) p^{-2}).
ExactRational twisted_divisor_ratio(long D0, long f);

/// sigma_{gamma,m}(5/2), evaluated at the Humbert conductor of `c`.
ExactRational sigma_gamma_m(const CaseIndex& c);

/// L(-1, chi_{D0}) = -B_{2,chi}/2 from the closed Bernoulli polynomial sum.
/// Zero for negative D0 (odd character).
ExactRational bernoulli_L_minus1(long D0);

struct SeriesResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long terms = 0;
};

/// L(2, chi_{D0}) by the convergent Dirichlet series with an Euler–Maclaurin
/// tail per residue class. Valid for any fundamental D0.
SeriesResult L_chi_2_series(long D0, const Precision& prec = {});

/// L(2, chi_{D0}): functional equation -2 pi^2 D0^{-3/2} L(-1, chi) for
/// D0 > 0, direct series for D0 < 0.
double L_chi_2(long D0, const Precision& prec = {});

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace kudla
