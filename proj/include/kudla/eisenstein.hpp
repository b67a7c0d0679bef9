#pragma once

// Fourier coefficients of the weight-5/2 Eisenstein series on the (3,2)
// lattice: the constant C(gamma,m,0), the v-dependent c0 and its
// s-derivative, and Cohen's H(2,4m) as the second route.

#include <optional>

#include "kudla/arith.hpp"
#include "kudla/precision.hpp"
#include "kudla/rational.hpp"

namespace kudla {

struct CohenNumber {
    ExactRational value;
    long m4 = 0;
};

struct EisensteinValue {
    double C = 0.0;
    double c0 = 0.0;
    double a = 0.0;                // 4 pi m v, same sign as m
    std::optional<double> kappa;   // C'/C when the caller supplied it
};

/// H(2, 4m) = L(-1, chi_D0) xi(D0, c), c the Humbert conductor. m > 0 only.
CohenNumber cohen_H(const CaseIndex& c);
/// H(2, 0) = zeta(-3).
ExactRational cohen_H0();
/// Constant term of the Kudla-normalized series.
inline constexpr int kKudlaConstantTerm = 1;

/// C = -960 pi^{-2} |m|^{3/2} L(2, chi_D0) sigma, with L(2, chi) from the
/// Dirichlet series (no functional equation on this path).
double coefficient_C(const CaseIndex& c, const Precision& prec = {});
/// For m > 0 the pi^2 cancels: C = 240 L(-1, chi_D0) xi(D0, c).
ExactRational coefficient_C_exact(const CaseIndex& c);

/// C e^{-a/2} for m > 0, 0 for m < 0.
double coefficient_c0(const CaseIndex& c, double v, const Precision& prec = {});
/// m > 0: C e^{-a/2} (J_+(3/2, a) + kappa); m < 0: C e^{-|a|/2} J_-(3/2, |a|).
double coefficient_c0_prime(const CaseIndex& c, double v, double kappa, const Precision& prec = {});

/// A(m) = 120 H(2, 4m); the Kudla series is half of the other normalization.
ExactRational kudla_A(const CaseIndex& c);

EisensteinValue eisenstein_value(const CaseIndex& c, double v, std::optional<double> kappa = std::nullopt,
                                 const Precision& prec = {});

}  // namespace kudla
