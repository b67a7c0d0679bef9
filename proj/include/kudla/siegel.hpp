#pragma once

// Points of the Siegel half-space of genus 2 in the (z1, z2, z3)
// parametrization, the isotropic vector u(z) of the (3,2) quadratic space,
// and the majorant attached to z.

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "kudla/rational.hpp"

namespace kudla {

using Complex = std::complex<double>;
using Matrix5 = Eigen::Matrix<double, 5, 5>;
using Vector5 = Eigen::Matrix<double, 5, 1>;

class SiegelPoint {
public:
    /// Throws OutsideHalfSpaceError unless y1 > 0 and y1 y3 - y2^2 > 0.
    SiegelPoint(Complex z1, Complex z2, Complex z3);

    Complex z1() const { return z1_; }
    Complex z2() const { return z2_; }
    Complex z3() const { return z3_; }
    double y1() const { return z1_.imag(); }
    double y2() const { return z2_.imag(); }
    double y3() const { return z3_.imag(); }
    double eta2() const { return eta2_; }

private:
    Complex z1_, z2_, z3_;
    double eta2_;
};

/// x in Q^5 with q(x) = x3^2 - x1 x5 - x2 x4; (x, y) is the polarization
/// with (x, x) = 2 q(x).
struct AmbientVector {
    std::array<ExactRational, 5> x;

    ExactRational q() const;
    std::array<double, 5> to_double() const;
};

ExactRational pairing(const AmbientVector& x, const AmbientVector& y);

/// u(z) = (z2^2 - z1 z3, -z1, -z2, -z3, 1).
std::array<Complex, 5> embed_u(const SiegelPoint& z);

/// Coefficients w with psi(z, x) = sum w_i x_i.
std::array<Complex, 5> psi_coefficients(const SiegelPoint& z);

/// x1 - x2 z3 + 2 x3 z2 - x4 z1 + x5 (z2^2 - z1 z3); vanishes iff z lies on
/// the Humbert surface of x.
Complex psi(const SiegelPoint& z, const std::array<double, 5>& x);
Complex psi(const SiegelPoint& z, const AmbientVector& x);

/// R(x, z) = |psi|^2 / (2 eta^2).
double majorant_R(const SiegelPoint& z, const std::array<double, 5>& x);
double majorant_R(const SiegelPoint& z, const AmbientVector& x);

/// Gram matrix of the bilinear form (x, y).
Matrix5 form_gram();

/// Gram matrix P_z of x -> (x, x) + 2 R(x, z), polarized from majorant_R.
/// Throws std::logic_error if the result is not positive definite.
Matrix5 majorant_gram(const SiegelPoint& z);

/// max |P Q^{-1} P - Q|.
double siegel_condition_residual(const SiegelPoint& z);

/// (2 x3)^2 - 4 x1 x5 - 4 x2 x4 = 4 q(x).
ExactRational humbert_discriminant(const AmbientVector& x);

}  // namespace kudla
