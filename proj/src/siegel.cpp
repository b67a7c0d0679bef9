#include "kudla/siegel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kudla/errors.hpp"

namespace kudla {

SiegelPoint::SiegelPoint(Complex z1, Complex z2, Complex z3) : z1_(z1), z2_(z2), z3_(z3) {
    for (const Complex& w : {z1, z2, z3})
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw OutsideHalfSpaceError("z has non-finite entries");
    eta2_ = z1.imag() * z3.imag() - z2.imag() * z2.imag();
    if (!(z1.imag() > 0.0) || !(eta2_ > 0.0)) {
        std::ostringstream os;
        os << "z is not in the Siegel half-space (y1 = " << z1.imag() << ", y1 y3 - y2^2 = " << eta2_ << ")";
        throw OutsideHalfSpaceError(os.str());
    }
}

ExactRational AmbientVector::q() const { return x[2] * x[2] - x[0] * x[4] - x[1] * x[3]; }

std::array<double, 5> AmbientVector::to_double() const {
    std::array<double, 5> out{};
    for (int i = 0; i < 5; ++i) out[i] = x[i].to_double();
    return out;
}

ExactRational pairing(const AmbientVector& a, const AmbientVector& b) {
    return ExactRational(2) * a.x[2] * b.x[2] - a.x[0] * b.x[4] - a.x[4] * b.x[0] - a.x[1] * b.x[3] -
           a.x[3] * b.x[1];
}

std::array<Complex, 5> embed_u(const SiegelPoint& z) {
    return {z.z2() * z.z2() - z.z1() * z.z3(), -z.z1(), -z.z2(), -z.z3(), Complex(1.0, 0.0)};
}

std::array<Complex, 5> psi_coefficients(const SiegelPoint& z) {
    return {Complex(1.0, 0.0), -z.z3(), 2.0 * z.z2(), -z.z1(), z.z2() * z.z2() - z.z1() * z.z3()};
}

Complex psi(const SiegelPoint& z, const std::array<double, 5>& x) {
    const auto w = psi_coefficients(z);
    Complex s = 0.0;
    for (int i = 0; i < 5; ++i) s += w[i] * x[i];
    return s;
}

Complex psi(const SiegelPoint& z, const AmbientVector& x) { return psi(z, x.to_double()); }

double majorant_R(const SiegelPoint& z, const std::array<double, 5>& x) {
    return std::norm(psi(z, x)) / (2.0 * z.eta2());
}

double majorant_R(const SiegelPoint& z, const AmbientVector& x) { return majorant_R(z, x.to_double()); }

Matrix5 form_gram() {
    Matrix5 Q = Matrix5::Zero();
    Q(0, 4) = Q(4, 0) = -1.0;
    Q(1, 3) = Q(3, 1) = -1.0;
    Q(2, 2) = 2.0;
    return Q;
}

Matrix5 majorant_gram(const SiegelPoint& z) {
    const auto R = [&z](int i, int j) {
        std::array<double, 5> e{};
        e[i] += 1.0;
        if (j >= 0) e[j] += 1.0;
        return majorant_R(z, e);
    };
    Matrix5 P = form_gram();
    for (int i = 0; i < 5; ++i) {
        P(i, i) += 2.0 * R(i, -1);
        for (int j = i + 1; j < 5; ++j) {
            const double off = R(i, j) - R(i, -1) - R(j, -1);
            P(i, j) += off;
            P(j, i) += off;
        }
    }
    if (Eigen::LLT<Matrix5>(P).info() != Eigen::Success)
        throw std::logic_error("majorant_gram: P_z is not positive definite");
    return P;
}

double siegel_condition_residual(const SiegelPoint& z) {
    const Matrix5 P = majorant_gram(z);
    const Matrix5 Q = form_gram();
    return (P * Q.inverse() * P - Q).cwiseAbs().maxCoeff();
}

ExactRational humbert_discriminant(const AmbientVector& x) {
    const ExactRational t = ExactRational(2) * x.x[2];
    return t * t - ExactRational(4) * x.x[0] * x.x[4] - ExactRational(4) * x.x[1] * x.x[3];
}

}  // namespace kudla
