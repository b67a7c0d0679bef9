#include "kudla/volumes.hpp"

#include <cmath>

#include "kudla/errors.hpp"

namespace kudla {
namespace {

ExactRational euler_product(long D, long f) {
    ExactRational e(1);
    for (const auto& [p, k] : factorize(f)) {
        (void)k;
        e *= ExactRational(1) - ExactRational(kronecker_chi(D, p), p * p);
    }
    return e;
}

void require_real_quadratic(long dK, const char* who) {
    if (dK <= 1 || !is_fundamental_discriminant(dK))
        throw DomainError(std::string(who) + ": dK must be a fundamental discriminant > 1");
}

}  // namespace

std::string to_string(VolumeConvention c) {
    switch (c) {
        case VolumeConvention::H_plus: return "H_plus";
        case VolumeConvention::H2_unit: return "H2_unit";
        case VolumeConvention::H2_HG: return "H2_HG";
        case VolumeConvention::Siegel: return "Siegel";
    }
    return "?";
}

ExactRational zeta_minus1() { return ExactRational(-1, 12); }
ExactRational zeta_minus3() { return ExactRational(1, 120); }
ExactRational constant_B() { return ExactRational(1, 1440); }
ExactRational constant_B_signed() { return zeta_minus1() * zeta_minus3(); }

ExactRational dedekind_zeta_minus1(long dK) { return zeta_minus1() * bernoulli_L_minus1(dK); }

VolumeValue humbert_V13(long dK, const Precision& prec) {
    if (dK >= 0 || !is_fundamental_discriminant(dK))
        throw DomainError("humbert_V13: dK must be a negative fundamental discriminant");
    VolumeValue out;
    out.value = std::pow(static_cast<double>(-dK), 1.5) * L_chi_2_series(dK, prec).value / 24.0;
    out.convention = VolumeConvention::H_plus;
    return out;
}

double humbert_V13_dedekind(long dK, const Precision& prec) {
    if (dK >= 0 || !is_fundamental_discriminant(dK))
        throw DomainError("humbert_V13_dedekind: dK must be a negative fundamental discriminant");
    const double zetaK2 = kPi * kPi / 6.0 * L_chi_2_series(dK, prec).value;
    return std::pow(static_cast<double>(-dK), 1.5) * zetaK2 / (4.0 * kPi * kPi);
}

HirzebruchLines hirzebruch_vol_lines(long dK, long f, const Precision& prec) {
    require_real_quadratic(dK, "hirzebruch_vol");
    if (f < 1) throw DomainError("hirzebruch_vol: f must be positive");
    const double scale = static_cast<double>(f * f * f) * euler_product(dK, f).to_double();
    const double L2 = L_chi_2_series(dK, prec).value;
    const double d32 = std::pow(static_cast<double>(dK), 1.5);
    HirzebruchLines lines{};
    lines.exact_zeta = 2.0 * scale * dedekind_zeta_minus1(dK).to_double();
    lines.zeta_two = 2.0 * scale * (kPi * kPi / 6.0 * L2) * d32 / (4.0 * std::pow(kPi, 4));
    lines.l_series = scale * d32 * L2 / (12.0 * kPi * kPi);
    return lines;
}

VolumeValue hirzebruch_vol(long dK, long f, const Precision& prec) {
    const HirzebruchLines lines = hirzebruch_vol_lines(dK, f, prec);
    VolumeValue out;
    out.value = lines.l_series;
    out.exact_part = ExactRational(2 * f * f * f) * euler_product(dK, f) * dedekind_zeta_minus1(dK);
    out.convention = VolumeConvention::H2_HG;
    return out;
}

VolumeValue V22(long dK, const Precision& prec) {
    require_real_quadratic(dK, "V22");
    VolumeValue out;
    out.value = std::pow(static_cast<double>(dK), 1.5) * L_chi_2_series(dK, prec).value / 3.0;
    out.exact_part = ExactRational(8) * dedekind_zeta_minus1(dK);
    out.pi_power = 2;
    out.convention = VolumeConvention::H2_unit;
    return out;
}

VolumeValue vol_sie(const CaseIndex& c, SymmetricSpace space, const Precision& prec) {
    if (space == SymmetricSpace::D22 && c.m4 <= 0) throw DomainError("vol_sie: D22 requires m > 0");
    if (space == SymmetricSpace::D13 && c.m4 >= 0) throw DomainError("vol_sie: D13 requires m < 0");
    const long cond = c.humbert_conductor();
    const ExactRational local = ExactRational(cond * cond * cond) * euler_product(c.D0, cond);
    const double pref = space == SymmetricSpace::D22 ? 1.0 / 12.0 : 1.0 / 24.0;
    VolumeValue out;
    out.convention = VolumeConvention::Siegel;
    out.value = pref * std::pow(std::fabs(static_cast<double>(c.D0)), 1.5) * L_chi_2(c.D0, prec) * local.to_double();
    if (space == SymmetricSpace::D22) {
        // |D0|^{3/2} L(2, chi) = -2 pi^2 L(-1, chi) for real characters.
        out.exact_part = ExactRational(-1, 6) * bernoulli_L_minus1(c.D0) * local;
        out.pi_power = 2;
    }
    return out;
}

}  // namespace kudla
