#pragma once

// Covolumes of Bianchi, Hilbert modular and stabilizer groups, each tagged
// with the volume form it is measured in.

#include <optional>
#include <string>

#include "kudla/arith.hpp"
#include "kudla/precision.hpp"
#include "kudla/rational.hpp"

namespace kudla {

enum class VolumeConvention {
    H_plus,   // dx dy dr / r^3 on hyperbolic 3-space
    H2_unit,  // dx1 dy1 dx2 dy2 / (y1 y2)^2
    H2_HG,    // same with an extra (2 pi)^{-2}
    Siegel,   // normalization of the stabilizer volumes
};

std::string to_string(VolumeConvention c);

enum class SymmetricSpace { D22, D13 };

struct VolumeValue {
    double value = 0.0;
    /// value = exact_part * pi^pi_power when present.
    std::optional<ExactRational> exact_part;
    int pi_power = 0;
    VolumeConvention convention = VolumeConvention::Siegel;
};

/// |dK|^{3/2} L(2, chi_dK) / 24 for imaginary quadratic dK.
VolumeValue humbert_V13(long dK, const Precision& prec = {});
/// The Dedekind-zeta form |dK|^{3/2} zeta_K(2) / (4 pi^2).
double humbert_V13_dedekind(long dK, const Precision& prec = {});

/// f^3 prod_{p|f}(1 - chi(p)/p^2) |dK|^{3/2} L(2, chi) / (12 pi^2), exact part
/// 2 f^3 prod(...) zeta_K(-1).
VolumeValue hirzebruch_vol(long dK, long f, const Precision& prec = {});

struct HirzebruchLines {
    double exact_zeta;   // 2 f^3 prod zeta_K(-1)
    double zeta_two;     // 2 f^3 prod zeta_K(2) dK^{3/2} / (4 pi^4)
    double l_series;     // f^3 prod |dK|^{3/2} L(2, chi) / (12 pi^2)
};
HirzebruchLines hirzebruch_vol_lines(long dK, long f, const Precision& prec = {});

/// |dK|^{3/2} L(2, chi) / 3 with exact alternative 8 pi^2 zeta_K(-1).
VolumeValue V22(long dK, const Precision& prec = {});

/// Stabilizer covolume for the index c: prefactor 1/12 (D22, m > 0) or 1/24
/// (D13, m < 0) times |D0|^{3/2} L(2, chi_D0) c^3 prod_{p|c}(1 - chi(p)/p^2),
/// c the Humbert conductor.
VolumeValue vol_sie(const CaseIndex& c, SymmetricSpace space, const Precision& prec = {});

/// zeta_K(-1) = zeta(-1) L(-1, chi_dK), exact.
ExactRational dedekind_zeta_minus1(long dK);

ExactRational zeta_minus1();
ExactRational zeta_minus3();
/// B = |zeta(-1) zeta(-3)| = 1/1440.
ExactRational constant_B();
/// zeta(-1) zeta(-3) = -1/1440 with the standard signs.
ExactRational constant_B_signed();

inline constexpr double kVolSO2 = 2.0 * kPi;
inline constexpr double kVolSO3 = 8.0 * kPi * kPi;
inline constexpr double kVolSO3modSO2 = 4.0 * kPi;

}  // namespace kudla
