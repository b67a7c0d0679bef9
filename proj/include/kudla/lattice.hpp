#pragma once

// Integer vectors u in Z^5 with qhat(u) = u3^2 - 4 u2 u4 - 4 u1 u5 = 4m,
// their enumeration under the majorant at a point z, and the Green function
// summed over them.
//
// Normalization: u corresponds to the ambient vector
//   y = (u1, u2, u3/2, u4, u5),  q(y) = qhat(u) / 4 = m,
// and every R below is R(y, z). The majorant value of u is q(y) + R(y, z),
// which is half of the positive form y^T P_z y.

#include <array>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "kudla/arith.hpp"
#include "kudla/precision.hpp"
#include "kudla/siegel.hpp"

namespace kudla {

struct LatticeVector {
    std::array<long, 5> u{};

    long qhat() const { return u[2] * u[2] - 4 * u[1] * u[3] - 4 * u[0] * u[4]; }
    bool primitive() const;
    AmbientVector ambient() const;
    LatticeVector operator-() const { return {{-u[0], -u[1], -u[2], -u[3], -u[4]}}; }

    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

/// (1,0,0,0,-m) for integer m, (0,1,1,-M,0) for m = M + 1/4.
LatticeVector orbit_representative(int gamma, const ExactRational& m);
LatticeVector orbit_representative(const CaseIndex& c);

/// R(y, z) for the ambient vector y of u.
double lattice_R(const SiegelPoint& z, const LatticeVector& v);
/// q(y) + R(y, z) = (1/2) y^T P_z y.
double majorant_value(const SiegelPoint& z, const LatticeVector& v);

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

/// All nonzero u with majorant_value <= bound, sorted lexicographically.
/// LLL-reduces the majorant Gram matrix, then enumerates Fincke–Pohst style.
/// Throws ResourceError when more than `max_points` candidates are found.
std::vector<LatticeVector> enumerate_bounded(const SiegelPoint& z, double bound, const Precision& prec = {},
                                             std::size_t max_points = kDefaultEnumerationCap);

/// Pairs (n, index of m/n^2) over every n with n^2 | 4m such that 4m/n^2 is
/// again 0 or 1 mod 4, i.e. every sublattice n L*_{m/n^2} of vectors with
/// content n. The class of the child may differ from the parent's.
std::vector<std::pair<long, CaseIndex>> primitive_decomposition(const CaseIndex& c);

struct GreenTerm {
    LatticeVector u;
    double R = 0.0;
    double beta = 0.0;  // beta_1(2 pi v R)
};

struct GreenEvaluation {
    double value = 0.0;      // sum over u with qhat(u) = 4m and R <= radius
    long terms_used = 0;
    double tail_bound = 0.0; // estimate of the omitted R > radius part
    double radius = 0.0;
    bool empty = false;      // radius admitted no term
    std::vector<GreenTerm> terms;

    /// Sum over pairs {u, -u}.
    double half_sum() const { return 0.5 * value; }
};

inline constexpr double kSingularThreshold = 1e-14;

/// Sum of beta_1(2 pi v R(u, z)) over u with qhat(u) = 4m and R <= radius.
/// Throws SingularPointError when some R < kSingularThreshold.
GreenEvaluation green_function(const CaseIndex& c, double v, const SiegelPoint& z, double radius,
                               const Precision& prec = {}, std::size_t max_points = kDefaultEnumerationCap);

}  // namespace kudla
