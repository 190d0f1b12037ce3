#pragma once

#include "pdmsusy/expr.hpp"
#include "pdmsusy/grid.hpp"
#include "pdmsusy/mass.hpp"

#include <cstddef>

namespace pdmsusy {

// Units: hbar = 2 m0 = 1, so W carries units of energy^{1/2}. The
// factorisation is A = (1/sqrt M) d/dz + W, A+ = -d/dz (. / sqrt M) + W,
// with the sign convention W0 = -(1/sqrt M) Phi'/Phi.

enum class Provenance { uniform_shift, morse_like, user_supplied };

/// W = w0 + dw: w0 solves the unperturbed Riccati equation for V0 and dw
/// absorbs the ordering modification U_{alpha gamma}.
struct SuperpotentialDecomposition {
  Expression w0;
  Expression dw;
  Provenance provenance = Provenance::user_supplied;

  Expression total() const { return w0 + dw; }
};

struct PartnerPair {
  Expression v1;
  Expression v2;
};

/// dW = ((alpha + gamma) / 2) M' / M^{3/2}.
Expression delta_w(const MassProfile& p, const OrderingParameters& o);

/// V1 = W^2 - (W / sqrt M)',  V2 = V1 + 2 W' / sqrt M - (1/sqrt M)(1/sqrt M)''.
PartnerPair partner_potentials(const Expression& w, const MassProfile& p);

/// W0^2 - (W0 / sqrt M)' - (V0 - E0); identically zero for an exact W0.
Expression riccati_residual_unperturbed(const Expression& w0, const MassProfile& p,
                                        const Expression& v0, double e0);

/// dW^2 - (dW / sqrt M)' - U_{alpha gamma} with dW from delta_w(). Equals
/// ((alpha - gamma)/2)^2 M'^2 / M^3, so it vanishes exactly when alpha = gamma.
Expression modification_residual(const MassProfile& p, const OrderingParameters& o);

/// V2 - (V1 + U_ZK) - 2 W' / sqrt M. Zero for every M and W because
/// U_ZK = -(1/sqrt M)(1/sqrt M)''.
Expression duality_check(const MassProfile& p, const Expression& w);

/// -2 W0 dW. In general a function of z, reported rather than assumed constant.
Expression energy_shift_term(const Expression& w0, const Expression& dw);

enum class LadderDirection { lower, raise };

/// A psi = (1/sqrt M) psi' + W psi  (lower),
/// A+ psi = -(psi / sqrt M)' + W psi  (raise),
/// with second-order centred differences and second-order one-sided
/// differences at the first and last node. Throws GridMismatch unless psi's
/// grid spans the profile domain.
GridFunction apply_ladder(const GridFunction& psi, const Expression& w, const MassProfile& p,
                          LadderDirection direction);

inline constexpr std::size_t kDefaultReportPoints = 1024;

struct ResidualReport {
  double max_abs = 0.0;
  double z_at_max = 0.0;
};

/// Max |e(z)| over `points` equally spaced points of [lo, hi] (endpoints
/// included). Evaluation errors propagate.
ResidualReport max_abs_on(const Expression& e, Interval domain,
                          std::size_t points = kDefaultReportPoints);

}  // namespace pdmsusy
