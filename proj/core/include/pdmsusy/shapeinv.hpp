#pragma once

#include "pdmsusy/expr.hpp"
#include "pdmsusy/grid.hpp"
#include "pdmsusy/mass.hpp"
#include "pdmsusy/susy.hpp"

#include <span>

namespace pdmsusy {

// All indefinite integrals below are anchored at a reference point zref
// (default 0): zbar(z) = \int_{zref}^{z} sqrt(M). Moving zref shifts zbar by
// a constant and rescales the Morse integration constant C.

/// Point-canonical coordinate zbar(z) = \int_{zref}^{z} sqrt(M(y)) dy by
/// adaptive Simpson to absolute tolerance `tol`. Throws DomainError when
/// [zref, z] leaves the profile domain, NonPositiveMass if M <= 0 is met.
double pct_coordinate(const MassProfile& p, double z, double zref = 0.0,
                      double tol = kDefaultIntegralTolerance);

/// zbar as an Expression (an integral node), so d zbar/dz = sqrt(M) exactly.
Expression pct_coordinate_expression(const MassProfile& p, double zref = 0.0,
                                     double tol = kDefaultIntegralTolerance);

/// Uniform-shift superpotential: w0 = -(1/2)(1/sqrt M)' + (eps/2) zbar,
/// dw = (1/sqrt M)' (Zhu-Kroemer selection). Throws InvalidArgument unless
/// epsilon > 0.
SuperpotentialDecomposition uniform_shift_superpotential(const MassProfile& p, double epsilon,
                                                         double zref = 0.0);

/// Oscillator-like family whose SUSY partners differ by the constant
/// epsilon, with ground energy e0 = epsilon / 2.
class UniformShiftModel {
 public:
  UniformShiftModel(MassProfile profile, double epsilon, double zref = 0.0);

  double epsilon() const noexcept { return epsilon_; }
  double e0() const noexcept { return 0.5 * epsilon_; }
  double zref() const noexcept { return zref_; }
  const MassProfile& profile() const noexcept { return profile_; }
  const Expression& w0() const noexcept { return split_.w0; }
  const Expression& dw() const noexcept { return split_.dw; }
  const SuperpotentialDecomposition& decomposition() const noexcept { return split_; }
  const Expression& zbar() const noexcept { return zbar_; }

  /// V0 defined by the unperturbed Riccati equation,
  /// V0 = W0^2 - (W0 / sqrt M)' + E0.
  Expression unperturbed_potential() const;

  /// Effective potential solved by the full superpotential W = W0 + dW:
  /// V1(W) + E0 = V0 + U_ZK + 2 W0 dW. Its ladder is (n + 1/2) epsilon.
  Expression total_potential() const;

 private:
  MassProfile profile_;
  double epsilon_;
  double zref_;
  SuperpotentialDecomposition split_;
  Expression zbar_;
};

/// Unnormalised ground state M^{1/4}(z) exp(-epsilon zbar^2 / 4).
double uniform_shift_ground_state(const UniformShiftModel& m, double z);

/// Ground state paired with the unperturbed V0 (no moderating factor):
/// M^{-1/4}(z) exp(-epsilon zbar^2 / 4).
double uniform_shift_unperturbed_ground_state(const UniformShiftModel& m, double z);

/// E_n = (n + 1/2) epsilon.
double uniform_shift_spectrum(double epsilon, int n);

struct MorseCoefficients {
  Expression b1;
  Expression b2;
};

/// b1 = lambda sqrt(M), b2 = -[(lambda/2) sqrt(M) (1/sqrt M)' + (1/2)(1/sqrt M)''],
/// the coefficients of the linear equation f0' + b1 f0 = b2.
MorseCoefficients morse_coefficients(const MassProfile& p, double lambda);

/// Integrating-factor solution
///   f0(z) = {C + \int_{zref}^{z} b2(y) exp(I(y)) dy} exp(-I(z)),  I(y) = \int_{zref}^{y} b1,
/// with both nested integrals accumulated interval by interval on `grid`
/// (adaptive Simpson inside each interval, tolerance `tol`).
GridFunction morse_f0_quadrature(const MassProfile& p, double lambda, double c, double zref,
                                 const Grid& grid, double tol = 1e-13);

/// Morse-like family on the rational-square mass [(a + z^2)/(1 + z^2)]^2.
class MorseLikeModel {
 public:
  MorseLikeModel(double big_a, double c, double lambda, double a,
                 Interval domain = kDefaultDomain);

  double big_a() const noexcept { return big_a_; }
  double c() const noexcept { return c_; }
  double lambda() const noexcept { return lambda_; }
  double a() const noexcept { return a_; }
  const MassProfile& profile() const noexcept { return profile_; }

 private:
  double big_a_, c_, lambda_, a_;
  MassProfile profile_;
};

/// f0 in closed form for the rational-square mass, zref = 0:
/// C exp[-lambda (z + (a-1) atan z)] - z (a-1) / (a + z^2)^2.
double morse_f0_closed_form(const MorseLikeModel& m, double z);

/// W = A + f0 + dW with dW = (1/sqrt M)' = 2 z (a-1)/(a + z^2)^2.
double morse_superpotential_closed_form(const MorseLikeModel& m, double z);

/// W = {A + C exp[-\int b1] - (1/(2 sqrt M))'} + (1/sqrt M)' on the grid, with
/// the exponent by quadrature. Valid for any mass profile.
GridFunction morse_superpotential_general(const MassProfile& p, double big_a, double c,
                                          double lambda, double zref, const Grid& grid,
                                          double tol = 1e-13);

/// Shape-invariance ladder E_n = e0 + r_1 + ... + r_n, r_values holding r_1
/// first. Throws IndexError if n exceeds the sequence.
double si_spectrum(std::span<const double> r_values, double e0, std::size_t n);

}  // namespace pdmsusy
