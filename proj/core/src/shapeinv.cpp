#include "pdmsusy/shapeinv.hpp"

#include "pdmsusy/errors.hpp"
#include "pdmsusy/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace pdmsusy {

double pct_coordinate(const MassProfile& p, double z, double zref, double tol) {
  if (!p.domain().contains(z)) throw DomainError(z, "outside the mass profile domain");
  if (!p.domain().contains(zref)) throw DomainError(zref, "reference point outside the domain");
  const Expression& m = p.m();
  return adaptive_simpson(
      [&m](double y) {
        const double v = m.evaluate(y);
        if (!(v > 0.0)) throw NonPositiveMass(y);
        return std::sqrt(v);
      },
      zref, z, tol);
}

Expression pct_coordinate_expression(const MassProfile& p, double zref, double tol) {
  return integral(p.sqrt_m(), zref, tol);
}

SuperpotentialDecomposition uniform_shift_superpotential(const MassProfile& p, double epsilon,
                                                         double zref) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw InvalidArgument("uniform shift epsilon must be positive");
  if (!p.domain().contains(zref)) throw DomainError(zref, "reference point outside the domain");
  const Expression zbar = pct_coordinate_expression(p, zref);
  SuperpotentialDecomposition s;
  s.w0 = -0.5 * p.d_inv_sqrt() + (0.5 * epsilon) * zbar;
  s.dw = p.d_inv_sqrt();
  s.provenance = Provenance::uniform_shift;
  return s;
}

UniformShiftModel::UniformShiftModel(MassProfile profile, double epsilon, double zref)
    : profile_(std::move(profile)),
      epsilon_(epsilon),
      zref_(zref),
      split_(uniform_shift_superpotential(profile_, epsilon, zref)),
      zbar_(pct_coordinate_expression(profile_, zref)) {}

Expression UniformShiftModel::unperturbed_potential() const {
  return pow(w0(), 2.0) - differentiate(w0() * profile_.inv_sqrt()) + e0();
}

Expression UniformShiftModel::total_potential() const {
  return partner_potentials(split_.total(), profile_).v1 + e0();
}

double uniform_shift_ground_state(const UniformShiftModel& m, double z) {
  const double zb = m.zbar().evaluate(z);
  return std::pow(m.profile().m().evaluate(z), 0.25) * std::exp(-0.25 * m.epsilon() * zb * zb);
}

double uniform_shift_unperturbed_ground_state(const UniformShiftModel& m, double z) {
  const double zb = m.zbar().evaluate(z);
  return std::pow(m.profile().m().evaluate(z), -0.25) * std::exp(-0.25 * m.epsilon() * zb * zb);
}

double uniform_shift_spectrum(double epsilon, int n) {
  if (n < 0) throw InvalidArgument("level index must be non-negative");
  return (n + 0.5) * epsilon;
}

MorseCoefficients morse_coefficients(const MassProfile& p, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("lambda must be positive");
  const Expression b1 = lambda * p.sqrt_m();
  const Expression b2 = -((0.5 * lambda) * p.sqrt_m() * p.d_inv_sqrt() + 0.5 * p.d2_inv_sqrt());
  return {b1, b2};
}

namespace {

RealFunction positive_mass_guard(const MassProfile& p, const Expression& e) {
  return [&p, &e](double y) {
    if (!(p.m().evaluate(y) > 0.0)) throw NonPositiveMass(y);
    return e.evaluate(y);
  };
}

void check_grid_in_domain(const MassProfile& p, const Grid& grid, double zref) {
  const double slack = 1e-9 * grid.h();
  if (grid.node(0) < p.domain().lo - slack || grid.node(grid.n() - 1) > p.domain().hi + slack)
    throw DomainError(grid.node(0), "grid extends beyond the mass profile domain");
  if (!std::isfinite(zref) || zref < grid.node(0) || zref > grid.node(grid.n() - 1))
    throw InvalidArgument("reference point must lie within the grid nodes");
}

std::size_t nearest_node(const Grid& grid, double zref) {
  const double pos = std::round((zref - grid.z_min()) / grid.h() - 1.0);
  return static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(grid.n() - 1)));
}

}  // namespace

GridFunction morse_f0_quadrature(const MassProfile& p, double lambda, double c, double zref,
                                 const Grid& grid, double tol) {
  check_grid_in_domain(p, grid, zref);
  const MorseCoefficients b = morse_coefficients(p, lambda);
  const RealFunction b1 = positive_mass_guard(p, b.b1);
  const RealFunction b2 = positive_mass_guard(p, b.b2);

  // I(z) = \int_{zref}^{z} b1 at the nodes.
  const GridFunction inner = cumulative_integral_adaptive(b1, grid, zref, tol);

  // Integrand b2(y) exp(I(y)) on an interval whose left or right node
  // (base, with known I) anchors the inner integral.
  auto outer = [&](double base, double base_value) {
    return [&, base, base_value](double y) {
      return b2(y) * std::exp(base_value + adaptive_simpson(b1, base, y, tol));
    };
  };

  const std::size_t n = grid.n();
  const std::size_t k = nearest_node(grid, zref);
  std::vector<double> j(n);
  j[k] = adaptive_simpson(outer(zref, 0.0), zref, grid.node(k), tol);
  for (std::size_t i = k + 1; i < n; ++i)
    j[i] = j[i - 1] + adaptive_simpson(outer(grid.node(i - 1), inner[i - 1]), grid.node(i - 1),
                                       grid.node(i), tol);
  for (std::size_t i = k; i-- > 0;)
    j[i] = j[i + 1] - adaptive_simpson(outer(grid.node(i + 1), inner[i + 1]), grid.node(i),
                                       grid.node(i + 1), tol);

  std::vector<double> f0(n);
  for (std::size_t i = 0; i < n; ++i) f0[i] = (c + j[i]) * std::exp(-inner[i]);
  return GridFunction(grid, std::move(f0));
}

MorseLikeModel::MorseLikeModel(double big_a, double c, double lambda, double a, Interval domain)
    : big_a_(big_a),
      c_(c),
      lambda_(lambda),
      a_(a),
      profile_((a > 0.0 ? MassProfile(rational_square_mass(a), domain)
                        : throw InvalidArgument("mass shape parameter a must be positive"))) {
  if (!(lambda > 0.0)) throw InvalidArgument("lambda must be positive");
}

double morse_f0_closed_form(const MorseLikeModel& m, double z) {
  const double a = m.a();
  const double s = a + z * z;
  return m.c() * std::exp(-m.lambda() * (z + (a - 1.0) * std::atan(z))) - z * (a - 1.0) / (s * s);
}

double morse_superpotential_closed_form(const MorseLikeModel& m, double z) {
  const double a = m.a();
  const double s = a + z * z;
  return m.big_a() + morse_f0_closed_form(m, z) + 2.0 * z * (a - 1.0) / (s * s);
}

GridFunction morse_superpotential_general(const MassProfile& p, double big_a, double c,
                                          double lambda, double zref, const Grid& grid,
                                          double tol) {
  check_grid_in_domain(p, grid, zref);
  const MorseCoefficients b = morse_coefficients(p, lambda);
  const GridFunction exponent =
      cumulative_integral_adaptive(positive_mass_guard(p, b.b1), grid, zref, tol);
  std::vector<double> w(grid.n());
  for (std::size_t i = 0; i < grid.n(); ++i) {
    const double z = grid.node(i);
    // -(1/(2 sqrt M))' + (1/sqrt M)' = (1/2)(1/sqrt M)'.
    w[i] = big_a + c * std::exp(-exponent[i]) + 0.5 * p.d_inv_sqrt().evaluate(z);
  }
  return GridFunction(grid, std::move(w));
}

double si_spectrum(std::span<const double> r_values, double e0, std::size_t n) {
  if (n > r_values.size())
    throw IndexError("level " + std::to_string(n) + " needs more shape-invariance remainders than the " +
                     std::to_string(r_values.size()) + " supplied");
  double e = e0;
  for (std::size_t k = 0; k < n; ++k) e += r_values[k];
  return e;
}

}  // namespace pdmsusy
