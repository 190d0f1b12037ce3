#include "pdmsusy/susy.hpp"

#include "pdmsusy/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pdmsusy {

Expression delta_w(const MassProfile& p, const OrderingParameters& o) {
  o.validate();
  return (0.5 * (o.alpha + o.gamma)) * (p.dm() / pow(p.m(), 1.5));
}

PartnerPair partner_potentials(const Expression& w, const MassProfile& p) {
  const Expression& q = p.inv_sqrt();
  const Expression v1 = pow(w, 2.0) - differentiate(w * q);
  const Expression v2 = v1 + (2.0 * differentiate(w) * q - q * p.d2_inv_sqrt());
  return {v1, v2};
}

Expression riccati_residual_unperturbed(const Expression& w0, const MassProfile& p,
                                        const Expression& v0, double e0) {
  return pow(w0, 2.0) - differentiate(w0 * p.inv_sqrt()) - (v0 - e0);
}

Expression modification_residual(const MassProfile& p, const OrderingParameters& o) {
  const Expression dw = delta_w(p, o);
  return pow(dw, 2.0) - differentiate(dw * p.inv_sqrt()) - modification_term(p, o);
}

Expression duality_check(const MassProfile& p, const Expression& w) {
  const PartnerPair pair = partner_potentials(w, p);
  const Expression u_zk = modification_term(p, named_ordering(NamedOrdering::zk));
  return pair.v2 - (pair.v1 + u_zk) - 2.0 * differentiate(w) * p.inv_sqrt();
}

Expression energy_shift_term(const Expression& w0, const Expression& dw) { return -2.0 * w0 * dw; }

namespace {

// Second-order derivative estimate of samples f on a uniform grid.
std::vector<double> derivative(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  return d;
}

}  // namespace

GridFunction apply_ladder(const GridFunction& psi, const Expression& w, const MassProfile& p,
                          LadderDirection direction) {
  const Grid& grid = psi.grid();
  const Interval d = p.domain();
  const double slack = 1e-12 * std::max(1.0, d.length());
  if (std::abs(grid.z_min() - d.lo) > slack || std::abs(grid.z_max() - d.hi) > slack)
    throw GridMismatch("grid function does not live on the mass profile domain");

  const std::size_t n = grid.n();
  std::vector<double> q(n), wv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = grid.node(i);
    q[i] = p.inv_sqrt().evaluate(z);
    wv[i] = w.evaluate(z);
  }
  std::vector<double> out(n);
  if (direction == LadderDirection::lower) {
    const std::vector<double> dpsi = derivative(psi.values(), grid.h());
    for (std::size_t i = 0; i < n; ++i) out[i] = q[i] * dpsi[i] + wv[i] * psi[i];
  } else {
    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = q[i] * psi[i];
    const std::vector<double> dscaled = derivative(scaled, grid.h());
    for (std::size_t i = 0; i < n; ++i) out[i] = -dscaled[i] + wv[i] * psi[i];
  }
  return GridFunction(grid, std::move(out));
}

ResidualReport max_abs_on(const Expression& e, Interval domain, std::size_t points) {
  if (points < 2) throw InvalidArgument("report grid needs at least two points");
  ResidualReport r{0.0, domain.lo};
  const double step = domain.length() / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double z = (i + 1 == points) ? domain.hi : domain.lo + step * static_cast<double>(i);
    const double v = std::abs(e.evaluate(z));
    if (v > r.max_abs) r = {v, z};
  }
  return r;
}

}  // namespace pdmsusy
