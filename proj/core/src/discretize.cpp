#include "pdmsusy/errors.hpp"
#include "pdmsusy/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace pdmsusy {

double SymmetricTridiagonal::norm_inf() const {
  const std::size_t n = diag.size();
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(offdiag[i - 1]);
    if (i + 1 < n) row += std::abs(offdiag[i]);
    norm = std::max(norm, row);
  }
  return norm;
}

std::vector<double> SymmetricTridiagonal::apply(std::span<const double> x) const {
  const std::size_t n = diag.size();
  if (x.size() != n) throw GridMismatch("vector length differs from matrix size");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag[i] * x[i];
    if (i > 0) s += offdiag[i - 1] * x[i - 1];
    if (i + 1 < n) s += offdiag[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

TridiagonalHamiltonian discretize(const MassProfile& p, const RealFunction& veff, const Grid& grid) {
  const std::size_t n = grid.n();
  const double inv_h2 = 1.0 / (grid.h() * grid.h());

  std::vector<double> kappa(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const double z = grid.midpoint(j);
    double m = 0.0;
    try {
      m = p.m().evaluate(z);
    } catch (const DomainError&) {
      throw NonPositiveMass(z);
    }
    if (!(m > 0.0)) throw NonPositiveMass(z);
    kappa[j] = 1.0 / m;
  }

  SymmetricTridiagonal t;
  t.diag.resize(n);
  t.offdiag.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = grid.node(i);
    const double m = p.m().evaluate(z);
    if (!(m > 0.0)) throw NonPositiveMass(z);
    t.diag[i] = (kappa[i] + kappa[i + 1]) * inv_h2 + veff(z);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) t.offdiag[i] = -kappa[i + 1] * inv_h2;
  return {std::move(t), grid};
}

double eigen_residual(const SymmetricTridiagonal& t, std::span<const double> v, double lambda) {
  const std::vector<double> hv = t.apply(v);
  double r2 = 0.0;
  double v2 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double r = hv[i] - lambda * v[i];
    r2 += r * r;
    v2 += v[i] * v[i];
  }
  return std::sqrt(r2 / v2);
}

double rayleigh_quotient(const TridiagonalHamiltonian& h, const GridFunction& psi) {
  if (!(psi.grid() == h.grid)) throw GridMismatch("Rayleigh quotient on mismatched grids");
  const std::vector<double> hv = h.matrix.apply(psi.values());
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < hv.size(); ++i) {
    num += psi[i] * hv[i];
    den += psi[i] * psi[i];
  }
  if (!(den > 0.0)) throw ZeroFunction();
  return num / den;
}

}  // namespace pdmsusy
