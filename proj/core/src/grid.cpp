#include "pdmsusy/grid.hpp"

#include "pdmsusy/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pdmsusy {

Grid::Grid(double z_min, double z_max, std::size_t n)
    : z_min_(z_min), z_max_(z_max), n_(n), h_((z_max - z_min) / static_cast<double>(n + 1)) {
  if (!std::isfinite(z_min) || !std::isfinite(z_max) || !(z_min < z_max))
    throw InvalidArgument("grid needs finite z_min < z_max");
  if (n < 3) throw InvalidArgument("grid needs at least 3 interior nodes");
}

Grid Grid::spanning_nodes(double first, double last, std::size_t n) {
  if (n < 3) throw InvalidArgument("grid needs at least 3 interior nodes");
  const double h = (last - first) / static_cast<double>(n - 1);
  return Grid(first - h, last + h, n);
}

std::vector<double> Grid::nodes() const {
  std::vector<double> z(n_);
  for (std::size_t i = 0; i < n_; ++i) z[i] = node(i);
  return z;
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.n()) throw GridMismatch("grid function length differs from grid size");
}

GridFunction GridFunction::sample(const Grid& grid, const RealFunction& f) {
  std::vector<double> v(grid.n());
  for (std::size_t i = 0; i < grid.n(); ++i) v[i] = f(grid.node(i));
  return GridFunction(grid, std::move(v));
}

double inner_product(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid() == b.grid())) throw GridMismatch("inner product of functions on different grids");
  const std::size_t n = a.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    sum += w * a[i] * b[i];
  }
  return sum * a.grid().h();
}

double l2_norm(const GridFunction& psi) { return std::sqrt(inner_product(psi, psi)); }

GridFunction normalize(const GridFunction& psi) {
  const double norm = l2_norm(psi);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw ZeroFunction();
  double peak = 0.0;
  for (double v : psi.values()) peak = std::max(peak, std::abs(v));
  double sign = 1.0;
  for (double v : psi.values()) {
    if (std::abs(v) > 1e-8 * peak) {
      sign = v < 0.0 ? -1.0 : 1.0;
      break;
    }
  }
  std::vector<double> out(psi.values().begin(), psi.values().end());
  for (double& v : out) v *= sign / norm;
  return GridFunction(psi.grid(), std::move(out));
}

namespace {

// Index of the node closest to zref.
std::size_t anchor_node(const Grid& grid, double zref) {
  const double pos = (zref - grid.z_min()) / grid.h() - 1.0;
  const double clamped = std::clamp(std::round(pos), 0.0, static_cast<double>(grid.n() - 1));
  return static_cast<std::size_t>(clamped);
}

template <class PanelRule>
GridFunction accumulate(const RealFunction& f, const Grid& grid, double zref, double tol,
                        PanelRule panel) {
  if (!std::isfinite(zref) || zref < grid.z_min() || zref > grid.z_max())
    throw InvalidArgument("integration reference point lies outside the grid");
  const std::size_t n = grid.n();
  const std::size_t k = anchor_node(grid, zref);
  std::vector<double> out(n);
  const double zk = grid.node(k);
  out[k] = (zk == zref) ? 0.0 : adaptive_simpson(f, zref, zk, tol);
  for (std::size_t i = k + 1; i < n; ++i) out[i] = out[i - 1] + panel(f, grid.node(i - 1), grid.node(i));
  for (std::size_t i = k; i-- > 0;) out[i] = out[i + 1] - panel(f, grid.node(i), grid.node(i + 1));
  return GridFunction(grid, std::move(out));
}

}  // namespace

GridFunction cumulative_integral(const RealFunction& f, const Grid& grid, double zref) {
  return accumulate(f, grid, zref, 1e-13,
                    [](const RealFunction& g, double a, double b) { return simpson(g, a, b); });
}

GridFunction cumulative_integral_adaptive(const RealFunction& f, const Grid& grid, double zref,
                                          double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("quadrature tolerance must be positive");
  const double panel_tol = tol / static_cast<double>(grid.n());
  return accumulate(f, grid, zref, panel_tol, [panel_tol](const RealFunction& g, double a, double b) {
    return adaptive_simpson(g, a, b, panel_tol);
  });
}

}  // namespace pdmsusy
