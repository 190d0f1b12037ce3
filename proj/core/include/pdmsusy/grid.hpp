#pragma once

#include "pdmsusy/quadrature.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pdmsusy {

/// Uniform grid on [z_min, z_max] with n interior nodes
/// z_i = z_min + i h, i = 1..n, h = (z_max - z_min) / (n + 1).
/// The endpoints carry Dirichlet data and are not nodes.
class Grid {
 public:
  Grid(double z_min, double z_max, std::size_t n);

  /// Grid whose first and last interior nodes sit exactly at `first` and
  /// `last`.
  static Grid spanning_nodes(double first, double last, std::size_t n);

  double z_min() const noexcept { return z_min_; }
  double z_max() const noexcept { return z_max_; }
  std::size_t n() const noexcept { return n_; }
  double h() const noexcept { return h_; }

  /// Zero-based: node(0) = z_min + h.
  double node(std::size_t i) const noexcept { return z_min_ + static_cast<double>(i + 1) * h_; }
  /// Midpoint between nodes i-1 and i, i = 0..n (i = 0 lies between z_min and
  /// the first node).
  double midpoint(std::size_t i) const noexcept {
    return z_min_ + (static_cast<double>(i) + 0.5) * h_;
  }
  std::vector<double> nodes() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double z_min_;
  double z_max_;
  std::size_t n_;
  double h_;
};

/// Samples of a function on the interior nodes of a grid.
class GridFunction {
 public:
  GridFunction(Grid grid, std::vector<double> values);

  static GridFunction sample(const Grid& grid, const RealFunction& f);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::vector<double>& mutable_values() noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Trapezoid-rule inner product over the interior nodes.
double inner_product(const GridFunction& a, const GridFunction& b);
double l2_norm(const GridFunction& psi);

/// Scales psi to unit trapezoid L2 norm and makes the first significant
/// component (|v| > 1e-8 max|v|) positive. Throws ZeroFunction.
GridFunction normalize(const GridFunction& psi);

/// \int_{zref}^{z_i} f at every node: composite Simpson, one panel per grid
/// interval with f sampled at the interval midpoint. Exact for cubics,
/// O(h^4) globally. zref need not be a node; the piece from zref to the
/// nearest node is integrated adaptively.
GridFunction cumulative_integral(const RealFunction& f, const Grid& grid, double zref);

/// Same as cumulative_integral, but every grid interval is integrated by
/// adaptive Simpson to `tol` / n, so the result is limited by `tol` rather
/// than by h.
GridFunction cumulative_integral_adaptive(const RealFunction& f, const Grid& grid, double zref,
                                          double tol);

}  // namespace pdmsusy
