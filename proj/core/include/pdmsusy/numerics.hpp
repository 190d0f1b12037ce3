#pragma once

#include "pdmsusy/grid.hpp"
#include "pdmsusy/mass.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace pdmsusy {

/// Symmetric tridiagonal matrix: diag has n entries, offdiag n - 1.
struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const noexcept { return diag.size(); }
  /// Max absolute row sum.
  double norm_inf() const;
  std::vector<double> apply(std::span<const double> x) const;
};

/// Finite-difference form of -d/dz[(1/M) d/dz] + V_eff with Dirichlet ends.
struct TridiagonalHamiltonian {
  SymmetricTridiagonal matrix;
  Grid grid;

  double norm_inf() const { return matrix.norm_inf(); }
};

/// Flux-form assembly with kappa = 1/M at cell midpoints:
///   (H psi)_i = -[k_{i-1/2} psi_{i-1} - (k_{i-1/2} + k_{i+1/2}) psi_i + k_{i+1/2} psi_{i+1}] / h^2
///               + V_i psi_i.
/// The coupling between nodes i and i+1 is stored once, so the matrix is
/// symmetric bit for bit. Throws NonPositiveMass.
TridiagonalHamiltonian discretize(const MassProfile& p, const RealFunction& veff, const Grid& grid);

/// Gershgorin interval [lo, hi] containing every eigenvalue.
std::pair<double, double> gershgorin_bounds(const SymmetricTridiagonal& t);

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
std::size_t sturm_count(const SymmetricTridiagonal& t, double x);

/// Eigenvalues with ascending indices first..first+count-1 by bisection to
/// absolute tolerance tol.
std::vector<double> bisect_eigenvalues(const SymmetricTridiagonal& t, std::size_t first,
                                       std::size_t count, double tol);

struct Spectrum {
  std::vector<double> eigenvalues;
  /// Unit trapezoid norm, first significant component positive.
  std::vector<GridFunction> eigenvectors;
};

inline constexpr double kDefaultEigenTolerance = 1e-10;

/// k lowest eigenpairs: Sturm bisection inside the Gershgorin interval,
/// then inverse iteration (at most 50 sweeps per vector, re-orthogonalised
/// against the vectors already found). Throws ConvergenceFailure.
Spectrum lowest_eigenpairs(const TridiagonalHamiltonian& h, std::size_t k,
                           double tol = kDefaultEigenTolerance);

/// Euclidean ||H v - lambda v|| / ||v||.
double eigen_residual(const SymmetricTridiagonal& t, std::span<const double> v, double lambda);

/// Discrete Rayleigh quotient v^T H v / v^T v.
double rayleigh_quotient(const TridiagonalHamiltonian& h, const GridFunction& psi);

struct ConvergenceEstimate {
  double order = 0.0;
  /// Differences (or errors) below the round-off floor; order is meaningless.
  bool saturated = false;
};

/// Observed order of a quantity Q(h) with unknown limit, from Richardson
/// ratios p = log2(|Q(h) - Q(h/2)| / |Q(h/2) - Q(h/4)|). h_list must hold at
/// least three successively halved spacings; with more, the last triple's
/// estimate is reported.
ConvergenceEstimate convergence_order(const RealFunction& quantity, std::span<const double> h_list);

/// Observed order from known errors e(h): least-squares slope of
/// log e against log h.
ConvergenceEstimate error_order(std::span<const double> errors, std::span<const double> h_list);

}  // namespace pdmsusy
