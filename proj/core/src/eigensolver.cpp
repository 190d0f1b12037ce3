#include "pdmsusy/errors.hpp"
#include "pdmsusy/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pdmsusy {

namespace {

constexpr int kMaxInverseIterations = 50;

double pivot_floor(const SymmetricTridiagonal& t) {
  double emax = 0.0;
  for (double e : t.offdiag) emax = std::max(emax, e * e);
  return std::numeric_limits<double>::min() * std::max(1.0, emax);
}

// LU factorisation of T - shift with partial pivoting (LAPACK gttrf layout).
struct ShiftedLU {
  std::vector<double> dl, d, du, du2;
  std::vector<bool> swapped;

  ShiftedLU(const SymmetricTridiagonal& t, double shift, double tiny) {
    const std::size_t n = t.size();
    d.resize(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - shift;
    dl = t.offdiag;
    du = t.offdiag;
    du2.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped.assign(n > 1 ? n - 1 : 0, false);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        swapped[i] = true;
      }
    }
    for (double& p : d)
      if (std::abs(p) < tiny) p = std::copysign(tiny, p == 0.0 ? 1.0 : p);
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl[i] * b[i];
      } else {
        b[i + 1] -= dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n >= 2 ? n - 2 : 0; i-- > 0;) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  }
};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void scale_to_unit(std::vector<double>& v) {
  const double norm = std::sqrt(dot(v, v));
  for (double& x : v) x /= norm;
}

}  // namespace

std::pair<double, double> gershgorin_bounds(const SymmetricTridiagonal& t) {
  const std::size_t n = t.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.offdiag[i - 1]);
    if (i + 1 < n) r += std::abs(t.offdiag[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  return {lo, hi};
}

std::size_t sturm_count(const SymmetricTridiagonal& t, double x) {
  const double tiny = pivot_floor(t);
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double e2 = i > 0 ? t.offdiag[i - 1] * t.offdiag[i - 1] : 0.0;
    q = (t.diag[i] - x) - (i > 0 ? e2 / q : 0.0);
    if (std::abs(q) < tiny) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> bisect_eigenvalues(const SymmetricTridiagonal& t, std::size_t first,
                                       std::size_t count, double tol) {
  if (t.size() == 0 || first + count > t.size())
    throw InvalidArgument("requested eigenvalue indices exceed matrix size");
  if (!(tol > 0.0)) throw InvalidArgument("eigenvalue tolerance must be positive");
  auto [glo, ghi] = gershgorin_bounds(t);
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(glo), std::abs(ghi)) + tol;
  glo -= pad;
  ghi += pad;

  std::vector<double> values(count);
  for (std::size_t j = 0; j < count; ++j) {
    const std::size_t index = first + j;
    double lo = j > 0 ? values[j - 1] - tol : glo;
    double hi = ghi;
    if (sturm_count(t, lo) > index) lo = glo;
    for (;;) {
      const double mid = 0.5 * (lo + hi);
      const double floor = 4.0 * std::numeric_limits<double>::epsilon() *
                           std::max(std::abs(lo), std::abs(hi));
      if (hi - lo <= std::max(tol, floor) || mid == lo || mid == hi) break;
      if (sturm_count(t, mid) > index) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    values[j] = 0.5 * (lo + hi);
  }
  return values;
}

Spectrum lowest_eigenpairs(const TridiagonalHamiltonian& h, std::size_t k, double tol) {
  const SymmetricTridiagonal& t = h.matrix;
  const std::size_t n = t.size();
  if (k < 1 || k > n) throw InvalidArgument("number of eigenpairs must satisfy 1 <= k <= n");
  if (n != h.grid.n()) throw GridMismatch("matrix size differs from grid size");

  Spectrum s;
  s.eigenvalues = bisect_eigenvalues(t, 0, k, tol);
  const double norm = t.norm_inf();
  const double tiny = std::max(pivot_floor(t), std::numeric_limits<double>::epsilon() * norm);
  const double target = 1e-9 * std::max(norm, std::numeric_limits<double>::min());

  std::vector<std::vector<double>> found;
  found.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const double lambda = s.eigenvalues[j];
    const ShiftedLU lu(t, lambda, tiny);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.25 * std::sin(0.7 * static_cast<double>(i + j));
    scale_to_unit(v);
    bool converged = false;
    for (int it = 0; it < kMaxInverseIterations; ++it) {
      lu.solve(v);
      for (const auto& u : found) {
        const double c = dot(u, v);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * u[i];
      }
      const double len = std::sqrt(dot(v, v));
      if (!(len > 0.0) || !std::isfinite(len)) break;
      for (double& x : v) x /= len;
      if (eigen_residual(t, v, lambda) <= target) {
        converged = true;
        break;
      }
    }
    if (!converged) throw ConvergenceFailure(j);
    found.push_back(v);
    s.eigenvectors.push_back(normalize(GridFunction(h.grid, v)));
  }
  return s;
}

}  // namespace pdmsusy
