#include "pdmsusy/errors.hpp"
#include "pdmsusy/numerics.hpp"

#include <cmath>

namespace pdmsusy {

namespace {

void check_spacings(std::span<const double> h_list, std::size_t minimum) {
  if (h_list.size() < minimum) throw InvalidArgument("convergence study needs at least three spacings");
  for (std::size_t i = 0; i < h_list.size(); ++i) {
    if (!(h_list[i] > 0.0)) throw InvalidArgument("grid spacings must be positive");
    if (i > 0 && !(h_list[i] < h_list[i - 1])) throw InvalidArgument("grid spacings must decrease");
  }
}

}  // namespace

ConvergenceEstimate convergence_order(const RealFunction& quantity, std::span<const double> h_list) {
  check_spacings(h_list, 3);
  std::vector<double> q(h_list.size());
  for (std::size_t i = 0; i < h_list.size(); ++i) q[i] = quantity(h_list[i]);
  const std::size_t m = q.size();
  const double d1 = q[m - 3] - q[m - 2];
  const double d2 = q[m - 2] - q[m - 1];
  const double floor = 1e-13 * (1.0 + std::abs(q[m - 1]));
  if (std::abs(d1) <= floor || std::abs(d2) <= floor) return {0.0, true};
  const double ratio = h_list[m - 2] / h_list[m - 1];
  return {std::log(std::abs(d1) / std::abs(d2)) / std::log(ratio), false};
}

ConvergenceEstimate error_order(std::span<const double> errors, std::span<const double> h_list) {
  check_spacings(h_list, 2);
  if (errors.size() != h_list.size()) throw InvalidArgument("one error per grid spacing expected");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!(std::abs(errors[i]) > 1e-300)) return {0.0, true};
    const double x = std::log(h_list[i]);
    const double y = std::log(std::abs(errors[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(errors.size());
  return {(n * sxy - sx * sy) / (n * sxx - sx * sx), false};
}

}  // namespace pdmsusy
