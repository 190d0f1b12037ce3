#include "pdmsusy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pdmsusy {

namespace {

constexpr int kMaxDepth = 48;
constexpr int kMinDepth = 2;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a, m, b;
  double fa, fm, fb;
  double whole;
};

double refine(const RealFunction& f, const Panel& p, double tol, int depth) {
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (p.m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
  const double right = (p.b - p.m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
  const double delta = left + right - p.whole;
  // The relative floor stops refinement once the estimate is at round-off
  // level, whatever tol asks for.
  const bool resolved = std::abs(delta) <= 15.0 * tol ||
                        std::abs(delta) <= 64.0 * kEps * std::abs(left + right);
  if (depth >= kMaxDepth || (depth >= kMinDepth && resolved)) {
    return left + right + delta / 15.0;
  }
  return refine(f, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tol, depth + 1) +
         refine(f, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth + 1);
}

}  // namespace

double simpson(const RealFunction& f, double a, double b) {
  return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

double adaptive_simpson(const RealFunction& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  if (a > b) return -adaptive_simpson(f, b, a, tol);
  // Unit-length panels keep the first-level error estimate honest on long
  // intervals.
  const int panels = std::max(1, static_cast<int>(std::ceil(b - a)));
  const double width = (b - a) / panels;
  double total = 0.0;
  double fa = f(a);
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == panels) ? b : a + (i + 1) * width;
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    const double fb = f(hi);
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    total += refine(f, {lo, mid, hi, fa, fm, fb, whole}, tol / panels, 0);
    fa = fb;
  }
  return total;
}

}  // namespace pdmsusy
