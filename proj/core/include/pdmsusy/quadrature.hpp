#pragma once

#include <functional>

namespace pdmsusy {

using RealFunction = std::function<double(double)>;

/// Single-panel Simpson rule on [a, b].
double simpson(const RealFunction& f, double a, double b);

/// Adaptive Simpson quadrature of f over [a, b] (a > b allowed, giving the
/// negated integral) to absolute tolerance `tol`. Uses the Richardson
/// corrected panel sum and caps recursion depth at 48.
double adaptive_simpson(const RealFunction& f, double a, double b, double tol);

}  // namespace pdmsusy
