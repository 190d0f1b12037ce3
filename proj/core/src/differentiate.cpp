#include "pdmsusy/errors.hpp"
#include "pdmsusy/expr.hpp"

namespace pdmsusy {

Expression differentiate(const Expression& e) {
  using Kind = Expression::Kind;
  switch (e.kind()) {
    case Kind::constant:
      return Expression::constant(0.0);
    case Kind::variable:
      return Expression::constant(1.0);
    case Kind::integral:
      return e.lhs();
    default:
      break;
  }

  const Expression u = e.lhs();
  const Expression du = differentiate(u);
  switch (e.kind()) {
    case Kind::negate:
      return -du;
    case Kind::sqrt:
      return du / (2.0 * e);
    case Kind::exp:
      return e * du;
    case Kind::ln:
      return du / u;
    case Kind::sin:
      return cos(u) * du;
    case Kind::cos:
      return -(sin(u) * du);
    case Kind::atan:
      return du / (1.0 + pow(u, 2.0));
    case Kind::pow:
      return e.number() * pow(u, e.number() - 1.0) * du;
    default:
      break;
  }

  const Expression v = e.rhs();
  const Expression dv = differentiate(v);
  switch (e.kind()) {
    case Kind::add:
      return du + dv;
    case Kind::sub:
      return du - dv;
    case Kind::mul:
      return du * v + u * dv;
    case Kind::div:
      return (du * v - u * dv) / pow(v, 2.0);
    default:
      break;
  }
  throw InvalidArgument("unhandled expression node");
}

Expression differentiate(const Expression& e, int order) {
  if (order < 0) throw InvalidArgument("derivative order must be non-negative");
  Expression d = e;
  for (int i = 0; i < order; ++i) d = differentiate(d);
  return d;
}

}  // namespace pdmsusy
