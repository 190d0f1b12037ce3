#pragma once

#include "pdmsusy/expr.hpp"

namespace pdmsusy {

struct Expression::Node {
  Kind kind = Kind::constant;
  double number = 0.0;
  double tol = 0.0;
  NodePtr a;
  NodePtr b;
};

}  // namespace pdmsusy
