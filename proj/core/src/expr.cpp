#include "pdmsusy/expr.hpp"

#include "expr_node.hpp"
#include "pdmsusy/errors.hpp"
#include "pdmsusy/quadrature.hpp"

#include <cmath>
#include <cstdio>

namespace pdmsusy {

using Kind = Expression::Kind;
using Node = Expression::Node;
using NodePtr = Expression::NodePtr;

namespace {

NodePtr new_node(Kind kind, NodePtr a = nullptr, NodePtr b = nullptr, double number = 0.0,
                 double tol = 0.0) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->a = std::move(a);
  n->b = std::move(b);
  n->number = number;
  n->tol = tol;
  return n;
}

const NodePtr& zero_node() {
  static const NodePtr zero = new_node(Kind::constant);
  return zero;
}

bool is_integer(double x) { return std::floor(x) == x; }

double checked(double value, double z, const char* what) {
  if (!std::isfinite(value)) throw DomainError(z, std::string("non-finite result in ") + what);
  return value;
}

double eval(const Node& n, double z) {
  switch (n.kind) {
    case Kind::constant:
      return n.number;
    case Kind::variable:
      return z;
    case Kind::negate:
      return -eval(*n.a, z);
    case Kind::sqrt: {
      const double u = eval(*n.a, z);
      if (u < 0.0) throw DomainError(z, "sqrt of negative argument");
      return std::sqrt(u);
    }
    case Kind::exp:
      return checked(std::exp(eval(*n.a, z)), z, "exp");
    case Kind::ln: {
      const double u = eval(*n.a, z);
      if (!(u > 0.0)) throw DomainError(z, "ln of non-positive argument");
      return std::log(u);
    }
    case Kind::sin:
      return std::sin(eval(*n.a, z));
    case Kind::cos:
      return std::cos(eval(*n.a, z));
    case Kind::atan:
      return std::atan(eval(*n.a, z));
    case Kind::add:
      return checked(eval(*n.a, z) + eval(*n.b, z), z, "addition");
    case Kind::sub:
      return checked(eval(*n.a, z) - eval(*n.b, z), z, "subtraction");
    case Kind::mul:
      return checked(eval(*n.a, z) * eval(*n.b, z), z, "multiplication");
    case Kind::div: {
      const double num = eval(*n.a, z);
      const double den = eval(*n.b, z);
      if (den == 0.0) throw DomainError(z, "division by zero");
      return checked(num / den, z, "division");
    }
    case Kind::pow: {
      const double base = eval(*n.a, z);
      const double e = n.number;
      if (base < 0.0 && !is_integer(e))
        throw DomainError(z, "negative base with non-integer exponent");
      if (base == 0.0 && e < 0.0) throw DomainError(z, "zero base with negative exponent");
      if (e == 2.0) return checked(base * base, z, "pow");
      return checked(std::pow(base, e), z, "pow");
    }
    case Kind::integral: {
      const Node& integrand = *n.a;
      const double v = adaptive_simpson([&](double y) { return eval(integrand, y); }, n.number,
                                        z, n.tol);
      return checked(v, z, "integral");
    }
  }
  return 0.0;
}

bool equal(const Node& x, const Node& y) {
  if (&x == &y) return true;
  if (x.kind != y.kind || x.number != y.number) return false;
  if (x.kind == Kind::integral && x.tol != y.tol) return false;
  if ((x.a == nullptr) != (y.a == nullptr) || (x.b == nullptr) != (y.b == nullptr)) return false;
  if (x.a && !equal(*x.a, *y.a)) return false;
  if (x.b && !equal(*x.b, *y.b)) return false;
  return true;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::abs(v));
  std::string s = buf;
  if (std::signbit(v)) return "(-" + s + ")";
  return s;
}

std::string print(const Node& n) {
  switch (n.kind) {
    case Kind::constant:
      return format_number(n.number);
    case Kind::variable:
      return "z";
    case Kind::negate:
      return "(-" + print(*n.a) + ")";
    case Kind::sqrt:
      return "sqrt(" + print(*n.a) + ")";
    case Kind::exp:
      return "exp(" + print(*n.a) + ")";
    case Kind::ln:
      return "ln(" + print(*n.a) + ")";
    case Kind::sin:
      return "sin(" + print(*n.a) + ")";
    case Kind::cos:
      return "cos(" + print(*n.a) + ")";
    case Kind::atan:
      return "atan(" + print(*n.a) + ")";
    case Kind::add:
      return "(" + print(*n.a) + " + " + print(*n.b) + ")";
    case Kind::sub:
      return "(" + print(*n.a) + " - " + print(*n.b) + ")";
    case Kind::mul:
      return "(" + print(*n.a) + " * " + print(*n.b) + ")";
    case Kind::div:
      return "(" + print(*n.a) + " / " + print(*n.b) + ")";
    case Kind::pow:
      return "(" + print(*n.a) + "^" + format_number(n.number) + ")";
    case Kind::integral:
      return "integral(" + print(*n.a) + ", " + format_number(n.number) + ", " +
             format_number(n.tol) + ")";
  }
  return {};
}

std::size_t count(const Node& n) {
  std::size_t c = 1;
  if (n.a) c += count(*n.a);
  if (n.b) c += count(*n.b);
  return c;
}

// Folds a freshly built node whose children are all constants. Nodes whose
// constant evaluation hits a domain error stay unfolded so the error
// surfaces at evaluation time.
Expression fold(NodePtr n) {
  const bool a_const = !n->a || n->a->kind == Kind::constant;
  const bool b_const = !n->b || n->b->kind == Kind::constant;
  if (n->kind != Kind::integral && a_const && b_const) {
    try {
      return Expression::constant(eval(*n, 0.0));
    } catch (const DomainError&) {
    }
  }
  return Expression(std::move(n));
}

Expression unary(Kind kind, const Expression& e) { return fold(new_node(kind, e.node())); }

Expression binary(Kind kind, const Expression& a, const Expression& b) {
  return fold(new_node(kind, a.node(), b.node()));
}

}  // namespace

Expression::Expression() : node_(zero_node()) {}

Expression Expression::constant(double value) {
  if (value == 0.0 && !std::signbit(value)) return Expression();
  return Expression(new_node(Kind::constant, nullptr, nullptr, value));
}

Expression Expression::variable() {
  static const NodePtr var = new_node(Kind::variable);
  return Expression(var);
}

Expression::Kind Expression::kind() const noexcept { return node_->kind; }

bool Expression::is_constant(double value) const noexcept {
  return node_->kind == Kind::constant && node_->number == value;
}

double Expression::number() const noexcept { return node_->number; }
double Expression::tolerance() const noexcept { return node_->tol; }

Expression Expression::lhs() const {
  if (!node_->a) throw InvalidArgument("expression node has no operand");
  return Expression(node_->a);
}

Expression Expression::rhs() const {
  if (!node_->b) throw InvalidArgument("expression node has no right operand");
  return Expression(node_->b);
}

double Expression::evaluate(double z) const { return eval(*node_, z); }

std::string Expression::to_string() const { return print(*node_); }

std::size_t Expression::size() const noexcept { return count(*node_); }

bool operator==(const Expression& a, const Expression& b) noexcept {
  return equal(*a.node(), *b.node());
}

Expression operator-(const Expression& a) { return unary(Kind::negate, a); }

Expression operator+(const Expression& a, const Expression& b) {
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  return binary(Kind::add, a, b);
}

Expression operator-(const Expression& a, const Expression& b) {
  if (b.is_constant(0.0)) return a;
  if (a.is_constant(0.0)) return -b;
  return binary(Kind::sub, a, b);
}

Expression operator*(const Expression& a, const Expression& b) {
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expression();
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  return binary(Kind::mul, a, b);
}

Expression operator/(const Expression& a, const Expression& b) {
  if (b.is_constant(1.0)) return a;
  return binary(Kind::div, a, b);
}

Expression operator+(const Expression& a, double b) { return a + Expression::constant(b); }
Expression operator+(double a, const Expression& b) { return Expression::constant(a) + b; }
Expression operator-(const Expression& a, double b) { return a - Expression::constant(b); }
Expression operator-(double a, const Expression& b) { return Expression::constant(a) - b; }
Expression operator*(double a, const Expression& b) { return Expression::constant(a) * b; }
Expression operator*(const Expression& a, double b) { return a * Expression::constant(b); }
Expression operator/(const Expression& a, double b) { return a / Expression::constant(b); }
Expression operator/(double a, const Expression& b) { return Expression::constant(a) / b; }

Expression pow(const Expression& base, double exponent) {
  if (exponent == 1.0) return base;
  if (exponent == 0.0) return Expression::constant(1.0);
  return fold(new_node(Kind::pow, base.node(), nullptr, exponent));
}

Expression sqrt(const Expression& e) { return unary(Kind::sqrt, e); }
Expression exp(const Expression& e) { return unary(Kind::exp, e); }
Expression ln(const Expression& e) { return unary(Kind::ln, e); }
Expression sin(const Expression& e) { return unary(Kind::sin, e); }
Expression cos(const Expression& e) { return unary(Kind::cos, e); }
Expression atan(const Expression& e) { return unary(Kind::atan, e); }

Expression integral(const Expression& integrand, double zref, double tolerance) {
  if (!(tolerance > 0.0)) throw InvalidArgument("integral tolerance must be positive");
  if (!std::isfinite(zref)) throw InvalidArgument("integral lower limit must be finite");
  return Expression(new_node(Kind::integral, integrand.node(), nullptr, zref, tolerance));
}

}  // namespace pdmsusy
