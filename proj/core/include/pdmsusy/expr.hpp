#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace pdmsusy {

/// Immutable closed-form function of the single variable `z`.
///
/// Nodes are shared between trees, so copies are cheap and an Expression
/// may be evaluated from several threads at once. Every factory below
/// folds constant subtrees and the identities x+0, x*1, x*0, x^1, x^0; no
/// other rewriting is done.
///
/// Besides the elementary node set there is an `integral` node,
/// integral(f, zref) = \int_{zref}^{z} f(y) dy, evaluated by adaptive
/// Simpson quadrature. Its derivative is the integrand itself, so
/// expressions built on a quadrature (e.g. the point-canonical coordinate)
/// still differentiate exactly.
class Expression {
 public:
  enum class Kind : std::uint8_t {
    constant,
    variable,
    negate,
    sqrt,
    exp,
    ln,
    sin,
    cos,
    atan,
    add,
    sub,
    mul,
    div,
    pow,
    integral,
  };

  /// The constant 0.
  Expression();

  static Expression constant(double value);
  static Expression variable();

  Kind kind() const noexcept;
  bool is_constant() const noexcept { return kind() == Kind::constant; }
  /// True for the constant node with value exactly `value`.
  bool is_constant(double value) const noexcept;

  /// Constant value, pow exponent, or integral lower limit.
  double number() const noexcept;
  /// Integral node quadrature tolerance.
  double tolerance() const noexcept;
  /// Operand of unary nodes and left operand of binary nodes.
  Expression lhs() const;
  Expression rhs() const;

  /// Value at `z`; throws DomainError instead of producing a non-finite
  /// number.
  double evaluate(double z) const;
  double operator()(double z) const { return evaluate(z); }

  /// Fully parenthesised text that parse() maps back to an equal tree.
  std::string to_string() const;

  /// Number of nodes, counting shared subtrees once per reference.
  std::size_t size() const noexcept;

  friend bool operator==(const Expression& a, const Expression& b) noexcept;

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  explicit Expression(NodePtr node) : node_(std::move(node)) {}
  const NodePtr& node() const noexcept { return node_; }

 private:
  NodePtr node_;
};

Expression operator-(const Expression& a);
Expression operator+(const Expression& a, const Expression& b);
Expression operator-(const Expression& a, const Expression& b);
Expression operator*(const Expression& a, const Expression& b);
Expression operator/(const Expression& a, const Expression& b);
Expression operator+(const Expression& a, double b);
Expression operator+(double a, const Expression& b);
Expression operator-(const Expression& a, double b);
Expression operator-(double a, const Expression& b);
Expression operator*(double a, const Expression& b);
Expression operator*(const Expression& a, double b);
Expression operator/(const Expression& a, double b);
Expression operator/(double a, const Expression& b);

Expression pow(const Expression& base, double exponent);
Expression sqrt(const Expression& e);
Expression exp(const Expression& e);
Expression ln(const Expression& e);
Expression sin(const Expression& e);
Expression cos(const Expression& e);
Expression atan(const Expression& e);

inline constexpr double kDefaultIntegralTolerance = 1e-10;

/// \int_{zref}^{z} integrand(y) dy as an expression of z.
Expression integral(const Expression& integrand, double zref,
                    double tolerance = kDefaultIntegralTolerance);

/// Parses expression text.
///
/// Grammar, loosest binding first: `+ -`, then `* /`, then unary minus,
/// then `^` (right associative, exponent must fold to a constant).
/// Primaries are numbers (with optional exponent), `z`, parentheses and
/// calls `sqrt exp ln sin cos atan` plus `integral(f, zref[, tol])`.
/// Throws SyntaxError or UnknownIdentifier.
Expression parse(std::string_view text);

/// Exact derivative with respect to z.
Expression differentiate(const Expression& e);

/// d^order/dz^order.
Expression differentiate(const Expression& e, int order);

}  // namespace pdmsusy
