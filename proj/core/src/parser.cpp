#include "pdmsusy/errors.hpp"
#include "pdmsusy/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

namespace pdmsusy {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse_all() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "empty expression");
    Expression e = parse_sum();
    skip_space();
    if (!at_end()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      skip_space();
      throw SyntaxError(pos_, at_end() ? std::string("expected '") + c + "' at end of input"
                                       : std::string("expected '") + c + "'");
    }
  }

  Expression parse_sum() {
    Expression lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = lhs + parse_product();
      } else if (accept('-')) {
        lhs = lhs - parse_product();
      } else {
        return lhs;
      }
    }
  }

  Expression parse_product() {
    Expression lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = lhs * parse_unary();
      } else if (accept('/')) {
        lhs = lhs / parse_unary();
      } else {
        return lhs;
      }
    }
  }

  Expression parse_unary() {
    if (accept('-')) return -parse_unary();
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  Expression parse_power() {
    Expression base = parse_primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    // Right associative; a leading sign is allowed in the exponent (z^-1).
    const Expression exponent = parse_unary();
    if (!exponent.is_constant()) throw SyntaxError(at, "exponent must be a constant");
    return pow(base, exponent.number());
  }

  double parse_constant_argument() {
    skip_space();
    const std::size_t at = pos_;
    const Expression e = parse_sum();
    if (!e.is_constant()) throw SyntaxError(at, "argument must be a constant");
    return e.number();
  }

  Expression parse_primary() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expression e = parse_sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  Expression parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (!at_end() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw SyntaxError(start, "malformed number");
    if (!at_end() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const std::size_t mark = pos_;
      ++pos_;
      if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) throw SyntaxError(mark, "malformed exponent in number");
    }
    const std::string token(text_.substr(start, pos_ - start));
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(value))
      throw SyntaxError(start, "number out of range");
    return Expression::constant(value);
  }

  Expression parse_identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                         text_[pos_] == '_'))
      ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "z") return Expression::variable();

    using Fn = Expression (*)(const Expression&);
    Fn fn = nullptr;
    if (name == "sqrt") fn = &sqrt;
    else if (name == "exp") fn = &exp;
    else if (name == "ln") fn = &ln;
    else if (name == "sin") fn = &sin;
    else if (name == "cos") fn = &cos;
    else if (name == "atan") fn = &atan;
    else if (name != "integral") throw UnknownIdentifier(start, name);

    expect('(');
    Expression arg = parse_sum();
    if (fn) {
      expect(')');
      return fn(arg);
    }
    expect(',');
    const double zref = parse_constant_argument();
    double tol = kDefaultIntegralTolerance;
    if (accept(',')) tol = parse_constant_argument();
    expect(')');
    if (!(tol > 0.0)) throw SyntaxError(start, "integral tolerance must be positive");
    return integral(arg, zref, tol);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace pdmsusy
