#include "pdmsusy/errors.hpp"
#include "pdmsusy/expr.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <thread>

using namespace pdmsusy;
using Kind = Expression::Kind;

namespace {

const char* kPaperMass = "((2+z^2)/(1+z^2))^2";

Expression z() { return Expression::variable(); }

}  // namespace

TEST(Parse, PowerOfVariable) {
  const Expression e = parse("z^2");
  ASSERT_EQ(e.kind(), Kind::pow);
  EXPECT_EQ(e.lhs().kind(), Kind::variable);
  EXPECT_EQ(e.number(), 2.0);
}

TEST(Parse, QuotientSquareMass) {
  const Expression e = parse(kPaperMass);
  ASSERT_EQ(e.kind(), Kind::pow);
  EXPECT_EQ(e.number(), 2.0);
  const Expression q = e.lhs();
  ASSERT_EQ(q.kind(), Kind::div);
  EXPECT_EQ(q.lhs(), Expression::constant(2.0) + pow(z(), 2.0));
  EXPECT_EQ(q.rhs(), Expression::constant(1.0) + pow(z(), 2.0));
}

TEST(Parse, UnbalancedParenthesisReportsEndOfInput) {
  try {
    parse("atan(z");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse(""), SyntaxError);
  EXPECT_THROW(parse("   "), SyntaxError);
  EXPECT_THROW(parse("2 +"), SyntaxError);
  EXPECT_THROW(parse("z^z"), SyntaxError);
  EXPECT_THROW(parse("(z"), SyntaxError);
  EXPECT_THROW(parse("z)"), SyntaxError);
  EXPECT_THROW(parse("1.5e"), SyntaxError);
  EXPECT_THROW(parse("sin z"), SyntaxError);
  EXPECT_THROW(parse("z $ 2"), SyntaxError);
  try {
    parse("2*foo(z)");
    FAIL() << "expected UnknownIdentifier";
  } catch (const UnknownIdentifier& e) {
    EXPECT_EQ(e.name(), "foo");
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(parse("x + 1"), UnknownIdentifier);
}

TEST(Parse, PrecedenceAndAssociativity) {
  EXPECT_DOUBLE_EQ(parse("-z^2").evaluate(3.0), -9.0);
  EXPECT_DOUBLE_EQ(parse("2*3+4").evaluate(0.0), 10.0);
  EXPECT_DOUBLE_EQ(parse("2+3*4").evaluate(0.0), 14.0);
  EXPECT_DOUBLE_EQ(parse("2^3^2").evaluate(0.0), 512.0);
  EXPECT_DOUBLE_EQ(parse("z^-1").evaluate(4.0), 0.25);
  EXPECT_DOUBLE_EQ(parse("8/4/2").evaluate(0.0), 1.0);
  EXPECT_DOUBLE_EQ(parse("10-4-3").evaluate(0.0), 3.0);
  EXPECT_DOUBLE_EQ(parse("1.5E+2 - 2e-1*z").evaluate(10.0), 148.0);
  EXPECT_DOUBLE_EQ(parse(".5*z").evaluate(4.0), 2.0);
  EXPECT_DOUBLE_EQ(parse("z^(3/2)").evaluate(4.0), 8.0);
  EXPECT_DOUBLE_EQ(parse(" sqrt( z ) ").evaluate(9.0), 3.0);
}

TEST(Parse, ConstantFolding) {
  EXPECT_EQ(parse("2*3+z"), Expression::constant(6.0) + z());
  EXPECT_EQ(parse("0*ln(z)"), Expression::constant(0.0));
  EXPECT_EQ(parse("1*z+0"), z());
  EXPECT_TRUE(parse("-(2)").is_constant(-2.0));
  // Folding never hides a domain error.
  EXPECT_THROW(parse("1/0").evaluate(0.0), DomainError);
}

TEST(Differentiate, Basics) {
  EXPECT_EQ(differentiate(Expression::constant(3.5)), Expression::constant(0.0));
  EXPECT_EQ(differentiate(z()), Expression::constant(1.0));
  EXPECT_EQ(differentiate(parse("z^2")), parse("2*z"));
  EXPECT_EQ(differentiate(parse("atan(z)")), parse("1/(1+z^2)"));
}

TEST(Differentiate, QuotientSquareMassAtOne) {
  const Expression m = parse(kPaperMass);
  const double symbolic = differentiate(m).evaluate(1.0);
  const double fd = oracle::derivative([&](double x) { return m.evaluate(x); }, 1.0);
  EXPECT_NEAR(fd, -1.5, 1e-9);
  EXPECT_NEAR(symbolic, -1.5, 1e-14);
}

TEST(Evaluate, Values) {
  EXPECT_EQ(parse("1+z").evaluate(2.0), 3.0);
  EXPECT_EQ(parse(kPaperMass).evaluate(0.0), 4.0);
}

TEST(Evaluate, DomainErrors) {
  EXPECT_THROW(parse("1/z").evaluate(0.0), DomainError);
  EXPECT_THROW(parse("sqrt(z)").evaluate(-1.0), DomainError);
  EXPECT_THROW(parse("ln(z)").evaluate(0.0), DomainError);
  EXPECT_THROW(parse("z^0.5").evaluate(-1.0), DomainError);
  EXPECT_THROW(parse("z^-2").evaluate(0.0), DomainError);
  EXPECT_THROW(parse("exp(z)").evaluate(1000.0), DomainError);
  EXPECT_DOUBLE_EQ(parse("z^3").evaluate(-2.0), -8.0);
  try {
    parse("1/(z-1)").evaluate(1.0);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.z(), 1.0);
  }
}

TEST(Integral, EvaluatesAndDifferentiatesExactly) {
  const Expression zbar = integral(parse("1"), 0.0);
  EXPECT_NEAR(zbar.evaluate(3.0), 3.0, 1e-13);
  EXPECT_NEAR(zbar.evaluate(-2.0), -2.0, 1e-13);
  const Expression f = parse("sqrt(1+z^2)");
  EXPECT_EQ(differentiate(integral(f, 0.5)), f);
  const Expression e = parse("integral(cos(z), 0)");
  EXPECT_NEAR(e.evaluate(1.0), std::sin(1.0), 1e-11);
  EXPECT_EQ(parse(e.to_string()), e);
  EXPECT_THROW(parse("integral(z, z)"), SyntaxError);
}

TEST(Print, RoundTripOfNegativeConstantsAndPowers) {
  const Expression e = pow(-2.5 * z(), -1.5) + Expression::constant(-0.0) - 1e-300 * z();
  EXPECT_EQ(parse(e.to_string()), e);
}

TEST(Property, ParsePrintRoundTrip) {
  gen::ExpressionGenerator g(20240601);
  for (int i = 0; i < 2000; ++i) {
    const Expression e = g(6);
    const std::string text = e.to_string();
    EXPECT_EQ(parse(text), e) << text;
  }
}

TEST(Property, DerivativeMatchesFiniteDifferences) {
  gen::ExpressionGenerator g(7);
  int checked = 0;
  int attempts = 0;
  while (checked < 1000 && attempts < 200000) {
    ++attempts;
    const Expression e = g(6);
    const double at = g.uniform(-2.0, 2.0);
    double sym = 0.0;
    try {
      sym = differentiate(e).evaluate(at);
      if (std::abs(e.evaluate(at)) > 1e6) continue;
    } catch (const DomainError&) {
      continue;
    }
    const auto f = [&](double x) {
      try {
        return e.evaluate(x);
      } catch (const DomainError&) {
        return std::nan("");
      }
    };
    const auto fd = oracle::stable_derivative(f, at, 1e-3, 1e-8);
    if (!fd) continue;  // the finite-difference oracle itself is unreliable here
    ++checked;
    EXPECT_LE(std::abs(sym - *fd), 1e-6 * (1.0 + std::abs(sym))) << e.to_string() << " at " << at;
  }
  EXPECT_EQ(checked, 1000);
}

TEST(Expression, ConcurrentEvaluation) {
  const Expression e = differentiate(parse(kPaperMass), 2);
  const double expected = e.evaluate(0.3);
  std::vector<std::thread> pool;
  std::vector<double> results(8);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] {
      double v = 0.0;
      for (int i = 0; i < 1000; ++i) v = e.evaluate(0.3);
      results[t] = v;
    });
  for (auto& th : pool) th.join();
  for (double v : results) EXPECT_EQ(v, expected);
}
