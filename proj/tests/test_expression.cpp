#include <gtest/gtest.h>

#include "demival/expression.hpp"
#include "demival/sampling.hpp"
#include "support.hpp"

namespace demival {
namespace {

TEST(Parser, PolynomialOverQ) {
  const auto f = evaluate_rational(parse_expression("6*X^2 + 4*X + 10", Ring::rational()));
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(to_string(f), "6*X^2 + 4*X + 10");
}

TEST(Parser, QuadraticElement) {
  const QuadContext ctx(-5);
  const auto f = evaluate_quadratic(parse_expression("(1 + sqrt(-5))/2", Ring::quadratic(-5)), ctx);
  ASSERT_EQ(f.num().degree(), 0);
  EXPECT_EQ(f.num().coeff(0), QuadElement(Rational(1, 2), Rational(1, 2), -5));
}

TEST(Parser, Errors) {
  auto code_of = [](const std::string& s, const Ring& r) -> std::string {
    try {
      parse_expression(s, r);
      return "ok";
    } catch (const Error& e) {
      return e.code() + " " + e.what();
    }
  };
  EXPECT_EQ(code_of("X^-1", Ring::rational()), "parse 1:3: expected a nonnegative integer exponent");
  EXPECT_EQ(code_of("sqrt(-5)", Ring::rational()).substr(0, 5), "parse");
  EXPECT_EQ(code_of("sqrt(-1)", Ring::quadratic(-5)).substr(0, 5), "parse");
  EXPECT_EQ(code_of("Y + 1", Ring::rational()), "parse 1:1: unknown identifier 'Y'");
  EXPECT_EQ(code_of("(X + 1", Ring::rational()).substr(0, 5), "parse");
  EXPECT_EQ(code_of("1 +\n  *", Ring::rational()).substr(0, 9), "parse 2:3");
  EXPECT_EQ(code_of("", Ring::rational()).substr(0, 5), "parse");
  EXPECT_EQ(code_of("2 3", Ring::rational()).substr(0, 5), "parse");
}

TEST(Parser, Semantics) {
  using testing::qf;
  EXPECT_EQ(qf("2^3^2"), qf("512"));  // right associative
  EXPECT_EQ(qf("X^2^3"), qf("X^8"));
  EXPECT_THROW(qf("X^2^13"), Error);
  EXPECT_EQ(qf("-X^2"), qf("0 - X^2"));
  EXPECT_EQ(qf("4/9^2"), qf("4/81"));
  EXPECT_EQ(qf("123456789012345678901234567890/3"), qf("41152263004115226300411522630"));
  EXPECT_EQ(qf("1/X + 1/X"), qf("2/X"));
  EXPECT_THROW(qf("X/0"), Error);
  EXPECT_THROW(Ring::parse("quad:5"), Error);
  EXPECT_THROW(Ring::parse("z"), Error);
  EXPECT_EQ(Ring::parse("quad:-5").name(), "quad:-5");
}

// Random expression trees; serialize then reparse.
std::string random_expression(Sampler& s, int depth, bool quad) {
  if (depth == 0 || s.chance(30)) {
    switch (s.uniform(0, quad ? 2 : 1)) {
      case 0:
        return std::to_string(s.uniform(0, 1000));
      case 1:
        return "X";
      default:
        return "sqrt(-5)";
    }
  }
  const char* ops[] = {" + ", " - ", "*", "/"};
  switch (s.uniform(0, 3)) {
    case 0:
      return "(" + random_expression(s, depth - 1, quad) + ")";
    case 1:
      return "-" + random_expression(s, depth - 1, quad);
    case 2:
      return "(" + random_expression(s, depth - 1, quad) + ")^" + std::to_string(s.uniform(0, 3));
    default:
      return random_expression(s, depth - 1, quad) + s.pick(std::vector<std::string>(ops, ops + 4)) +
             random_expression(s, depth - 1, quad);
  }
}

TEST(Parser, SerializeRoundTrip) {
  Sampler s(2024);
  for (int i = 0; i < 2000; ++i) {
    const bool quad = i % 2 == 1;
    const Ring ring = quad ? Ring::quadratic(-5) : Ring::rational();
    const std::string text = random_expression(s, 5, quad);
    const Expr e = parse_expression(text, ring);
    const std::string once = serialize(e);
    const Expr again = parse_expression(once, ring);
    EXPECT_TRUE(structurally_equal(e, again)) << text << " => " << once;
    EXPECT_EQ(serialize(again), once);
  }
}

}  // namespace
}  // namespace demival
