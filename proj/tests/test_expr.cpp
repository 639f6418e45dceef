#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ivevp/expr.hpp"

using namespace ivevp;

namespace {

double eval_at(std::string_view text, std::vector<double> x) { return evaluate(parse_expr(text), x); }

}  // namespace

TEST(Expr, SinCosExample) {
  EXPECT_DOUBLE_EQ(eval_at("sin(1/x1) + cos(x2)^2", {2 / std::numbers::pi, 0}), 2.0);
}

TEST(Expr, Constant) {
  const auto n = parse_expr("0");
  EXPECT_EQ(n.kind, Node::Kind::Number);
  EXPECT_EQ(evaluate(n, std::vector<double>{}), 0);
  EXPECT_EQ(max_variable(n), 0u);
}

TEST(Expr, SyntaxErrorOffset) {
  try {
    parse_expr("x1 + (");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 5u);
    EXPECT_EQ(e.code(), Errc::SyntaxError);
    EXPECT_FALSE(e.expected().empty());
  }
  for (const char* bad : {"", "1 +", "x1 x2", "sin(x1", "(1))", "min(1)", "if(1, 2, 3)"}) {
    EXPECT_THROW(parse_expr(bad), SyntaxError) << bad;
  }
}

TEST(Expr, UnknownIdentifier) {
  for (const char* bad : {"y + 1", "tan(x1)", "x17", "x0"}) {
    try {
      parse_expr(bad);
      FAIL() << bad;
    } catch (const SyntaxError&) {
      FAIL() << bad << " should not be a syntax error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::UnknownIdentifier) << bad;
    }
  }
}

TEST(Expr, Precedence) {
  EXPECT_EQ(eval_at("1 + 2 * 3", {}), 7);
  EXPECT_EQ(eval_at("2 ^ 3 ^ 2", {}), 512);
  EXPECT_EQ(eval_at("-2 ^ 2", {}), -4);
  EXPECT_EQ(eval_at("2 ^ -1", {}), 0.5);
  EXPECT_EQ(eval_at("8 / 4 / 2", {}), 1);
  EXPECT_EQ(eval_at("1 - 2 - 3", {}), -4);
  EXPECT_EQ(eval_at("x - x1 + x2", {3, 4}), 4);
  EXPECT_EQ(eval_at("min(x1, max(x2, 0))", {1, -5}), 0);
  EXPECT_EQ(eval_at("abs(-1.5e1)", {}), 15);
  EXPECT_TRUE(std::isinf(eval_at("inf", {})));
}

TEST(Expr, LazyIf) {
  EXPECT_EQ(eval_at("if(x1 < 0, 0, 1)", {-1}), 0);
  EXPECT_EQ(eval_at("piecewise(x1 >= 0, 1, 0)", {0}), 1);
  // the unselected branch would be NaN
  EXPECT_EQ(eval_at("if(x1 == 0, 0, sin(1/x1) * x1)", {0}), 0);
  EXPECT_EQ(eval_at("if(x1 != 0, log(x1), -inf)", {0}), -kInf);
}

TEST(Expr, PrinterRoundTrip) {
  for (const char* text : {"sin(1/x1) + cos(x2)^2", "-x1^2", "if(x1 <= 1, min(x1, 2), exp(-x2))",
                           "2^3^2", "(1 - x1) - x2", "abs(x3) / sqrt(x1 * x2)"}) {
    const auto n = parse_expr(text);
    const auto printed = to_string(n);
    EXPECT_EQ(parse_expr(printed), n) << text << " -> " << printed;
    EXPECT_EQ(to_string(parse_expr(printed)), printed);
  }
}

TEST(Expr, MaxVariable) {
  EXPECT_EQ(max_variable(parse_expr("x1 + x3")), 3u);
  EXPECT_EQ(max_variable(parse_expr("x")), 1u);
  EXPECT_THROW(evaluate(parse_expr("x2"), std::vector<double>{1}), Error);
}

TEST(Expr, IvfFromText) {
  const auto f = ivf_from_text("x1^2", "2*x1^2", Box::cube(1, -3, 3), "q");
  EXPECT_EQ(f.eval(Point{1}), ExtendedInterval(1, 2));
  EXPECT_EQ(f.label(), "q");
  const auto bad = ivf_from_text("x1", "0", Box::cube(1, -1, 1));
  EXPECT_THROW(bad.eval(Point{0.5}), Error);
  EXPECT_THROW(ivf_from_text("x2", "x2", Box::cube(1, -1, 1)), Error);
}
