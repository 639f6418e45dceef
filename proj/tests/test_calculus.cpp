#include <gtest/gtest.h>

#include <cmath>

#include "ivevp/calculus.hpp"
#include "ivevp/catalog.hpp"

using namespace ivevp;

namespace {

bool close(const Interval& a, const Interval& b, double tol) { return norm(gh_sub(a, b)) <= tol; }

std::vector<Point> line_samples() {
  std::vector<Point> s;
  for (int k = -20; k <= 20; ++k) s.push_back({k / 4.0});
  return s;
}

}  // namespace

TEST(Gateaux, QuadraticAtOne) {
  const auto f = find_entry("quadratic").f;
  const auto d = gateaux_derivative(f, Point{1}, Point{1});
  EXPECT_TRUE(close(d.value, {2, 4}, 1e-4)) << d.value;
  EXPECT_TRUE(d.converged);
  EXPECT_EQ(d.quotients.size(), kDefaultLambdaLadder.size());
  EXPECT_EQ(d.gaps.size(), kDefaultLambdaLadder.size() - 1);
  EXPECT_EQ(d.residual, d.gaps.back());
  // h < 0 flips the endpoint roles
  EXPECT_TRUE(close(gateaux_derivative(f, Point{1}, Point{-1}).value, {-4, -2}, 1e-4));
}

TEST(Gateaux, QuotientsMatchHandComputation) {
  const auto f = find_entry("quadratic").f;
  const std::vector<double> ladder = {0.5, 0.25};
  const auto d = gateaux_quotients(f, Point{1}, Point{1}, ladder, 1e-6);
  // ((1.5^2 - 1) / 0.5, (2*1.5^2 - 2) / 0.5) = (2.5, 5)
  EXPECT_EQ(d.quotients[0], Interval(2.5, 5));
  EXPECT_EQ(d.quotients[1], Interval(2.25, 4.5));
  EXPECT_EQ(d.residual, 0.5);
  EXPECT_FALSE(d.converged);
}

TEST(Gateaux, StationaryAtZero) {
  const auto f = find_entry("quadratic").f;
  const auto d = gateaux_derivative(f, Point{0}, Point{1});
  EXPECT_LE(norm(d.value), 1e-6);
  const std::vector<Point> dirs = {{1}, {-1}};
  EXPECT_TRUE(stationarity_check(f, Point{0}, dirs));
  EXPECT_FALSE(stationarity_check(f, Point{1}, dirs));
}

TEST(Gateaux, LinearMapDerivative) {
  const auto f = find_entry("linear-12").f;
  for (double h : {-1.0, -0.3, 0.25, 2.0}) {
    const auto d = gateaux_derivative(f, Point{0.5}, Point{h});
    EXPECT_TRUE(close(d.value, scalar_mul(h, Interval(1, 2)), 1e-6)) << h;
  }
}

TEST(Gateaux, NonConvergentOscillation) {
  const Ivf osc(
      [](std::span<const double> x) {
        const double v = x[0] == 0 ? 0 : x[0] * std::sin(1 / x[0]);
        return EndpointValues{v, v + 1};
      },
      Box::cube(1, -1, 1), "osc");
  try {
    gateaux_derivative(osc, Point{0}, Point{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonConvergent);
  }
  EXPECT_FALSE(gateaux_quotients(osc, Point{0}, Point{1}).converged);
}

TEST(Gateaux, RejectsBadInput) {
  const auto f = find_entry("quadratic").f;
  EXPECT_THROW(gateaux_quotients(f, Point{0}, Point{1, 0}), Error);
  const std::vector<double> one = {0.1};
  EXPECT_THROW(gateaux_quotients(f, Point{0}, Point{1}, one), Error);
  const auto ind = find_entry("ball-indicator-norm").f;
  EXPECT_THROW(gateaux_quotients(ind, Point{2, 0}, Point{1, 0}), Error);
}

TEST(Gateaux, PositiveHomogeneityInDirection) {
  const auto f = find_entry("exp-levelset").f;
  const Point base{0.7, -0.4};
  const auto g = derivative_map(f, base, kDefaultLambdaLadder, 1e-4);
  for (const auto& h : unit_sphere_samples(2, 6, 4)) {
    const auto gh = g(h);
    for (double c : {0.5, 2.0}) {
      Point ch(h);
      for (auto& v : ch) v *= c;
      EXPECT_TRUE(close(g(ch), scalar_mul(c, gh), 1e-5));
    }
  }
}

TEST(Gateaux, StationaryAtCatalogMinimizers) {
  const std::pair<const char*, Point> cases[] = {
      {"quadratic", {0}}, {"exp-levelset", {0, 0}}, {"constant", {1.5}}, {"plateau", {0.5}}};
  for (const auto& [label, x] : cases) {
    const auto f = find_entry(label).f;
    EXPECT_TRUE(stationarity_check(f, x, unit_sphere_samples(x.size(), 8))) << label;
  }
  EXPECT_FALSE(stationarity_check(find_entry("linear-12").f, Point{-2}, unit_sphere_samples(1, 0)));
}

TEST(LinearMaps, OperatorNormExamples) {
  const auto sphere = unit_sphere_samples(1, 0);
  EXPECT_EQ(operator_norm(scaled_linear({1, 2}, {1}), sphere), 2);
  EXPECT_EQ(operator_norm(zero_map(1), sphere), 0);
  EXPECT_EQ(operator_norm(scaled_linear({-3, 1}, {1}), sphere), 3);
  const auto plane = unit_sphere_samples(2, 64);
  EXPECT_NEAR(operator_norm(scaled_linear({1, 2}, {3, 4}), plane), 10, 1e-2);
}

TEST(LinearMaps, NormAxioms) {
  const auto sphere = unit_sphere_samples(1, 0);
  const auto g = scaled_linear({1, 2}, {1});
  const auto r = norm_axioms_check(g, g, -2, sphere);
  EXPECT_EQ(r.norm_scaled, 4);
  EXPECT_EQ(r.norm_sum, 4);
  EXPECT_TRUE(r.homogeneity);
  EXPECT_TRUE(r.subadditivity);
  EXPECT_EQ(norm_axioms_check(g, zero_map(1), 0, sphere).norm_scaled, 0);
  const auto h = scaled_linear({-1, 3}, {1});
  const auto s = norm_axioms_check(g, h, 0.5, sphere);
  EXPECT_LE(s.norm_sum, s.norm_g1 + s.norm_g2);
  EXPECT_THROW(norm_axioms_check(g, zero_map(2), 1, sphere), Error);
}

TEST(LinearMaps, BoundedLinearProbe) {
  const auto samples = line_samples();
  const auto a = bounded_linear_probe(scaled_linear({1, 2}, {1}), samples);
  EXPECT_TRUE(a.linear);
  EXPECT_EQ(a.bound, 2);
  const auto z = bounded_linear_probe(zero_map(1), samples);
  EXPECT_TRUE(z.linear);
  EXPECT_EQ(z.bound, 0);
  const LinearIvfApprox sq{1, [](std::span<const double> h) { return Interval(h[0] * h[0], h[0] * h[0]); }};
  EXPECT_FALSE(bounded_linear_probe(sq, samples).linear);
}

TEST(LinearMaps, DerivativeOfLinearIsBoundedLinear) {
  const auto g = derivative_map(find_entry("linear-12").f, Point{0.5});
  const auto r = bounded_linear_probe(g, line_samples(), 1e-5);
  EXPECT_TRUE(r.linear);
  EXPECT_NEAR(r.bound, 2, 1e-6);
}
