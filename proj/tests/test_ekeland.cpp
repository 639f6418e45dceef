#include <gtest/gtest.h>

#include <cmath>

#include "ivevp/catalog.hpp"
#include "ivevp/ekeland.hpp"

using namespace ivevp;

namespace {

EkelandInput quadratic_input(double xbar, double eps, double delta, std::size_t res = 4001) {
  return {find_entry("quadratic").f, {xbar}, eps, delta, SampleGrid(Box::cube(1, -2, 2), res)};
}

// [x^2, x^2 + 1]: both endpoints of F ⊕ δ|x - x̄| share a minimizer
EkelandInput band_input(double xbar, double eps, double delta, std::size_t res) {
  const Ivf band([](std::span<const double> x) { return EndpointValues{x[0] * x[0], x[0] * x[0] + 1}; },
                 Box::cube(1, -3, 3), "band");
  return {band, {xbar}, eps, delta, SampleGrid(Box::cube(1, -2, 2), res)};
}

}  // namespace

TEST(Perturbed, Examples) {
  const Box line = Box::cube(1, -3, 3);
  const auto zero = perturbed(constant_ivf({0, 0}, line), 1, {0});
  EXPECT_EQ(zero.eval(Point{2}), ExtendedInterval(2, 2));
  EXPECT_EQ(zero.eval(Point{-2}), ExtendedInterval(2, 2));
  const auto q = find_entry("quadratic").f;
  EXPECT_EQ(perturbed(q, 0.5, {1}).eval(Point{1}), q.eval(Point{1}));
  EXPECT_EQ(perturbed(constant_ivf({2, 3}, line), 4, {1}).eval(Point{1}), ExtendedInterval(2, 3));
  EXPECT_THROW(perturbed(q, 0, {0}), Error);
  EXPECT_THROW(perturbed(q, 1, {0, 0}), Error);
}

TEST(GlobalMin, Examples) {
  const auto q = global_min(find_entry("quadratic").f, SampleGrid(Box::cube(1, -2, 2), 401));
  EXPECT_EQ(q.infimum, ExtendedInterval(0, 0));
  ASSERT_EQ(q.argmin.size(), 1u);
  EXPECT_EQ(q.argmin[0], Point{0});
  const auto c = global_min(find_entry("constant").f, SampleGrid(Box::cube(1, -2, 2), 9));
  EXPECT_EQ(c.argmin.size(), 9u);
  const auto empty = indicator([](std::span<const double>) { return false; }, Box::cube(1, -1, 1));
  try {
    global_min(empty, SampleGrid(Box::cube(1, -1, 1), 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ImproperFunction);
  }
}

TEST(GlobalMin, CatalogMinimaAttained) {
  for (const auto& e : catalog()) {
    if (!e.minimum || !e.proper) continue;
    const auto m = global_min(e.f, attainment_grid(e));
    EXPECT_LE(gh_distance(m.infimum, *e.minimum), 1e-9) << e.label << " " << m.infimum;
    EXPECT_FALSE(m.argmin.empty()) << e.label;
  }
}

TEST(Evp, QuadraticNearMinimum) {
  const auto inp = quadratic_input(0.05, 0.01, 1);
  const auto c = evp_search(inp);
  EXPECT_TRUE(c.valid());
  EXPECT_NEAR(c.x0[0], 0.05, 1e-12);
  EXPECT_LT(c.distance, c.distance_bound);
  EXPECT_EQ(c.distance_bound, 0.01);
  EXPECT_TRUE(preceq(c.f_x0, c.f_xbar));
  EXPECT_EQ(c.uniqueness.violations, 0u);
  EXPECT_TRUE(c.warnings.empty());
  EXPECT_TRUE(verify_certificate(inp.f, c, refined_grid(inp.grid), inp.delta, inp.tol));
}

TEST(Evp, MinimizerAsStartIsFixed) {
  const auto c = evp_search(quadratic_input(0, 0.5, 1));
  EXPECT_EQ(c.x0, Point{0});
  EXPECT_EQ(c.distance, 0);
  EXPECT_TRUE(c.valid());
}

TEST(Evp, LargerDeltaKeepsStartAndTightensBound) {
  double last_bound = kInf;
  for (double delta : {0.5, 1.0, 2.0, 4.0}) {
    const auto c = evp_search(quadratic_input(0.05, 0.01, delta));
    EXPECT_NEAR(c.x0[0], 0.05, 1e-12) << delta;
    EXPECT_LT(c.distance_bound, last_bound);
    last_bound = c.distance_bound;
    EXPECT_TRUE(c.valid()) << delta;
  }
}

TEST(Evp, Stage1SetWithinBound) {
  const auto inp = band_input(1, 2.5, 1, 801);
  const auto c = evp_search(inp);
  EXPECT_TRUE(c.valid());
  ASSERT_FALSE(c.stage1_set.empty());
  bool x0_in_c = false;
  for (const auto& x : c.stage1_set) {
    EXPECT_LT(distance(x, inp.xbar), inp.eps / inp.delta);
    x0_in_c = x0_in_c || x == c.x0;
  }
  EXPECT_TRUE(x0_in_c);
  // x^2 + |x - 1| is minimal at 1/2; values within tol 1e-9 span about ±3e-5
  EXPECT_NEAR(c.x0[0], 0.5, 1e-4);
}

TEST(Evp, UnattainedPerturbedInfimumIsEmptyArgmin) {
  // lower endpoint x^2 + |x-1| is minimal at 1/2, upper 2x^2 + |x-1| at 1/4
  try {
    evp_search(quadratic_input(1, 2.5, 1, 801));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyArgmin);
  }
}

TEST(Evp, PlateauProducesTies) {
  EkelandInput inp{find_entry("plateau").f, {0.5}, 0.1, 1e-3, SampleGrid(Box::cube(1, -2, 2), 4001), 1e-5};
  const auto c = evp_search(inp);
  EXPECT_EQ(c.x0, Point{0.5});
  EXPECT_GT(c.uniqueness.ties, 0u);
  EXPECT_EQ(c.uniqueness.violations, 0u);
  EXPECT_FALSE(c.valid());
  EXPECT_FALSE(c.warnings.empty());
}

TEST(Evp, TamperedCertificateFailsVerification) {
  const auto inp = quadratic_input(0.05, 0.01, 1);
  auto c = evp_search(inp);
  c.x0 = {1.0};
  const auto r = verify_report(inp.f, c, refined_grid(inp.grid), inp.delta, inp.tol);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.dist_bound_ok);
  EXPECT_FALSE(r.descent_ok);
  EXPECT_GT(r.uniqueness.violations, 0u);
}

TEST(Evp, HypothesisViolated) {
  try {
    evp_search(quadratic_input(1.5, 0.01, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HypothesisViolated);
  }
  EXPECT_THROW(evp_search(quadratic_input(0, 0, 1)), Error);
  EXPECT_THROW(evp_search(quadratic_input(0, 1, -1)), Error);
  EXPECT_THROW(evp_search(quadratic_input(2.5, 1, 1)), Error);
}

TEST(Evp, TwoDimensional) {
  EkelandInput inp{find_entry("exp-levelset").f, {0.25, 0.0}, 2.0, 1.0, SampleGrid(Box::cube(2, -2, 2), 65)};
  const auto c = evp_search(inp);
  EXPECT_TRUE(c.valid());
  EXPECT_LT(c.distance, 1e-9);
  EXPECT_TRUE(verify_certificate(inp.f, c, refined_grid(inp.grid, 2), inp.delta, inp.tol));
}

TEST(Evp, Deterministic) {
  const auto inp = band_input(-1.5, 3, 2, 801);
  const auto a = evp_search(inp);
  const auto b = evp_search(inp);
  EXPECT_EQ(a.x0, b.x0);
  EXPECT_EQ(a.stage1_set, b.stage1_set);
}

TEST(EvpGateaux, DerivativeBoundedByDelta) {
  const auto dirs = unit_sphere_samples(1, 0);
  const auto r = evp_gateaux(quadratic_input(0.05, 0.01, 1), dirs);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.derivative_norm, 0.2, 1e-6);
}

TEST(EvpGateaux, CoarseGridFails) {
  EkelandInput inp{find_entry("quadratic").f, {1}, 1, 0.1, SampleGrid(Box::cube(1, 0.9, 1.1), 2)};
  const auto r = evp_gateaux(inp, unit_sphere_samples(1, 0));
  EXPECT_NEAR(r.certificate.x0[0], 0.9, 1e-12);
  EXPECT_NEAR(r.derivative_norm, 3.6, 1e-5);
  EXPECT_FALSE(r.passed);
}

TEST(LevelBound, Examples) {
  const SampleGrid line(Box::cube(1, -3, 3), 601);
  const Point xbar{0};
  const auto a = level_bound_lemma_check(xbar, {1, 2}, line);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.members, 399u);  // |x| < 2 on a 0.01 grid
  const auto z = level_bound_lemma_check(xbar, {0, 0}, line);
  EXPECT_TRUE(z.ok());
  EXPECT_EQ(z.members, 1u);
  const auto w = level_bound_lemma_check(xbar, {3, 3}, line);
  EXPECT_EQ(w.mismatches, 0u);
  EXPECT_GT(w.shell_members, 0u);
  EXPECT_FALSE(w.ok());
  const SampleGrid plane(Box::cube(2, -3, 3), 61);
  EXPECT_TRUE(level_bound_lemma_check(Point{0.5, -0.5}, {0.5, 1.5}, plane).ok());
}

TEST(Uniqueness, TieNeedsFlatValueAndSmallMargin) {
  const auto q = find_entry("quadratic").f;
  // F(-x0) = F(x0) but the perturbation separates them
  const std::vector<Point> mirror = {{-0.05}};
  EXPECT_TRUE(check_uniqueness(q, Point{0.05}, 1, mirror, 1e-9).ok());
  // within tol of x0: skipped
  const std::vector<Point> near = {{0.05 + 1e-12}};
  const auto n = check_uniqueness(q, Point{0.05}, 1, near, 1e-9);
  EXPECT_EQ(n.coincident, 1u);
  EXPECT_EQ(n.checked, 0u);
  // flat bottom: F equal and δ·d below tol
  const auto flat = find_entry("plateau").f;
  const std::vector<Point> plateau = {{0.5 + 1e-3}, {0.9}};
  const auto p = check_uniqueness(flat, Point{0.5}, 1e-3, plateau, 1e-5);
  EXPECT_EQ(p.ties, 1u);
  EXPECT_EQ(p.tie_points[0], Point{0.5 + 1e-3});
  EXPECT_FALSE(p.ok());
  // a point that beats x0 is a violation
  const std::vector<Point> lower = {{0.0}};
  EXPECT_EQ(check_uniqueness(q, Point{1}, 0.5, lower, 1e-9).violations, 1u);
}
