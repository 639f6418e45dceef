#pragma once

/**
 * @file ekeland.hpp
 * @brief Grid realization of the variational principle for IVFs: global
 *        minimum, the two-stage search for x0, certificate re-verification,
 *        the Gâteaux corollary and the level-bound lemma.
 *
 * The search mirrors the existence proof. Stage 1 minimizes
 * F(x) ⊕ δ||x - x̄|| over the candidates, giving a set C. Stage 2 minimizes F
 * over C. Every minimization is a tolerance argmin (gh_distance <= tol), and
 * ties are broken by distance to x̄, then lexicographically.
 */

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ivevp/calculus.hpp"
#include "ivevp/geometry.hpp"
#include "ivevp/interval.hpp"
#include "ivevp/ivf.hpp"

namespace ivevp {

inline constexpr double kDefaultArgminTol = 1e-9;
inline constexpr int kDefaultRefineRounds = 3;
inline constexpr std::size_t kRefineResolution = 21;
inline constexpr std::size_t kMaxRecordedPoints = 16;

/// F(x) ⊕ δ||x - center||
inline Ivf perturbed(const Ivf& f, double delta, Point center) {
  if (!(delta > 0)) throw Error(Errc::InvalidArgument, "delta must be positive");
  if (center.size() != f.dim()) throw Error(Errc::InvalidArgument, "center dimension mismatch");
  auto values = [f, delta, center = std::move(center)](std::span<const double> x) {
    const auto v = add_scalar(f.eval(x), delta * distance(x, center));
    return EndpointValues{v.lo(), v.hi()};
  };
  return Ivf(values, f.domain(), f.label() + "+delta*dist");
}

struct GlobalMin {
  ExtendedInterval infimum;
  std::vector<Point> argmin;
};

inline GlobalMin global_min(const Ivf& f, const SampleGrid& grid, double tol = kDefaultArgminTol) {
  const auto points = grid.points();
  if (!is_proper_probe(f, points)) {
    throw Error(Errc::ImproperFunction, f.label() + " is not proper on the sample grid");
  }
  return {infimum_over(f, points), argmin_over(f, points, tol)};
}

// ---------------------------------------------------------------------------
// Uniqueness evidence

struct UniquenessEvidence {
  std::size_t checked = 0;
  std::size_t coincident = 0;  ///< samples within tol of x0, skipped
  std::size_t violations = 0;  ///< F(x0) ≺ F(x) ⊕ δ||x-x0|| fails
  std::size_t ties = 0;        ///< strict only by a margin <= tol, with F(x) within tol of F(x0)
  std::vector<Point> violation_points;  ///< first few, for diagnostics
  std::vector<Point> tie_points;
  bool ok() const noexcept { return violations == 0 && ties == 0; }
};

/// Checks F(x0) ≺ F(x) ⊕ δ||x - x0|| at every sample x farther than tol from
/// x0. A sample where the relation holds by a margin of at most tol while F(x)
/// itself is within tol of F(x0) counts as a tie: the flat-bottom signature.
inline UniquenessEvidence check_uniqueness(const Ivf& f, std::span<const double> x0, double delta,
                                           std::span<const Point> samples, double tol) {
  UniquenessEvidence u;
  const ExtendedInterval v0 = f.eval(x0);
  for (const auto& x : samples) {
    const double d = distance(x, x0);
    if (d <= tol) {
      ++u.coincident;
      continue;
    }
    ++u.checked;
    const ExtendedInterval fx = f.eval(x);
    const ExtendedInterval vx = add_scalar(fx, delta * d);
    if (!prec(v0, vx)) {
      ++u.violations;
      if (u.violation_points.size() < kMaxRecordedPoints) u.violation_points.push_back(x);
    } else if (gh_distance(v0, vx) <= tol && gh_distance(v0, fx) <= tol) {
      ++u.ties;
      if (u.tie_points.size() < kMaxRecordedPoints) u.tie_points.push_back(x);
    }
  }
  return u;
}

// ---------------------------------------------------------------------------
// Search

struct EkelandInput {
  Ivf f;
  Point xbar;
  double eps;
  double delta;
  SampleGrid grid;
  double tol = kDefaultArgminTol;
  int refine_rounds = kDefaultRefineRounds;
};

struct EkelandCertificate {
  Point x0;
  Point xbar;
  double eps = 0;
  double delta = 0;
  double tol = 0;
  ExtendedInterval f_x0{0, 0};
  ExtendedInterval f_xbar{0, 0};
  ExtendedInterval infimum{0, 0};  ///< over the initial candidates
  double distance = 0;             ///< ||x0 - x̄||
  double distance_bound = 0;       ///< ε/δ
  bool dist_bound_ok = false;
  bool descent_ok = false;
  UniquenessEvidence uniqueness;
  std::vector<Point> stage1_set;   ///< C from the final round
  std::size_t candidates = 0;
  int refine_rounds = 0;
  std::vector<std::string> warnings;

  bool valid() const noexcept { return dist_bound_ok && descent_ok && uniqueness.ok(); }
};

namespace detail {

/// Index of the point of `pool` (indices into `points`) nearest to x̄, ties
/// broken lexicographically.
inline std::size_t nearest_to(std::span<const Point> points, std::span<const std::size_t> pool,
                              std::span<const double> xbar) {
  std::size_t best = pool.front();
  double best_d = distance(points[best], xbar);
  for (auto i : pool.subspan(1)) {
    const double d = distance(points[i], xbar);
    if (d < best_d || (d == best_d && points[i] < points[best])) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

struct StageResult {
  std::size_t winner;
  std::vector<std::size_t> stage1;
};

inline StageResult two_stage(const Ivf& f, const Ivf& fbar, std::span<const Point> points,
                             std::span<const double> xbar, double tol) {
  const auto c = argmin_indices(evaluate_all(fbar, points), tol);
  if (c.empty()) throw Error(Errc::EmptyArgmin, "stage 1 found no minimizer of the perturbed function");
  std::vector<ExtendedInterval> fc;
  for (auto i : c) fc.push_back(f.eval(points[i]));
  std::vector<std::size_t> best;
  for (auto k : argmin_indices(fc, tol)) best.push_back(c[k]);
  if (best.empty()) throw Error(Errc::EmptyArgmin, "stage 2 found no minimizer over C");
  return {nearest_to(points, best, xbar), c};
}

inline void require_inside(const Ivf& f, const Box& box) {
  const Point lo = [&] {
    Point p(box.dim());
    for (std::size_t i = 0; i < box.dim(); ++i) p[i] = box.lo(i);
    return p;
  }();
  Point hi(box.dim());
  for (std::size_t i = 0; i < box.dim(); ++i) hi[i] = box.hi(i);
  if (box.dim() != f.dim() || !f.domain().contains(lo) || !f.domain().contains(hi)) {
    throw Error(Errc::OutOfDomain, "search box " + box.to_string() + " is not inside the domain of " +
                                       f.label());
  }
}

}  // namespace detail

inline EkelandCertificate evp_search(const EkelandInput& inp) {
  if (!(inp.eps > 0) || !(inp.delta > 0) || !(inp.tol > 0)) {
    throw Error(Errc::InvalidArgument, "eps, delta and tol must be positive");
  }
  if (inp.xbar.size() != inp.f.dim()) throw Error(Errc::InvalidArgument, "xbar dimension mismatch");
  detail::require_inside(inp.f, inp.grid.box());
  if (!inp.grid.box().contains(inp.xbar)) throw Error(Errc::OutOfDomain, "xbar lies outside the search box");

  std::vector<Point> points = inp.grid.points();
  if (std::find(points.begin(), points.end(), inp.xbar) == points.end()) points.push_back(inp.xbar);

  EkelandCertificate cert;
  cert.xbar = inp.xbar;
  cert.eps = inp.eps;
  cert.delta = inp.delta;
  cert.tol = inp.tol;
  cert.f_xbar = inp.f.eval(inp.xbar);
  cert.infimum = infimum_over(inp.f, points);
  if (!cert.infimum.is_finite() || !cert.f_xbar.is_finite()) {
    throw Error(Errc::HypothesisViolated, "inf F and F(xbar) must be finite, got inf=" +
                                              to_string(cert.infimum) + " F(xbar)=" + to_string(cert.f_xbar));
  }
  if (!prec(cert.f_xbar, add_scalar(cert.infimum, inp.eps))) {
    throw Error(Errc::HypothesisViolated, "F(xbar)=" + to_string(cert.f_xbar) + " is not below inf F + eps=" +
                                              to_string(add_scalar(cert.infimum, inp.eps)));
  }

  const Ivf fbar = perturbed(inp.f, inp.delta, inp.xbar);
  auto stage = detail::two_stage(inp.f, fbar, points, inp.xbar, inp.tol);
  Point x0 = points[stage.winner];

  double radius = 0;
  for (std::size_t i = 0; i < inp.grid.dim(); ++i) radius = std::max(radius, inp.grid.spacing(i));
  for (int round = 0; round < inp.refine_rounds; ++round) {
    const SampleGrid local(inp.grid.box().clipped_around(x0, radius), kRefineResolution);
    for (std::size_t k = 0; k < local.size(); ++k) {
      Point p = local.point(k);
      if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(std::move(p));
    }
    stage = detail::two_stage(inp.f, fbar, points, inp.xbar, inp.tol);
    x0 = points[stage.winner];
    radius /= 10;
    ++cert.refine_rounds;
  }

  cert.x0 = x0;
  cert.f_x0 = inp.f.eval(x0);
  for (auto i : stage.stage1) cert.stage1_set.push_back(points[i]);
  cert.candidates = points.size();
  cert.distance = distance(x0, inp.xbar);
  cert.distance_bound = inp.eps / inp.delta;
  cert.dist_bound_ok = cert.distance < cert.distance_bound;
  cert.descent_ok = preceq(cert.f_x0, cert.f_xbar);
  cert.uniqueness = check_uniqueness(inp.f, x0, inp.delta, points, inp.tol);

  if (cert.uniqueness.ties > 0) {
    cert.warnings.push_back(std::to_string(cert.uniqueness.ties) +
                            " samples tie with x0 within tol (flat bottom); uniqueness not evidenced");
  }
  if (cert.uniqueness.violations > 0) {
    cert.warnings.push_back(std::to_string(cert.uniqueness.violations) +
                            " samples violate strict perturbed minimality at x0");
  }
  const auto distinct = std::count_if(cert.stage1_set.begin(), cert.stage1_set.end(),
                                      [&](const Point& x) { return distance(x, x0) > inp.tol; });
  if (distinct > 0) {
    cert.warnings.push_back("stage 1 set C has " + std::to_string(distinct) + " points apart from x0");
  }
  return cert;
}

struct VerificationReport {
  bool dist_bound_ok = false;
  bool descent_ok = false;
  UniquenessEvidence uniqueness;
  bool ok() const noexcept { return dist_bound_ok && descent_ok && uniqueness.ok(); }
};

/// Independent recheck of (i)-(iii) for a certificate on a (possibly finer) grid.
inline VerificationReport verify_report(const Ivf& f, const EkelandCertificate& cert, const SampleGrid& grid,
                                        double delta, double tol) {
  VerificationReport r;
  r.dist_bound_ok = distance(cert.x0, cert.xbar) < cert.eps / delta;
  r.descent_ok = preceq(f.eval(cert.x0), f.eval(cert.xbar));
  r.uniqueness = check_uniqueness(f, cert.x0, delta, grid.points(), tol);
  return r;
}

inline bool verify_certificate(const Ivf& f, const EkelandCertificate& cert, const SampleGrid& grid,
                               double delta, double tol) {
  return verify_report(f, cert, grid, delta, tol).ok();
}

/// Grid with (res - 1) * factor + 1 points per axis over the same box.
inline SampleGrid refined_grid(const SampleGrid& grid, std::size_t factor = 10) {
  std::vector<std::size_t> res;
  for (auto r : grid.resolution()) res.push_back((r - 1) * factor + 1);
  return SampleGrid(grid.box(), res);
}

struct EvpGateauxResult {
  EkelandCertificate certificate;
  double derivative_norm = 0;  ///< sampled lower bound of ||F_G(x0)||
  double tol = 0;
  bool passed = false;         ///< derivative_norm <= δ + tol
};

inline EvpGateauxResult evp_gateaux(const EkelandInput& inp, std::span<const Point> directions,
                                    std::span<const double> ladder = kDefaultLambdaLadder, double tol = 1e-3) {
  EvpGateauxResult r;
  r.certificate = evp_search(inp);
  r.tol = tol;
  const auto g = derivative_map(inp.f, r.certificate.x0, {ladder.begin(), ladder.end()});
  r.derivative_norm = operator_norm(g, directions);
  r.passed = r.derivative_norm <= inp.delta + tol;
  return r;
}

// ---------------------------------------------------------------------------
// Level-bound lemma

struct LevelBoundReport {
  std::size_t members = 0;
  std::size_t mismatches = 0;     ///< dominance membership != union reduction
  std::size_t shell_members = 0;  ///< members on the outer grid layer
  bool ok() const noexcept { return mismatches == 0 && shell_members == 0; }
};

/// The set {x : A ⊀ [||x-x̄||, ||x-x̄||]} against its reduction
/// ||x-x̄|| <= A.lo or A.lo < ||x-x̄|| < A.hi, pointwise on the grid.
inline LevelBoundReport level_bound_lemma_check(std::span<const double> xbar, const Interval& a,
                                                const SampleGrid& grid) {
  LevelBoundReport r;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double d = distance(grid.point(k), xbar);
    const bool member = nprec(a, ExtendedInterval(d, d));
    const bool reduced = d <= a.lo() || (a.lo() < d && d < a.hi());
    if (member != reduced) ++r.mismatches;
    if (member) {
      ++r.members;
      if (grid.on_shell(k)) ++r.shell_members;
    }
  }
  return r;
}

}  // namespace ivevp
