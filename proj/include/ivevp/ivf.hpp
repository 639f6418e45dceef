#pragma once

/**
 * @file ivf.hpp
 * @brief Interval-valued functions on boxes in R^n: evaluation, sampled
 *        lower/upper limits, gH-semicontinuity probes, level sets, sums,
 *        indicators, infimum and argmin over sample sets.
 *
 * Every probe here works from finitely many samples. A positive
 * semicontinuity verdict means "no violation found with these parameters",
 * never a proof.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ivevp/geometry.hpp"
#include "ivevp/interval.hpp"

namespace ivevp {

using ScalarField = std::function<double(std::span<const double>)>;

struct EndpointValues {
  double lo;
  double hi;
};

using ValueField = std::function<EndpointValues(std::span<const double>)>;

/// Interval-valued function F(x) = [lower(x), upper(x)] on a box.
class Ivf {
 public:
  Ivf(ScalarField lower, ScalarField upper, Box domain, std::string label = {})
      : Ivf(
            [lower = std::move(lower), upper = std::move(upper)](std::span<const double> x) {
              return EndpointValues{lower(x), upper(x)};
            },
            std::move(domain), std::move(label)) {}

  Ivf(ValueField values, Box domain, std::string label = {})
      : values_(std::move(values)), domain_(std::move(domain)), label_(std::move(label)) {}

  std::size_t dim() const noexcept { return domain_.dim(); }
  const Box& domain() const noexcept { return domain_; }
  const std::string& label() const noexcept { return label_; }

  /// Raw endpoint values without order or domain checks.
  EndpointValues endpoints(std::span<const double> x) const { return values_(x); }
  double lower_at(std::span<const double> x) const { return values_(x).lo; }
  double upper_at(std::span<const double> x) const { return values_(x).hi; }

  ExtendedInterval eval(std::span<const double> x) const {
    if (!domain_.contains(x)) {
      throw Error(Errc::OutOfDomain, label_ + " evaluated at " + to_string(x) +
                                         " outside its domain " + domain_.to_string());
    }
    const auto [lo, hi] = values_(x);
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
      throw Error(Errc::EndpointOrderViolation,
                  label_ + " at " + to_string(x) + " gave lower=" + format_real(lo) +
                      " upper=" + format_real(hi));
    }
    return {lo, hi};
  }

  ExtendedInterval operator()(std::span<const double> x) const { return eval(x); }

 private:
  ValueField values_;
  Box domain_;
  std::string label_;
};

/// Constant IVF on a box.
inline Ivf constant_ivf(const ExtendedInterval& c, Box domain, std::string label = "constant") {
  return Ivf([c](std::span<const double>) { return EndpointValues{c.lo(), c.hi()}; },
             std::move(domain), std::move(label));
}

/// Pointwise sum F1 ⊕ F2 on the intersection of the two domains; +inf absorbs.
inline Ivf add_ivf(const Ivf& f1, const Ivf& f2) {
  if (f1.dim() != f2.dim()) throw Error(Errc::InvalidArgument, "add_ivf: dimension mismatch");
  std::vector<double> lo(f1.dim()), hi(f1.dim());
  for (std::size_t i = 0; i < f1.dim(); ++i) {
    lo[i] = std::max(f1.domain().lo(i), f2.domain().lo(i));
    hi[i] = std::min(f1.domain().hi(i), f2.domain().hi(i));
  }
  auto values = [f1, f2](std::span<const double> x) {
    const auto s = add(f1.eval(x), f2.eval(x));
    return EndpointValues{s.lo(), s.hi()};
  };
  return Ivf(values, Box(std::move(lo), std::move(hi)), f1.label() + "+" + f2.label());
}

/// δ_S: [0,0] on S, +inf off S.
inline Ivf indicator(std::function<bool(std::span<const double>)> member, Box domain,
                     std::string label = "indicator") {
  return Ivf(
      [member = std::move(member)](std::span<const double> x) {
        return member(x) ? EndpointValues{0.0, 0.0} : EndpointValues{kInf, kInf};
      },
      std::move(domain), std::move(label));
}

inline std::vector<ExtendedInterval> evaluate_all(const Ivf& f, std::span<const Point> points) {
  std::vector<ExtendedInterval> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(f.eval(p));
  return out;
}

// ---------------------------------------------------------------------------
// Lower / upper limits

struct ProbeParams {
  std::vector<double> delta_ladder = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  std::size_t samples_per_ball = 256;
  std::uint64_t seed = 1;
  double tol = 1e-4;

  void validate() const {
    if (delta_ladder.empty()) throw Error(Errc::InvalidArgument, "empty radius ladder");
    for (std::size_t i = 0; i < delta_ladder.size(); ++i) {
      if (!(delta_ladder[i] > 0)) throw Error(Errc::InvalidArgument, "radii must be positive");
      if (i && !(delta_ladder[i] < delta_ladder[i - 1])) {
        throw Error(Errc::InvalidArgument, "radius ladder must be strictly decreasing");
      }
    }
    if (samples_per_ball < 1) throw Error(Errc::InvalidArgument, "samples_per_ball must be >= 1");
    if (!(tol > 0)) throw Error(Errc::InvalidArgument, "tol must be positive");
  }
};

/// Per-radius summary of F over sampled points of B_δ(x̄) (x̄ included).
struct BallSummary {
  double radius;
  std::size_t samples;
  ExtendedInterval inf;
  ExtendedInterval sup;
  double max_gap;  ///< max gh_distance(F(x), F(x̄)) over the samples
};

inline std::vector<BallSummary> scan_balls(const Ivf& f, std::span<const double> center,
                                           const ProbeParams& p) {
  p.validate();
  const ExtendedInterval at_center = f.eval(center);
  std::vector<BallSummary> out;
  for (double r : p.delta_ladder) {
    std::vector<ExtendedInterval> vals;
    double gap = 0;
    for (const auto& x : sample_ball(center, r, p.samples_per_ball, p.seed)) {
      if (!f.domain().contains(x)) continue;
      vals.push_back(f.eval(x));
      gap = std::max(gap, gh_distance(vals.back(), at_center));
    }
    out.push_back({r, vals.size(), inf_family(vals), sup_family(vals), gap});
  }
  return out;
}

/// liminf_{x→x̄} F(x) estimated as sup over the ladder of the sampled ball infima.
inline ExtendedInterval lower_limit(const Ivf& f, std::span<const double> center, const ProbeParams& p = {}) {
  std::vector<ExtendedInterval> infs;
  for (const auto& b : scan_balls(f, center, p)) infs.push_back(b.inf);
  return sup_family(infs);
}

/// limsup_{x→x̄} F(x) estimated as inf over the ladder of the sampled ball suprema.
inline ExtendedInterval upper_limit(const Ivf& f, std::span<const double> center, const ProbeParams& p = {}) {
  std::vector<ExtendedInterval> sups;
  for (const auto& b : scan_balls(f, center, p)) sups.push_back(b.sup);
  return inf_family(sups);
}

/// F(x̄) ⪯ liminf F, endpoints relaxed by p.tol.
inline bool is_gh_lsc_at(const Ivf& f, std::span<const double> center, const ProbeParams& p = {}) {
  return preceq_within(f.eval(center), lower_limit(f, center, p), p.tol);
}

/// limsup F ⪯ F(x̄), endpoints relaxed by p.tol.
inline bool is_gh_usc_at(const Ivf& f, std::span<const double> center, const ProbeParams& p = {}) {
  return preceq_within(upper_limit(f, center, p), f.eval(center), p.tol);
}

struct ContinuityReport {
  ExtendedInterval value;
  ExtendedInterval liminf;
  ExtendedInterval limsup;
  bool lsc;
  bool usc;
  bool continuous;             ///< lsc && usc
  double eps_delta_gap;        ///< max ||F(x) ⊖gH F(x̄)|| on the tightest ball
  bool eps_delta_continuous;   ///< eps_delta_gap <= tol
  bool agrees() const noexcept { return continuous == eps_delta_continuous; }
};

/// One pass over the balls producing liminf, limsup, both semicontinuity
/// verdicts and the ε-δ cross-check on the tightest ball.
inline ContinuityReport probe_continuity(const Ivf& f, std::span<const double> center,
                                         const ProbeParams& p = {}) {
  const auto balls = scan_balls(f, center, p);
  std::vector<ExtendedInterval> infs, sups;
  for (const auto& b : balls) {
    infs.push_back(b.inf);
    sups.push_back(b.sup);
  }
  const ExtendedInterval value = f.eval(center);
  const ExtendedInterval li = sup_family(infs);
  const ExtendedInterval ls = inf_family(sups);
  const bool lsc = preceq_within(value, li, p.tol);
  const bool usc = preceq_within(ls, value, p.tol);
  const double gap = balls.back().max_gap;
  return {value, li, ls, lsc, usc, lsc && usc, gap, gap <= p.tol};
}

inline bool is_gh_continuous_at(const Ivf& f, std::span<const double> center, const ProbeParams& p = {}) {
  return probe_continuity(f, center, p).continuous;
}

struct EndpointLscReport {
  bool ivf_lsc;    ///< interval route: F(x̄) ⪯ liminf F
  bool lower_lsc;  ///< scalar route on the lower endpoint field
  bool upper_lsc;  ///< scalar route on the upper endpoint field
  bool agrees() const noexcept { return ivf_lsc == (lower_lsc && upper_lsc); }
};

/// Compares the interval lsc probe with separate scalar lsc probes of the two
/// endpoint fields over the same sample points.
inline EndpointLscReport endpoint_lsc_equivalence(const Ivf& f, std::span<const double> center,
                                                  const ProbeParams& p = {}) {
  p.validate();
  const auto at = f.endpoints(center);
  double liminf_lo = -kInf;
  double liminf_hi = -kInf;
  for (double r : p.delta_ladder) {
    double min_lo = kInf;
    double min_hi = kInf;
    for (const auto& x : sample_ball(center, r, p.samples_per_ball, p.seed)) {
      if (!f.domain().contains(x)) continue;
      const auto v = f.endpoints(x);
      min_lo = std::min(min_lo, v.lo);
      min_hi = std::min(min_hi, v.hi);
    }
    liminf_lo = std::max(liminf_lo, min_lo);
    liminf_hi = std::max(liminf_hi, min_hi);
  }
  return {is_gh_lsc_at(f, center, p), at.lo <= liminf_lo + p.tol, at.hi <= liminf_hi + p.tol};
}

// ---------------------------------------------------------------------------
// Level sets

/// x ∈ lev_{α⊀}F  ⟺  α ⊀ F(x)
inline bool level_member(const Ivf& f, const ExtendedInterval& alpha, std::span<const double> x) {
  return nprec(alpha, f.eval(x));
}

inline std::vector<Point> sample_level_set(const Ivf& f, const ExtendedInterval& alpha, const SampleGrid& grid) {
  std::vector<Point> out;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    Point x = grid.point(k);
    if (level_member(f, alpha, x)) out.push_back(std::move(x));
  }
  return out;
}

struct LevelBoundedEntry {
  ExtendedInterval alpha;
  std::size_t members = 0;
  std::size_t shell_members = 0;
  bool bounded() const noexcept { return shell_members == 0; }
};

struct LevelBoundedReport {
  std::vector<LevelBoundedEntry> entries;
  bool bounded() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.bounded(); });
  }
};

/// Bounded evidence for each α: no member of the level set lies on the outer
/// layer of the grid. The grid is expected to extend past the region of
/// interest; a member on the shell counts as unbounded evidence.
inline LevelBoundedReport level_bounded_probe(const Ivf& f, std::span<const ExtendedInterval> alphas,
                                              const SampleGrid& grid) {
  LevelBoundedReport report;
  for (const auto& a : alphas) report.entries.push_back({a});
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const ExtendedInterval v = f.eval(grid.point(k));
    const bool shell = grid.on_shell(k);
    for (auto& e : report.entries) {
      if (nprec(e.alpha, v)) {
        ++e.members;
        if (shell) ++e.shell_members;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Infimum, properness, argmin

inline ExtendedInterval infimum_over(const Ivf& f, std::span<const Point> points) {
  if (points.empty()) throw Error(Errc::EmptyGrid, "infimum over an empty sample set");
  return inf_family(evaluate_all(f, points));
}

inline ExtendedInterval infimum_over(const Ivf& f, const SampleGrid& grid) {
  return infimum_over(f, grid.points());
}

/// Some sampled value is ≺ +inf and every sampled value is ≻ -inf.
inline bool is_proper_probe(const Ivf& f, std::span<const Point> points) {
  if (points.empty()) throw Error(Errc::EmptyGrid, "properness probe over an empty sample set");
  bool somewhere_finite = false;
  for (const auto& x : points) {
    const ExtendedInterval v = f.eval(x);
    if (!prec(ExtendedInterval::neg_inf(), v)) return false;
    if (prec(v, ExtendedInterval::pos_inf())) somewhere_finite = true;
  }
  return somewhere_finite;
}

inline bool is_proper_probe(const Ivf& f, const SampleGrid& grid) { return is_proper_probe(f, grid.points()); }

/// Indices of the values within tol of their infimum (gh_distance); empty
/// when the infimum is +inf.
inline std::vector<std::size_t> argmin_indices(std::span<const ExtendedInterval> values, double tol) {
  if (values.empty()) throw Error(Errc::EmptyGrid, "argmin over an empty sample set");
  const ExtendedInterval inf = inf_family(values);
  std::vector<std::size_t> out;
  if (inf.is_pos_inf()) return out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (gh_distance(values[i], inf) <= tol) out.push_back(i);
  }
  return out;
}

inline std::vector<Point> argmin_over(const Ivf& f, std::span<const Point> points, double tol) {
  const auto values = evaluate_all(f, points);
  std::vector<Point> out;
  for (auto i : argmin_indices(values, tol)) out.push_back(points[i]);
  return out;
}

inline std::vector<Point> argmin_over(const Ivf& f, const SampleGrid& grid, double tol) {
  return argmin_over(f, grid.points(), tol);
}

}  // namespace ivevp
