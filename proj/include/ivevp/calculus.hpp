#pragma once

/**
 * @file calculus.hpp
 * @brief gH-Gâteaux directional derivatives from difference-quotient ladders,
 *        sampled linear IVFs, their operator norm, and stationarity checks.
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "ivevp/geometry.hpp"
#include "ivevp/interval.hpp"
#include "ivevp/ivf.hpp"

namespace ivevp {

inline const std::vector<double> kDefaultLambdaLadder = {1e-1, 1e-2, 1e-3, 1e-4,
                                                         1e-5, 1e-6, 1e-7, 1e-8};
inline constexpr double kDerivativeGapTol = 1e-6;

struct DirectionalDerivative {
  Point base;
  Point direction;
  Interval value{0, 0};          ///< last quotient
  std::vector<double> ladder;
  std::vector<Interval> quotients;
  std::vector<double> gaps;      ///< ||q[k+1] ⊖gH q[k]||
  double residual = 0;           ///< last entry of gaps
  bool converged = false;        ///< residual <= tol
};

/// Quotients (1/λ) ⊙ (F(x̄+λh) ⊖gH F(x̄)) down the ladder. Does not throw on
/// a large residual; see gateaux_derivative.
inline DirectionalDerivative gateaux_quotients(const Ivf& f, std::span<const double> base,
                                               std::span<const double> dir,
                                               std::span<const double> ladder = kDefaultLambdaLadder,
                                               double tol = kDerivativeGapTol) {
  if (base.size() != dir.size()) throw Error(Errc::InvalidArgument, "direction dimension mismatch");
  if (ladder.size() < 2) throw Error(Errc::InvalidArgument, "lambda ladder needs at least two entries");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!(ladder[i] > 0) || (i && !(ladder[i] < ladder[i - 1]))) {
      throw Error(Errc::InvalidArgument, "lambda ladder must be positive and strictly decreasing");
    }
  }
  const ExtendedInterval at = f.eval(base);
  if (!at.is_finite()) throw Error(Errc::UndefinedOperation, "F is not finite at the base point");

  DirectionalDerivative d;
  d.base.assign(base.begin(), base.end());
  d.direction.assign(dir.begin(), dir.end());
  d.ladder.assign(ladder.begin(), ladder.end());
  Point x(base.size());
  for (double lambda : ladder) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = base[i] + lambda * dir[i];
    const ExtendedInterval v = f.eval(x);
    if (!v.is_finite()) throw Error(Errc::UndefinedOperation, "F is not finite near the base point");
    d.quotients.push_back(scalar_mul(1.0 / lambda, gh_sub(v.finite(), at.finite())));
  }
  for (std::size_t k = 1; k < d.quotients.size(); ++k) {
    d.gaps.push_back(norm(gh_sub(d.quotients[k], d.quotients[k - 1])));
  }
  d.value = d.quotients.back();
  d.residual = d.gaps.back();
  d.converged = d.residual <= tol;
  return d;
}

/// F_G(x̄)(h); throws NonConvergent when the last two quotients differ by more than tol.
inline DirectionalDerivative gateaux_derivative(const Ivf& f, std::span<const double> base,
                                                std::span<const double> dir,
                                                std::span<const double> ladder = kDefaultLambdaLadder,
                                                double tol = kDerivativeGapTol) {
  auto d = gateaux_quotients(f, base, dir, ladder, tol);
  if (!d.converged) {
    throw Error(Errc::NonConvergent, "difference quotients at " + to_string(base) + " along " +
                                         to_string(dir) + " still move by " + format_real(d.residual));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Linear IVFs

using LinearAction = std::function<Interval(std::span<const double>)>;

struct LinearIvfApprox {
  std::size_t dim = 1;
  LinearAction action;
  double bound_constant = 0;

  Interval operator()(std::span<const double> h) const { return action(h); }
};

/// h ↦ A ⊙ <c, h>, e.g. [1,2] ⊙ h on R.
inline LinearIvfApprox scaled_linear(const Interval& a, std::vector<double> coeffs) {
  const std::size_t dim = coeffs.size();
  return {dim, [a, coeffs = std::move(coeffs)](std::span<const double> h) {
            double s = 0;
            for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * h[i];
            return scalar_mul(s, a);
          }};
}

inline LinearIvfApprox zero_map(std::size_t dim) {
  return {dim, [](std::span<const double>) { return Interval(0, 0); }};
}

inline LinearIvfApprox sum_map(const LinearIvfApprox& g1, const LinearIvfApprox& g2) {
  return {g1.dim, [g1, g2](std::span<const double> h) { return add(g1(h), g2(h)); }};
}

inline LinearIvfApprox scale_map(double gamma, const LinearIvfApprox& g) {
  return {g.dim, [gamma, g](std::span<const double> h) { return scalar_mul(gamma, g(h)); }};
}

/// h ↦ F_G(x̄)(h), each evaluation running the quotient ladder.
inline LinearIvfApprox derivative_map(const Ivf& f, Point base, std::vector<double> ladder = kDefaultLambdaLadder,
                                      double tol = kDerivativeGapTol) {
  const std::size_t dim = base.size();
  return {dim, [f, base = std::move(base), ladder = std::move(ladder), tol](std::span<const double> h) {
            return gateaux_derivative(f, base, h, ladder, tol).value;
          }};
}

/// max ||G(h)|| over the samples: a lower bound for the operator norm.
inline double operator_norm(const LinearIvfApprox& g, std::span<const Point> sphere) {
  double best = 0;
  for (const auto& h : sphere) best = std::max(best, norm(g(h)));
  return best;
}

struct NormAxiomsReport {
  double gamma = 0;
  double norm_g1 = 0;
  double norm_g2 = 0;
  double norm_scaled = 0;     ///< ||γ ⊙ G1||
  double norm_sum = 0;        ///< ||G1 ⊕ G2||
  bool homogeneity = false;   ///< norm_scaled == |γ| · norm_g1
  bool subadditivity = false; ///< norm_sum <= norm_g1 + norm_g2
  bool ok() const noexcept { return homogeneity && subadditivity; }
};

inline NormAxiomsReport norm_axioms_check(const LinearIvfApprox& g1, const LinearIvfApprox& g2, double gamma,
                                          std::span<const Point> samples) {
  if (g1.dim != g2.dim) throw Error(Errc::InvalidArgument, "norm_axioms_check: dimension mismatch");
  NormAxiomsReport r;
  r.gamma = gamma;
  r.norm_g1 = operator_norm(g1, samples);
  r.norm_g2 = operator_norm(g2, samples);
  r.norm_scaled = operator_norm(scale_map(gamma, g1), samples);
  r.norm_sum = operator_norm(sum_map(g1, g2), samples);
  r.homogeneity = r.norm_scaled == std::abs(gamma) * r.norm_g1;
  r.subadditivity = r.norm_sum <= r.norm_g1 + r.norm_g2;
  return r;
}

struct BoundedLinearReport {
  bool linear = false;
  double bound = 0;                 ///< smallest C with ||G(x)|| <= C||x|| on the samples
  double additivity_residual = 0;   ///< max ||G(x+y) ⊖gH (G(x) ⊕ G(y))||
  double homogeneity_residual = 0;  ///< max ||G(γx) ⊖gH γ⊙G(x)||
};

namespace detail {

/// x and y share an orthant (no coordinate with opposite signs). Interval
/// scaling h ↦ A⊙h is Minkowski-additive only on such pairs.
inline bool same_orthant(std::span<const double> x, std::span<const double> y) noexcept {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] * y[i] < 0) return false;
  }
  return true;
}

inline constexpr double kHomogeneityScalings[] = {-2.0, -0.5, 0.5, 3.0};

}  // namespace detail

inline BoundedLinearReport bounded_linear_probe(const LinearIvfApprox& g, std::span<const Point> samples,
                                                double tol = 1e-9) {
  BoundedLinearReport r;
  for (const auto& x : samples) {
    const double nx = euclidean_norm(x);
    const Interval gx = g(x);
    if (nx > 0) r.bound = std::max(r.bound, norm(gx) / nx);
    for (double gamma : detail::kHomogeneityScalings) {
      Point sx(x);
      for (auto& v : sx) v *= gamma;
      r.homogeneity_residual =
          std::max(r.homogeneity_residual, norm(gh_sub(g(sx), scalar_mul(gamma, gx))));
    }
    for (const auto& y : samples) {
      if (!detail::same_orthant(x, y)) continue;
      Point s(x);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += y[i];
      r.additivity_residual = std::max(r.additivity_residual, norm(gh_sub(g(s), add(gx, g(y)))));
    }
  }
  r.linear = r.additivity_residual < tol && r.homogeneity_residual < tol;
  return r;
}

struct StationarityReport {
  std::vector<DirectionalDerivative> derivatives;
  double max_norm = 0;
  bool stationary = false;
};

/// ||F_G(x̄)(h)|| <= tol for every tested direction.
inline StationarityReport stationarity_report(const Ivf& f, std::span<const double> base,
                                              std::span<const Point> directions,
                                              std::span<const double> ladder = kDefaultLambdaLadder,
                                              double tol = 1e-6) {
  StationarityReport r;
  for (const auto& h : directions) {
    r.derivatives.push_back(gateaux_derivative(f, base, h, ladder));
    r.max_norm = std::max(r.max_norm, norm(r.derivatives.back().value));
  }
  r.stationary = r.max_norm <= tol;
  return r;
}

inline bool stationarity_check(const Ivf& f, std::span<const double> base, std::span<const Point> directions,
                               std::span<const double> ladder = kDefaultLambdaLadder, double tol = 1e-6) {
  return stationarity_report(f, base, directions, ladder, tol).stationary;
}

}  // namespace ivevp
