#pragma once

/**
 * @file catalog.hpp
 * @brief Built-in IVFs and interval sequences addressable by label, each
 *        annotated with the properties the self-test expects.
 */

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivevp/geometry.hpp"
#include "ivevp/interval.hpp"
#include "ivevp/ivf.hpp"
#include "ivevp/sequences.hpp"

namespace ivevp {

struct CatalogEntry {
  std::string label;
  std::string description;
  Ivf f;
  Point probe;                              ///< point for the semicontinuity probes
  bool lsc = true;                          ///< expected at probe
  bool usc = true;                          ///< expected at probe
  std::optional<ExtendedInterval> liminf;   ///< expected lower limit at probe
  Box search_box;                           ///< box for argmin / evp runs
  std::vector<ExtendedInterval> alphas;     ///< levels for the level-bounded probe (grid over the domain)
  bool level_bounded = false;               ///< expected verdict of that probe
  bool proper = true;                       ///< expected on the search grid
  bool differentiable = false;              ///< endpoint fields smooth on the search box
  std::optional<ExtendedInterval> minimum;  ///< expected infimum over the search grid

  std::size_t dim() const noexcept { return f.dim(); }
};

/// Grid used for minimum attainment: 4001 points in 1-D, 65 x 65 in 2-D.
inline SampleGrid attainment_grid(const CatalogEntry& e) {
  return SampleGrid(e.search_box, e.dim() == 1 ? std::size_t{4001} : std::size_t{65});
}

inline SampleGrid level_grid(const CatalogEntry& e) {
  return SampleGrid(e.f.domain(), e.dim() == 1 ? std::size_t{601} : std::size_t{61});
}

namespace detail {

/// [1,2] ⊙ s
inline EndpointValues one_two(double s) { return s >= 0 ? EndpointValues{s, 2 * s} : EndpointValues{2 * s, s}; }

inline double plateau_depth(double x) {
  const double p = std::max(std::abs(x) - 1.0, 0.0);
  return p * p;
}

}  // namespace detail

inline std::vector<CatalogEntry> catalog() {
  const Box line = Box::cube(1, -3, 3);
  const Box plane = Box::cube(2, -3, 3);
  std::vector<CatalogEntry> out;

  out.push_back({
      .label = "quadratic",
      .description = "[x^2, 2x^2]",
      .f = Ivf([](std::span<const double> x) { return EndpointValues{x[0] * x[0], 2 * x[0] * x[0]}; }, line,
               "quadratic"),
      .probe = {1.0},
      .liminf = ExtendedInterval(1, 2),
      .search_box = Box::cube(1, -2, 2),
      .alphas = {{1, 2}, {4, 8}},
      .level_bounded = true,
      .differentiable = true,
      .minimum = ExtendedInterval(0, 0),
  });

  out.push_back({
      .label = "sin-recip",
      .description = "[1,2]*sin(1/x1) + cos(x2)^2 off the axes, [-2,-1] on them",
      .f = Ivf(
          [](std::span<const double> x) {
            if (x[0] * x[1] == 0) return EndpointValues{-2, -1};
            const auto v = detail::one_two(std::sin(1 / x[0]));
            const double c = std::cos(x[1]) * std::cos(x[1]);
            return EndpointValues{v.lo + c, v.hi + c};
          },
          plane, "sin-recip"),
      .probe = {0.0, 0.0},
      .usc = false,
      .liminf = ExtendedInterval(-2, -1),
      .search_box = Box::cube(2, -1, 1),
      .alphas = {{0, 0}},
      .minimum = ExtendedInterval(-2, -1),
  });

  out.push_back({
      .label = "rational-exp",
      .description = "[|x1 x2|/(2x1^2+x2^2), exp(|6 x1 x2|)/(x1^2+x2^2)] off the axes, [0,0] on them",
      .f = Ivf(
          [](std::span<const double> x) {
            const double p = x[0] * x[1];
            if (p == 0) return EndpointValues{0, 0};
            return EndpointValues{std::abs(p) / (2 * x[0] * x[0] + x[1] * x[1]),
                                  std::exp(std::abs(6 * p)) / (x[0] * x[0] + x[1] * x[1])};
          },
          plane, "rational-exp"),
      .probe = {0.0, 0.0},
      .usc = false,
      .liminf = ExtendedInterval(0, 0),
      .search_box = Box::cube(2, -1, 1),
      .alphas = {{1, 1}},
      .minimum = ExtendedInterval(0, 0),
  });

  out.push_back({
      .label = "exp-levelset",
      .description = "[1,2]*x1^2 + [3,4]*exp(x2^2)",
      .f = Ivf(
          [](std::span<const double> x) {
            const double a = x[0] * x[0];
            const double e = std::exp(x[1] * x[1]);
            return EndpointValues{a + 3 * e, 2 * a + 4 * e};
          },
          plane, "exp-levelset"),
      .probe = {0.0, 0.0},
      .liminf = ExtendedInterval(3, 4),
      .search_box = Box::cube(2, -2, 2),
      .alphas = {{-1, 10}},
      .level_bounded = true,
      .differentiable = true,
      .minimum = ExtendedInterval(3, 4),
  });

  out.push_back({
      .label = "axis-argmin",
      .description = "[-1/|x1|, exp(-1/|x1| + x2^2)] for x1 != 0, [-inf,0] on x1 = 0",
      .f = Ivf(
          [](std::span<const double> x) {
            if (x[0] == 0) return EndpointValues{-kInf, 0};
            const double r = 1 / std::abs(x[0]);
            return EndpointValues{-r, std::exp(-r + x[1] * x[1])};
          },
          plane, "axis-argmin"),
      .probe = {0.5, 0.5},
      .liminf = ExtendedInterval(-2, std::exp(-1.75)),
      .search_box = Box::cube(2, -1, 1),
      .alphas = {{0, 1}},
      .minimum = ExtendedInterval(-kInf, 0),
  });

  out.push_back({
      .label = "exp-proper",
      .description = "[x1, exp(x1) + x2^2]",
      .f = Ivf([](std::span<const double> x) { return EndpointValues{x[0], std::exp(x[0]) + x[1] * x[1]}; }, plane,
               "exp-proper"),
      .probe = {0.0, 0.0},
      .liminf = ExtendedInterval(0, 1),
      .search_box = Box::cube(2, -1, 1),
      .alphas = {{1, 1}},
      .differentiable = true,
      .minimum = ExtendedInterval(-1, std::exp(-1.0)),
  });

  out.push_back({
      .label = "constant",
      .description = "[2,3]",
      .f = constant_ivf({2, 3}, line, "constant"),
      .probe = {0.0},
      .liminf = ExtendedInterval(2, 3),
      .search_box = Box::cube(1, -2, 2),
      .alphas = {{5, 5}},
      .differentiable = true,
      .minimum = ExtendedInterval(2, 3),
  });

  out.push_back({
      .label = "step-upper",
      .description = "[0, 0 for x<0 else 1]",
      .f = Ivf([](std::span<const double> x) { return EndpointValues{0, x[0] < 0 ? 0.0 : 1.0}; }, line,
               "step-upper"),
      .probe = {0.0},
      .lsc = false,
      .liminf = ExtendedInterval(0, 0),
      .search_box = Box::cube(1, -2, 2),
      .alphas = {{1, 1}},
      .minimum = ExtendedInterval(0, 0),
  });

  out.push_back({
      .label = "linear-12",
      .description = "[1,2]*x",
      .f = Ivf([](std::span<const double> x) { return detail::one_two(x[0]); }, line, "linear-12"),
      .probe = {0.5},
      .liminf = ExtendedInterval(0.5, 1),
      .search_box = Box::cube(1, -2, 2),
      .alphas = {{1, 2}},
      .differentiable = true,
      .minimum = ExtendedInterval(-4, -2),
  });

  out.push_back({
      .label = "ball-indicator-norm",
      .description = "indicator of the closed unit ball + [|x|,|x|]",
      .f = add_ivf(indicator([](std::span<const double> x) { return euclidean_norm(x) <= 1; }, plane, "ball"),
                   Ivf(
                       [](std::span<const double> x) {
                         const double r = euclidean_norm(x);
                         return EndpointValues{r, r};
                       },
                       plane, "norm")),
      .probe = {1.0, 0.0},
      .usc = false,
      .liminf = ExtendedInterval(1, 1),
      .search_box = Box::cube(2, -2, 2),
      .alphas = {{1, 1}},
      .level_bounded = true,
      .minimum = ExtendedInterval(0, 0),
  });

  out.push_back({
      .label = "plateau",
      .description = "[p, 2p] with p = max(|x|-1, 0)^2",
      .f = Ivf(
          [](std::span<const double> x) {
            const double p = detail::plateau_depth(x[0]);
            return EndpointValues{p, 2 * p};
          },
          line, "plateau"),
      .probe = {0.0},
      .liminf = ExtendedInterval(0, 0),
      .search_box = Box::cube(1, -2, 2),
      .alphas = {{1, 2}},
      .level_bounded = true,
      .differentiable = true,
      .minimum = ExtendedInterval(0, 0),
  });

  out.push_back({
      .label = "abs-cone",
      .description = "[|x|, 2|x|]",
      .f = Ivf(
          [](std::span<const double> x) {
            const double a = std::abs(x[0]);
            return EndpointValues{a, 2 * a};
          },
          line, "abs-cone"),
      .probe = {0.0},
      .liminf = ExtendedInterval(0, 0),
      .search_box = Box::cube(1, -2, 2),
      .alphas = {{1, 2}},
      .level_bounded = true,
      .minimum = ExtendedInterval(0, 0),
  });

  return out;
}

inline CatalogEntry find_entry(std::string_view label) {
  for (auto& e : catalog()) {
    if (e.label == label) return e;
  }
  throw Error(Errc::UnknownIdentifier, "no catalog function named '" + std::string(label) + "'");
}

// ---------------------------------------------------------------------------
// Sequences

struct SequenceEntry {
  IntervalSequence seq;
  std::string description;
};

inline std::vector<SequenceEntry> sequence_catalog() {
  auto d = [](long n) { return static_cast<double>(n); };
  return {
      {{[d](long n) { return ExtendedInterval(1 / d(n), 1); }, "inv-n"}, "[1/n, 1]"},
      {{[d](long n) {
          return n % 2 ? ExtendedInterval(1 / (d(n) * d(n)), 1 / (d(n) * d(n)) + 1)
                       : ExtendedInterval(d(n), d(n) * d(n) + 1);
        },
        "alternating"},
       "odd n: [1/n^2, 1/n^2 + 1], even n: [n, n^2 + 1]"},
      {{[d](long n) { return ExtendedInterval(d(n), d(n) + 1); }, "linear"}, "[n, n+1]"},
      {{[d](long n) { return ExtendedInterval(1 - 1 / d(n), 2); }, "rising"}, "[1 - 1/n, 2]"},
      {{[d](long n) { return ExtendedInterval(1 / (d(n) * d(n)) + 1, 3); }, "inv-square"}, "[1/n^2 + 1, 3]"},
      {{[d](long n) { return ExtendedInterval(d(n) / 4, d(n) / 2); }, "quarter-half"}, "[n/4, n/2]"},
      {{[](long n) { return ExtendedInterval(n % 2 ? -1.0 : 1.0, 2); }, "sign-flip"}, "[(-1)^n, 2]"},
  };
}

inline IntervalSequence find_sequence(std::string_view label) {
  for (auto& s : sequence_catalog()) {
    if (s.seq.label == label) return s.seq;
  }
  throw Error(Errc::UnknownIdentifier, "no catalog sequence named '" + std::string(label) + "'");
}

}  // namespace ivevp
