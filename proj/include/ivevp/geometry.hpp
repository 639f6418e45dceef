#pragma once

/**
 * @file geometry.hpp
 * @brief Points, boxes and sampling lattices in R^n, plus deterministic
 *        low-discrepancy samplers for balls and unit spheres.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivevp/error.hpp"
#include "ivevp/interval.hpp"

namespace ivevp {

using Point = std::vector<double>;

inline double euclidean_norm(std::span<const double> x) noexcept {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline double distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(Errc::InvalidArgument, "dimension mismatch");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline std::string to_string(std::span<const double> x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += format_real(x[i]);
  }
  return s + ")";
}

/// Parses "a,b,c" into a point.
inline Point parse_point(std::string_view text) {
  Point p;
  while (true) {
    const auto comma = text.find(',');
    p.push_back(parse_real(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return p;
}

/// Axis-aligned box with finite bounds.
class Box {
 public:
  Box(std::vector<double> lo, std::vector<double> hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.empty() || lo_.size() != hi_.size()) {
      throw Error(Errc::InvalidArgument, "box needs matching, non-empty bound vectors");
    }
    for (std::size_t i = 0; i < lo_.size(); ++i) {
      if (!std::isfinite(lo_[i]) || !std::isfinite(hi_[i]) || lo_[i] > hi_[i]) {
        throw Error(Errc::InvalidArgument, "box bounds must be finite with lo <= hi");
      }
    }
  }

  /// [lo, hi]^dim
  static Box cube(std::size_t dim, double lo, double hi) {
    return Box(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
  }

  /// Parses "lo:hi,lo:hi,...".
  static Box parse(std::string_view text) {
    std::vector<double> lo, hi;
    while (true) {
      const auto comma = text.find(',');
      const auto part = text.substr(0, comma);
      // "-2:-1": the separating colon is the first one not at position 0
      const auto colon = part.find(':', 1);
      if (colon == std::string_view::npos) {
        throw Error(Errc::InvalidArgument, "box bounds need the form lo:hi");
      }
      lo.push_back(parse_real(part.substr(0, colon)));
      hi.push_back(parse_real(part.substr(colon + 1)));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return Box(std::move(lo), std::move(hi));
  }

  std::size_t dim() const noexcept { return lo_.size(); }
  double lo(std::size_t i) const { return lo_.at(i); }
  double hi(std::size_t i) const { return hi_.at(i); }

  bool contains(std::span<const double> x) const noexcept {
    if (x.size() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!(x[i] >= lo_[i] && x[i] <= hi_[i])) return false;
    }
    return true;
  }

  /// Intersection with the box of half-width r around c.
  Box clipped_around(std::span<const double> c, double r) const {
    std::vector<double> lo(dim()), hi(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      lo[i] = std::max(lo_[i], c[i] - r);
      hi[i] = std::min(hi_[i], c[i] + r);
    }
    return Box(std::move(lo), std::move(hi));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i) s += ",";
      s += format_real(lo_[i]) + ":" + format_real(hi_[i]);
    }
    return s;
  }

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<double> lo_;
  std::vector<double> hi_;
};

/// Tensor lattice over a box. Points are enumerated lexicographically: the
/// first coordinate varies slowest.
class SampleGrid {
 public:
  SampleGrid(Box box, std::vector<std::size_t> resolution)
      : box_(std::move(box)), res_(std::move(resolution)) {
    if (res_.size() != box_.dim()) throw Error(Errc::InvalidArgument, "resolution/box dim mismatch");
    for (auto r : res_) {
      if (r < 2) throw Error(Errc::InvalidArgument, "grid resolution must be >= 2 per dimension");
    }
  }

  SampleGrid(Box box, std::size_t resolution)
      : SampleGrid(box, std::vector<std::size_t>(box.dim(), resolution)) {}

  const Box& box() const noexcept { return box_; }
  std::size_t dim() const noexcept { return box_.dim(); }
  const std::vector<std::size_t>& resolution() const noexcept { return res_; }

  std::size_t size() const noexcept {
    std::size_t n = 1;
    for (auto r : res_) n *= r;
    return n;
  }

  double coordinate(std::size_t axis, std::size_t k) const {
    const double a = box_.lo(axis);
    const double b = box_.hi(axis);
    if (k + 1 == res_[axis]) return b;
    return a + (b - a) * static_cast<double>(k) / static_cast<double>(res_[axis] - 1);
  }

  double spacing(std::size_t axis) const {
    return (box_.hi(axis) - box_.lo(axis)) / static_cast<double>(res_[axis] - 1);
  }

  std::vector<std::size_t> multi_index(std::size_t flat) const {
    std::vector<std::size_t> idx(dim());
    for (std::size_t i = dim(); i-- > 0;) {
      idx[i] = flat % res_[i];
      flat /= res_[i];
    }
    return idx;
  }

  Point point(std::size_t flat) const {
    const auto idx = multi_index(flat);
    Point p(dim());
    for (std::size_t i = 0; i < dim(); ++i) p[i] = coordinate(i, idx[i]);
    return p;
  }

  /// True when the point sits on the outer layer of the lattice.
  bool on_shell(std::size_t flat) const {
    const auto idx = multi_index(flat);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (idx[i] == 0 || idx[i] + 1 == res_[i]) return true;
    }
    return false;
  }

  std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(size());
    for (std::size_t k = 0; k < size(); ++k) out.push_back(point(k));
    return out;
  }

 private:
  Box box_;
  std::vector<std::size_t> res_;
};

// ---------------------------------------------------------------------------
// Low-discrepancy sampling

namespace detail {

inline constexpr std::array<unsigned, 16> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19,
                                                     23, 29, 31, 37, 41, 43, 47, 53};

inline double radical_inverse(std::uint64_t i, unsigned base) noexcept {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

/// Seed-derived Cranley-Patterson shift in [0,1)^dim. Uses the raw
/// mt19937_64 stream so the shift is identical on every standard library.
inline std::vector<double> seeded_shift(std::size_t dim, std::uint64_t seed) {
  std::vector<double> shift(dim, 0.0);
  if (seed == 0) return shift;
  std::mt19937_64 rng(seed);
  for (auto& s : shift) s = static_cast<double>(rng() >> 11) * 0x1p-53;
  return shift;
}

}  // namespace detail

/// Shifted Halton sequence in [0,1)^dim.
class HaltonSampler {
 public:
  HaltonSampler(std::size_t dim, std::uint64_t seed) : shift_(detail::seeded_shift(dim, seed)) {
    if (dim == 0 || dim > detail::kPrimes.size()) {
      throw Error(Errc::InvalidArgument, "Halton sampler supports 1..16 dimensions");
    }
  }

  /// i-th point (i starts at 1 so the origin is never produced unshifted).
  std::vector<double> operator()(std::uint64_t i) const {
    std::vector<double> u(shift_.size());
    for (std::size_t d = 0; d < u.size(); ++d) {
      double v = detail::radical_inverse(i, detail::kPrimes[d]) + shift_[d];
      u[d] = v >= 1.0 ? v - 1.0 : v;
    }
    return u;
  }

 private:
  std::vector<double> shift_;
};

/// Center followed by `count` points of the open ball B_r(center), drawn from
/// a shifted Halton sequence mapped to the cube and filtered to the ball.
inline std::vector<Point> sample_ball(std::span<const double> center, double radius, std::size_t count,
                                      std::uint64_t seed) {
  const std::size_t dim = center.size();
  HaltonSampler halton(dim, seed);
  std::vector<Point> out;
  out.reserve(count + 1);
  out.emplace_back(center.begin(), center.end());
  for (std::uint64_t i = 1; out.size() < count + 1; ++i) {
    auto u = halton(i);
    double s = 0;
    for (auto& v : u) {
      v = 2 * v - 1;
      s += v * v;
    }
    if (s >= 1.0) continue;
    Point p(dim);
    for (std::size_t d = 0; d < dim; ++d) p[d] = center[d] + radius * u[d];
    out.push_back(std::move(p));
  }
  return out;
}

/// Unit vectors: +/-e_i first, then `extra` normalized Halton directions.
inline std::vector<Point> unit_sphere_samples(std::size_t dim, std::size_t extra, std::uint64_t seed = 0) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < dim; ++i) {
    for (double s : {1.0, -1.0}) {
      Point e(dim, 0.0);
      e[i] = s;
      out.push_back(std::move(e));
    }
  }
  if (dim == 1) return out;  // the unit sphere of R is {+1, -1}
  HaltonSampler halton(dim, seed);
  for (std::uint64_t i = 1; out.size() < 2 * dim + extra; ++i) {
    auto u = halton(i);
    for (auto& v : u) v = 2 * v - 1;
    const double n = euclidean_norm(u);
    if (n < 1e-3 || n >= 1.0) continue;
    for (auto& v : u) v /= n;
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace ivevp
