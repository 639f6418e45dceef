#pragma once

/**
 * @file interval.hpp
 * @brief Closed bounded intervals, their extension by infinite endpoints,
 *        gH-difference, interval norm and the dominance partial order.
 *
 * All comparisons are exact comparisons of the stored doubles. Nothing in
 * this header introduces a tolerance; tolerance-relaxed variants are named
 * explicitly (`preceq_within`, `gh_distance`).
 */

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <system_error>

#include "ivevp/error.hpp"

namespace ivevp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Closed bounded interval [lo, hi] with finite endpoints.
class Interval {
 public:
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
      throw Error(Errc::InvalidEndpoints,
                  "interval needs finite lo <= hi, got lo=" + std::to_string(lo) +
                      " hi=" + std::to_string(hi));
    }
  }

  /// Degenerate interval [a, a].
  static Interval point(double a) { return Interval(a, a); }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

inline Interval make(double lo, double hi) { return Interval(lo, hi); }

/// Interval whose endpoints live in the extended reals. The two symbols
/// -inf and +inf of the extended set are [-inf,-inf] and [+inf,+inf]; mixed
/// forms such as [-inf, 0] are allowed as well.
class ExtendedInterval {
 public:
  ExtendedInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
      throw Error(Errc::InvalidEndpoints,
                  "extended interval needs lo <= hi without NaN, got lo=" + std::to_string(lo) +
                      " hi=" + std::to_string(hi));
    }
  }
  // NOLINTNEXTLINE(google-explicit-constructor)
  ExtendedInterval(const Interval& a) noexcept : lo_(a.lo()), hi_(a.hi()) {}

  static ExtendedInterval pos_inf() { return {kInf, kInf}; }
  static ExtendedInterval neg_inf() { return {-kInf, -kInf}; }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  bool is_finite() const noexcept { return std::isfinite(lo_) && std::isfinite(hi_); }
  bool is_pos_inf() const noexcept { return lo_ == kInf; }
  bool is_neg_inf() const noexcept { return hi_ == -kInf; }

  /// Throws UndefinedOperation when an endpoint is infinite.
  Interval finite() const {
    if (!is_finite()) {
      throw Error(Errc::UndefinedOperation, "interval has an infinite endpoint");
    }
    return Interval(lo_, hi_);
  }

  friend bool operator==(const ExtendedInterval&, const ExtendedInterval&) = default;

 private:
  double lo_;
  double hi_;
};

// ---------------------------------------------------------------------------
// Arithmetic on I(R)

inline Interval add(const Interval& a, const Interval& b) {
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

inline Interval add_scalar(const Interval& a, double s) { return Interval(a.lo() + s, a.hi() + s); }

/// Minkowski difference A - B = [a.lo - b.hi, a.hi - b.lo]; A - A is not 0.
inline Interval minkowski_sub(const Interval& a, const Interval& b) {
  return Interval(a.lo() - b.hi(), a.hi() - b.lo());
}

inline Interval gh_sub(const Interval& a, const Interval& b) {
  const double dl = a.lo() - b.lo();
  const double dh = a.hi() - b.hi();
  return Interval(std::min(dl, dh), std::max(dl, dh));
}

inline Interval gh_sub_scalar(const Interval& a, double s) { return gh_sub(a, Interval::point(s)); }

inline Interval scalar_mul(double mu, const Interval& a) {
  if (!std::isfinite(mu)) {
    throw Error(Errc::UndefinedOperation, "scalar multiplier must be finite");
  }
  return mu >= 0 ? Interval(mu * a.lo(), mu * a.hi()) : Interval(mu * a.hi(), mu * a.lo());
}

inline double norm(const Interval& a) noexcept { return std::max(std::abs(a.lo()), std::abs(a.hi())); }

// ---------------------------------------------------------------------------
// Extended arithmetic. Only the pieces the theory actually uses are defined:
// addition (with +inf absorbing), gH-difference of finite operands, norm.

/// Endpoint-wise sum in which [+inf,+inf] absorbs everything.
inline ExtendedInterval add(const ExtendedInterval& a, const ExtendedInterval& b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtendedInterval::pos_inf();
  const double lo = a.lo() + b.lo();
  const double hi = a.hi() + b.hi();
  if (std::isnan(lo) || std::isnan(hi)) {
    throw Error(Errc::UndefinedOperation, "sum of opposite infinite endpoints");
  }
  return {lo, hi};
}

inline ExtendedInterval add_scalar(const ExtendedInterval& a, double s) {
  return add(a, ExtendedInterval(s, s));
}

inline Interval gh_sub(const ExtendedInterval& a, const ExtendedInterval& b) {
  if (!a.is_finite() || !b.is_finite()) {
    throw Error(Errc::UndefinedOperation, "gH-difference is not defined for infinite endpoints");
  }
  return gh_sub(a.finite(), b.finite());
}

/// Norm of an extended interval; std::nullopt stands for +inf.
inline std::optional<double> finite_norm(const ExtendedInterval& a) noexcept {
  if (!a.is_finite()) return std::nullopt;
  return std::max(std::abs(a.lo()), std::abs(a.hi()));
}

/// norm(gh_sub(a, b)) extended endpoint-wise: equal infinite endpoints are at
/// distance 0, any other infinite mismatch is at distance +inf.
inline double gh_distance(const ExtendedInterval& a, const ExtendedInterval& b) noexcept {
  auto gap = [](double x, double y) {
    if (x == y) return 0.0;
    if (std::isinf(x) || std::isinf(y)) return kInf;
    return std::abs(x - y);
  };
  return std::max(gap(a.lo(), b.lo()), gap(a.hi(), b.hi()));
}

// ---------------------------------------------------------------------------
// Dominance

enum class OrderRelation {
  DominatesStrictly,  ///< A < B in both endpoints
  DominatesEqual,     ///< A == B
  DominatesWeakly,    ///< A <= B, A != B, one endpoint tied
  Incomparable,       ///< endpoints cross strictly
  DominatedBy,        ///< B <= A, B != A
};

constexpr std::string_view to_string(OrderRelation r) noexcept {
  switch (r) {
    case OrderRelation::DominatesStrictly: return "DominatesStrictly";
    case OrderRelation::DominatesEqual: return "DominatesEqual";
    case OrderRelation::DominatesWeakly: return "DominatesWeakly";
    case OrderRelation::Incomparable: return "Incomparable";
    case OrderRelation::DominatedBy: return "DominatedBy";
  }
  return "Unknown";
}

/// A ⪯ B
inline bool preceq(const ExtendedInterval& a, const ExtendedInterval& b) noexcept {
  return a.lo() <= b.lo() && a.hi() <= b.hi();
}

/// A ≺ B: A ⪯ B and A ≠ B.
inline bool prec(const ExtendedInterval& a, const ExtendedInterval& b) noexcept {
  return preceq(a, b) && !(a == b);
}

inline bool incomparable(const ExtendedInterval& a, const ExtendedInterval& b) noexcept {
  return (a.lo() < b.lo() && a.hi() > b.hi()) || (a.lo() > b.lo() && a.hi() < b.hi());
}

/// A ⊀ B: B ⪯ A or the two are incomparable; equivalently not A ≺ B.
inline bool nprec(const ExtendedInterval& a, const ExtendedInterval& b) noexcept {
  return preceq(b, a) || incomparable(a, b);
}

inline OrderRelation classify(const ExtendedInterval& a, const ExtendedInterval& b) noexcept {
  if (a == b) return OrderRelation::DominatesEqual;
  if (preceq(a, b)) {
    return (a.lo() < b.lo() && a.hi() < b.hi()) ? OrderRelation::DominatesStrictly
                                                 : OrderRelation::DominatesWeakly;
  }
  if (preceq(b, a)) return OrderRelation::DominatedBy;
  return OrderRelation::Incomparable;
}

/// A ⪯ B with both endpoint inequalities relaxed by tol.
inline bool preceq_within(const ExtendedInterval& a, const ExtendedInterval& b, double tol) noexcept {
  return a.lo() <= b.lo() + tol && a.hi() <= b.hi() + tol;
}

// ---------------------------------------------------------------------------
// Infimum and supremum of finite families (componentwise, left-to-right)

inline ExtendedInterval inf_family(std::span<const ExtendedInterval> family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "infimum of an empty family");
  double lo = family.front().lo();
  double hi = family.front().hi();
  for (const auto& v : family.subspan(1)) {
    lo = std::min(lo, v.lo());
    hi = std::min(hi, v.hi());
  }
  return {lo, hi};
}

inline ExtendedInterval sup_family(std::span<const ExtendedInterval> family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "supremum of an empty family");
  double lo = family.front().lo();
  double hi = family.front().hi();
  for (const auto& v : family.subspan(1)) {
    lo = std::max(lo, v.lo());
    hi = std::max(hi, v.hi());
  }
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// Text form "[lo,hi]" with inf / -inf tokens

/// Shortest decimal text that round-trips to the same double.
inline std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string to_string(const ExtendedInterval& a) {
  return "[" + format_real(a.lo()) + "," + format_real(a.hi()) + "]";
}

inline std::ostream& operator<<(std::ostream& os, const ExtendedInterval& a) { return os << to_string(a); }
inline std::ostream& operator<<(std::ostream& os, const Interval& a) {
  return os << to_string(ExtendedInterval(a));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses a real number, accepting inf, +inf and -inf.
inline double parse_real(std::string_view text) {
  text = detail::trim(text);
  if (text == "inf" || text == "+inf") return kInf;
  if (text == "-inf") return -kInf;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::InvalidArgument, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

/// Parses "[lo,hi]" (brackets optional).
inline ExtendedInterval parse_interval(std::string_view text) {
  text = detail::trim(text);
  if (!text.empty() && text.front() == '[') text.remove_prefix(1);
  if (!text.empty() && text.back() == ']') text.remove_suffix(1);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw Error(Errc::InvalidArgument, "interval text needs the form [lo,hi]");
  }
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

}  // namespace ivevp
