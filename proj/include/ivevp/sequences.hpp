#pragma once

/**
 * @file sequences.hpp
 * @brief Finite-horizon evidence about sequences of intervals: convergence,
 *        divergence to +/-inf, monotone limits, liminf and limsup.
 *
 * Every answer is a verdict over terms 1..horizon. Nothing here claims an
 * asymptotic fact; the verdict records the horizon and tolerance it used.
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivevp/interval.hpp"

namespace ivevp {

inline constexpr long kDefaultHorizon = 10'000;
inline constexpr double kDefaultSequenceTol = 1e-8;

struct IntervalSequence {
  std::function<ExtendedInterval(long)> term;  ///< defined for n >= 1
  std::string label;

  ExtendedInterval operator()(long n) const { return term(n); }
};

struct LimitVerdict {
  enum class Kind { ConvergesTo, DivergesToPosInf, DivergesToNegInf, Undetermined };

  Kind kind = Kind::Undetermined;
  std::optional<ExtendedInterval> limit{};  ///< set for ConvergesTo
  long horizon = 0;
  double tolerance = 0;
  long witness = 0;  ///< first index of the tail on which the condition held; 0 if none

  bool converges() const noexcept { return kind == Kind::ConvergesTo; }
};

constexpr std::string_view to_string(LimitVerdict::Kind k) noexcept {
  switch (k) {
    case LimitVerdict::Kind::ConvergesTo: return "ConvergesTo";
    case LimitVerdict::Kind::DivergesToPosInf: return "DivergesToPosInf";
    case LimitVerdict::Kind::DivergesToNegInf: return "DivergesToNegInf";
    case LimitVerdict::Kind::Undetermined: return "Undetermined";
  }
  return "Unknown";
}

namespace detail {

inline void require_horizon(long horizon, long minimum = 1) {
  if (horizon < minimum) {
    throw Error(Errc::InvalidArgument, "horizon must be >= " + std::to_string(minimum));
  }
}

inline void require_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) {
    throw Error(Errc::InvalidArgument, std::string(what) + " must be a positive real");
  }
}

inline std::vector<ExtendedInterval> terms(const IntervalSequence& seq, long first, long last) {
  std::vector<ExtendedInterval> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, last - first + 1)));
  for (long n = first; n <= last; ++n) out.push_back(seq(n));
  return out;
}

/// Smallest m such that pred(term(n)) holds for every m <= n <= horizon, or 0.
template <typename Pred>
long tail_witness(const IntervalSequence& seq, long horizon, Pred pred) {
  long m = 0;
  for (long n = horizon; n >= 1; --n) {
    if (!pred(seq(n))) break;
    m = n;
  }
  return m;
}

}  // namespace detail

/// ConvergesTo(L) when some m <= horizon has ||F(n) ⊖gH L|| < eps for every
/// m <= n <= horizon; Undetermined otherwise.
inline LimitVerdict check_convergence(const IntervalSequence& seq, const Interval& limit, double eps,
                                      long horizon) {
  detail::require_positive(eps, "eps");
  detail::require_horizon(horizon);
  long m = 0;
  for (long n = horizon; n >= 1; --n) {
    const ExtendedInterval t = seq(n);
    if (!t.is_finite()) {
      throw Error(Errc::InfiniteTerm,
                  seq.label + " term " + std::to_string(n) + " has an infinite endpoint");
    }
    if (!(norm(gh_sub(t.finite(), limit)) < eps)) break;
    m = n;
  }
  LimitVerdict v{.horizon = horizon, .tolerance = eps, .witness = m};
  if (m > 0) {
    v.kind = LimitVerdict::Kind::ConvergesTo;
    v.limit = limit;
  }
  return v;
}

/// Divergence witness: for every threshold a there is an m <= horizon with
/// [a,a] ≺ F(n) (resp. F(n) ≺ [-a,-a]) for all m <= n <= horizon. The
/// reported witness is the largest m over the ladder.
inline LimitVerdict check_divergence(const IntervalSequence& seq, std::span<const double> thresholds,
                                     long horizon) {
  detail::require_horizon(horizon);
  if (thresholds.empty()) throw Error(Errc::InvalidArgument, "empty threshold ladder");
  auto ladder_witness = [&](bool positive) {
    long worst = 0;
    for (double a : thresholds) {
      detail::require_positive(a, "threshold");
      const long m = detail::tail_witness(seq, horizon, [&](const ExtendedInterval& t) {
        return positive ? prec(ExtendedInterval(a, a), t) : prec(t, ExtendedInterval(-a, -a));
      });
      if (m == 0) return 0L;
      worst = std::max(worst, m);
    }
    return worst;
  };
  LimitVerdict v{.horizon = horizon, .tolerance = thresholds.back()};
  if (long m = ladder_witness(true); m > 0) {
    v.kind = LimitVerdict::Kind::DivergesToPosInf;
    v.witness = m;
  } else if (long m2 = ladder_witness(false); m2 > 0) {
    v.kind = LimitVerdict::Kind::DivergesToNegInf;
    v.witness = m2;
  }
  return v;
}

/// Endpoint-wise limit estimate. Both endpoint sequences must vary by at most
/// tol over the tail [horizon/2, horizon]; the estimate is the last term. An
/// endpoint that sits at the same infinity over the whole tail has that
/// infinity as its limit.
inline LimitVerdict endpointwise_limit(const IntervalSequence& seq, long horizon, double tol) {
  detail::require_positive(tol, "tol");
  detail::require_horizon(horizon);
  const long first = std::max(1L, horizon / 2);
  const auto tail = detail::terms(seq, first, horizon);
  auto spread = [&](auto endpoint) {
    double lo = endpoint(tail.front());
    double hi = lo;
    for (const auto& t : tail) {
      lo = std::min(lo, endpoint(t));
      hi = std::max(hi, endpoint(t));
    }
    if (lo == hi) return 0.0;  // also covers a constant infinite endpoint
    return hi - lo;            // inf or nan when infinities mix with finite values
  };
  const double s_lo = spread([](const ExtendedInterval& t) { return t.lo(); });
  const double s_hi = spread([](const ExtendedInterval& t) { return t.hi(); });
  LimitVerdict v{.horizon = horizon, .tolerance = tol};
  if (s_lo <= tol && s_hi <= tol) {
    v.kind = LimitVerdict::Kind::ConvergesTo;
    v.limit = tail.back();
    v.witness = first;
  }
  return v;
}

inline bool is_monotone_increasing(const IntervalSequence& seq, long horizon) {
  detail::require_horizon(horizon, 2);
  ExtendedInterval prev = seq(1);
  for (long n = 2; n <= horizon; ++n) {
    ExtendedInterval cur = seq(n);
    if (!preceq(prev, cur)) return false;
    prev = cur;
  }
  return true;
}

inline bool is_bounded_above(const IntervalSequence& seq, const Interval& bound, long horizon) {
  detail::require_horizon(horizon, 2);
  for (long n = 1; n <= horizon; ++n) {
    if (!preceq(seq(n), bound)) return false;
  }
  return true;
}

struct MonotoneLimit {
  ExtendedInterval value;
  double error_bound;  ///< tail gap ||F(horizon) ⊖gH F(horizon/2)||
};

/// Supremum of the first `horizon` terms of a monotone increasing sequence.
///
/// Without an explicit bound, unboundedness is inferred from the tail: the
/// sequence is reported Unbounded when an endpoint is infinite or when the
/// gap over [h/2, h] is larger than tol and no smaller than the gap over
/// [h/4, h/2] (the increments are not settling).
inline MonotoneLimit monotone_limit(const IntervalSequence& seq, long horizon, double tol,
                                    std::optional<Interval> bound = std::nullopt) {
  detail::require_positive(tol, "tol");
  detail::require_horizon(horizon, 4);
  if (!is_monotone_increasing(seq, horizon)) {
    throw Error(Errc::NotMonotone, seq.label + " is not monotone increasing up to the horizon");
  }
  if (bound && !is_bounded_above(seq, *bound, horizon)) {
    throw Error(Errc::Unbounded, seq.label + " exceeds the supplied upper bound");
  }
  const auto all = detail::terms(seq, 1, horizon);
  const ExtendedInterval sup = sup_family(all);
  if (!sup.is_finite()) throw Error(Errc::Unbounded, seq.label + " has an infinite term");
  const ExtendedInterval quarter = seq(horizon / 4);
  const ExtendedInterval half = seq(horizon / 2);
  const double early = gh_distance(half, quarter);
  const double late = gh_distance(sup, half);
  if (!bound && late > tol && late >= early) {
    throw Error(Errc::Unbounded, seq.label + " keeps growing over the horizon");
  }
  return {sup, late};
}

/// T(n) = inf{F(k) : n <= k <= horizon} for n = 1..horizon. Monotone
/// increasing under ⪯ because the tails shrink.
inline std::vector<ExtendedInterval> tail_inf_sequence(const IntervalSequence& seq, long horizon) {
  detail::require_horizon(horizon);
  auto out = detail::terms(seq, 1, horizon);
  for (long i = horizon - 2; i >= 0; --i) {
    const auto u = static_cast<std::size_t>(i);
    const ExtendedInterval pair[] = {out[u], out[u + 1]};
    out[u] = inf_family(pair);
  }
  return out;
}

/// S(n) = sup{F(k) : n <= k <= horizon}, monotone decreasing.
inline std::vector<ExtendedInterval> tail_sup_sequence(const IntervalSequence& seq, long horizon) {
  detail::require_horizon(horizon);
  auto out = detail::terms(seq, 1, horizon);
  for (long i = horizon - 2; i >= 0; --i) {
    const auto u = static_cast<std::size_t>(i);
    const ExtendedInterval pair[] = {out[u], out[u + 1]};
    out[u] = sup_family(pair);
  }
  return out;
}

namespace detail {

/// Limit of a tail extremum, endpoint by endpoint. `at(h)` returns the tail
/// family value for horizon h (tail starting at h/2). An endpoint whose value
/// moves monotonically away with non-shrinking steps across h/4, h/2, h is
/// sent to the corresponding infinity.
template <typename At>
ExtendedInterval tail_limit(At at, long horizon) {
  const ExtendedInterval v1 = at(std::max(2L, horizon / 4));
  const ExtendedInterval v2 = at(std::max(2L, horizon / 2));
  const ExtendedInterval v3 = at(horizon);
  auto settle = [](double a, double b, double c) {
    if (std::isinf(c)) return c;
    const double d1 = b - a;
    const double d2 = c - b;
    if (d1 > 0 && d2 >= d1) return kInf;
    if (d1 < 0 && d2 <= d1) return -kInf;
    return c;
  };
  double lo = settle(v1.lo(), v2.lo(), v3.lo());
  double hi = settle(v1.hi(), v2.hi(), v3.hi());
  // hi >= lo term by term, so a diverging lo drags hi along (and vice versa)
  if (lo == kInf) hi = kInf;
  if (hi == -kInf) lo = -kInf;
  return {lo, hi};
}

}  // namespace detail

/// liminf F(n): the tail infimum inf{F(k) : horizon/2 <= k <= horizon}, i.e.
/// T(horizon/2) of tail_inf_sequence, with divergence to +/-inf detected per
/// endpoint by comparing the estimates at horizons h/4, h/2 and h.
inline ExtendedInterval liminf_seq(const IntervalSequence& seq, long horizon = kDefaultHorizon) {
  detail::require_horizon(horizon, 4);
  auto at = [&](long h) {
    const auto tail = detail::terms(seq, std::max(1L, h / 2), h);
    return inf_family(tail);
  };
  return detail::tail_limit(at, horizon);
}

inline ExtendedInterval limsup_seq(const IntervalSequence& seq, long horizon = kDefaultHorizon) {
  detail::require_horizon(horizon, 4);
  auto at = [&](long h) {
    const auto tail = detail::terms(seq, std::max(1L, h / 2), h);
    return sup_family(tail);
  };
  return detail::tail_limit(at, horizon);
}

}  // namespace ivevp
