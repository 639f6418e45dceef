#include <gtest/gtest.h>

#include <random>

#include "ivevp/catalog.hpp"
#include "ivevp/sequences.hpp"

using namespace ivevp;

namespace {

IntervalSequence constant_seq(double c, double d) {
  return {[c, d](long) { return ExtendedInterval(c, d); }, "constant"};
}

bool close(const ExtendedInterval& a, const ExtendedInterval& b, double tol) { return gh_distance(a, b) <= tol; }

}  // namespace

TEST(Convergence, InverseN) {
  const auto v = check_convergence(find_sequence("inv-n"), Interval(0, 1), 1e-3, 2000);
  EXPECT_EQ(v.kind, LimitVerdict::Kind::ConvergesTo);
  EXPECT_EQ(*v.limit, ExtendedInterval(0, 1));
  EXPECT_EQ(v.witness, 1001);  // 1/n < 1e-3 from n = 1001 on
  EXPECT_EQ(v.horizon, 2000);
}

TEST(Convergence, ConstantAndDivergent) {
  EXPECT_TRUE(check_convergence(constant_seq(2, 3), Interval(2, 3), 1e-12, 10).converges());
  const auto v = check_convergence(find_sequence("linear"), Interval(0, 1), 1, 100);
  EXPECT_EQ(v.kind, LimitVerdict::Kind::Undetermined);
  EXPECT_EQ(v.witness, 0);
}

TEST(Convergence, Errors) {
  const IntervalSequence inf_term{[](long n) { return n == 5 ? ExtendedInterval::pos_inf() : ExtendedInterval(0, 1); },
                                  "spike"};
  try {
    check_convergence(inf_term, Interval(0, 1), 1e-3, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InfiniteTerm);
  }
  EXPECT_THROW(check_convergence(constant_seq(0, 1), Interval(0, 1), 0, 10), Error);
  EXPECT_THROW(check_convergence(constant_seq(0, 1), Interval(0, 1), 1, 0), Error);
}

TEST(Divergence, ThresholdLadder) {
  const double ladder[] = {1, 10, 100};
  const auto up = check_divergence(find_sequence("linear"), ladder, 1000);
  EXPECT_EQ(up.kind, LimitVerdict::Kind::DivergesToPosInf);
  EXPECT_EQ(up.witness, 100);  // [100,100] ≺ [n,n+1] from n = 100
  const IntervalSequence down{[](long n) { return ExtendedInterval(-double(n) - 1, -double(n)); }, "down"};
  EXPECT_EQ(check_divergence(down, ladder, 1000).kind, LimitVerdict::Kind::DivergesToNegInf);
  EXPECT_EQ(check_divergence(find_sequence("inv-n"), ladder, 1000).kind, LimitVerdict::Kind::Undetermined);
}

TEST(EndpointwiseLimit, Examples) {
  const auto v = endpointwise_limit(find_sequence("inv-n"), kDefaultHorizon, 1e-3);
  ASSERT_TRUE(v.converges());
  EXPECT_TRUE(close(*v.limit, {0, 1}, 1e-3));
  const auto c = endpointwise_limit(constant_seq(-1.5, 4), 100, 1e-12);
  ASSERT_TRUE(c.converges());
  EXPECT_EQ(*c.limit, ExtendedInterval(-1.5, 4));
  EXPECT_EQ(endpointwise_limit(find_sequence("sign-flip"), 1000, 1e-3).kind, LimitVerdict::Kind::Undetermined);
}

TEST(Monotone, Predicates) {
  const auto rising = find_sequence("rising");
  EXPECT_TRUE(is_monotone_increasing(rising, 1000));
  EXPECT_TRUE(is_bounded_above(rising, Interval(1, 2), 1000));
  EXPECT_TRUE(is_monotone_increasing(constant_seq(1, 1), 10));
  EXPECT_FALSE(is_monotone_increasing(find_sequence("inv-n"), 10));
  EXPECT_FALSE(is_bounded_above(find_sequence("linear"), Interval(1, 2), 10));
}

TEST(Monotone, Limit) {
  const auto m = monotone_limit(find_sequence("rising"), kDefaultHorizon, 1e-3);
  EXPECT_TRUE(close(m.value, {1, 2}, 1e-3));
  EXPECT_LE(m.error_bound, 1e-3);
  EXPECT_EQ(monotone_limit(constant_seq(2, 3), 100, 1e-9).value, ExtendedInterval(2, 3));
}

TEST(Monotone, Errors) {
  try {
    monotone_limit(find_sequence("linear"), 1000, 1e-3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Unbounded);
  }
  try {
    monotone_limit(find_sequence("inv-n"), 1000, 1e-3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotMonotone);
  }
  EXPECT_THROW(monotone_limit(find_sequence("rising"), 1000, 1e-3, Interval(0, 1)), Error);
}

TEST(Monotone, AgreesWithConvergenceCheck) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int i = 0; i < 25; ++i) {
    const double a = u(rng), b = u(rng), c = b * u(rng) / 3.0, d = a + u(rng);
    const IntervalSequence s{[=](long n) {
                               const double t = 1.0 / (double(n) * double(n));
                               return ExtendedInterval(a - b * t, d - c * t);
                             },
                             "generated"};
    const auto m = monotone_limit(s, 2000, 1e-6);
    EXPECT_TRUE(check_convergence(s, m.value.finite(), 1e-6, 2000).converges());
  }
}

TEST(LimInfSup, AlternatingExample) {
  const auto seq = find_sequence("alternating");
  EXPECT_TRUE(close(liminf_seq(seq), {0, 1}, 1e-6));
  EXPECT_TRUE(limsup_seq(seq).is_pos_inf());
}

TEST(LimInfSup, ConstantAndOrder) {
  EXPECT_EQ(liminf_seq(constant_seq(2, 3), 100), ExtendedInterval(2, 3));
  EXPECT_EQ(limsup_seq(constant_seq(2, 3), 100), ExtendedInterval(2, 3));
  for (const auto& e : sequence_catalog()) {
    const auto li = liminf_seq(e.seq, 4000);
    const auto ls = limsup_seq(e.seq, 4000);
    if (li.is_finite() && ls.is_finite()) {
      EXPECT_TRUE(preceq(li, ls)) << e.seq.label;
    }
  }
}

TEST(LimInfSup, SignFlip) {
  const auto seq = find_sequence("sign-flip");
  EXPECT_EQ(liminf_seq(seq, 1000), ExtendedInterval(-1, 2));
  EXPECT_EQ(limsup_seq(seq, 1000), ExtendedInterval(1, 2));
}

TEST(LimInfSup, DivergentToPosInf) {
  EXPECT_TRUE(liminf_seq(find_sequence("quarter-half"), 4000).is_pos_inf());
}

TEST(LimInfSup, EndpointDecompositionMatchesScalarOracle) {
  // scalar liminf / limsup of each endpoint over the same tail window
  for (const auto& e : sequence_catalog()) {
    const long h = 4000;
    double min_lo = kInf, min_hi = kInf, max_lo = -kInf, max_hi = -kInf;
    for (long n = h / 2; n <= h; ++n) {
      const auto t = e.seq(n);
      min_lo = std::min(min_lo, t.lo());
      min_hi = std::min(min_hi, t.hi());
      max_lo = std::max(max_lo, t.lo());
      max_hi = std::max(max_hi, t.hi());
    }
    const auto li = liminf_seq(e.seq, h);
    const auto ls = limsup_seq(e.seq, h);
    if (li.is_finite()) {
      EXPECT_EQ(li, ExtendedInterval(min_lo, min_hi)) << e.seq.label;
    }
    if (ls.is_finite()) {
      EXPECT_EQ(ls, ExtendedInterval(max_lo, max_hi)) << e.seq.label;
    }
  }
}

TEST(TailSequences, MonotoneUnderDominance) {
  const auto seq = find_sequence("alternating");
  const auto infs = tail_inf_sequence(seq, 500);
  const auto sups = tail_sup_sequence(seq, 500);
  for (std::size_t i = 1; i < infs.size(); ++i) {
    ASSERT_TRUE(preceq(infs[i - 1], infs[i]));
    ASSERT_TRUE(preceq(sups[i], sups[i - 1]));
  }
}
