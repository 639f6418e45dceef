#pragma once

/**
 * @file selftest.hpp
 * @brief Runs every worked example and every catalog expectation and
 *        collects the outcomes into one deterministic JSON report.
 */

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ivevp/catalog.hpp"
#include "ivevp/ekeland.hpp"
#include "ivevp/ivf.hpp"
#include "ivevp/report.hpp"
#include "ivevp/sequences.hpp"

namespace ivevp {

namespace detail {

class CheckList {
 public:
  void add(std::string name, bool passed, Json evidence = Json::object()) {
    passed ? ++passed_ : ++failed_;
    checks_.push_back({{"name", std::move(name)}, {"passed", passed}, {"evidence", std::move(evidence)}});
  }

  /// Runs `body`, recording an exception as a failed check.
  template <typename Body>
  void guarded(const std::string& name, Body body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, {{"error", e.what()}});
    }
  }

  Json finish(std::uint64_t seed) const {
    return {{"op", "selftest"},
            {"seed", seed},
            {"verdict", failed_ == 0 ? "pass" : "fail"},
            {"summary", {{"passed", passed_}, {"failed", failed_}}},
            {"checks", checks_}};
  }

  bool ok() const noexcept { return failed_ == 0; }

 private:
  Json checks_ = Json::array();
  std::size_t passed_ = 0;
  std::size_t failed_ = 0;
};

inline bool close(const ExtendedInterval& a, const ExtendedInterval& b, double tol) {
  return gh_distance(a, b) <= tol;
}

inline void interval_examples(CheckList& c) {
  c.guarded("gh-difference-convergence-example", [&] {
    bool ok = true;
    for (int n = 1; n <= 100; ++n) {
      const Interval d = gh_sub(Interval(1.0 / n, 1), Interval(0, 1));
      ok = ok && d == Interval(0, 1.0 / n) && norm(d) == 1.0 / n;
    }
    c.add("gh-difference-convergence-example", ok, {{"claim", "[1/n,1] gH- [0,1] = [0,1/n], norm 1/n, n=1..100"}});
  });
  c.guarded("inf-family-inv-n", [&] {
    const auto seq = find_sequence("inv-n");
    std::vector<ExtendedInterval> fam;
    for (long n = 1; n <= 2000; ++n) fam.push_back(seq(n));
    const auto inf = inf_family(fam);
    c.add("inf-family-inv-n", inf == ExtendedInterval(1.0 / 2000, 1) && close(inf, {0, 1}, 1e-3),
          {{"inf", json_interval(inf)}, {"expected_limit", json_interval({0, 1})}});
  });
  c.guarded("sup-family-inv-square", [&] {
    const auto seq = find_sequence("inv-square");
    std::vector<ExtendedInterval> fam;
    for (long n = 1; n <= 2000; ++n) fam.push_back(seq(n));
    const auto sup = sup_family(fam);
    c.add("sup-family-inv-square", sup == ExtendedInterval(2, 3), {{"sup", json_interval(sup)}});
  });
  c.guarded("finite-family-pair", [&] {
    const std::vector<ExtendedInterval> fam = {{-2, 4}, {-1, 3}};
    const auto inf = inf_family(fam);
    const auto sup = sup_family(fam);
    c.add("finite-family-pair", inf == ExtendedInterval(-2, 3) && sup == ExtendedInterval(-1, 4),
          {{"inf", json_interval(inf)}, {"sup", json_interval(sup)}});
  });
}

inline void sequence_examples(CheckList& c) {
  c.guarded("convergence-inv-n", [&] {
    const auto v = check_convergence(find_sequence("inv-n"), Interval(0, 1), 1e-3, 2000);
    c.add("convergence-inv-n", v.converges(), json_verdict(v));
  });
  c.guarded("endpointwise-limit-inv-n", [&] {
    const auto v = endpointwise_limit(find_sequence("inv-n"), kDefaultHorizon, 1e-3);
    c.add("endpointwise-limit-inv-n", v.converges() && close(*v.limit, {0, 1}, 1e-3), json_verdict(v));
  });
  c.guarded("alternating-liminf-limsup", [&] {
    const auto seq = find_sequence("alternating");
    const auto li = liminf_seq(seq);
    const auto ls = limsup_seq(seq);
    c.add("alternating-liminf-limsup", close(li, {0, 1}, 1e-6) && ls.is_pos_inf(),
          {{"liminf", json_interval(li)}, {"limsup", json_interval(ls)}});
  });
}

inline void ivf_examples(CheckList& c, const ProbeParams& p) {
  c.guarded("eval-proper-example", [&] {
    const auto v = find_entry("exp-proper").f.eval(Point{0, 0});
    c.add("eval-proper-example", v == ExtendedInterval(0, 1), {{"value", json_interval(v)}});
  });
  c.guarded("indicator-on-set", [&] {
    const auto ind = indicator([](std::span<const double> x) { return euclidean_norm(x) <= 1; }, Box::cube(2, -2, 2));
    const auto in = ind.eval(Point{0.5, 0});
    const auto out = ind.eval(Point{1.5, 0});
    c.add("indicator-on-set", in == ExtendedInterval(0, 0) && out.is_pos_inf(),
          {{"inside", json_interval(in)}, {"outside", json_interval(out)}});
  });
  c.guarded("sin-example-probe", [&] {
    const auto e = find_entry("sin-recip");
    const auto r = probe_continuity(e.f, e.probe, p);
    c.add("sin-example-probe", r.lsc && !r.usc && close(r.liminf, {-2, -1}, 1e-3), json_continuity(r));
  });
  c.guarded("endpoint-lsc-example", [&] {
    const auto e = find_entry("rational-exp");
    const auto r = endpoint_lsc_equivalence(e.f, e.probe, p);
    c.add("endpoint-lsc-example", r.ivf_lsc && r.lower_lsc && r.upper_lsc,
          {{"ivf_lsc", r.ivf_lsc}, {"lower_lsc", r.lower_lsc}, {"upper_lsc", r.upper_lsc}});
  });
  c.guarded("levelset-reduction", [&] {
    const auto f = find_entry("exp-levelset").f;
    const ExtendedInterval alpha(-1, 10);
    const SampleGrid grid(Box::cube(2, -3, 3), 100);
    std::size_t members = 0, mismatches = 0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const Point x = grid.point(k);
      const bool m = level_member(f, alpha, x);
      const bool reduced = x[0] * x[0] + 2 * std::exp(x[1] * x[1]) < 5;
      members += m;
      mismatches += m != reduced;
    }
    const ExtendedInterval alphas[] = {alpha};
    const auto bounded = level_bounded_probe(f, alphas, grid);
    c.add("levelset-reduction", mismatches == 0 && members > 0 && bounded.bounded(),
          {{"grid", json_grid(grid)}, {"members", members}, {"mismatches", mismatches}, {"bounded", bounded.bounded()}});
  });
  c.guarded("argmin-example", [&] {
    const auto f = find_entry("axis-argmin").f;
    const SampleGrid grid(Box::cube(2, -1, 1), 65);
    const auto pts = grid.points();
    const auto inf = infimum_over(f, pts);
    const auto arg = argmin_over(f, pts, kDefaultArgminTol);
    bool axis = !arg.empty();
    for (const auto& x : arg) axis = axis && x[0] == 0;
    c.add("argmin-example", inf == ExtendedInterval(-kInf, 0) && axis && arg.size() == 65,
          {{"infimum", json_interval(inf)}, {"argmin_size", arg.size()}, {"all_on_axis", axis}});
  });
}

inline void catalog_expectations(CheckList& c, const ProbeParams& p) {
  for (const auto& e : catalog()) {
    const std::string tag = "catalog-" + e.label;
    c.guarded(tag + "-continuity", [&] {
      const auto r = probe_continuity(e.f, e.probe, p);
      bool ok = r.lsc == e.lsc && r.usc == e.usc && r.agrees();
      if (e.liminf) ok = ok && close(r.liminf, *e.liminf, 1e-3);
      c.add(tag + "-continuity", ok, json_continuity(r));
    });
    c.guarded(tag + "-endpoint-equivalence", [&] {
      const auto r = endpoint_lsc_equivalence(e.f, e.probe, p);
      c.add(tag + "-endpoint-equivalence", r.agrees() && r.ivf_lsc == e.lsc,
            {{"ivf_lsc", r.ivf_lsc}, {"lower_lsc", r.lower_lsc}, {"upper_lsc", r.upper_lsc}});
    });
    c.guarded(tag + "-minimum", [&] {
      const SampleGrid grid = attainment_grid(e);
      const auto pts = grid.points();
      const bool proper = is_proper_probe(e.f, pts);
      const auto level = level_bounded_probe(e.f, e.alphas, level_grid(e));
      const bool lsc = is_gh_lsc_at(e.f, e.probe, p);
      const auto inf = infimum_over(e.f, pts);
      const auto arg = argmin_over(e.f, pts, kDefaultArgminTol);
      bool ok = proper == e.proper && level.bounded() == e.level_bounded;
      if (e.minimum) ok = ok && close(inf, *e.minimum, 1e-3);
      if (proper && lsc && level.bounded()) ok = ok && !arg.empty();
      c.add(tag + "-minimum", ok,
            {{"grid", json_grid(grid)},
             {"proper", proper},
             {"level_bounded", level.bounded()},
             {"infimum", json_interval(inf)},
             {"argmin_size", arg.size()}});
    });
  }
}

inline void ekeland_examples(CheckList& c) {
  c.guarded("evp-quadratic", [&] {
    const auto e = find_entry("quadratic");
    const EkelandInput inp{e.f, {0.05}, 0.01, 1.0, SampleGrid(Box::cube(1, -2, 2), 4001)};
    const auto cert = evp_search(inp);
    const bool verified = verify_certificate(e.f, cert, refined_grid(inp.grid), inp.delta, inp.tol);
    c.add("evp-quadratic", cert.valid() && verified, json_certificate(cert));
  });
}

}  // namespace detail

struct SelftestResult {
  Json report;
  bool ok;
};

inline SelftestResult run_selftest(std::uint64_t seed = 1) {
  ProbeParams p;
  p.seed = seed;
  detail::CheckList c;
  detail::interval_examples(c);
  detail::sequence_examples(c);
  detail::ivf_examples(c, p);
  detail::catalog_expectations(c, p);
  detail::ekeland_examples(c);
  return {c.finish(seed), c.ok()};
}

}  // namespace ivevp
