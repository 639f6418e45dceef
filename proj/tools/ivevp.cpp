// Command-line front end: eval | probe | levelset | argmin | derivative | evp | selftest.
//
// Exit codes: 0 success, 1 a check failed (or a numeric failure was
// reported), 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ivevp/calculus.hpp"
#include "ivevp/catalog.hpp"
#include "ivevp/ekeland.hpp"
#include "ivevp/expr.hpp"
#include "ivevp/ivf.hpp"
#include "ivevp/report.hpp"
#include "ivevp/selftest.hpp"

namespace {

using namespace ivevp;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string fn;
  std::string lower;
  std::string upper;
  std::string at;
  std::string box;
  std::string dir;
  std::size_t res = 0;
  std::vector<double> eps;
  std::vector<double> delta;
  std::string xbar;
  std::string alpha;
  std::string ladder;
  double tol = 0;
  std::size_t samples = 256;
  int refine = kDefaultRefineRounds;
  bool verify = false;
  bool gateaux = false;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

struct Target {
  Ivf f;
  std::optional<CatalogEntry> entry;
  Box box;
};

std::vector<double> parse_list(const std::string& text) { return parse_point(text); }

Target resolve(const Options& o) {
  if (!o.fn.empty()) {
    if (!o.lower.empty() || !o.upper.empty()) throw UsageError("--fn cannot be combined with --lower/--upper");
    auto e = find_entry(o.fn);
    Box box = o.box.empty() ? e.search_box : Box::parse(o.box);
    return {e.f, e, box};
  }
  if (o.lower.empty() || o.upper.empty()) throw UsageError("give --fn LABEL or both --lower and --upper");
  if (o.box.empty()) throw UsageError("--box is required with --lower/--upper");
  Box box = Box::parse(o.box);
  return {ivf_from_text(o.lower, o.upper, box), std::nullopt, box};
}

Point require_point(const std::string& text, const Ivf& f, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  Point p = parse_point(text);
  if (p.size() != f.dim()) throw UsageError(std::string(flag) + " has the wrong dimension");
  return p;
}

Point point_or_probe(const Options& o, const Target& t) {
  if (o.at.empty() && t.entry) return t.entry->probe;
  return require_point(o.at, t.f, "--at");
}

SampleGrid grid_for(const Options& o, const Target& t) {
  if (o.res) return SampleGrid(t.box, o.res);
  if (t.entry && t.box == t.entry->search_box) return attainment_grid(*t.entry);
  return SampleGrid(t.box, t.box.dim() == 1 ? std::size_t{4001} : std::size_t{65});
}

Json function_inputs(const Options& o, const Target& t) {
  Json in;
  if (t.entry) {
    in["fn"] = t.entry->label;
  } else {
    in["lower"] = o.lower;
    in["upper"] = o.upper;
  }
  in["box"] = t.box.to_string();
  return in;
}

std::string cell(double v) { return format_real(v); }

struct Output {
  Json json;
  std::vector<std::vector<std::string>> csv = {};
  int code = kExitOk;
};

Output cmd_eval(const Options& o) {
  const auto t = resolve(o);
  const Point x = require_point(o.at, t.f, "--at");
  const auto v = t.f.eval(x);
  Json in = function_inputs(o, t);
  in["at"] = json_point(x);
  Output r{make_record("eval", in, "ok", {{"value", json_interval(v)}}, Json::object(), o.seed)};
  std::vector<std::string> head, row;
  for (std::size_t i = 0; i < x.size(); ++i) {
    head.push_back("x" + std::to_string(i + 1));
    row.push_back(cell(x[i]));
  }
  head.insert(head.end(), {"lo", "hi"});
  row.insert(row.end(), {cell(v.lo()), cell(v.hi())});
  r.csv = {head, row};
  return r;
}

ProbeParams probe_params(const Options& o) {
  ProbeParams p;
  p.seed = o.seed;
  p.samples_per_ball = o.samples;
  if (o.tol > 0) p.tol = o.tol;
  if (!o.ladder.empty()) p.delta_ladder = parse_list(o.ladder);
  p.validate();
  return p;
}

Output cmd_probe(const Options& o) {
  const auto t = resolve(o);
  const Point x = point_or_probe(o, t);
  const auto p = probe_params(o);
  const auto c = probe_continuity(t.f, x, p);
  const auto e = endpoint_lsc_equivalence(t.f, x, p);
  Json in = function_inputs(o, t);
  in["at"] = json_point(x);
  Json ev = json_continuity(c);
  ev["endpoint_equivalence"] = {
      {"ivf_lsc", e.ivf_lsc}, {"lower_lsc", e.lower_lsc}, {"upper_lsc", e.upper_lsc}, {"agrees", e.agrees()}};
  const std::string verdict = c.continuous ? "continuous" : c.lsc ? "lsc" : c.usc ? "usc" : "neither";
  Output r{make_record("probe", in, verdict, ev, json_probe_params(p), o.seed)};
  r.csv = {{"key", "value"},
           {"lsc", c.lsc ? "true" : "false"},
           {"usc", c.usc ? "true" : "false"},
           {"continuous", c.continuous ? "true" : "false"},
           {"liminf_lo", cell(c.liminf.lo())},
           {"liminf_hi", cell(c.liminf.hi())},
           {"limsup_lo", cell(c.limsup.lo())},
           {"limsup_hi", cell(c.limsup.hi())}};
  return r;
}

Output cmd_levelset(const Options& o) {
  const auto t = resolve(o);
  if (o.alpha.empty()) throw UsageError("--alpha is required");
  const auto alpha = parse_interval(o.alpha);
  const auto grid = grid_for(o, t);
  const auto members = sample_level_set(t.f, alpha, grid);
  const ExtendedInterval alphas[] = {alpha};
  const auto bounded = level_bounded_probe(t.f, alphas, grid);
  Json in = function_inputs(o, t);
  in["alpha"] = json_interval(alpha);
  Output r{make_record("levelset", in, bounded.bounded() ? "bounded" : "unbounded",
                       {{"members", members.size()},
                        {"shell_members", bounded.entries[0].shell_members},
                        {"note", "a member on the outer grid layer counts as unbounded evidence"}},
                       {{"grid", json_grid(grid)}}, o.seed)};
  std::vector<std::string> head;
  for (std::size_t i = 0; i < t.f.dim(); ++i) head.push_back("x" + std::to_string(i + 1));
  r.csv.push_back(head);
  for (const auto& x : members) {
    std::vector<std::string> row;
    for (double v : x) row.push_back(cell(v));
    r.csv.push_back(row);
  }
  return r;
}

Output cmd_argmin(const Options& o) {
  const auto t = resolve(o);
  const auto grid = grid_for(o, t);
  const double tol = o.tol > 0 ? o.tol : kDefaultArgminTol;
  const auto pts = grid.points();
  const auto inf = infimum_over(t.f, pts);
  const auto arg = argmin_over(t.f, pts, tol);
  const bool proper = is_proper_probe(t.f, pts);
  Output r{make_record("argmin", function_inputs(o, t), arg.empty() ? "empty" : "found",
                       {{"infimum", json_interval(inf)},
                        {"proper", proper},
                        {"argmin_size", arg.size()},
                        {"argmin", json_points(arg)}},
                       {{"grid", json_grid(grid)}, {"tol", tol}}, o.seed)};
  r.code = arg.empty() ? kExitCheckFailed : kExitOk;
  std::vector<std::string> head;
  for (std::size_t i = 0; i < t.f.dim(); ++i) head.push_back("x" + std::to_string(i + 1));
  r.csv.push_back(head);
  for (const auto& x : arg) {
    std::vector<std::string> row;
    for (double v : x) row.push_back(cell(v));
    r.csv.push_back(row);
  }
  return r;
}

Output cmd_derivative(const Options& o) {
  const auto t = resolve(o);
  const Point x = point_or_probe(o, t);
  const std::vector<double> ladder = o.ladder.empty() ? kDefaultLambdaLadder : parse_list(o.ladder);
  const double tol = o.tol > 0 ? o.tol : kDerivativeGapTol;
  std::vector<Point> dirs;
  if (o.dir.empty()) {
    dirs = unit_sphere_samples(t.f.dim(), 0);
  } else {
    dirs.push_back(require_point(o.dir, t.f, "--dir"));
  }
  Json in = function_inputs(o, t);
  in["at"] = json_point(x);
  Json list = Json::array();
  bool converged = true;
  double max_norm = 0;
  Output r;
  r.csv = {{"direction", "lo", "hi", "residual", "converged"}};
  for (const auto& h : dirs) {
    const auto d = gateaux_quotients(t.f, x, h, ladder, tol);
    converged = converged && d.converged;
    max_norm = std::max(max_norm, norm(d.value));
    list.push_back(json_derivative(d));
    r.csv.push_back({to_string(std::span<const double>(h)), cell(d.value.lo()), cell(d.value.hi()),
                     cell(d.residual), d.converged ? "true" : "false"});
  }
  r.json = make_record("derivative", in, converged ? "converged" : "NonConvergent",
                       {{"derivatives", list}, {"max_norm", max_norm}}, {{"gap_tol", tol}}, o.seed);
  r.code = converged ? kExitOk : kExitCheckFailed;
  return r;
}

Output cmd_evp(const Options& o) {
  const auto t = resolve(o);
  const Point xbar = require_point(o.xbar, t.f, "--xbar");
  if (o.eps.empty() || o.delta.empty()) throw UsageError("--eps and --delta are required");
  const auto grid = grid_for(o, t);
  const double tol = o.tol > 0 ? o.tol : kDefaultArgminTol;
  Output r;
  r.csv = {{"eps", "delta", "x0", "distance", "bound", "dist_ok", "descent_ok", "uniqueness_ok", "valid"}};
  if (o.verify) r.csv[0].push_back("verified");
  if (o.gateaux) r.csv[0].insert(r.csv[0].end(), {"derivative_norm", "gateaux_ok"});
  Json records = Json::array();
  bool all_ok = true;
  for (double eps : o.eps) {
    for (double delta : o.delta) {
      Json in = function_inputs(o, t);
      in["xbar"] = json_point(xbar);
      in["eps"] = eps;
      in["delta"] = delta;
      Json params = {{"grid", json_grid(grid)}, {"tol", tol}, {"refine_rounds", o.refine}};
      const EkelandInput inp{t.f, xbar, eps, delta, grid, tol, o.refine};
      try {
        EkelandCertificate cert;
        Json ev;
        std::vector<std::string> row;
        bool ok = true;
        std::optional<EvpGateauxResult> g;
        if (o.gateaux) {
          g = evp_gateaux(inp, unit_sphere_samples(t.f.dim(), 16, o.seed));
          cert = g->certificate;
        } else {
          cert = evp_search(inp);
        }
        ev = json_certificate(cert);
        ok = cert.valid();
        row = {cell(eps), cell(delta), to_string(std::span<const double>(cert.x0)), cell(cert.distance),
               cell(cert.distance_bound), cert.dist_bound_ok ? "true" : "false", cert.descent_ok ? "true" : "false",
               cert.uniqueness.ok() ? "true" : "false", cert.valid() ? "true" : "false"};
        if (o.verify) {
          const auto fine = refined_grid(grid);
          const auto v = verify_report(t.f, cert, fine, delta, tol);
          ev["verification"] = {{"grid", json_grid(fine)},
                                {"ok", v.ok()},
                                {"distance", v.dist_bound_ok},
                                {"descent", v.descent_ok},
                                {"uniqueness", json_uniqueness(v.uniqueness)}};
          ok = ok && v.ok();
          row.push_back(v.ok() ? "true" : "false");
        }
        if (g) {
          ev["gateaux"] = {{"derivative_norm", g->derivative_norm}, {"bound", delta + g->tol}, {"ok", g->passed}};
          ok = ok && g->passed;
          row.insert(row.end(), {cell(g->derivative_norm), g->passed ? "true" : "false"});
        }
        records.push_back(make_record("evp", in, ok ? "certified" : "not-certified", ev, params, o.seed));
        r.csv.push_back(row);
        all_ok = all_ok && ok;
      } catch (const Error& e) {
        if (e.code() == Errc::InvalidArgument || e.code() == Errc::OutOfDomain) throw;
        records.push_back(make_record("evp", in, std::string(to_string(e.code())), {{"error", e.what()}}, params,
                                      o.seed));
        r.csv.push_back({cell(eps), cell(delta), std::string(to_string(e.code()))});
        all_ok = false;
      }
    }
  }
  r.json = records.size() == 1 ? records[0] : records;
  r.code = all_ok ? kExitOk : kExitCheckFailed;
  return r;
}

Output cmd_selftest(const Options& o) {
  auto res = run_selftest(o.seed);
  Output r{res.report};
  r.csv = {{"name", "passed"}};
  for (const auto& c : res.report["checks"]) {
    r.csv.push_back({c["name"].get<std::string>(), c["passed"].get<bool>() ? "true" : "false"});
  }
  r.code = res.ok ? kExitOk : kExitCheckFailed;
  return r;
}

void emit(const Output& r, const Options& o) {
  const std::string text = o.format == "csv" ? to_csv(r.csv) : r.json.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-valued function toolkit: probes, level sets, derivatives and variational-principle certificates"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file mirroring the long flags");

  Options o;
  app.add_option("--fn", o.fn, "catalog function label");
  app.add_option("--lower", o.lower, "lower endpoint expression");
  app.add_option("--upper", o.upper, "upper endpoint expression");
  app.add_option("--at", o.at, "point a,b,...");
  app.add_option("--box", o.box, "box lo:hi,lo:hi,...");
  app.add_option("--dir", o.dir, "derivative direction a,b,...");
  app.add_option("--res", o.res, "grid points per dimension")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  app.add_option("--eps", o.eps, "epsilon (repeatable for sweeps)")->check(CLI::PositiveNumber);
  app.add_option("--delta", o.delta, "delta (repeatable for sweeps)")->check(CLI::PositiveNumber);
  app.add_option("--xbar", o.xbar, "starting point a,b,...");
  app.add_option("--alpha", o.alpha, "level [lo,hi]");
  app.add_option("--ladder", o.ladder, "comma-separated decreasing radii or lambdas");
  app.add_option("--tol", o.tol, "tolerance override")->check(CLI::PositiveNumber);
  app.add_option("--samples", o.samples, "samples per ball")->check(CLI::PositiveNumber);
  app.add_option("--refine", o.refine, "refinement rounds")->check(CLI::Range(0, 10));
  app.add_flag("--verify", o.verify, "re-verify the certificate on a 10x finer grid");
  app.add_flag("--gateaux", o.gateaux, "also bound the derivative norm at x0");
  app.add_option("--seed", o.seed, "sampling seed");
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* eval = app.add_subcommand("eval", "evaluate F at --at");
  auto* probe = app.add_subcommand("probe", "gH-semicontinuity probes at --at");
  auto* levelset = app.add_subcommand("levelset", "sample lev_{alpha not-prec} F on the grid");
  auto* argmin = app.add_subcommand("argmin", "infimum and argmin over the grid");
  auto* derivative = app.add_subcommand("derivative", "gH-Gateaux derivative at --at");
  auto* evp = app.add_subcommand("evp", "variational-principle certificate search");
  auto* selftest = app.add_subcommand("selftest", "run every built-in example and expectation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Output r;
    if (eval->parsed()) r = cmd_eval(o);
    else if (probe->parsed()) r = cmd_probe(o);
    else if (levelset->parsed()) r = cmd_levelset(o);
    else if (argmin->parsed()) r = cmd_argmin(o);
    else if (derivative->parsed()) r = cmd_derivative(o);
    else if (evp->parsed()) r = cmd_evp(o);
    else if (selftest->parsed()) r = cmd_selftest(o);
    emit(r, o);
    return r.code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case Errc::InvalidArgument:
      case Errc::InvalidEndpoints:
      case Errc::SyntaxError:
      case Errc::UnknownIdentifier:
      case Errc::OutOfDomain:
        return kExitUsage;
      default:
        return kExitCheckFailed;
    }
  }
}
