#pragma once

/**
 * @file report.hpp
 * @brief JSON records {op, inputs, verdict, evidence, params, seed} and CSV rows.
 *
 * Reals are written as JSON numbers except infinities and NaN, which become
 * the strings "+inf", "-inf" and "nan". Intervals are {"lo": .., "hi": ..}.
 * Key order is insertion order, so equal runs give byte-identical output.
 */

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ivevp/calculus.hpp"
#include "ivevp/ekeland.hpp"
#include "ivevp/geometry.hpp"
#include "ivevp/interval.hpp"
#include "ivevp/ivf.hpp"
#include "ivevp/sequences.hpp"

namespace ivevp {

using Json = nlohmann::ordered_json;

inline Json json_real(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "+inf" : "-inf";
}

inline Json json_interval(const ExtendedInterval& a) { return {{"lo", json_real(a.lo())}, {"hi", json_real(a.hi())}}; }

inline Json json_point(std::span<const double> x) {
  Json out = Json::array();
  for (double v : x) out.push_back(json_real(v));
  return out;
}

inline Json json_points(std::span<const Point> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(json_point(x));
  return out;
}

inline Json json_grid(const SampleGrid& g) {
  return {{"box", g.box().to_string()}, {"resolution", g.resolution()}, {"points", g.size()}};
}

inline Json json_probe_params(const ProbeParams& p) {
  Json ladder = Json::array();
  for (double r : p.delta_ladder) ladder.push_back(r);
  return {{"delta_ladder", ladder}, {"samples_per_ball", p.samples_per_ball}, {"tol", p.tol}};
}

inline Json make_record(std::string op, Json inputs, std::string verdict, Json evidence, Json params,
                        std::uint64_t seed) {
  return {{"op", std::move(op)},         {"inputs", std::move(inputs)},
          {"verdict", std::move(verdict)}, {"evidence", std::move(evidence)},
          {"params", std::move(params)},   {"seed", seed}};
}

inline Json json_verdict(const LimitVerdict& v) {
  Json out = {{"kind", std::string(to_string(v.kind))}, {"horizon", v.horizon}, {"tolerance", v.tolerance},
              {"witness", v.witness}};
  if (v.limit) out["limit"] = json_interval(*v.limit);
  return out;
}

inline Json json_continuity(const ContinuityReport& r) {
  return {{"value", json_interval(r.value)},
          {"liminf", json_interval(r.liminf)},
          {"limsup", json_interval(r.limsup)},
          {"lsc", r.lsc},
          {"usc", r.usc},
          {"continuous", r.continuous},
          {"eps_delta_gap", json_real(r.eps_delta_gap)},
          {"eps_delta_continuous", r.eps_delta_continuous},
          {"note", "sampled evidence: true means no violation found at these parameters"}};
}

inline Json json_derivative(const DirectionalDerivative& d) {
  Json q = Json::array();
  for (const auto& v : d.quotients) q.push_back(json_interval(v));
  Json gaps = Json::array();
  for (double g : d.gaps) gaps.push_back(json_real(g));
  return {{"base", json_point(d.base)},     {"direction", json_point(d.direction)},
          {"value", json_interval(d.value)}, {"residual", json_real(d.residual)},
          {"converged", d.converged},        {"lambda_ladder", d.ladder},
          {"quotients", q},                  {"gaps", gaps}};
}

inline Json json_uniqueness(const UniquenessEvidence& u) {
  return {{"ok", u.ok()},
          {"checked", u.checked},
          {"coincident", u.coincident},
          {"violations", u.violations},
          {"ties", u.ties},
          {"violation_points", json_points(u.violation_points)},
          {"tie_points", json_points(u.tie_points)}};
}

inline Json json_certificate(const EkelandCertificate& c) {
  return {{"x0", json_point(c.x0)},
          {"xbar", json_point(c.xbar)},
          {"eps", c.eps},
          {"delta", c.delta},
          {"tol", c.tol},
          {"valid", c.valid()},
          {"checks",
           {{"distance", {{"ok", c.dist_bound_ok}, {"value", c.distance}, {"bound", c.distance_bound}}},
            {"descent", {{"ok", c.descent_ok}, {"f_x0", json_interval(c.f_x0)}, {"f_xbar", json_interval(c.f_xbar)}}},
            {"uniqueness", json_uniqueness(c.uniqueness)}}},
          {"infimum", json_interval(c.infimum)},
          {"stage1_size", c.stage1_set.size()},
          {"candidates", c.candidates},
          {"refine_rounds", c.refine_rounds},
          {"warnings", c.warnings}};
}

/// Comma-separated rows; fields containing a comma or quote are quoted.
inline std::string to_csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      const auto& f = row[i];
      if (f.find_first_of(",\"\n") == std::string::npos) {
        out += f;
      } else {
        out += '"';
        for (char c : f) {
          if (c == '"') out += '"';
          out += c;
        }
        out += '"';
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace ivevp
