#include "cgap/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"

namespace cgap {

namespace {

using ojson = nlohmann::ordered_json;

ojson num(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

ojson check_json(const CheckReport& c) {
  ojson j;
  j["name"] = c.name;
  j["lhs"] = num(c.lhs);
  j["rhs"] = num(c.rhs);
  j["margin"] = num(c.margin);
  j["tolerance"] = num(c.tolerance);
  j["pass"] = c.pass;
  j["context"] = c.context;
  return j;
}

ojson frame_json(const FrameRecord& r) {
  const NormalizedFrame& f = r.frame;
  ojson j;
  j["item"] = r.item;
  j["theta"] = num(f.theta_angle);
  j["reflected"] = f.reflected;
  j["scale_factor"] = num(f.scale_factor);
  j["omega"] = num(f.omega);
  j["ell"] = num(f.ell);
  j["slope"] = num(f.slope);
  j["alpha"] = num(f.alpha);
  j["half_strip"] = num(f.half_strip);
  j["A0"] = num(f.area0);
  j["P0"] = num(f.perimeter0);
  j["B"] = num(f.B);
  j["lambda5"] = num(f.lambda5);
  j["lambda6"] = num(f.lambda6);
  j["s"] = num(f.s);
  j["u"] = f.u ? num(*f.u) : ojson(nullptr);
  j["c"] = num(f.c);
  j["b"] = num(f.b);
  j["rho"] = num(f.rho);
  return j;
}

ojson polygon_json(const ConvexPolygon& p) {
  ojson vs = ojson::array();
  for (const auto& v : p.vertices()) vs.push_back(ojson::array({num(v.x), num(v.y)}));
  return vs;
}

}  // namespace

ReportSummary RunReport::summary() const {
  ReportSummary s;
  s.total = checks.size();
  s.worst_margin = std::numeric_limits<double>::infinity();
  const CheckReport* worst = nullptr;
  for (const auto& c : checks) {
    if (c.pass) ++s.passed;
    if (worst && std::isnan(worst->margin)) continue;
    // A NaN margin is the worst possible outcome.
    if (!worst || std::isnan(c.margin) || c.margin < worst->margin) worst = &c;
  }
  if (worst) s.worst_margin = worst->margin;
  if (worst) s.worst_context = worst->name + (worst->context.empty() ? "" : ": " + worst->context);
  return s;
}

bool RunReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; });
}

std::string RunReport::to_json() const {
  ojson j;
  j["command"] = command;
  j["seed"] = seed;
  j["tolerance"] = num(tolerance);
  j["checks"] = ojson::array();
  for (const auto& c : checks) j["checks"].push_back(check_json(c));
  j["frames"] = ojson::array();
  for (const auto& f : frames) j["frames"].push_back(frame_json(f));

  if (!table.empty()) {
    ojson rows = ojson::array();
    for (const auto& r : table) {
      ojson row;
      row["eps"] = num(r.eps);
      row["ratio"] = num(r.ratio);
      row["closed_form_ratio"] = num(r.closed_form_ratio);
      row["gap"] = num(r.gap);
      row["diameter"] = num(r.diameter);
      row["perimeter"] = num(r.perimeter);
      row["gap_over_diameter"] = num(r.gap_over_diameter);
      row["gap_over_perimeter"] = num(r.gap_over_perimeter);
      rows.push_back(row);
    }
    j["table"] = rows;
  }
  if (search) {
    ojson s;
    s["best_ratio"] = num(search->best_ratio);
    s["best_theta"] = num(search->best_theta);
    s["evaluations"] = search->evaluations;
    s["seed"] = search->seed;
    s["n_vertices"] = search->n_vertices;
    s["restarts"] = search->restarts;
    s["bound_violated"] = search->bound_violated;
    s["best_polygon"] = polygon_json(search->best_polygon);
    j["search"] = s;
  }
  if (!counts.empty()) {
    ojson c;
    for (const auto& [k, v] : counts) c[k] = v;
    j["counts"] = c;
  }

  const ReportSummary s = summary();
  ojson sj;
  sj["total"] = s.total;
  sj["passed"] = s.passed;
  sj["worst_margin"] = num(s.worst_margin);
  sj["worst_context"] = s.worst_context;
  j["summary"] = sj;
  return j.dump(2) + "\n";
}

bool CheckFolder::add(const CheckReport& c, const std::string& context_prefix) {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const CheckReport& k) { return k.name == c.name; });
  if (it == checks_.end()) {
    checks_.push_back(c);
    if (!context_prefix.empty()) {
      checks_.back().context = context_prefix + (c.context.empty() ? "" : " " + c.context);
    }
    return true;
  }
  if (!is_worse(*it, c.margin, c.tolerance)) return false;
  *it = c;
  if (!context_prefix.empty()) it->context = context_prefix + (c.context.empty() ? "" : " " + c.context);
  return true;
}

void CheckFolder::add_all(const std::vector<CheckReport>& cs, const std::string& context_prefix) {
  for (const auto& c : cs) add(c, context_prefix);
}

}  // namespace cgap
