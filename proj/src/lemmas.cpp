#include "cgap/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cgap/errors.hpp"
#include "cgap/inequalities.hpp"

namespace cgap {

namespace {

constexpr double kSixth = 1.0 / 6.0;

double tol_for(double rel_tol, std::initializer_list<double> magnitudes) {
  double m = 1.0;
  for (double v : magnitudes) m = std::max(m, std::abs(v));
  return rel_tol * m;
}

std::string at_t(double t) { return "t=" + fmt_num(t); }

CheckReport fold(const char* name) {
  CheckReport acc;
  acc.name = name;
  acc.margin = std::numeric_limits<double>::infinity();
  acc.context = "no grid points";
  return acc;
}

}  // namespace

Profile frame_profile(const NormalizedFrame& frame, const LemmaOptions& options) {
  ProfileOptions po;
  po.grid_points = std::max<std::size_t>(2, options.quadrature_grid);
  po.reference_t = 0.0;
  po.extra_ts = uniform_grid(-1.0, 0.0, options.lemma_grid);
  const auto dense = uniform_grid(-1.0, 0.0, options.quadrature_grid);
  po.extra_ts.insert(po.extra_ts.end(), dense.begin(), dense.end());
  if (frame.omega > 0.0) {
    const auto right = uniform_grid(0.0, frame.omega, options.quadrature_grid);
    po.extra_ts.insert(po.extra_ts.end(), right.begin(), right.end());
  }
  return profile(frame.polygon, po);
}

std::vector<std::size_t> lemma_indices(const Profile& prof, bool include_zero) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < prof.size(); ++i) {
    const double t = prof.ts[i];
    if (t <= -1.0 + 1e-6 || t > 0.0) continue;
    if (std::abs(t) < 1e-12 && !(include_zero && t == 0.0)) continue;
    out.push_back(i);
  }
  return out;
}

CheckReport lemma1_check(const NormalizedFrame& frame, double rel_tol) {
  const double ca0 = -frame.c;
  const double tol = tol_for(rel_tol, {ca0});
  const std::string ctx = "c_a(0)=" + fmt_num(ca0) + " B=" + fmt_num(frame.B);
  CheckReport lower = make_check("lemma1", -0.5, ca0, tol, ctx + " (lower end -1/2)");
  const CheckReport upper = make_check("lemma1", ca0, -0.5 * frame.B, tol, ctx + " (upper end -B/2)");
  keep_worst(lower, upper);
  return lower;
}

CheckReport lemma2_check(const NormalizedFrame& frame, const Profile& prof, double rel_tol) {
  (void)frame;
  const std::size_t z = prof.index_of(0.0);
  const double pt0 = prof.ptilde[z];
  CheckReport acc = fold("lemma2");
  for (std::size_t i : lemma_indices(prof, true)) {
    fold_check(acc, prof.a[i], prof.ptilde[i] / pt0, rel_tol, [&] { return at_t(prof.ts[i]); });
  }
  return acc;
}

CheckReport lemma3_check(const NormalizedFrame& frame, const Profile& prof, double rel_tol) {
  const double ell = frame.ell;
  CheckReport acc = fold("lemma3");
  for (std::size_t i : lemma_indices(prof, false)) {
    const double t = prof.ts[i];
    const double ell_t = prof.ell[i];
    const double num = (1.0 + t) * ell - (1.0 - t) * ell_t;
    const double den = (1.0 + 2.0 * t) * ell - ell_t;
    // Both factors are negative on (-1, 0), since ell(t) >= (1 + t) ell.
    const double sign_tol = rel_tol * ell;
    fold_check(acc, num, 0.0, sign_tol, [t] { return at_t(t) + " numerator sign"; });
    fold_check(acc, den, 0.0, sign_tol, [t] { return at_t(t) + " denominator sign"; });
    if (!(den < 0.0)) continue;
    const double bound = (1.0 + t) * num / den;
    fold_check(acc, prof.a[i], bound, rel_tol, [t] { return at_t(t); });
  }
  return acc;
}

CheckReport lemma4_check(const NormalizedFrame& frame, double rel_tol) {
  if (!frame.u) throw SkippedDegenerate("lemma4: omega == 0");
  const auto psi = clip_above(frame.polygon, 0.0);
  if (!psi) throw SkippedDegenerate("lemma4: right part has no interior");
  const double u = *frame.u;
  const double c_psi = area_centroid(*psi).x;
  const double bound = frame.omega * (u * u - u + 1.0) / (3.0 * u);
  return make_check("lemma4", bound, c_psi, tol_for(rel_tol, {frame.omega}),
                    "c_psi=" + fmt_num(c_psi) + " u=" + fmt_num(u) + " omega=" + fmt_num(frame.omega));
}

CheckReport lemma5_check(const NormalizedFrame& frame, double rel_tol) {
  const double rhs = (frame.perimeter0 - frame.ell) * frame.ell / (2.0 * frame.alpha);
  return make_check("lemma5", frame.area0, rhs, tol_for(rel_tol, {rhs}),
                    "alpha=" + fmt_num(frame.alpha) + " P(0)=" + fmt_num(frame.perimeter0));
}

CheckReport star_star_check(const NormalizedFrame& frame, double rel_tol) {
  const Slice s0 = SliceSweep(frame.polygon).at(0.0);
  const double gap = s0.c_p - s0.c_a;
  return make_check("star_star", gap, kSixth, rel_tol, "c_p(0)-c_a(0)=" + fmt_num(gap));
}

CheckReport star_star_star_check(const NormalizedFrame& frame, double rel_tol) {
  const auto [ca, cb] = centroids(frame.polygon);
  const double gap = cb.x - ca.x;
  const double rhs = (1.0 + frame.omega) / 6.0;
  return make_check("star_star_star", gap, rhs, tol_for(rel_tol, {rhs}),
                    "ratio=" + fmt_num(gap / (1.0 + frame.omega)) + " omega=" + fmt_num(frame.omega));
}

PointwiseReport pointwise_bounds_check(const NormalizedFrame& frame, const Profile& prof,
                                       double rel_tol) {
  PointwiseReport out;
  out.bound1 = fold("pointwise_bound1");
  out.bound2 = fold("pointwise_bound2");
  out.bound3 = fold("pointwise_bound3");
  out.combined = fold("pointwise_combined");
  out.mu_range = fold("pointwise_mu_range");

  const std::size_t z = prof.index_of(0.0);
  const double pt0 = prof.ptilde[z];
  const double ell = frame.ell;
  const double lam = frame.lambda5;
  const double skip_tol = 1e-9 * frame.polygon.scale();

  for (std::size_t i : lemma_indices(prof, true)) {
    const double t = prof.ts[i];
    const double pt = prof.ptilde[i];
    const double diff = prof.a[i] - prof.p[i];
    const double mu = pt / pt0;
    const auto ctx = [t] { return at_t(t); };
    ++out.evaluated;

    fold_check(out.mu_range, 0.0, mu, rel_tol, [t] { return at_t(t) + " mu>=0"; });
    fold_check(out.mu_range, mu, 1.0, rel_tol, [t] { return at_t(t) + " mu<=1"; });

    const double b1 = pt * ell / ((pt0 + ell) * pt0);
    fold_check(out.bound1, diff, b1, rel_tol, ctx);

    const double den2 = ell + pt - 2.0 * (1.0 + t) * ell;
    const bool use2 = std::abs(den2) > skip_tol;
    if (use2) {
      const double b2 = (1.0 + t) * (2.0 * pt - (1.0 + t) * (pt + ell)) / den2 - pt / (pt0 + ell);
      fold_check(out.bound2, diff, b2, rel_tol, ctx);
    } else {
      ++out.skipped;
    }

    const double b3 = 1.0 + t - pt / (pt0 + ell);
    fold_check(out.bound3, diff, b3, rel_tol, ctx);

    // Same three bounds rewritten in lambda = ell / P~(0), mu = P~(t) / P~(0).
    double factor = 1.0;
    if (use2) {
      const double frac = (2.0 * mu - (1.0 + t) * (mu + lam)) / (lam + mu - 2.0 * (1.0 + t) * lam);
      factor = std::min(1.0, frac);
    }
    const double combined = std::min((1.0 + t) * factor - mu / (1.0 + lam), lam * mu / (1.0 + lam));
    fold_check(out.combined, diff, combined, rel_tol, ctx);
  }
  return out;
}

std::vector<CheckReport> part2_chain_check(const NormalizedFrame& f, const Profile& prof,
                                           double rel_tol) {
  if (!f.u) throw SkippedDegenerate("part2: omega == 0");
  const double u = *f.u;
  const double w = f.omega;
  const double ell = f.ell;
  const double alpha = f.alpha;
  const double P0 = f.perimeter0;
  const double A0 = f.area0;
  const double c = f.c;
  const std::size_t z = prof.index_of(0.0);
  const double Pw = prof.perimeter.back();
  const double cp0 = prof.c_p[z];
  const auto [ca_full, cb_full] = centroids(f.polygon);
  const double cpw = cb_full.x;
  const double caw = ca_full.x;
  const double len_tol = tol_for(rel_tol, {Pw});
  const double x_tol = tol_for(rel_tol, {1.0 + w});

  std::vector<CheckReport> out;
  out.push_back(make_check("part2_right_boundary_length", Pw - prof.ptilde[z], ell + 2.0 * w * alpha,
                           len_tol, "omega=" + fmt_num(w)));
  out.push_back(make_check("part2_perimeter_growth", Pw, P0 + 2.0 * w * alpha, len_tol));
  out.push_back(make_check("part2_P0_ge_2ell", 2.0 * ell, P0, len_tol));
  out.push_back(make_check("part2_cp0_negative", cp0, 0.0, x_tol, "c_p(0)=" + fmt_num(cp0)));

  double integral = 0.0;
  for (std::size_t i = z + 1; i < prof.size(); ++i) {
    integral += 0.5 * (prof.ts[i] - prof.ts[i - 1]) * (prof.perimeter[i] + prof.perimeter[i - 1]);
  }
  out.push_back(make_check("part2_concave_integral", 0.5 * (P0 + Pw) * w, integral,
                           tol_for(rel_tol, {integral})));

  const double exact_bound = 0.5 * w + (P0 / Pw) * cp0 - (P0 * w - u * ell * w) / (2.0 * Pw);
  out.push_back(make_check("part2_cp_omega_bound", cpw, exact_bound, x_tol));

  const double D = P0 + 2.0 * w * alpha;
  const double cp_upper = 0.5 * w + P0 / D * (kSixth - c) - (P0 * w - u * ell * w) / (2.0 * D);
  out.push_back(make_check("fedsm1", cpw, cp_upper, x_tol, "c_p(omega)=" + fmt_num(cpw)));

  const double ca_lower = (-A0 * c + ell * w * w * (u * u - u + 1.0) / 6.0) / (A0 + 0.5 * u * ell * w);
  out.push_back(make_check("fedsm2", ca_lower, caw, x_tol, "c_a(omega)=" + fmt_num(caw)));

  out.push_back(make_check("eqnn", cp_upper - ca_lower, (1.0 + w) / 6.0, x_tol));

  const RegionPoint x{u, f.s, f.lambda6, f.B, c, f.b, f.rho};
  const std::string ctx = "u=" + fmt_num(u) + " s=" + fmt_num(f.s) + " lambda=" + fmt_num(f.lambda6) +
                          " B=" + fmt_num(f.B) + " c=" + fmt_num(c) + " rho=" + fmt_num(f.rho);
  out.push_back(make_check_ge("frame_fedsm3", region::fedsm3(x), 0.0, rel_tol, ctx));
  out.push_back(make_check_ge("frame_fedsm4", region::fedsm4(x), 0.0, rel_tol, ctx));
  out.push_back(make_check_ge("frame_rho_form", region::rho_form(x), 0.0, rel_tol, ctx));
  return out;
}

std::vector<CheckReport> endpoint_consistency_check(const NormalizedFrame& frame,
                                                    const Profile& prof, double rel_tol) {
  const auto [ca, cb] = centroids(frame.polygon);
  const Measures m = measures(frame.polygon);
  const double tol = rel_tol * frame.polygon.scale();
  const std::size_t last = prof.size() - 1;
  return {
      make_check("endpoint_c_a", std::abs(prof.c_a[last] - ca.x), 0.0, tol,
                 "profile=" + fmt_num(prof.c_a[last]) + " polygon=" + fmt_num(ca.x)),
      make_check("endpoint_c_p", std::abs(prof.c_p[last] - cb.x), 0.0, tol,
                 "profile=" + fmt_num(prof.c_p[last]) + " polygon=" + fmt_num(cb.x)),
      make_check("endpoint_area", std::abs(prof.area[last] - m.area), 0.0,
                 tol * frame.polygon.scale()),
  };
}

bool LemmaSuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; });
}

const CheckReport* LemmaSuiteReport::worst() const {
  const CheckReport* w = nullptr;
  for (const auto& c : checks) {
    if (!w || (w->pass && !c.pass) || (w->pass == c.pass && c.margin < w->margin)) w = &c;
  }
  return w;
}

LemmaSuiteReport run_lemma_suite(const ConvexPolygon& poly, const UnitVector& theta,
                                 const LemmaOptions& options) {
  LemmaSuiteReport r{normalize(poly, theta)};
  const NormalizedFrame& f = r.frame;
  const double tol = options.rel_tol;
  const Profile prof = frame_profile(f, options);
  r.grid_size = lemma_indices(prof, true).size();

  r.checks.push_back(frame_scalars_valid(f, tol));
  r.checks.push_back(lemma1_check(f, tol));
  r.checks.push_back(lemma2_check(f, prof, tol));
  r.checks.push_back(lemma3_check(f, prof, tol));
  try {
    r.checks.push_back(lemma4_check(f, tol));
  } catch (const SkippedDegenerate&) {
    r.skipped.push_back("lemma4");
  }
  r.checks.push_back(lemma5_check(f, tol));
  r.checks.push_back(concavity_check(prof, tol));
  r.checks.push_back(star_star_check(f, tol));
  r.checks.push_back(star_star_star_check(f, tol));

  const PointwiseReport pw = pointwise_bounds_check(f, prof, tol);
  for (auto& c : pw.all()) r.checks.push_back(c);
  r.pointwise_skipped = pw.skipped;
  r.pointwise_evaluated = pw.evaluated;

  r.checks.push_back(verify_cp_identity(prof, options.quadrature_tol));
  r.checks.push_back(verify_gap_integral(prof, options.quadrature_tol));
  for (auto& c : endpoint_consistency_check(f, prof, tol)) r.checks.push_back(c);
  try {
    for (auto& c : part2_chain_check(f, prof, tol)) r.checks.push_back(c);
  } catch (const SkippedDegenerate&) {
    r.skipped.push_back("part2_chain");
  }
  return r;
}

}  // namespace cgap
