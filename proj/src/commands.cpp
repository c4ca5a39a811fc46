#include "cgap/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <thread>

#include "cgap/corpus.hpp"
#include "cgap/errors.hpp"
#include "cgap/frame.hpp"
#include "cgap/inequalities.hpp"
#include "cgap/lemmas.hpp"
#include "cgap/rng.hpp"
#include "cgap/sweep.hpp"

namespace cgap {

namespace {

constexpr double kSixth = 1.0 / 6.0;
constexpr double kMaxSkippedFraction = 0.01;

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Callers write into
// per-index slots, so the result never depends on scheduling.
template <class Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::string theta_tag(const UnitVector& d) { return "theta=" + fmt_num(d.angle()); }

CheckReport internal_failure(const std::string& what) {
  return make_check("internal_invariant", 1.0, 0.0, 0.0, what);
}

// ---------------------------------------------------------------------------
// verify

std::vector<CheckReport> verify_checks(const ConvexPolygon& poly, std::span<const UnitVector> dirs,
                                       double tol) {
  CheckReport ratio;
  ratio.name = "gap_ratio";
  ratio.margin = std::numeric_limits<double>::infinity();
  for (const auto& d : dirs) {
    const double r = gap_ratio(poly, d);
    fold_check(ratio, r, kSixth, tol, [&d] { return theta_tag(d); });
  }
  const CentroidPair c = centroids(poly);
  const double gap = distance(c.area, c.boundary);
  const double len_tol = tol * poly.scale();
  const double diam = diameter(poly);
  const double per = measures(poly).perimeter;
  return {ratio,
          make_check("diameter_corollary", gap, diam / 6.0, len_tol, "diameter=" + fmt_num(diam)),
          make_check("perimeter_corollary", gap, per / 12.0, len_tol, "perimeter=" + fmt_num(per))};
}

std::string item_tag(const CorpusItem& it) {
  return "item=" + std::to_string(it.index) + " n=" + std::to_string(it.n_points) +
         " anisotropy=" + fmt_num(it.anisotropy);
}

// ---------------------------------------------------------------------------
// lemmas

struct LemmaItem {
  std::vector<CheckReport> checks;             // worst per name over the directions
  std::map<std::string, std::size_t> witness;  // name -> direction index of the worst case
  std::size_t lemma4_skipped = 0;
  std::size_t part2_skipped = 0;
  std::size_t pointwise_evaluated = 0;
  std::size_t pointwise_skipped = 0;
};

LemmaItem lemma_item(const ConvexPolygon& poly, std::span<const UnitVector> dirs, double tol) {
  LemmaItem out;
  CheckFolder folder;
  LemmaOptions lo;
  lo.rel_tol = tol;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const std::string tag = theta_tag(dirs[k]);
    std::vector<CheckReport> cs;
    try {
      const LemmaSuiteReport r = run_lemma_suite(poly, dirs[k], lo);
      cs = r.checks;
      for (const auto& s : r.skipped) {
        if (s == "lemma4") ++out.lemma4_skipped;
        if (s == "part2_chain") ++out.part2_skipped;
      }
      out.pointwise_evaluated += r.pointwise_evaluated;
      out.pointwise_skipped += r.pointwise_skipped;
      const double frac = r.pointwise_evaluated
                              ? static_cast<double>(r.pointwise_skipped) / r.pointwise_evaluated
                              : 0.0;
      cs.push_back(make_check("pointwise_skipped_fraction", frac, kMaxSkippedFraction, 0.0,
                              std::to_string(r.pointwise_skipped) + "/" +
                                  std::to_string(r.pointwise_evaluated)));
    } catch (const std::exception& e) {
      // Bad geometry code, not bad input: surfaces as a failed check.
      cs.push_back(internal_failure(e.what()));
    }
    for (const auto& c : cs) {
      if (folder.add(c, tag)) out.witness[c.name] = k;
    }
  }
  out.checks = folder.take();
  return out;
}

void add_lemma_counts(RunReport& rep, const std::vector<LemmaItem>& items, std::size_t directions) {
  std::size_t l4 = 0, p2 = 0, pe = 0, ps = 0;
  for (const auto& it : items) {
    l4 += it.lemma4_skipped;
    p2 += it.part2_skipped;
    pe += it.pointwise_evaluated;
    ps += it.pointwise_skipped;
  }
  rep.counts.emplace_back("polygons", items.size());
  rep.counts.emplace_back("directions", directions);
  rep.counts.emplace_back("lemma4_skipped", l4);
  rep.counts.emplace_back("part2_chain_skipped", p2);
  rep.counts.emplace_back("pointwise_evaluated", pe);
  rep.counts.emplace_back("pointwise_skipped", ps);
}

void append_scalars(RunReport& rep, std::size_t samples, std::uint64_t seed) {
  const TanSuiteReport tan = tan_suite(samples, derive_seed(seed, 1));
  for (const auto& c : tan.all()) rep.checks.push_back(c);
  const QuinticReport q = quintic_check();
  for (const auto& c : q.all()) rep.checks.push_back(c);
  const RegionReport region = region_inequalities_check(samples, derive_seed(seed, 2));
  for (const auto& c : region.checks) rep.checks.push_back(c);
  rep.counts.emplace_back("tan_samples", tan.samples);
  rep.counts.emplace_back("region_samples", region.samples);
  rep.counts.emplace_back("region_rejected", region.rejected);
}

}  // namespace

RunReport run_verify(const ConvexPolygon& poly, std::size_t directions, const CommonOptions& opt) {
  RunReport rep;
  rep.command = "verify";
  rep.seed = opt.seed;
  rep.tolerance = opt.tol;
  const auto dirs = direction_grid(directions);
  rep.checks = verify_checks(poly, dirs, opt.tol);
  rep.counts.emplace_back("directions", directions);
  return rep;
}

RunReport run_verify_corpus(std::size_t count, std::uint64_t corpus_seed, std::size_t directions,
                            const CommonOptions& opt) {
  RunReport rep;
  rep.command = "verify";
  rep.seed = corpus_seed;
  rep.tolerance = opt.tol;
  const auto dirs = direction_grid(directions);
  std::vector<std::vector<CheckReport>> per_item(count);
  std::vector<std::string> tags(count);
  parallel_for(count, opt.jobs, [&](std::size_t i) {
    const CorpusItem it = corpus_item(corpus_seed, i);
    tags[i] = item_tag(it);
    per_item[i] = verify_checks(it.polygon, dirs, opt.tol);
  });
  CheckFolder folder;
  for (std::size_t i = 0; i < count; ++i) folder.add_all(per_item[i], tags[i]);
  rep.checks = folder.take();
  rep.counts.emplace_back("polygons", count);
  rep.counts.emplace_back("directions", directions);
  return rep;
}

RunReport run_lemmas(const ConvexPolygon& poly, const LemmaRunOptions& lo, const CommonOptions& opt) {
  RunReport rep;
  rep.command = "lemmas";
  rep.seed = opt.seed;
  rep.tolerance = opt.tol;
  const auto dirs = direction_grid(lo.directions);
  std::vector<LemmaItem> items{lemma_item(poly, dirs, opt.tol)};
  rep.checks = items[0].checks;
  for (const auto& d : dirs) {
    try {
      rep.frames.emplace_back(0, normalize(poly, d));
    } catch (const std::exception&) {
      // already reported as internal_invariant
    }
  }
  add_lemma_counts(rep, items, lo.directions);
  if (lo.include_scalars) append_scalars(rep, lo.samples, opt.seed);
  return rep;
}

RunReport run_lemmas_corpus(std::size_t count, std::uint64_t corpus_seed, const LemmaRunOptions& lo,
                            const CommonOptions& opt) {
  RunReport rep;
  rep.command = "lemmas";
  rep.seed = corpus_seed;
  rep.tolerance = opt.tol;
  const auto dirs = direction_grid(lo.directions);
  std::vector<LemmaItem> items(count);
  std::vector<std::string> tags(count);
  parallel_for(count, opt.jobs, [&](std::size_t i) {
    const CorpusItem it = corpus_item(corpus_seed, i);
    tags[i] = item_tag(it);
    items[i] = lemma_item(it.polygon, dirs, opt.tol);
  });

  // Fold in item order and remember which (item, direction) owns each worst case.
  CheckFolder folder;
  std::map<std::string, std::pair<std::size_t, std::size_t>> witness;
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& c : items[i].checks) {
      if (folder.add(c, tags[i])) {
        const auto w = items[i].witness.find(c.name);
        witness[c.name] = {i, w == items[i].witness.end() ? 0 : w->second};
      }
    }
  }
  rep.checks = folder.take();

  std::set<std::pair<std::size_t, std::size_t>> frames;
  for (const auto& [name, w] : witness) frames.insert(w);
  for (const auto& [i, k] : frames) {
    try {
      rep.frames.emplace_back(i, normalize(corpus_item(corpus_seed, i).polygon, dirs[k]));
    } catch (const std::exception&) {
    }
  }
  add_lemma_counts(rep, items, lo.directions);
  if (lo.include_scalars) append_scalars(rep, lo.samples, opt.seed);
  return rep;
}

RunReport run_scalars(std::size_t samples, const CommonOptions& opt) {
  RunReport rep;
  rep.command = "lemmas";
  rep.seed = opt.seed;
  rep.tolerance = opt.tol;
  append_scalars(rep, samples, opt.seed);
  return rep;
}

std::string sweep_csv(const ConvexPolygon& poly, double theta, std::size_t grid) {
  if (grid < 2) throw DomainError("sweep: grid must be at least 2");
  const NormalizedFrame f = normalize(poly, UnitVector::from_angle(theta));
  const Profile prof = profile(f.polygon, grid, 0.0);
  std::string out = "t,ell,A,P,Ptilde,a,p,c_a,c_p\n";
  for (std::size_t i = 0; i < prof.size(); ++i) {
    const double row[] = {prof.ts[i], prof.ell[i], prof.area[i], prof.perimeter[i], prof.ptilde[i],
                          prof.a[i],  prof.p[i],   prof.c_a[i],  prof.c_p[i]};
    for (std::size_t k = 0; k < std::size(row); ++k) {
      if (k) out += ',';
      out += fmt_num(row[k]);
    }
    out += '\n';
  }
  return out;
}

RunReport run_extremal(std::span<const double> eps_list, const CommonOptions& opt) {
  RunReport rep;
  rep.command = "extremal";
  rep.seed = opt.seed;
  rep.tolerance = opt.tol;
  rep.table = convergence_table(eps_list);

  // The displayed gap formula is compared where it is known to be positive.
  constexpr double kGapFormulaRange = 0.5;
  constexpr double kGapTol = 1e-12;
  for (const auto& r : rep.table) {
    const std::string ctx = "eps=" + fmt_num(r.eps);
    rep.checks.push_back(make_check("closed_form_ratio", std::abs(r.ratio - r.closed_form_ratio), 0.0,
                                    opt.tol, ctx + " ratio=" + fmt_num(r.ratio)));
    if (r.eps <= kGapFormulaRange) {
      const TriangleFamily tri = triangle(r.eps);
      const double signed_gap = -gap_projection(tri.polygon, tri.axis);
      rep.checks.push_back(make_check("closed_form_gap", std::abs(signed_gap - closed_form_gap(r.eps)),
                                      0.0, kGapTol, ctx + " gap=" + fmt_num(signed_gap)));
    }
    rep.checks.push_back(make_check("ratio_bound", r.ratio, kSixth, opt.tol, ctx));
    rep.checks.push_back(make_check("diameter_bound", r.gap_over_diameter, kSixth, opt.tol, ctx));
    rep.checks.push_back(make_check("perimeter_bound", r.gap_over_perimeter, 1.0 / 12.0, opt.tol, ctx));
  }
  // Along a decreasing eps list both normalized gaps must increase.
  for (std::size_t i = 1; i < rep.table.size(); ++i) {
    const auto& a = rep.table[i - 1];
    const auto& b = rep.table[i];
    if (!(b.eps < a.eps)) continue;
    const std::string ctx = "eps " + fmt_num(a.eps) + " -> " + fmt_num(b.eps);
    rep.checks.push_back(make_check("gap_over_diameter_increasing", a.gap_over_diameter,
                                    b.gap_over_diameter, 0.0, ctx));
    rep.checks.push_back(make_check("gap_over_perimeter_increasing", a.gap_over_perimeter,
                                    b.gap_over_perimeter, 0.0, ctx));
  }
  return rep;
}

RunReport run_search(std::size_t n, std::size_t budget, std::size_t restarts, const CommonOptions& opt) {
  RunReport rep;
  rep.command = "search";
  rep.seed = opt.seed;
  rep.tolerance = opt.tol;
  SearchOptions so;
  so.restarts = restarts;
  so.jobs = opt.jobs;
  SearchState st = maximize_ratio(n, budget, opt.seed, so);
  rep.checks.push_back(make_check("search_bound", st.best_ratio, kSixth, opt.tol,
                                  "theta=" + fmt_num(st.best_theta) +
                                      " vertices=" + std::to_string(st.best_polygon.size())));
  if (st.bound_violated) {
    rep.checks.push_back(make_check("search_bound_seen", 1.0, 0.0, 0.0, "a visited polygon exceeded 1/6"));
  }
  rep.search = std::move(st);
  return rep;
}

}  // namespace cgap
