#include "cgap/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <optional>
#include <thread>

#include "cgap/errors.hpp"
#include "cgap/rng.hpp"

namespace cgap {

namespace {

constexpr double kBound = 1.0 / 6.0;
constexpr double kBoundSlack = 1e-9;
constexpr std::size_t kCoarseDirections = 64;
constexpr double kAngleTol = 1e-6;
constexpr double kInitialStep = 0.1;  // fraction of the bounding-box diagonal
constexpr int kFailuresBeforeHalving = 20;
constexpr double kMinStep = 1e-9;
constexpr double kSeedEps[] = {0.1, 0.01, 0.001};

// Width in direction (cos t, sin t) by a linear scan; the polygons here are small.
double width_at(std::span<const Point2> vs, double c, double s) {
  double lo = c * vs[0].x + s * vs[0].y;
  double hi = lo;
  for (const auto& v : vs.subspan(1)) {
    const double p = c * v.x + s * v.y;
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return hi - lo;
}

std::vector<Point2> disk_points(std::size_t n, Rng& rng, double anisotropy) {
  std::vector<Point2> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::sqrt(rng.uniform());
    const double a = 2.0 * std::numbers::pi * rng.uniform();
    pts.push_back({anisotropy * r * std::cos(a), r * std::sin(a)});
  }
  return pts;
}

}  // namespace

TriangleFamily triangle(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("triangle: eps must lie in (0, 1]");
  const std::vector<Point2> v{{0.0, 0.0}, {1.0, eps}, {1.0, -eps}};
  return {eps, make_polygon(v), UnitVector(1.0, 0.0)};
}

double closed_form_gap(double eps) {
  if (!(eps > 0.0)) throw DomainError("closed_form_gap: eps must be positive");
  return 1.0 / 6.0 + 0.5 * eps * eps - 0.5 * eps * std::sqrt(1.0 + eps * eps);
}

double closed_form_ratio(double eps, double cos_e_theta) {
  if (!(eps > 0.0)) throw DomainError("closed_form_ratio: eps must be positive");
  const double c = std::abs(cos_e_theta);
  if (!(c <= 1.0)) throw DomainError("closed_form_ratio: |cos| must be <= 1");
  if (c < 0.1) throw DomainError("closed_form_ratio: |cos| < 0.1, width formula not valid");
  return closed_form_gap(eps) * c / (c + eps * std::sqrt(std::max(0.0, 1.0 - c * c)));
}

std::vector<ConvergenceRow> convergence_table(std::span<const double> eps_list) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(eps_list.size());
  for (double eps : eps_list) {
    const TriangleFamily tri = triangle(eps);
    const CentroidPair c = centroids(tri.polygon);
    const Measures m = measures(tri.polygon);
    ConvergenceRow r;
    r.eps = eps;
    r.ratio = gap_ratio(tri.polygon, tri.axis);
    r.closed_form_ratio = closed_form_ratio(eps, 1.0);
    r.gap = distance(c.area, c.boundary);
    r.diameter = diameter(tri.polygon);
    r.perimeter = m.perimeter;
    r.gap_over_diameter = r.gap / r.diameter;
    r.gap_over_perimeter = r.gap / r.perimeter;
    rows.push_back(r);
  }
  return rows;
}

ConvexPolygon random_convex_polygon(std::size_t n, std::uint64_t seed, double anisotropy) {
  if (n < 3) throw DomainError("random_convex_polygon: n must be at least 3");
  if (!(anisotropy >= 1.0)) throw DomainError("random_convex_polygon: anisotropy must be >= 1");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(attempt == 0 ? seed : derive_seed(seed, attempt));
    try {
      return make_polygon(disk_points(n, rng, anisotropy));
    } catch (const DegenerateInput&) {
      // three nearly collinear draws; try the next derived stream
    }
  }
}

DirectionalMax max_ratio_over_directions(const ConvexPolygon& poly) {
  const CentroidPair c = centroids(poly);
  const Point2 g = c.boundary - c.area;
  const auto vs = poly.vertices();
  DirectionalMax out;
  auto ratio = [&](double t) {
    ++out.evaluations;
    const double co = std::cos(t), si = std::sin(t);
    return std::abs(co * g.x + si * g.y) / width_at(vs, co, si);
  };

  const double step = std::numbers::pi / kCoarseDirections;
  std::size_t best_k = 0;
  double best = -1.0;
  for (std::size_t k = 0; k < kCoarseDirections; ++k) {
    const double r = ratio(k * step);
    if (r > best) {
      best = r;
      best_k = k;
    }
  }
  out.ratio = best;
  out.theta = best_k * step;

  // The ratio is pi-periodic, so the bracket may extend below 0.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = out.theta - step, b = out.theta + step;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = ratio(x1), f2 = ratio(x2);
  while (b - a > kAngleTol) {
    if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = ratio(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = ratio(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = ratio(xm);
  for (auto [x, f] : {std::pair{x1, f1}, std::pair{x2, f2}, std::pair{xm, fm}}) {
    if (f > out.ratio) {
      out.ratio = f;
      out.theta = x;
    }
  }
  out.theta = std::fmod(out.theta + std::numbers::pi, std::numbers::pi);
  return out;
}

namespace {

struct RestartResult {
  std::optional<ConvexPolygon> polygon;
  double ratio = -1.0;
  double theta = 0.0;
  std::size_t evaluations = 0;
  bool violated = false;
};

std::vector<Point2> initial_points(std::size_t n, std::size_t restart, Rng& rng) {
  if (restart < std::size(kSeedEps)) {
    const double eps = kSeedEps[restart];
    std::vector<Point2> pts{{0.0, 0.0}, {1.0, eps}, {1.0, -eps}};
    // Filler points strictly inside the triangle; they only matter once moved.
    while (pts.size() < n) {
      const double x = rng.uniform(0.2, 0.9);
      const double y = eps * x * rng.uniform(-0.5, 0.5);
      pts.push_back({x, y});
    }
    return pts;
  }
  static constexpr double kAnisotropy[] = {1.0, 10.0, 100.0};
  return disk_points(n, rng, kAnisotropy[restart % std::size(kAnisotropy)]);
}

RestartResult run_restart(std::size_t n, std::size_t budget, std::uint64_t seed,
                          std::size_t restart) {
  RestartResult out;
  if (budget == 0) return out;
  Rng rng(derive_seed(seed, restart));

  std::vector<Point2> pts;
  std::optional<ConvexPolygon> poly;
  while (!poly) {
    pts = initial_points(n, restart, rng);
    try {
      poly = make_polygon(pts);
    } catch (const DegenerateInput&) {
    }
  }
  auto note = [&out](const DirectionalMax& d) {
    if (d.ratio > kBound + kBoundSlack) out.violated = true;
  };
  DirectionalMax cur = max_ratio_over_directions(*poly);
  ++out.evaluations;
  note(cur);
  double step = kInitialStep;
  int failures = 0;

  while (out.evaluations < budget) {
    const std::size_t i = rng.below(n);
    const double sigma = step * poly->scale();
    std::vector<Point2> trial = pts;
    trial[i].x += sigma * rng.normal();
    trial[i].y += sigma * rng.normal();

    bool improved = false;
    try {
      ConvexPolygon candidate = make_polygon(trial);
      const DirectionalMax d = max_ratio_over_directions(candidate);
      ++out.evaluations;
      note(d);
      if (d.ratio > cur.ratio) {
        pts = std::move(trial);
        poly = std::move(candidate);
        cur = d;
        improved = true;
      }
    } catch (const DegenerateInput&) {
      ++out.evaluations;  // a collapsed hull still costs a step
    }

    if (improved) {
      failures = 0;
    } else if (++failures >= kFailuresBeforeHalving) {
      failures = 0;
      step *= 0.5;
      if (step < kMinStep) step = kInitialStep;
    }
  }
  out.polygon = std::move(poly);
  out.ratio = cur.ratio;
  out.theta = cur.theta;
  return out;
}

}  // namespace

SearchState maximize_ratio(std::size_t n, std::size_t budget, std::uint64_t seed,
                           const SearchOptions& options) {
  if (n < 3) throw DomainError("maximize_ratio: n must be at least 3");
  if (budget == 0) throw DomainError("maximize_ratio: budget must be at least 1");
  const std::size_t restarts = std::max<std::size_t>(1, options.restarts);

  std::vector<std::size_t> budgets(restarts, budget / restarts);
  for (std::size_t r = 0; r < budget % restarts; ++r) ++budgets[r];

  std::vector<RestartResult> results(restarts);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < restarts; r = next++) {
      results[r] = run_restart(n, budgets[r], seed, r);
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, restarts);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Reduce in restart order so ties resolve the same way for any job count.
  std::size_t best = restarts;
  std::size_t evaluations = 0;
  bool violated = false;
  for (std::size_t r = 0; r < restarts; ++r) {
    evaluations += results[r].evaluations;
    violated = violated || results[r].violated;
    if (results[r].polygon && (best == restarts || results[r].ratio > results[best].ratio)) best = r;
  }
  if (best == restarts) throw InternalInvariantViolation("maximize_ratio: no restart produced a polygon");

  SearchState s{*results[best].polygon};
  s.best_ratio = results[best].ratio;
  s.best_theta = results[best].theta;
  s.evaluations = evaluations;
  s.seed = seed;
  s.n_vertices = n;
  s.restarts = restarts;
  s.bound_violated = violated || s.best_ratio > kBound + kBoundSlack;
  return s;
}

}  // namespace cgap
