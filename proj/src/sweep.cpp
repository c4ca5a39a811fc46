#include "cgap/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cgap/errors.hpp"

namespace cgap {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kAreaTol = 1e-12;
constexpr double kVertexTol = 1e-12;
}  // namespace

void SliceSweep::Chain::build() {
  const std::size_t n = xs.size();
  area.assign(n, 0.0);
  moment.assign(n, 0.0);
  length.assign(n, 0.0);
  length_moment.assign(n, 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double a = xs[k], b = xs[k + 1];
    const double ya = ys[k], yb = ys[k + 1];
    const double seg = std::hypot(b - a, yb - ya);
    area[k + 1] = area[k] + 0.5 * (b - a) * (ya + yb);
    moment[k + 1] = moment[k] + (b - a) / 6.0 * (a * (2.0 * ya + yb) + b * (ya + 2.0 * yb));
    length[k + 1] = length[k] + seg;
    length_moment[k + 1] = length_moment[k] + 0.5 * seg * (a + b);
  }
}

std::size_t SliceSweep::Chain::segment(double t) const {
  const auto it = std::upper_bound(xs.begin(), xs.end(), t);
  std::size_t k = it == xs.begin() ? 0 : static_cast<std::size_t>(it - xs.begin()) - 1;
  return std::min(k, xs.size() - 2);
}

double SliceSweep::Chain::value(double t) const {
  const std::size_t k = segment(t);
  const double a = xs[k], b = xs[k + 1];
  return ys[k] + (t - a) / (b - a) * (ys[k + 1] - ys[k]);
}

std::pair<double, double> SliceSweep::Chain::slopes(double t, double tol) const {
  auto slope = [&](std::size_t k) { return (ys[k + 1] - ys[k]) / (xs[k + 1] - xs[k]); };
  const std::size_t n = xs.size();
  if (t <= xs.front() + tol) return {kNaN, slope(0)};
  if (t >= xs.back() - tol) return {slope(n - 2), kNaN};
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (std::abs(t - xs[k]) <= tol) return {slope(k - 1), slope(k)};
  }
  const double m = slope(segment(t));
  return {m, m};
}

SliceSweep::SliceSweep(const ConvexPolygon& poly) : scale_(poly.scale()) {
  const std::size_t n = poly.size();
  min_x_ = poly.min_x();
  max_x_ = poly.max_x();

  // Extreme vertices: lower/upper end of the (possibly vertical) left and right
  // sides. A side a few ulps off vertical (typical after rotation) counts as
  // vertical and its vertices are snapped onto it; otherwise its slope would be
  // ~1e16 and the chord at the very end would be 0 instead of the side length.
  const double snap = kVertexTol * scale_;
  auto on_left = [&](double x) { return x <= min_x_ + snap; };
  auto on_right = [&](double x) { return x >= max_x_ - snap; };
  std::size_t left_lo = 0, left_hi = 0, right_lo = 0, right_hi = 0;
  bool seen_left = false, seen_right = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 v = poly[i];
    if (on_left(v.x)) {
      if (!seen_left || v.y < poly[left_lo].y) left_lo = i;
      if (!seen_left || v.y > poly[left_hi].y) left_hi = i;
      seen_left = true;
    }
    if (on_right(v.x)) {
      if (!seen_right || v.y < poly[right_lo].y) right_lo = i;
      if (!seen_right || v.y > poly[right_hi].y) right_hi = i;
      seen_right = true;
    }
  }
  y_ref_ = poly[left_lo].y;
  left_edge_ = poly[left_hi].y - poly[left_lo].y;

  // Counterclockwise: left_lo -> ... -> right_lo is the lower chain,
  // right_hi -> ... -> left_hi the upper chain (traversed right to left).
  auto snapped = [&](double x) { return on_left(x) ? min_x_ : on_right(x) ? max_x_ : x; };
  for (std::size_t i = left_lo;; i = (i + 1) % n) {
    lower_.xs.push_back(snapped(poly[i].x));
    lower_.ys.push_back(poly[i].y - y_ref_);
    if (i == right_lo) break;
  }
  for (std::size_t i = right_hi;; i = (i + 1) % n) {
    upper_.xs.push_back(snapped(poly[i].x));
    upper_.ys.push_back(poly[i].y - y_ref_);
    if (i == left_hi) break;
  }
  std::reverse(upper_.xs.begin(), upper_.xs.end());
  std::reverse(upper_.ys.begin(), upper_.ys.end());
  lower_.build();
  upper_.build();

  breakpoints_ = lower_.xs;
  breakpoints_.insert(breakpoints_.end(), upper_.xs.begin(), upper_.xs.end());
  std::sort(breakpoints_.begin(), breakpoints_.end());
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());
}

double SliceSweep::upper(double t) const {
  return upper_.value(std::clamp(t, min_x_, max_x_)) + y_ref_;
}

double SliceSweep::lower(double t) const {
  return lower_.value(std::clamp(t, min_x_, max_x_)) + y_ref_;
}

double SliceSweep::chord(double t) const {
  t = std::clamp(t, min_x_, max_x_);
  return std::max(0.0, upper_.value(t) - lower_.value(t));
}

std::pair<double, double> SliceSweep::upper_slopes(double t) const {
  return upper_.slopes(t, kVertexTol * scale_);
}

std::pair<double, double> SliceSweep::lower_slopes(double t) const {
  return lower_.slopes(t, kVertexTol * scale_);
}

Slice SliceSweep::at(double t) const {
  t = std::clamp(t, min_x_, max_x_);
  struct Partial {
    double y, area, moment, length, length_moment;
  };
  auto eval = [t](const Chain& c) {
    const std::size_t k = c.segment(t);
    const double a = c.xs[k], b = c.xs[k + 1];
    const double ya = c.ys[k];
    const double yt = ya + (t - a) / (b - a) * (c.ys[k + 1] - ya);
    const double seg = std::hypot(t - a, yt - ya);
    return Partial{yt,
                   c.area[k] + 0.5 * (t - a) * (ya + yt),
                   c.moment[k] + (t - a) / 6.0 * (a * (2.0 * ya + yt) + t * (ya + 2.0 * yt)),
                   c.length[k] + seg,
                   c.length_moment[k] + 0.5 * seg * (a + t)};
  };
  const Partial up = eval(upper_);
  const Partial lo = eval(lower_);

  Slice s;
  s.t = t;
  s.ell = std::max(0.0, up.y - lo.y);
  s.area = up.area - lo.area;
  s.moment_x = up.moment - lo.moment;
  s.chain_length = up.length + lo.length + left_edge_;
  s.chain_moment = up.length_moment + lo.length_moment + left_edge_ * min_x_;
  if (s.area > kAreaTol * scale_ * scale_) {
    s.c_a = s.moment_x / s.area;
    s.c_p = (s.chain_moment + t * s.ell) / s.perimeter();
  } else {
    // The sub-body is a point or a segment on x = t.
    s.c_a = t;
    s.c_p = t;
  }
  return s;
}

std::size_t Profile::index_of(double t) const {
  const auto it = std::lower_bound(ts.begin(), ts.end(), t);
  if (it == ts.end() || *it != t) throw OutOfRange("profile has no sample at t=" + std::to_string(t));
  return static_cast<std::size_t>(it - ts.begin());
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g;
  if (n == 0) return g;
  if (n == 1) return {lo};
  g.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(n - 1);
    g.push_back(i + 1 == n ? hi : lo + f * (hi - lo));
  }
  return g;
}

Profile profile(const ConvexPolygon& poly, const ProfileOptions& options) {
  if (options.grid_points < 2) throw DomainError("profile: grid_points must be >= 2");
  const SliceSweep sweep(poly);
  const double lo = sweep.min_x();
  const double hi = sweep.max_x();

  Profile prof;
  prof.scale = poly.scale();
  prof.reference_t = std::clamp(options.reference_t, lo, hi);

  std::vector<double> ts = sweep.breakpoints();
  const auto grid = uniform_grid(lo, hi, options.grid_points);
  ts.insert(ts.end(), grid.begin(), grid.end());
  for (double t : options.extra_ts) ts.push_back(std::clamp(t, lo, hi));
  ts.push_back(prof.reference_t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  const Slice ref = sweep.at(prof.reference_t);
  const double area_ref =
      ref.area > kAreaTol * prof.scale * prof.scale ? ref.area : kNaN;
  const double perim_ref = ref.perimeter() > 0.0 ? ref.perimeter() : kNaN;

  const std::size_t n = ts.size();
  for (auto* v : {&prof.ell, &prof.area, &prof.perimeter, &prof.ptilde, &prof.a, &prof.p,
                  &prof.c_a, &prof.c_p}) {
    v->reserve(n);
  }
  prof.ts = std::move(ts);
  for (double t : prof.ts) {
    const Slice s = sweep.at(t);
    prof.ell.push_back(s.ell);
    prof.area.push_back(s.area);
    prof.perimeter.push_back(s.perimeter());
    prof.ptilde.push_back(s.chain_length);
    prof.a.push_back(s.area / area_ref);
    prof.p.push_back(s.chain_length / perim_ref);
    prof.c_a.push_back(s.c_a);
    prof.c_p.push_back(s.c_p);
  }
  return prof;
}

CheckReport verify_cp_identity(const Profile& prof, double tol) {
  const std::size_t n = prof.size();
  const double x_span = std::max({std::abs(prof.ts.front()), std::abs(prof.ts.back()),
                                  prof.ts.back() - prof.ts.front()});
  const double norm = prof.perimeter.back() * x_span;
  double integral = 0.0;
  double worst = 0.0;
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      integral += 0.5 * (prof.ts[i] - prof.ts[i - 1]) * (prof.perimeter[i] + prof.perimeter[i - 1]);
    }
    const double lhs = prof.perimeter[i] * prof.c_p[i];
    const double rhs = prof.ts[i] * prof.perimeter[i] - integral + prof.area[i];
    const double rel = std::abs(lhs - rhs) / norm;
    if (!(rel <= worst)) {
      worst = rel;
      worst_i = i;
    }
  }
  return make_check("cp_identity", worst, tol, 0.0,
                    "max relative discrepancy at t=" + fmt_num(prof.ts[worst_i]));
}

CheckReport concavity_check(const Profile& prof, double rel_tol) {
  const double tol = rel_tol * std::max(prof.scale, prof.perimeter.back());
  if (prof.size() < 3) throw DomainError("concavity_check: need at least 3 samples");
  CheckReport acc = make_check("concavity_P", 0.0, 0.0, tol, "no interior samples");
  acc.margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < prof.size(); ++i) {
    const double t0 = prof.ts[i - 1], t1 = prof.ts[i], t2 = prof.ts[i + 1];
    const double chord = ((t2 - t1) * prof.perimeter[i - 1] + (t1 - t0) * prof.perimeter[i + 1]) /
                         (t2 - t0);
    fold_check(acc, chord, prof.perimeter[i], tol, [t1] { return "P(t) vs secant at t=" + fmt_num(t1); });
  }
  return acc;
}

CheckReport verify_gap_integral(const Profile& prof, double tol) {
  const std::size_t r = prof.index_of(prof.reference_t);
  double integral = 0.0;
  for (std::size_t i = 1; i <= r; ++i) {
    const double f0 = prof.a[i - 1] - prof.p[i - 1];
    const double f1 = prof.a[i] - prof.p[i];
    integral += 0.5 * (prof.ts[i] - prof.ts[i - 1]) * (f0 + f1);
  }
  const double gap = prof.c_p[r] - prof.c_a[r];
  const double diff = std::abs(integral - gap);
  return make_check("gap_integral_identity", diff, tol, 0.0,
                    "integral=" + fmt_num(integral) + " c_p-c_a=" + fmt_num(gap));
}

}  // namespace cgap
