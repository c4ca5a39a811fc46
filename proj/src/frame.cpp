#include "cgap/frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "cgap/errors.hpp"
#include "cgap/sweep.hpp"

namespace cgap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Relative slack for the flat-maximum test on the chord function.
constexpr double kChordTieTol = 1e-12;
// A cut this close (relative to the projection length) to an end of the
// projection counts as that end.
constexpr double kEndTol = 1e-9;

struct Cut {
  double x0;
  double lo;
  double hi;
};

// Midpoint of the interval on which the chord function attains its maximum.
// The chord function is concave and piecewise linear, so the maximizers form
// an interval whose ends are breakpoints.
Cut max_chord_cut(const SliceSweep& sw) {
  const auto& xs = sw.breakpoints();
  double best = -kInf;
  std::vector<double> chords(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    chords[i] = sw.chord(xs[i]);
    best = std::max(best, chords[i]);
  }
  const double tol = kChordTieTol * sw.scale();
  double lo = kInf, hi = -kInf;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (chords[i] >= best - tol) {
      lo = std::min(lo, xs[i]);
      hi = std::max(hi, xs[i]);
    }
  }
  return {0.5 * (lo + hi), lo, hi};
}

std::vector<Point2> rotate_to_x(const ConvexPolygon& poly, const UnitVector& theta) {
  std::vector<Point2> out;
  out.reserve(poly.size());
  for (const auto& v : poly.vertices()) {
    out.push_back({dot(v, theta.as_point()), cross(theta.as_point(), v)});
  }
  return out;
}

}  // namespace

SupportParallelogram support_parallelogram(const ConvexPolygon& frame_polygon) {
  const SliceSweep sw(frame_polygon);
  auto [up_left, up_right] = sw.upper_slopes(0.0);
  auto [low_left, low_right] = sw.lower_slopes(0.0);
  // Support lines at the top end have slopes in [up_right, up_left]; at the
  // bottom end in [low_left, low_right]. A missing side imposes no bound.
  if (std::isnan(up_left)) up_left = kInf;
  if (std::isnan(up_right)) up_right = -kInf;
  if (std::isnan(low_left)) low_left = -kInf;
  if (std::isnan(low_right)) low_right = kInf;

  double lo = std::max(up_right, low_left);
  double hi = std::min(up_left, low_right);
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw InternalInvariantViolation("support_parallelogram: unbounded slope interval");
  }
  if (lo > hi) {
    if (lo - hi > 1e-9 * (1.0 + std::abs(lo) + std::abs(hi))) {
      throw InternalInvariantViolation("support_parallelogram: admissible slopes disjoint (" +
                                       fmt_num(lo) + " > " + fmt_num(hi) + ")");
    }
    std::swap(lo, hi);
  }
  SupportParallelogram out;
  out.slope_lo = lo;
  out.slope_hi = hi;
  out.slope = 0.5 * (lo + hi);
  out.alpha = std::sqrt(1.0 + out.slope * out.slope);
  return out;
}

NormalizedFrame normalize(const ConvexPolygon& poly, const UnitVector& theta) {
  std::vector<Point2> pts = rotate_to_x(poly, theta);
  ConvexPolygon rotated_poly = make_polygon(pts);
  SliceSweep sw(rotated_poly);
  Cut cut = max_chord_cut(sw);
  double extent = sw.max_x() - sw.min_x();

  bool reflected = false;
  if (cut.x0 - sw.min_x() <= kEndTol * extent) {
    for (auto& p : pts) p.x = -p.x;
    rotated_poly = make_polygon(pts);
    sw = SliceSweep(rotated_poly);
    cut = max_chord_cut(sw);
    extent = sw.max_x() - sw.min_x();
    reflected = true;
  }

  double x0 = cut.x0;
  if (sw.max_x() - x0 <= kEndTol * extent && sw.chord(sw.max_x()) >= sw.chord(x0)) {
    x0 = sw.max_x();
  }
  const double left = x0 - sw.min_x();
  const double y_mid = 0.5 * (sw.upper(x0) + sw.lower(x0));
  for (auto& p : pts) p = {(p.x - x0) / left, (p.y - y_mid) / left};

  NormalizedFrame f{make_polygon(pts)};
  f.theta_angle = theta.angle();
  f.reflected = reflected;
  f.scale_factor = 1.0 / left;

  const SliceSweep fsw(f.polygon);
  f.omega = std::max(0.0, fsw.max_x());
  const Slice at0 = fsw.at(0.0);
  f.ell = at0.ell;
  f.area0 = at0.area;
  f.perimeter0 = at0.perimeter();
  f.c = -at0.c_a;
  const SupportParallelogram par = support_parallelogram(f.polygon);
  f.slope = par.slope;
  f.alpha = par.alpha;
  f.half_strip = f.ell / (2.0 * f.alpha);
  f.B = f.area0 / f.ell;
  f.lambda5 = f.ell / at0.chain_length;
  f.lambda6 = 2.0 * f.ell / f.perimeter0;
  f.s = 2.0 * f.alpha / f.perimeter0;
  f.b = f.s * f.B;
  f.rho = f.s * f.omega;
  if (f.omega > kEndTol) {
    const double total_area = fsw.at(f.omega).area;
    f.u = 2.0 * (total_area - f.area0) / (f.ell * f.omega);
  } else {
    f.omega = std::max(f.omega, 0.0);
  }
  return f;
}

CheckReport frame_scalars_valid(const NormalizedFrame& f, double rel_tol) {
  CheckReport acc;
  acc.name = "frame_scalars";
  acc.margin = kInf;
  auto tol_for = [rel_tol](double a, double b) {
    return rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
  };
  auto le = [&](const char* what, double lhs, double rhs) {
    keep_worst(acc, make_check(what, lhs, rhs, tol_for(lhs, rhs), what));
  };

  le("1 <= alpha", 1.0, f.alpha);
  le("s > 0", 0.0, f.s);
  le("s < 1", f.s, 1.0);
  le("lambda6 > 0", 0.0, f.lambda6);
  le("lambda6 < 1", f.lambda6, 1.0);
  le("lambda5 > 0", 0.0, f.lambda5);
  le("lambda5 <= 1", f.lambda5, 1.0);
  if (f.u) {
    le("u >= 1", 1.0, *f.u);
    le("u <= 2", *f.u, 2.0);
  }
  le("B >= 1/2", 0.5, f.B);
  le("B <= 1", f.B, 1.0);
  le("B <= (1 - lambda6/2)/s", f.B, (1.0 - 0.5 * f.lambda6) / f.s);
  le("c >= B/2", 0.5 * f.B, f.c);
  le("c <= 1/2", f.c, 0.5);

  const SliceSweep sw(f.polygon);
  le("projection starts at -1", std::abs(sw.min_x() + 1.0), 0.0);
  le("projection ends at omega", std::abs(sw.max_x() - f.omega), 0.0);
  for (double t : sw.breakpoints()) le("ell(t) <= ell(0)", sw.chord(t), f.ell);

  // Parallelogram bounded by the two support lines and x = -1, x = omega.
  const double top0 = sw.upper(0.0);
  const double bottom0 = sw.lower(0.0);
  for (const auto& v : f.polygon.vertices()) {
    le("below upper support line", v.y, top0 + f.slope * v.x);
    le("above lower support line", bottom0 + f.slope * v.x, v.y);
  }
  return acc;
}

}  // namespace cgap
