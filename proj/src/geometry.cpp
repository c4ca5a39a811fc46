#include "cgap/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cgap/errors.hpp"
#include "cgap/rng.hpp"

namespace cgap {

namespace {

constexpr double kDuplicateTol = 1e-12;
constexpr double kCollinearSin = 1e-14;
constexpr double kAreaTol = 1e-12;

double bbox_diagonal(std::span<const Point2> pts) {
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  for (const auto& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

// Strict left turn a -> b -> c, relative to the edge lengths.
bool strict_left_turn(Point2 a, Point2 b, Point2 c) {
  const Point2 u = b - a;
  const Point2 v = c - b;
  return cross(u, v) > kCollinearSin * norm(u) * norm(v);
}

double signed_area(std::span<const Point2> v) {
  const Point2 o = v[0];
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) twice += cross(v[i] - o, v[i + 1] - o);
  return 0.5 * twice;
}

// Drop near-duplicate and non-convex vertices from a closed CCW loop until stable.
std::vector<Point2> cleanup_loop(std::vector<Point2> v, double diag) {
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
      const std::size_t n = v.size();
      const Point2 prev = v[(i + n - 1) % n];
      const Point2 next = v[(i + 1) % n];
      if (distance(prev, v[i]) <= kDuplicateTol * diag || !strict_left_turn(prev, v[i], next)) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return v;
}

}  // namespace

UnitVector::UnitVector(double x, double y) {
  const double len = std::hypot(x, y);
  if (!(len > 0.0) || !std::isfinite(len)) throw DomainError("UnitVector: zero or non-finite vector");
  x_ = x / len;
  y_ = y / len;
}

UnitVector UnitVector::from_angle(double radians) {
  return UnitVector(std::cos(radians), std::sin(radians), Unchecked{});
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> v)
    : vertices_(std::move(v)), scale_(bbox_diagonal(vertices_)) {}

double ConvexPolygon::min_x() const {
  return std::min_element(vertices_.begin(), vertices_.end(),
                          [](Point2 a, Point2 b) { return a.x < b.x; })
      ->x;
}

double ConvexPolygon::max_x() const {
  return std::max_element(vertices_.begin(), vertices_.end(),
                          [](Point2 a, Point2 b) { return a.x < b.x; })
      ->x;
}

ConvexPolygon make_polygon(std::span<const Point2> points) {
  if (points.size() < 3) {
    throw DegenerateInput("need at least 3 points, got " + std::to_string(points.size()));
  }
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DegenerateInput("non-finite coordinate");
  }
  const double diag = bbox_diagonal(points);
  if (!(diag > 0.0)) throw DegenerateInput("all points coincide");

  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(),
            [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });

  // Andrew's monotone chain.
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && !strict_left_turn(hull[k - 2], hull[k - 1], p)) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && !strict_left_turn(hull[k - 2], hull[k - 1], *it)) --k;
    hull[k++] = *it;
  }
  hull.resize(k > 0 ? k - 1 : 0);

  hull = cleanup_loop(std::move(hull), diag);
  if (hull.size() < 3) throw DegenerateInput("convex hull has fewer than 3 vertices");
  const double hull_diag = bbox_diagonal(hull);
  if (signed_area(hull) <= kAreaTol * hull_diag * hull_diag) {
    throw DegenerateInput("convex hull area below threshold");
  }
  return ConvexPolygon(std::move(hull));
}

Measures measures(const ConvexPolygon& poly) {
  double perimeter = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) perimeter += distance(poly.vertex(i), poly.vertex(i + 1));
  return {signed_area(poly.vertices()), perimeter};
}

Point2 area_centroid(const ConvexPolygon& poly) {
  // Fan triangulation from the first vertex, in coordinates relative to it.
  const Point2 o = poly[0];
  double twice_area = 0.0;
  Point2 acc{};
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    const Point2 a = poly[i] - o;
    const Point2 b = poly[i + 1] - o;
    const double w = cross(a, b);
    twice_area += w;
    acc = acc + w * (a + b);
  }
  return o + (1.0 / (3.0 * twice_area)) * acc;
}

Point2 boundary_centroid(const ConvexPolygon& poly) {
  const Point2 o = poly[0];
  double total = 0.0;
  Point2 acc{};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 a = poly.vertex(i) - o;
    const Point2 b = poly.vertex(i + 1) - o;
    const double len = distance(a, b);
    total += len;
    acc = acc + (0.5 * len) * (a + b);
  }
  return o + (1.0 / total) * acc;
}

CentroidPair centroids(const ConvexPolygon& poly) {
  return {area_centroid(poly), boundary_centroid(poly)};
}

double support_value(const ConvexPolygon& poly, const UnitVector& d) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : poly.vertices()) best = std::max(best, dot(v, d.as_point()));
  return best;
}

double width(const ConvexPolygon& poly, const UnitVector& theta) {
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& v : poly.vertices()) {
    const double p = dot(v, theta.as_point());
    hi = std::max(hi, p);
    lo = std::min(lo, p);
  }
  return hi - lo;
}

double diameter(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  double best = 0.0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = poly.vertex(i);
    const Point2 b = poly.vertex(i + 1);
    const Point2 edge = b - a;
    // Advance the antipodal pointer while it moves away from edge (a, b).
    while (cross(edge, poly.vertex(j + 1) - a) > cross(edge, poly.vertex(j) - a)) j = (j + 1) % n;
    best = std::max({best, distance(a, poly.vertex(j)), distance(b, poly.vertex(j))});
  }
  return best;
}

double diameter_bruteforce(const ConvexPolygon& poly) {
  double best = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    for (std::size_t j = i + 1; j < poly.size(); ++j) best = std::max(best, distance(poly[i], poly[j]));
  }
  return best;
}

double gap_projection(const ConvexPolygon& poly, const UnitVector& theta) {
  const auto [ca, cb] = centroids(poly);
  return dot(cb - ca, theta.as_point());
}

double gap_ratio(const ConvexPolygon& poly, const UnitVector& theta) {
  return std::abs(gap_projection(poly, theta)) / width(poly, theta);
}

std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, Point2 normal, double offset) {
  std::vector<Point2> out;
  out.reserve(poly.size() + 2);
  bool all_inside = true;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 a = poly.vertex(i);
    const Point2 b = poly.vertex(i + 1);
    const double da = dot(normal, a) - offset;
    const double db = dot(normal, b) - offset;
    if (da <= 0.0) out.push_back(a);
    else all_inside = false;
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      const double s = da / (da - db);
      out.push_back(a + s * (b - a));
    }
  }
  if (all_inside) return poly;
  if (out.size() < 3) return std::nullopt;
  try {
    return make_polygon(out);
  } catch (const DegenerateInput&) {
    return std::nullopt;
  }
}

std::optional<ConvexPolygon> clip_below(const ConvexPolygon& poly, double t) {
  if (t < poly.min_x()) return std::nullopt;
  if (t >= poly.max_x()) return poly;
  return clip_halfplane(poly, {1.0, 0.0}, t);
}

std::optional<ConvexPolygon> clip_above(const ConvexPolygon& poly, double t) {
  if (t > poly.max_x()) return std::nullopt;
  if (t <= poly.min_x()) return poly;
  return clip_halfplane(poly, {-1.0, 0.0}, -t);
}

double chord_length(const ConvexPolygon& poly, double t) {
  const double lo = poly.min_x();
  const double hi = poly.max_x();
  const double slack = 1e-12 * poly.scale();
  if (t < lo - slack || t > hi + slack) {
    throw OutOfRange("chord_length: t=" + std::to_string(t) + " outside [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "]");
  }
  t = std::clamp(t, lo, hi);
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -y_lo;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 a = poly.vertex(i);
    const Point2 b = poly.vertex(i + 1);
    if (a.x == t) {
      y_lo = std::min(y_lo, a.y);
      y_hi = std::max(y_hi, a.y);
    }
    if ((a.x < t && b.x > t) || (a.x > t && b.x < t)) {
      const double y = a.y + (t - a.x) / (b.x - a.x) * (b.y - a.y);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  return y_hi > y_lo ? y_hi - y_lo : 0.0;
}

bool contains(const ConvexPolygon& poly, Point2 p, double tol) {
  const double slack = tol * poly.scale();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 a = poly.vertex(i);
    const Point2 e = poly.vertex(i + 1) - a;
    if (cross(e, p - a) < -slack * norm(e)) return false;
  }
  return true;
}

namespace {
template <class F>
ConvexPolygon map_vertices(const ConvexPolygon& poly, F&& f) {
  std::vector<Point2> v;
  v.reserve(poly.size());
  for (const auto& p : poly.vertices()) v.push_back(f(p));
  return make_polygon(v);
}
}  // namespace

ConvexPolygon rotated(const ConvexPolygon& poly, double radians) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  return map_vertices(poly, [&](Point2 p) { return Point2{c * p.x - s * p.y, s * p.x + c * p.y}; });
}

ConvexPolygon translated(const ConvexPolygon& poly, Point2 offset) {
  return map_vertices(poly, [&](Point2 p) { return p + offset; });
}

ConvexPolygon scaled(const ConvexPolygon& poly, double factor) {
  if (!(factor > 0.0)) throw DomainError("scaled: factor must be positive");
  return map_vertices(poly, [&](Point2 p) { return factor * p; });
}

ConvexPolygon reflected_x(const ConvexPolygon& poly) {
  return map_vertices(poly, [](Point2 p) { return Point2{-p.x, p.y}; });
}

MonteCarloCentroids oracle_centroid_mc(const ConvexPolygon& poly, std::size_t n_samples,
                                       std::uint64_t seed) {
  if (n_samples < 10000) throw DomainError("oracle_centroid_mc: need at least 1e4 samples");
  Rng rng(seed);

  double lo_x = poly.min_x();
  double hi_x = poly.max_x();
  double lo_y = std::numeric_limits<double>::infinity();
  double hi_y = -lo_y;
  for (const auto& v : poly.vertices()) {
    lo_y = std::min(lo_y, v.y);
    hi_y = std::max(hi_y, v.y);
  }

  // Running sums are kept relative to the box center to limit cancellation.
  const Point2 mid{0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y)};
  MonteCarloCentroids out;
  {
    double sx = 0, sy = 0, sxx = 0, syy = 0;
    std::size_t hits = 0;
    for (std::size_t k = 0; k < n_samples; ++k) {
      const Point2 p{rng.uniform(lo_x, hi_x), rng.uniform(lo_y, hi_y)};
      bool inside = true;
      for (std::size_t i = 0; i < poly.size() && inside; ++i) {
        const Point2 a = poly.vertex(i);
        inside = cross(poly.vertex(i + 1) - a, p - a) >= 0.0;
      }
      if (!inside) continue;
      const Point2 q = p - mid;
      ++hits;
      sx += q.x;
      sy += q.y;
      sxx += q.x * q.x;
      syy += q.y * q.y;
    }
    if (hits < 2) throw DomainError("oracle_centroid_mc: too few accepted samples");
    const double m = static_cast<double>(hits);
    const Point2 mean{sx / m, sy / m};
    out.estimate.area = mid + mean;
    out.area_stderr = {std::sqrt(std::max(0.0, sxx / m - mean.x * mean.x) / m),
                       std::sqrt(std::max(0.0, syy / m - mean.y * mean.y) / m)};
    out.accepted = hits;
  }
  {
    std::vector<double> cumulative(poly.size());
    double total = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      total += distance(poly.vertex(i), poly.vertex(i + 1));
      cumulative[i] = total;
    }
    double sx = 0, sy = 0, sxx = 0, syy = 0;
    for (std::size_t k = 0; k < n_samples; ++k) {
      const double s = rng.uniform() * total;
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), s);
      const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()),
                                                  poly.size() - 1);
      const Point2 a = poly.vertex(i);
      const Point2 b = poly.vertex(i + 1);
      const Point2 q = a + rng.uniform() * (b - a) - mid;
      sx += q.x;
      sy += q.y;
      sxx += q.x * q.x;
      syy += q.y * q.y;
    }
    const double m = static_cast<double>(n_samples);
    const Point2 mean{sx / m, sy / m};
    out.estimate.boundary = mid + mean;
    out.boundary_stderr = {std::sqrt(std::max(0.0, sxx / m - mean.x * mean.x) / m),
                           std::sqrt(std::max(0.0, syy / m - mean.y * mean.y) / m)};
  }
  return out;
}

}  // namespace cgap
