#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cgap {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double k, Point2 a) { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }

/// Direction in the plane. Construction normalizes; the stored vector has
/// unit length to within a few ulps.
class UnitVector {
 public:
  UnitVector(double x, double y);
  static UnitVector from_angle(double radians);

  double x() const { return x_; }
  double y() const { return y_; }
  Point2 as_point() const { return {x_, y_}; }
  double angle() const { return std::atan2(y_, x_); }
  UnitVector operator-() const { return UnitVector(-x_, -y_, Unchecked{}); }

 private:
  struct Unchecked {};
  UnitVector(double x, double y, Unchecked) : x_(x), y_(y) {}
  double x_;
  double y_;
};

/// A strictly convex polygon with counterclockwise vertices. Only
/// make_polygon() produces one, so every instance satisfies the invariants
/// (>= 3 vertices, strictly positive turns, non-negligible area).
class ConvexPolygon {
 public:
  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  double min_x() const;
  double max_x() const;
  /// Bounding-box diagonal, the length scale all tolerances are relative to.
  double scale() const { return scale_; }

  friend ConvexPolygon make_polygon(std::span<const Point2> points);
  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  explicit ConvexPolygon(std::vector<Point2> v);
  std::vector<Point2> vertices_;
  double scale_ = 0.0;
};

/// Convex hull of the points, counterclockwise, with duplicate and collinear
/// vertices removed. Throws DegenerateInput if the hull has no interior.
ConvexPolygon make_polygon(std::span<const Point2> points);
inline ConvexPolygon make_polygon(const std::vector<Point2>& points) {
  return make_polygon(std::span<const Point2>(points));
}

struct Measures {
  double area = 0.0;
  double perimeter = 0.0;
};

struct CentroidPair {
  Point2 area;
  Point2 boundary;
};

Measures measures(const ConvexPolygon& poly);
Point2 area_centroid(const ConvexPolygon& poly);
Point2 boundary_centroid(const ConvexPolygon& poly);
CentroidPair centroids(const ConvexPolygon& poly);

double support_value(const ConvexPolygon& poly, const UnitVector& d);
double width(const ConvexPolygon& poly, const UnitVector& theta);

/// Rotating calipers over antipodal vertex pairs.
double diameter(const ConvexPolygon& poly);
/// Quadratic scan over all vertex pairs; test cross-check for diameter().
double diameter_bruteforce(const ConvexPolygon& poly);

/// Signed projection <c(boundary) - c(area), theta>.
double gap_projection(const ConvexPolygon& poly, const UnitVector& theta);
/// |gap_projection| / width. Never exceeds 1/6 for a convex body.
double gap_ratio(const ConvexPolygon& poly, const UnitVector& theta);

/// Intersection with the half-plane {dot(normal, p) <= offset}. Returns
/// nullopt when the intersection has no interior.
std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, Point2 normal,
                                            double offset);
/// poly ∩ {x <= t}.
std::optional<ConvexPolygon> clip_below(const ConvexPolygon& poly, double t);
/// poly ∩ {x >= t}.
std::optional<ConvexPolygon> clip_above(const ConvexPolygon& poly, double t);

/// Length of the vertical cross-section at abscissa t. Throws OutOfRange if t
/// lies outside [min_x, max_x] by more than 1e-12 * scale.
double chord_length(const ConvexPolygon& poly, double t);

/// Point-in-polygon with a boundary tolerance of tol * scale.
bool contains(const ConvexPolygon& poly, Point2 p, double tol = 1e-9);

/// Similarity maps. Reflection reverses the orientation, so the result is
/// rebuilt through make_polygon.
ConvexPolygon rotated(const ConvexPolygon& poly, double radians);
ConvexPolygon translated(const ConvexPolygon& poly, Point2 offset);
ConvexPolygon scaled(const ConvexPolygon& poly, double factor);
ConvexPolygon reflected_x(const ConvexPolygon& poly);

struct MonteCarloCentroids {
  CentroidPair estimate;
  Point2 area_stderr;
  Point2 boundary_stderr;
  std::size_t accepted = 0;
};

/// Sampling estimate of both centroids: rejection sampling over the bounding
/// box for the area centroid, arclength-uniform boundary points for the
/// boundary centroid. Independent of the closed-form routines above.
MonteCarloCentroids oracle_centroid_mc(const ConvexPolygon& poly, std::size_t n_samples,
                                       std::uint64_t seed);

}  // namespace cgap
