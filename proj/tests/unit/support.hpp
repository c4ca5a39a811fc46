#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "cgap/geometry.hpp"

namespace cgap::testing {

inline ConvexPolygon poly(std::vector<Point2> pts) { return make_polygon(pts); }

inline ConvexPolygon unit_square() { return poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline ConvexPolygon rectangle(double w, double h) { return poly({{0, 0}, {w, 0}, {w, h}, {0, h}}); }

inline ConvexPolygon right_triangle() { return poly({{0, 0}, {1, 0}, {0, 1}}); }

inline ConvexPolygon regular(std::size_t n, double r = 1.0, double phase = 0.0) {
  std::vector<Point2> v;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = phase + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    v.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return make_polygon(v);
}

// Boundary centroid by sampling each edge densely: an oracle that shares no
// code with the closed-form routine.
inline Point2 polyline_boundary_centroid(const ConvexPolygon& p, int per_edge = 100000) {
  double sx = 0, sy = 0, total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2 a = p.vertex(i), b = p.vertex(i + 1);
    const double len = distance(a, b) / per_edge;
    for (int k = 0; k < per_edge; ++k) {
      const double s = (k + 0.5) / per_edge;
      sx += len * (a.x + s * (b.x - a.x));
      sy += len * (a.y + s * (b.y - a.y));
      total += len;
    }
  }
  return {sx / total, sy / total};
}

}  // namespace cgap::testing
