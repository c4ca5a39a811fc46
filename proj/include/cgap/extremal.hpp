#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cgap/geometry.hpp"

namespace cgap {

/// Thin isosceles triangle with apex at the origin and base on x = 1:
/// vertices (0,0), (1,eps), (1,-eps). Its axis e = (1,0) is the direction
/// along which the centroid gap approaches the 1/6 bound.
struct TriangleFamily {
  double eps;
  ConvexPolygon polygon;
  UnitVector axis{1.0, 0.0};
};

/// Throws DomainError unless 0 < eps <= 1.
TriangleFamily triangle(double eps);

/// 1/6 + eps^2/2 - (eps/2) sqrt(1 + eps^2): the signed distance from the area
/// centroid to the boundary centroid of triangle(eps), measured towards the
/// base. Throws DomainError unless eps > 0.
double closed_form_gap(double eps);

/// closed_form_gap(eps) |cos| / (|cos| + eps sqrt(1 - cos^2)), the gap ratio
/// of triangle(eps) in a direction making angle arccos(cos) with the axis.
/// Throws DomainError if eps <= 0, |cos| > 1 or |cos| < 0.1.
double closed_form_ratio(double eps, double cos_e_theta);

struct ConvergenceRow {
  double eps = 0.0;
  double ratio = 0.0;              // gap ratio along the axis, computed geometrically
  double closed_form_ratio = 0.0;  // the same from the closed form
  double gap = 0.0;                // |c(boundary) - c(area)|
  double diameter = 0.0;
  double perimeter = 0.0;
  double gap_over_diameter = 0.0;
  double gap_over_perimeter = 0.0;
};

std::vector<ConvergenceRow> convergence_table(std::span<const double> eps_list);

/// Convex hull of n points uniform in the unit disk, stretched by
/// (anisotropy, 1). Deterministic in (n, seed, anisotropy); the rare
/// degenerate draw is replaced by a deterministic redraw.
ConvexPolygon random_convex_polygon(std::size_t n, std::uint64_t seed, double anisotropy = 1.0);

/// Best gap ratio over all directions: 64 evenly spaced directions on
/// [0, pi), then golden-section refinement around the best one to 1e-6 rad.
struct DirectionalMax {
  double ratio = 0.0;
  double theta = 0.0;
  std::size_t evaluations = 0;
};
DirectionalMax max_ratio_over_directions(const ConvexPolygon& poly);

struct SearchOptions {
  std::size_t restarts = 8;
  std::size_t jobs = 1;  // worker threads; results do not depend on it
};

struct SearchState {
  explicit SearchState(ConvexPolygon p) : best_polygon(std::move(p)) {}

  ConvexPolygon best_polygon;
  double best_ratio = 0.0;
  double best_theta = 0.0;
  std::size_t evaluations = 0;  // polygon evaluations spent
  std::uint64_t seed = 0;
  std::size_t n_vertices = 0;
  std::size_t restarts = 0;
  bool bound_violated = false;  // a ratio above 1/6 + 1e-9 was seen
};

/// Random-restart hill climbing on the gap ratio over polygons with at most
/// n vertices. The first restarts are seeded with triangle(eps) for
/// eps in {0.1, 0.01, 0.001}; the others start from random polygons. Each step
/// moves one point by a Gaussian step (sigma starts at 0.1 x the bounding box
/// diagonal and halves after 20 consecutive failures), re-hulls and keeps the
/// move if the ratio improves. Throws DomainError if n < 3 or budget == 0.
SearchState maximize_ratio(std::size_t n, std::size_t budget, std::uint64_t seed,
                           const SearchOptions& options = {});

}  // namespace cgap
