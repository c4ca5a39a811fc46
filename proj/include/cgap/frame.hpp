#pragma once

#include <optional>
#include <utility>

#include "cgap/check.hpp"
#include "cgap/geometry.hpp"

namespace cgap {

/// A polygon placed so that the chosen direction is +x, the longest vertical
/// chord sits on x = 0, and the projection onto the x-axis is [-1, omega];
/// together with the scalar bundle the centroid-gap bound is phrased in.
struct NormalizedFrame {
  explicit NormalizedFrame(ConvexPolygon p) : polygon(std::move(p)) {}

  ConvexPolygon polygon;
  double theta_angle = 0.0;  // direction in the original coordinates
  bool reflected = false;    // x -> -x was applied after rotation
  double scale_factor = 1.0; // original length * scale_factor = frame length

  double omega = 0.0;
  double ell = 0.0;         // chord at x = 0, the longest one
  double slope = 0.0;       // common slope of the two support lines at the chord ends
  double alpha = 1.0;       // sqrt(1 + slope^2)
  double half_strip = 0.0;  // ell / (2 alpha)
  double area0 = 0.0;       // A(0)
  double perimeter0 = 0.0;  // P(0), chord included
  double B = 0.0;           // A(0) / ell
  double lambda5 = 0.0;     // ell / P~(0)
  double lambda6 = 0.0;     // 2 ell / P(0)
  double s = 0.0;           // 2 alpha / P(0)
  std::optional<double> u;  // 2 Area(x >= 0 part) / (ell omega); empty when omega == 0
  double c = 0.0;           // -c_a(0)
  double b = 0.0;           // s B
  double rho = 0.0;         // s omega

  bool has_right_part() const { return omega > 0.0; }
};

/// Rotates theta onto +x, cuts at the midpoint of the maximal-chord interval,
/// reflects once if that cut is the left end of the projection, then
/// translates and scales so the projection becomes [-1, omega].
NormalizedFrame normalize(const ConvexPolygon& poly, const UnitVector& theta);

struct SupportParallelogram {
  double slope = 0.0;
  double alpha = 1.0;
  double slope_lo = 0.0;  // admissible interval the slope was taken from
  double slope_hi = 0.0;
};

/// Common slope of parallel support lines through both ends of the x = 0
/// chord: midpoint of the intersection of the two admissible-slope intervals.
/// Throws InternalInvariantViolation if the intervals are disjoint.
SupportParallelogram support_parallelogram(const ConvexPolygon& frame_polygon);
inline SupportParallelogram support_parallelogram(const NormalizedFrame& frame) {
  return support_parallelogram(frame.polygon);
}

/// Every scalar invariant of the frame, folded into its worst margin.
CheckReport frame_scalars_valid(const NormalizedFrame& frame, double rel_tol = 1e-9);

}  // namespace cgap
