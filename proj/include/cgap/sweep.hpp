#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cgap/check.hpp"
#include "cgap/geometry.hpp"

namespace cgap {

/// Everything known about the sub-body poly ∩ {x <= t}.
struct Slice {
  double t = 0.0;
  double ell = 0.0;           // chord length at x = t
  double area = 0.0;          // A(t)
  double moment_x = 0.0;      // integral of x over the sub-body
  double chain_length = 0.0;  // boundary length without the chord, P~(t)
  double chain_moment = 0.0;  // integral of x ds along that boundary
  double c_a = 0.0;           // x of the area centroid
  double c_p = 0.0;           // x of the boundary centroid, chord included

  double perimeter() const { return chain_length + ell; }
};

/// Prefix-integral representation of a polygon's upper and lower chains as
/// functions of x. Any slice is evaluated in O(log n) without clipping.
class SliceSweep {
 public:
  explicit SliceSweep(const ConvexPolygon& poly);

  double min_x() const { return min_x_; }
  double max_x() const { return max_x_; }
  double scale() const { return scale_; }

  /// t is clamped into [min_x, max_x].
  Slice at(double t) const;
  double chord(double t) const;
  double upper(double t) const;
  double lower(double t) const;

  /// Sorted, de-duplicated vertex abscissae of both chains.
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  /// (left, right) derivative of the upper/lower chain at t. A side that
  /// does not exist (t at an end of the projection) is reported as NaN.
  std::pair<double, double> upper_slopes(double t) const;
  std::pair<double, double> lower_slopes(double t) const;

 private:
  struct Chain {
    std::vector<double> xs, ys;
    std::vector<double> area, moment, length, length_moment;  // prefix integrals at xs

    void build();
    std::size_t segment(double t) const;
    double value(double t) const;
    std::pair<double, double> slopes(double t, double tol) const;
  };

  Chain upper_;
  Chain lower_;
  std::vector<double> breakpoints_;
  double min_x_ = 0.0;
  double max_x_ = 0.0;
  double y_ref_ = 0.0;
  double left_edge_ = 0.0;
  double scale_ = 0.0;
};

/// Sampled slicing functions. a and p are normalized by A and P at
/// `reference_t` (x = 0 in a normalized frame); they are NaN when the
/// reference sub-body has no area.
struct Profile {
  std::vector<double> ts;
  std::vector<double> ell;
  std::vector<double> area;
  std::vector<double> perimeter;  // P(t), chord included
  std::vector<double> ptilde;     // P(t) - ell(t)
  std::vector<double> a;
  std::vector<double> p;
  std::vector<double> c_a;
  std::vector<double> c_p;
  double reference_t = 0.0;
  double scale = 1.0;

  std::size_t size() const { return ts.size(); }
  /// Index of the sample at exactly `t`; throws OutOfRange if absent.
  std::size_t index_of(double t) const;
};

struct ProfileOptions {
  std::size_t grid_points = 2048;  // uniform over [min_x, max_x]
  double reference_t = 0.0;
  std::vector<double> extra_ts;  // clamped to the projection and merged
};

Profile profile(const ConvexPolygon& poly, const ProfileOptions& options);
inline Profile profile(const ConvexPolygon& poly, std::size_t grid_points,
                       double reference_t = 0.0) {
  ProfileOptions o;
  o.grid_points = grid_points;
  o.reference_t = reference_t;
  return profile(poly, o);
}

/// n points evenly spaced on [lo, hi], both ends included.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

/// P(t) c_p(t) = t P(t) - integral_{min_x}^t P(s) ds + A(t) at every sample,
/// with the integral by cumulative trapezoid.
CheckReport verify_cp_identity(const Profile& prof, double tol = 1e-6);

/// Midpoint concavity of P(t) over consecutive sample triples.
CheckReport concavity_check(const Profile& prof, double rel_tol = 1e-9);

/// integral_{min_x}^{ref} (a - p) dt = c_p(ref) - c_a(ref), trapezoid rule.
CheckReport verify_gap_integral(const Profile& prof, double tol = 1e-6);

}  // namespace cgap
