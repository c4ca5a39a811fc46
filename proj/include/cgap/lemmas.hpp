#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cgap/check.hpp"
#include "cgap/frame.hpp"
#include "cgap/sweep.hpp"

namespace cgap {

/// Tolerances and grid sizes for the geometric lemma checks. rel_tol scales
/// with the natural magnitude of each inequality in the normalized frame.
struct LemmaOptions {
  double rel_tol = 1e-9;
  std::size_t lemma_grid = 512;        // uniform points on [-1, 0]
  std::size_t quadrature_grid = 2048;  // uniform points on [-1, 0] and [0, omega]
  double quadrature_tol = 1e-6;
};

/// Profile of a normalized frame sampled for the lemma checks: vertex
/// abscissae, the lemma grid and the quadrature grids, referenced at x = 0.
Profile frame_profile(const NormalizedFrame& frame, const LemmaOptions& options = {});

/// Abscissae in (-1, 0] at which the pointwise lemmas are evaluated: all
/// profile samples there, minus the guard bands |t + 1| < 1e-6 and |t| < 1e-12
/// (t = 0 itself is kept where the statement includes it).
std::vector<std::size_t> lemma_indices(const Profile& prof, bool include_zero);

// c_a(0) in [-1/2, -B/2].
CheckReport lemma1_check(const NormalizedFrame& frame, double rel_tol = 1e-9);
// A(t)/A(0) <= P~(t)/P~(0) on (-1, 0].
CheckReport lemma2_check(const NormalizedFrame& frame, const Profile& prof, double rel_tol = 1e-9);
// A(t)/A(0) <= (1+t)((1+t)ell - (1-t)ell') / ((1+2t)ell - ell'), t in (-1, 0).
CheckReport lemma3_check(const NormalizedFrame& frame, const Profile& prof, double rel_tol = 1e-9);
// x-centroid of the part with x >= 0 is at least omega (u^2 - u + 1) / (3u).
// Throws SkippedDegenerate when omega == 0.
CheckReport lemma4_check(const NormalizedFrame& frame, double rel_tol = 1e-9);
// A(0) <= (P(0) - ell) ell / (2 alpha).
CheckReport lemma5_check(const NormalizedFrame& frame, double rel_tol = 1e-9);

/// c_p(0) - c_a(0) <= 1/6. The observed value is kept in lhs.
CheckReport star_star_check(const NormalizedFrame& frame, double rel_tol = 1e-9);
/// c_p(omega) - c_a(omega) <= (1 + omega)/6, the main bound in this frame.
CheckReport star_star_star_check(const NormalizedFrame& frame, double rel_tol = 1e-9);

/// The three bounds on a(t) - p(t) and their minimum, plus mu in [0, 1].
struct PointwiseReport {
  CheckReport bound1;    // lambda mu / (1 + lambda)
  CheckReport bound2;    // fractional-linear trapezoid bound
  CheckReport bound3;    // 1 + t - mu / (1 + lambda)
  CheckReport combined;  // min of the three, in (lambda, mu) variables
  CheckReport mu_range;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  // bound2 denominators within 1e-9 * scale of zero

  std::vector<CheckReport> all() const { return {bound1, bound2, bound3, combined, mu_range}; }
};
PointwiseReport pointwise_bounds_check(const NormalizedFrame& frame, const Profile& prof,
                                       double rel_tol = 1e-9);

/// The geometric steps that turn the bound at x = 0 into the bound at x = omega, for frames with omega > 0:
/// perimeter growth bounds, the upper bound on c_p(omega), the lower bound on
/// c_a(omega), their combination, and the reduced scalar inequalities at the
/// frame's own (u, s, lambda, B, c). Throws SkippedDegenerate when omega == 0.
std::vector<CheckReport> part2_chain_check(const NormalizedFrame& frame, const Profile& prof,
                                           double rel_tol = 1e-9);

/// c_a and c_p at the right end of the profile agree with the whole-polygon centroids.
std::vector<CheckReport> endpoint_consistency_check(const NormalizedFrame& frame,
                                                    const Profile& prof, double rel_tol = 1e-9);

struct LemmaSuiteReport {
  explicit LemmaSuiteReport(NormalizedFrame f) : frame(std::move(f)) {}

  NormalizedFrame frame;
  std::vector<CheckReport> checks;
  std::vector<std::string> skipped;  // names of checks that did not apply
  std::size_t grid_size = 0;         // lemma grid points actually evaluated
  std::size_t pointwise_skipped = 0;
  std::size_t pointwise_evaluated = 0;

  bool all_pass() const;
  /// Smallest margin over all checks.
  const CheckReport* worst() const;
};

/// normalize(), then every geometric check above on one (polygon, direction).
LemmaSuiteReport run_lemma_suite(const ConvexPolygon& poly, const UnitVector& theta,
                                 const LemmaOptions& options = {});

}  // namespace cgap
