#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cgap/errors.hpp"
#include "cgap/extremal.hpp"
#include "cgap/geometry.hpp"
#include "support.hpp"

namespace cgap {
namespace {

using testing::poly;
using testing::unit_square;

TEST(MakePolygon, SquareStaysCounterclockwise) {
  const ConvexPolygon sq = unit_square();
  ASSERT_EQ(sq.size(), 4u);
  const std::vector<Point2> want{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(sq[i], want[i]);
}

TEST(MakePolygon, ClockwiseInputIsReordered) {
  const ConvexPolygon sq = poly({{0, 1}, {1, 1}, {1, 0}, {0, 0}});
  EXPECT_EQ(sq, unit_square());
}

TEST(MakePolygon, CollinearPointDropped) {
  const ConvexPolygon t = poly({{0, 0}, {2, 0}, {1, 0.0}, {1, 1}});
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], (Point2{0, 0}));
  EXPECT_EQ(t[1], (Point2{2, 0}));
  EXPECT_EQ(t[2], (Point2{1, 1}));
}

TEST(MakePolygon, InteriorAndDuplicatePointsDropped) {
  const ConvexPolygon sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {1, 1}, {0, 0}});
  EXPECT_EQ(sq, unit_square());
}

TEST(MakePolygon, DegenerateInputs) {
  EXPECT_THROW(poly({{0, 0}, {1, 0}}), DegenerateInput);
  EXPECT_THROW(poly({{0, 0}, {1, 1}, {2, 2}, {3, 3}}), DegenerateInput);
  EXPECT_THROW(poly({{1, 1}, {1, 1}, {1, 1}}), DegenerateInput);
  EXPECT_THROW(poly({{0, 0}, {1, 0}, {0.5, 1e-14}}), DegenerateInput);
  EXPECT_THROW(poly({{0, 0}, {1, 0}, {0, NAN}}), DegenerateInput);
}

TEST(Measures, SquareAndTriangle) {
  const Measures m = measures(unit_square());
  EXPECT_DOUBLE_EQ(m.area, 1.0);
  EXPECT_DOUBLE_EQ(m.perimeter, 4.0);
  const Measures t = measures(testing::right_triangle());
  EXPECT_DOUBLE_EQ(t.area, 0.5);
  EXPECT_NEAR(t.perimeter, 2.0 + std::sqrt(2.0), 1e-15);
}

TEST(Centroids, Square) {
  const CentroidPair c = centroids(unit_square());
  EXPECT_NEAR(c.area.x, 0.5, 1e-15);
  EXPECT_NEAR(c.area.y, 0.5, 1e-15);
  EXPECT_NEAR(c.boundary.x, 0.5, 1e-15);
  EXPECT_NEAR(c.boundary.y, 0.5, 1e-15);
}

TEST(Centroids, RightTriangleBoundary) {
  const ConvexPolygon t = testing::right_triangle();
  const Point2 b = boundary_centroid(t);
  const double want = std::sqrt(2.0) / 4.0;
  EXPECT_NEAR(b.x, want, 1e-12);
  EXPECT_NEAR(b.y, want, 1e-12);
  const Point2 dense = testing::polyline_boundary_centroid(t);
  EXPECT_NEAR(dense.x, want, 1e-9);
  EXPECT_NEAR(dense.y, want, 1e-9);
  const Point2 a = area_centroid(t);
  EXPECT_NEAR(a.x, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(a.y, 1.0 / 3.0, 1e-15);
}

TEST(Centroids, MatchDensePolylineOnRandomPolygons) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const ConvexPolygon p = random_convex_polygon(12, s, 3.0);
    const Point2 b = boundary_centroid(p);
    const Point2 dense = testing::polyline_boundary_centroid(p, 20000);
    EXPECT_NEAR(b.x, dense.x, 1e-9 * p.scale());
    EXPECT_NEAR(b.y, dense.y, 1e-9 * p.scale());
  }
}

TEST(Centroids, LieInsidePolygon) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const ConvexPolygon p = random_convex_polygon(3 + s % 20, s, s % 2 ? 100.0 : 1.0);
    const CentroidPair c = centroids(p);
    EXPECT_TRUE(contains(p, c.area));
    EXPECT_TRUE(contains(p, c.boundary));
  }
}

TEST(Width, SquareAxesAndDiagonal) {
  const ConvexPolygon sq = unit_square();
  EXPECT_NEAR(width(sq, UnitVector(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(width(sq, UnitVector(0, 1)), 1.0, 1e-15);
  EXPECT_NEAR(width(sq, UnitVector(1, 1)), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(support_value(sq, UnitVector(-1, 0)), 0.0, 1e-15);
}

TEST(Diameter, CalipersMatchBruteForce) {
  EXPECT_NEAR(diameter(unit_square()), std::sqrt(2.0), 1e-15);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const ConvexPolygon p = random_convex_polygon(3 + s % 28, s, (s % 3 == 0) ? 1.0 : 10.0);
    EXPECT_DOUBLE_EQ(diameter(p), diameter_bruteforce(p)) << "seed " << s;
  }
}

TEST(Diameter, RegularPolygons) {
  EXPECT_NEAR(diameter(testing::regular(6)), 2.0, 1e-12);
  EXPECT_NEAR(diameter(testing::regular(5)), 2.0 * std::sin(2.0 * std::numbers::pi / 5.0), 1e-12);
}

TEST(GapProjection, ThinTriangleValue) {
  const ConvexPolygon t = poly({{0, 0}, {1, 0.1}, {1, -0.1}});
  const UnitVector e(1, 0);
  // The boundary centroid lies towards the apex, so the projection is negative.
  EXPECT_NEAR(gap_projection(t, e), -0.12141728856106221, 1e-12);
  EXPECT_NEAR(gap_ratio(t, e), 0.12141728856106221, 1e-12);
  EXPECT_NEAR(gap_ratio(t, -e), 0.12141728856106221, 1e-12);
  EXPECT_NEAR(gap_ratio(t, UnitVector(0, 1)), 0.0, 1e-15);
}

TEST(GapRatio, CentrallySymmetricIsZero) {
  for (double a : {0.0, 0.3, 1.0, 2.5}) {
    EXPECT_NEAR(gap_ratio(testing::regular(6), UnitVector::from_angle(a)), 0.0, 1e-14);
    EXPECT_NEAR(gap_ratio(testing::rectangle(3, 1), UnitVector::from_angle(a)), 0.0, 1e-14);
  }
}

TEST(GapRatio, SimilarityInvariant) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const ConvexPolygon p = random_convex_polygon(3 + s % 15, s, 10.0);
    const double a = 0.1 + 0.05 * static_cast<double>(s);
    const UnitVector d = UnitVector::from_angle(a);
    const double r = gap_ratio(p, d);
    EXPECT_NEAR(gap_ratio(translated(p, {3.5, -7.25}), d), r, 1e-12);
    EXPECT_NEAR(gap_ratio(scaled(p, 17.0), d), r, 1e-12);
    EXPECT_NEAR(gap_ratio(rotated(p, 0.7), UnitVector::from_angle(a + 0.7)), r, 1e-12);
    EXPECT_NEAR(gap_ratio(reflected_x(p), UnitVector(-d.x(), d.y())), r, 1e-12);
  }
}

TEST(Clip, HalvesOfSquare) {
  const ConvexPolygon sq = unit_square();
  const auto lower = clip_below(sq, 0.5);
  ASSERT_TRUE(lower);
  EXPECT_NEAR(measures(*lower).area, 0.5, 1e-15);
  const auto upper = clip_above(sq, 0.25);
  ASSERT_TRUE(upper);
  EXPECT_NEAR(measures(*upper).area, 0.75, 1e-15);
  EXPECT_FALSE(clip_below(sq, -0.1));
  EXPECT_FALSE(clip_below(sq, 0.0));
  EXPECT_EQ(*clip_below(sq, 2.0), sq);
  const auto diag = clip_halfplane(sq, {1, 1}, 1.0);
  ASSERT_TRUE(diag);
  EXPECT_NEAR(measures(*diag).area, 0.5, 1e-15);
}

TEST(ChordLength, InsideAndOutside) {
  const ConvexPolygon t = testing::right_triangle();
  EXPECT_NEAR(chord_length(t, 0.25), 0.75, 1e-15);
  EXPECT_NEAR(chord_length(t, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(chord_length(t, 1.0), 0.0, 1e-15);
  EXPECT_THROW(chord_length(t, 1.1), OutOfRange);
  EXPECT_THROW(chord_length(t, -0.1), OutOfRange);
}

TEST(UnitVectorTest, NormalizesAndRejectsZero) {
  const UnitVector u(3, 4);
  EXPECT_NEAR(u.x(), 0.6, 1e-15);
  EXPECT_NEAR(u.y(), 0.8, 1e-15);
  EXPECT_THROW(UnitVector(0, 0), DomainError);
}

TEST(MonteCarloOracle, AgreesOnSquareAndTriangle) {
  for (const ConvexPolygon& p : {unit_square(), testing::right_triangle()}) {
    const MonteCarloCentroids mc = oracle_centroid_mc(p, 200000, 7);
    const CentroidPair c = centroids(p);
    EXPECT_LE(std::abs(mc.estimate.area.x - c.area.x), 4 * mc.area_stderr.x);
    EXPECT_LE(std::abs(mc.estimate.area.y - c.area.y), 4 * mc.area_stderr.y);
    EXPECT_LE(std::abs(mc.estimate.boundary.x - c.boundary.x), 4 * mc.boundary_stderr.x);
    EXPECT_LE(std::abs(mc.estimate.boundary.y - c.boundary.y), 4 * mc.boundary_stderr.y);
  }
}

TEST(MonteCarloOracle, RejectsTinySampleCounts) {
  EXPECT_THROW(oracle_centroid_mc(unit_square(), 100, 1), DomainError);
}

TEST(MonteCarloOracle, Deterministic) {
  const auto a = oracle_centroid_mc(unit_square(), 20000, 3);
  const auto b = oracle_centroid_mc(unit_square(), 20000, 3);
  EXPECT_EQ(a.estimate.area, b.estimate.area);
  EXPECT_EQ(a.estimate.boundary, b.estimate.boundary);
}

}  // namespace
}  // namespace cgap
