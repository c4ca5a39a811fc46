#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cgap/errors.hpp"
#include "cgap/extremal.hpp"
#include "cgap/lemmas.hpp"
#include "support.hpp"

namespace cgap {
namespace {

void expect_all_pass(const LemmaSuiteReport& r, const std::string& where) {
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.pass) << where << ": " << c.name << " margin " << c.margin << " " << c.context;
  }
}

TEST(LemmaSuite, SquareAndTriangles) {
  for (double a : {0.0, 0.3, std::numbers::pi / 4, 2.0}) {
    expect_all_pass(run_lemma_suite(testing::unit_square(), UnitVector::from_angle(a)), "square");
    expect_all_pass(run_lemma_suite(testing::right_triangle(), UnitVector::from_angle(a)), "triangle");
    expect_all_pass(run_lemma_suite(triangle(0.001).polygon, UnitVector::from_angle(a)), "thin");
  }
}

TEST(LemmaSuite, RandomPolygons) {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const ConvexPolygon p = random_convex_polygon(3 + seed % 28, seed, seed % 3 == 0 ? 100.0 : 1.0);
    for (int k = 0; k < 6; ++k) {
      const auto r = run_lemma_suite(p, UnitVector::from_angle(1.1 * k));
      expect_all_pass(r, "seed " + std::to_string(seed));
      EXPECT_LT(r.pointwise_skipped, r.pointwise_evaluated / 100 + 1);
    }
  }
}

TEST(LemmaSuite, SkipsRightPartChecksWhenOmegaIsZero) {
  const TriangleFamily t = triangle(0.1);
  const auto r = run_lemma_suite(t.polygon, t.axis);
  EXPECT_EQ(r.frame.omega, 0.0);
  EXPECT_NE(std::find(r.skipped.begin(), r.skipped.end(), "lemma4"), r.skipped.end());
  EXPECT_NE(std::find(r.skipped.begin(), r.skipped.end(), "part2_chain"), r.skipped.end());
  EXPECT_THROW(lemma4_check(r.frame), SkippedDegenerate);
  EXPECT_TRUE(r.all_pass());
}

TEST(Lemma1, RectangleTightAtBothEnds) {
  const NormalizedFrame f = normalize(testing::rectangle(3.0, 1.0), UnitVector(1, 0));
  EXPECT_DOUBLE_EQ(f.B, 1.0);
  EXPECT_DOUBLE_EQ(f.c, 0.5);
  const CheckReport r = lemma1_check(f);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.margin, 0.0, 1e-12);
}

TEST(Lemma3, RectangleTightAtMinusHalf) {
  const NormalizedFrame f = normalize(testing::rectangle(2.0, 1.0), UnitVector(1, 0));
  ProfileOptions o;
  o.grid_points = 257;
  o.extra_ts = {-0.5, 0.0};
  const Profile prof = profile(f.polygon, o);
  const std::size_t i = prof.index_of(-0.5);
  const double t = prof.ts[i];
  const double num = (1 + t) * f.ell - (1 - t) * prof.ell[i];
  const double den = (1 + 2 * t) * f.ell - prof.ell[i];
  EXPECT_NEAR(prof.a[i], (1 + t) * num / den, 1e-9);
  const CheckReport r = lemma3_check(f, prof);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.margin, 0.0, 1e-9);
}

TEST(Lemma3, StrictForTriangle) {
  const NormalizedFrame f = normalize(testing::poly({{0, 0}, {1, -1}, {1, 1}}), UnitVector(1, 0));
  const Profile prof = frame_profile(f);
  EXPECT_TRUE(lemma3_check(f, prof).pass);
  EXPECT_TRUE(lemma2_check(f, prof).pass);
}

TEST(Lemma4, SquareRightHalf) {
  // Right part [0,1] x [-1,1]: centroid 1/2, u = 2, bound omega (4-2+1)/6 = 1/2.
  const NormalizedFrame f = normalize(testing::unit_square(), UnitVector(1, 0));
  const CheckReport r = lemma4_check(f);
  EXPECT_NEAR(r.lhs, 0.5, 1e-15);
  EXPECT_NEAR(r.rhs, 0.5, 1e-15);
  EXPECT_TRUE(r.pass);
}

TEST(Lemma5, SquareIsTight) {
  // A(0) = 2, (P(0) - ell) ell / (2 alpha) = 4 * 2 / 2.
  const NormalizedFrame f = normalize(testing::unit_square(), UnitVector(1, 0));
  const CheckReport r = lemma5_check(f);
  EXPECT_NEAR(r.lhs, 2.0, 1e-15);
  EXPECT_NEAR(r.rhs, 4.0, 1e-15);
}

TEST(StarStar, ThinTriangleApproachesOneSixth) {
  const TriangleFamily t = triangle(0.001);
  const NormalizedFrame f = normalize(t.polygon, t.axis);
  const CheckReport r = star_star_check(f);
  EXPECT_TRUE(r.pass);
  // In this frame the apex is at x = -1, so the boundary centroid sits to the left.
  EXPECT_NEAR(std::abs(r.lhs), 0.1661672, 1e-7);
  const CheckReport r3 = star_star_star_check(f);
  EXPECT_NEAR(std::abs(r3.lhs) / (1 + f.omega), 0.1661672, 1e-7);
}

TEST(StarStarStar, CorpusBoundHolds) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ConvexPolygon p = random_convex_polygon(3 + seed % 28, seed, 10.0);
    for (int k = 0; k < 4; ++k) {
      const NormalizedFrame f = normalize(p, UnitVector::from_angle(0.8 * k + 0.1));
      EXPECT_TRUE(star_star_star_check(f).pass);
      EXPECT_TRUE(star_star_check(f).pass);
    }
  }
}

TEST(Pointwise, BoundsOnSquare) {
  const NormalizedFrame f = normalize(testing::unit_square(), UnitVector(1, 0));
  const PointwiseReport r = pointwise_bounds_check(f, frame_profile(f));
  for (const auto& c : r.all()) EXPECT_TRUE(c.pass) << c.name << " " << c.context;
  EXPECT_GT(r.evaluated, 500u);
}

TEST(LemmaIndices, GuardBands) {
  const NormalizedFrame f = normalize(testing::unit_square(), UnitVector(1, 0));
  const Profile prof = frame_profile(f);
  const auto with_zero = lemma_indices(prof, true);
  const auto without = lemma_indices(prof, false);
  EXPECT_EQ(with_zero.size(), without.size() + 1);
  for (std::size_t i : with_zero) {
    EXPECT_GT(prof.ts[i], -1.0 + 1e-6);
    EXPECT_LE(prof.ts[i], 0.0);
  }
}

TEST(Part2, ChainHoldsOnWideRightPart) {
  const ConvexPolygon p = testing::poly({{-1, 0}, {0, -1}, {3, -0.5}, {3.5, 0}, {3, 0.4}, {0, 1}});
  const NormalizedFrame f = normalize(p, UnitVector(1, 0));
  ASSERT_GT(f.omega, 1.0);
  for (const auto& c : part2_chain_check(f, frame_profile(f))) {
    EXPECT_TRUE(c.pass) << c.name << " " << c.margin << " " << c.context;
  }
}

}  // namespace
}  // namespace cgap
