// Invariants over seeded random corpora.
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cgap/corpus.hpp"
#include "cgap/frame.hpp"
#include "cgap/geometry.hpp"
#include "cgap/lemmas.hpp"
#include "cgap/sweep.hpp"

namespace cgap {
namespace {

constexpr double kSixth = 1.0 / 6.0;

class Corpus : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(Corpus, GapRatioBoundedAndSymmetric) {
  for (const CorpusItem& it : make_corpus(150, GetParam())) {
    const ConvexPolygon& p = it.polygon;
    for (const UnitVector& d : direction_grid(24)) {
      const double r = gap_ratio(p, d);
      EXPECT_LE(r, kSixth + 1e-12) << "item " << it.index;
      EXPECT_GE(r, 0.0);
      EXPECT_NEAR(r, gap_ratio(p, UnitVector(-d.x(), -d.y())), 1e-15);
    }
  }
}

TEST_P(Corpus, CorollariesAndCentroidContainment) {
  for (const CorpusItem& it : make_corpus(150, GetParam())) {
    const ConvexPolygon& p = it.polygon;
    const CentroidPair c = centroids(p);
    const double gap = distance(c.area, c.boundary);
    const double scale = p.scale();
    EXPECT_LE(gap, diameter(p) / 6 + 1e-12 * scale);
    EXPECT_LE(gap, measures(p).perimeter / 12 + 1e-12 * scale);
    EXPECT_TRUE(contains(p, c.area));
    EXPECT_TRUE(contains(p, c.boundary));
    EXPECT_NEAR(diameter(p), diameter_bruteforce(p), 1e-12 * scale);
  }
}

TEST_P(Corpus, RigidMotionAndScalingInvariance) {
  for (const CorpusItem& it : make_corpus(40, GetParam())) {
    const ConvexPolygon& p = it.polygon;
    const ConvexPolygon q = translated(scaled(rotated(p, 0.7), 3.5), {2.0, -1.0});
    for (const UnitVector& d : direction_grid(8)) {
      const UnitVector dq = UnitVector::from_angle(std::atan2(d.y(), d.x()) + 0.7);
      EXPECT_NEAR(gap_ratio(p, d), gap_ratio(q, dq), 1e-10);
    }
    const ConvexPolygon m = reflected_x(p);
    EXPECT_NEAR(gap_ratio(p, UnitVector(1, 0)), gap_ratio(m, UnitVector(1, 0)), 1e-12);
  }
}

TEST_P(Corpus, FrameInvariants) {
  for (const CorpusItem& it : make_corpus(60, GetParam())) {
    for (const UnitVector& d : direction_grid(6)) {
      const NormalizedFrame f = normalize(it.polygon, d);
      EXPECT_TRUE(frame_scalars_valid(f).pass) << frame_scalars_valid(f).context;
      EXPECT_GE(f.omega, 0.0);
      EXPECT_LE(f.omega, 1e12);
      EXPECT_GE(f.B, 0.5 - 1e-12);
      EXPECT_LE(f.B, 1.0 + 1e-12);
      EXPECT_GE(f.c, f.B / 2 - 1e-12);
      EXPECT_LE(f.c, 0.5 + 1e-12);
      EXPECT_GT(f.lambda6, 0.0);
      EXPECT_LE(f.lambda6, 1.0);
      if (f.u) {
        EXPECT_GE(*f.u, 1.0 - 1e-9);
        EXPECT_LE(*f.u, 2.0 + 1e-9);
      }
      // Frame gap ratio equals the original one.
      EXPECT_NEAR(gap_ratio(f.polygon, UnitVector(1, 0)), gap_ratio(it.polygon, d), 1e-10);
    }
  }
}

TEST_P(Corpus, ProfileMonotoneAndConcave) {
  for (const CorpusItem& it : make_corpus(40, GetParam())) {
    const NormalizedFrame f = normalize(it.polygon, UnitVector::from_angle(0.3));
    const Profile prof = frame_profile(f);
    for (std::size_t i = 1; i < prof.size(); ++i) {
      EXPECT_GE(prof.area[i], prof.area[i - 1]);
      EXPECT_GE(prof.ptilde[i], prof.ptilde[i - 1] - 1e-12);
    }
    EXPECT_TRUE(concavity_check(prof).pass);
    EXPECT_TRUE(verify_cp_identity(prof).pass);
    EXPECT_TRUE(verify_gap_integral(prof).pass);
  }
}

TEST_P(Corpus, LemmaSuite) {
  for (const CorpusItem& it : make_corpus(30, GetParam())) {
    for (const UnitVector& d : direction_grid(4)) {
      const LemmaSuiteReport r = run_lemma_suite(it.polygon, d);
      for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << it.index << " " << c.name << " " << c.context;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, Corpus, ::testing::Values(1u, 2024u, 987654321u));

TEST(CorpusGen, ItemsIndependentOfCount) {
  const auto small = make_corpus(5, 42);
  const auto big = make_corpus(50, 42);
  for (std::size_t i = 0; i < small.size(); ++i) {
    EXPECT_EQ(small[i].polygon, big[i].polygon);
    EXPECT_EQ(small[i].seed, big[i].seed);
  }
  EXPECT_EQ(corpus_item(42, 17).polygon, big[17].polygon);
  for (const auto& it : big) {
    EXPECT_GE(it.n_points, 3u);
    EXPECT_LE(it.n_points, 30u);
    EXPECT_LE(it.polygon.size(), it.n_points);
  }
}

TEST(CorpusGen, DirectionGrid) {
  const auto g = direction_grid(4);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_NEAR(g[1].y(), 1.0, 1e-15);
  EXPECT_NEAR(g[2].x(), -1.0, 1e-15);
}

}  // namespace
}  // namespace cgap
