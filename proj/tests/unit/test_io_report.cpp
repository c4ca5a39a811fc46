#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "cgap/check.hpp"
#include "cgap/errors.hpp"
#include "cgap/extremal.hpp"
#include "cgap/polygon_io.hpp"
#include "cgap/report.hpp"
#include "json.hpp"
#include "support.hpp"

namespace cgap {
namespace {

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

TEST(ParseJson, Valid) {
  const auto pts = parse_polygon_json(R"({"vertices": [[0, 0], [1, 0], [0.5, 2e0]]})");
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[2].y, 2.0);
}

TEST(ParseJson, Diagnostics) {
  EXPECT_NE(message_of([] { parse_polygon_json("{\"vertices\": [[0,0],[1,0],[1]]}"); }).find("vertices[2]"),
            std::string::npos);
  EXPECT_NE(message_of([] { parse_polygon_json("{\"vertices\": [[0,0],[1,\"a\"],[1,1]]}"); }).find("vertices[1]"),
            std::string::npos);
  EXPECT_FALSE(message_of([] { parse_polygon_json("{\"points\": []}"); }).empty());
  EXPECT_FALSE(message_of([] { parse_polygon_json("{\"vertices\": [[0,0],[1,0]]}"); }).empty());
  EXPECT_FALSE(message_of([] { parse_polygon_json("{not json"); }).empty());
}

TEST(ParseCsv, HeaderCommentsAndBlankLines) {
  const auto pts = parse_polygon_csv("x,y\n# apex\n0,0\n\n1, 0\n0.5,1\n");
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[1].x, 1.0);
  EXPECT_EQ(parse_polygon_csv("0,0\n1,0\n0,1\n").size(), 3u);
}

TEST(ParseCsv, Diagnostics) {
  EXPECT_NE(message_of([] { parse_polygon_csv("x,y\n0,0\n1,zz\n0,1\n"); }).find("line 3"), std::string::npos);
  EXPECT_NE(message_of([] { parse_polygon_csv("0,0\n1,0,4\n0,1\n"); }).find("line 2"), std::string::npos);
  EXPECT_FALSE(message_of([] { parse_polygon_csv("0,0\n1,0\n"); }).empty());
}

TEST(Parse, SniffsFormat) {
  EXPECT_EQ(parse_polygon("  {\"vertices\": [[0,0],[1,0],[0,1]]}").size(), 3u);
  EXPECT_EQ(parse_polygon("0,0\n1,0\n0,1\n").size(), 3u);
  EXPECT_EQ(parse_polygon("0,0\n1,0\n0,1\n", "p.csv").size(), 3u);
  EXPECT_THROW(parse_polygon("0,0\n1,0\n0,1\n", "p.json"), InputError);
}

TEST(PolygonFiles, RoundTripIsExact) {
  const auto dir = std::filesystem::temp_directory_path() / "cgap_io_test";
  std::filesystem::create_directories(dir);
  for (std::uint64_t seed = 1; seed < 30; ++seed) {
    const ConvexPolygon p = random_convex_polygon(12, seed, 10.0);
    for (const char* ext : {".json", ".csv"}) {
      const std::string path = (dir / ("p" + std::to_string(seed) + ext)).string();
      write_polygon_file(p, path);
      EXPECT_EQ(read_polygon_file(path), p) << path;
    }
    EXPECT_EQ(make_polygon(parse_polygon_json(polygon_to_json(p))), p);
    EXPECT_EQ(make_polygon(parse_polygon_csv(polygon_to_csv(p))), p);
  }
  std::filesystem::remove_all(dir);
}

TEST(PolygonFiles, Errors) {
  const std::string missing = "/nonexistent/cgap/poly.json";
  EXPECT_NE(message_of([&] { read_polygon_file(missing); }).find(missing), std::string::npos);
  const auto path = std::filesystem::temp_directory_path() / "cgap_collinear.csv";
  std::ofstream(path) << "0,0\n1,1\n2,2\n";
  EXPECT_THROW(read_polygon_file(path.string()), DegenerateInput);
  std::filesystem::remove(path);
}

TEST(Checks, MakeCheckAndWorstOf) {
  const CheckReport a = make_check("x", 1.0, 2.0, 1e-9);
  EXPECT_EQ(a.margin, 1.0);
  EXPECT_TRUE(a.pass);
  const CheckReport b = make_check_ge("x", 1.0, 2.0, 1e-9);
  EXPECT_EQ(b.margin, -1.0);
  EXPECT_FALSE(b.pass);
  const CheckReport w = worst_of("x", std::vector{a, b});
  EXPECT_FALSE(w.pass);
  EXPECT_EQ(w.margin, -1.0);
  EXPECT_EQ(worst_of("e", {}).margin, std::numeric_limits<double>::infinity());
}

TEST(Folder, KeepsWorstPerNameInFirstSeenOrder) {
  CheckFolder f;
  EXPECT_TRUE(f.add(make_check("b", 0.0, 1.0, 0.0), "item 0"));
  EXPECT_TRUE(f.add(make_check("a", 0.0, 1.0, 0.0)));
  EXPECT_FALSE(f.add(make_check("b", 0.0, 2.0, 0.0), "item 1"));
  EXPECT_TRUE(f.add(make_check("b", 0.0, 0.5, 0.0), "item 2"));
  ASSERT_EQ(f.checks().size(), 2u);
  EXPECT_EQ(f.checks()[0].name, "b");
  EXPECT_EQ(f.checks()[0].margin, 0.5);
  EXPECT_NE(f.checks()[0].context.find("item 2"), std::string::npos);
}

RunReport sample_report() {
  RunReport r;
  r.command = "verify";
  r.seed = 3;
  r.checks.push_back(make_check("gap_ratio", 0.1, 1.0 / 6.0, 1e-9, "theta=0"));
  r.checks.push_back(make_check("diameter_corollary", 0.2, 0.3, 1e-9));
  r.frames.emplace_back(0, normalize(testing::unit_square(), UnitVector(1, 0)));
  r.counts.emplace_back("polygons", 1);
  return r;
}

TEST(Report, SummaryAndJsonShape) {
  RunReport r = sample_report();
  const ReportSummary s = r.summary();
  EXPECT_EQ(s.total, 2u);
  EXPECT_EQ(s.passed, 2u);
  EXPECT_NEAR(s.worst_margin, 1.0 / 6.0 - 0.1, 1e-15);
  EXPECT_EQ(s.worst_context, "gap_ratio: theta=0");
  EXPECT_TRUE(r.all_pass());

  const auto j = nlohmann::ordered_json::parse(r.to_json());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "seed", "tolerance", "checks", "frames", "counts",
                                            "summary"}));
  EXPECT_EQ(j["frames"][0]["omega"], 1.0);
  EXPECT_EQ(j["frames"][0]["u"], 2.0);
  EXPECT_EQ(j["checks"][0]["lhs"], 0.1);
}

TEST(Report, NonFiniteAndFailures) {
  RunReport r = sample_report();
  CheckReport nan = make_check("nan", std::nan(""), 1.0, 1e-9);
  r.checks.push_back(nan);
  EXPECT_FALSE(r.all_pass());
  EXPECT_EQ(r.summary().worst_context.rfind("nan", 0), 0u);
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_TRUE(j["checks"][2]["lhs"].is_null());
}

TEST(Report, ByteStable) {
  EXPECT_EQ(sample_report().to_json(), sample_report().to_json());
  RunReport r;
  r.command = "extremal";
  const std::vector<double> eps{0.1, 0.01};
  r.table = convergence_table(eps);
  const std::string a = r.to_json();
  EXPECT_NE(a.find("\"table\""), std::string::npos);
  EXPECT_NE(a.find("0.12141728856106221"), std::string::npos);
}

}  // namespace
}  // namespace cgap
