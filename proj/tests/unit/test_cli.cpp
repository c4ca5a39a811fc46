// Runs the built command-line tool as a subprocess.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cgap/geometry.hpp"
#include "cgap/polygon_io.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(CGAP_EXE) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cgap_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, VerifySquarePasses) {
  const std::string sq = file("sq.json", R"({"vertices": [[0,0],[1,0],[1,1],[0,1]]})");
  const Result r = run("verify " + sq);
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["summary"]["passed"], j["summary"]["total"]);
  EXPECT_DOUBLE_EQ(j["summary"]["worst_margin"].get<double>(), 1.0 / 6.0);
}

TEST_F(Cli, VerifyCsvThinTriangle) {
  const std::string t = file("t.csv", "x,y\n0,0\n1,0.001\n1,-0.001\n");
  const Result r = run("verify " + t + " --directions 64");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["checks"][0]["lhs"].get<double>(), 0.16616716641666673, 1e-13);
}

TEST_F(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("verify " + file("two.json", R"({"vertices": [[0,0],[1,0]]})")).code, 2);
  EXPECT_EQ(run("verify " + file("bad.json", "{\"vertices\": [[0,0],")).code, 2);
  EXPECT_EQ(run("verify " + file("line.csv", "0,0\n1,1\n2,2\n")).code, 2);
  EXPECT_EQ(run("verify " + path("missing.json")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("search 2 100").code, 2);
  EXPECT_EQ(run("search 4 0").code, 2);
  EXPECT_EQ(run("extremal 0").code, 2);
  EXPECT_EQ(run("extremal 2").code, 2);
  EXPECT_EQ(run("sweep " + file("sq.csv", "0,0\n1,0\n1,1\n0,1\n") + " --grid 1").code, 2);
  EXPECT_EQ(run("verify --tol abc " + file("sq2.csv", "0,0\n1,0\n1,1\n0,1\n")).code, 2);
}

TEST_F(Cli, HelpExitsZero) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("search --help").code, 0);
}

TEST_F(Cli, ExtremalReportsTable) {
  const Result r = run("extremal");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["table"].size(), 4u);
  EXPECT_NEAR(j["table"][3]["ratio"].get<double>(), 0.16661667166641669, 1e-14);
}

TEST_F(Cli, ExtremalFailingCheckExitsOne) {
  // At eps = 1 the axial gap is negative, so the increasing-ratio check fails.
  const Result r = run("extremal 0.1 1");
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LT(j["summary"]["passed"].get<int>(), j["summary"]["total"].get<int>());
}

TEST_F(Cli, SweepCsv) {
  const std::string sq = file("sq.csv", "0,0\n1,0\n1,1\n0,1\n");
  const Result r = run("sweep " + sq + " --grid 11");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,ell,A,P,Ptilde,a,p,c_a,c_p");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_GE(rows, 11);
}

TEST_F(Cli, SearchIsByteStableAndRoundTrips) {
  const std::string out1 = path("best1.json");
  const std::string out2 = path("best2.csv");
  const Result a = run("search 5 400 9 --polygon-out " + out1);
  const Result b = run("search 5 400 9 --jobs 3 --polygon-out " + out2);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const cgap::ConvexPolygon p = cgap::read_polygon_file(out1);
  EXPECT_EQ(p, cgap::read_polygon_file(out2));
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["search"]["evaluations"], 400);
  const std::string again = run("verify " + out1 + " --directions 8").out;
  EXPECT_FALSE(again.empty());
}

TEST_F(Cli, LemmaCorpusDeterministic) {
  const Result a = run("lemmas --corpus 20 42 --directions 4 --no-scalars");
  const Result b = run("lemmas --corpus 20 42 --directions 4 --no-scalars --jobs 2");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_FALSE(j["frames"].empty());
}

TEST_F(Cli, OutFlagWritesReport) {
  const std::string out = path("r.json");
  const Result r = run("extremal 0.1 --out " + out);
  EXPECT_EQ(r.code, 0);
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["command"], "extremal");
}

}  // namespace
