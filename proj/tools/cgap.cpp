// cgap: centroid-gap verification tool.
//
// Stdout carries data (JSON report or CSV), stderr carries diagnostics.
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input or usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgap/commands.hpp"
#include "cgap/errors.hpp"
#include "cgap/polygon_io.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Flags {
  cgap::CommonOptions common;
  std::string out;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--tol", f.common.tol, "Relative tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.common.seed, "Master seed")->capture_default_str();
  cmd->add_option("--jobs", f.common.jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1, 1024));
  cmd->add_option("--out", f.out, "Write output here instead of stdout");
}

void emit(const std::string& data, const std::string& path) {
  if (path.empty()) {
    std::cout << data << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << data)) throw cgap::InputError("cannot write " + path);
}

int finish(const cgap::RunReport& rep, const std::string& out) {
  emit(rep.to_json(), out);
  const cgap::ReportSummary s = rep.summary();
  std::fprintf(stderr, "%s: %zu/%zu checks passed, worst margin %s (%s)\n", rep.command.c_str(),
               s.passed, s.total, cgap::fmt_num(s.worst_margin).c_str(), s.worst_context.c_str());
  if (!rep.all_pass()) {
    for (const auto& c : rep.checks) {
      if (!c.pass) {
        std::fprintf(stderr, "FAILED %s: lhs=%s rhs=%s margin=%s %s\n", c.name.c_str(),
                     cgap::fmt_num(c.lhs).c_str(), cgap::fmt_num(c.rhs).c_str(),
                     cgap::fmt_num(c.margin).c_str(), c.context.c_str());
      }
    }
    return kCheckFailed;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centroid-gap verification for convex polygons"};
  app.require_subcommand(1);

  Flags flags;

  std::string file;
  std::vector<std::string> corpus;
  std::size_t directions = 256;
  auto* verify = app.add_subcommand("verify", "Check the 1/6 width bound and its corollaries");
  verify->add_option("file", file, "Polygon file (.json or .csv)");
  verify->add_option("--corpus", corpus, "Random corpus instead of a file: COUNT SEED")->expected(2);
  verify->add_option("--directions", directions, "Number of directions")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_common(verify, flags);

  cgap::LemmaRunOptions lemma_opts;
  bool scalars_only = false;
  bool no_scalars = false;
  auto* lemmas = app.add_subcommand("lemmas", "Run the lemma and inequality suites");
  lemmas->add_option("file", file, "Polygon file (.json or .csv)");
  lemmas->add_option("--corpus", corpus, "Random corpus instead of a file: COUNT SEED")->expected(2);
  lemmas->add_flag("--scalars-only", scalars_only, "Only the tan, quintic and region suites");
  lemmas->add_flag("--no-scalars", no_scalars, "Skip the tan, quintic and region suites");
  lemmas->add_option("--directions", lemma_opts.directions, "Directions per polygon")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  lemmas->add_option("--samples", lemma_opts.samples, "Samples for the tan and region suites")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{10000}, std::size_t{1} << 40));
  add_common(lemmas, flags);

  double theta = 0.0;
  std::size_t grid = 2048;
  auto* sweep = app.add_subcommand("sweep", "Print the normalized-frame profile as CSV");
  sweep->add_option("file", file, "Polygon file (.json or .csv)")->required();
  sweep->add_option("--theta", theta, "Direction angle in radians")->capture_default_str();
  sweep->add_option("--grid", grid, "Uniform grid points (>= 2)")->capture_default_str();
  add_common(sweep, flags);

  std::vector<double> eps_list;
  auto* extremal = app.add_subcommand("extremal", "Convergence table of the thin-triangle family");
  extremal->add_option("eps", eps_list, "Values of eps in (0, 1]");
  add_common(extremal, flags);

  std::size_t n = 0, budget = 0, restarts = 8;
  std::optional<std::uint64_t> search_seed;
  std::string polygon_out;
  auto* search = app.add_subcommand("search", "Hill-climb the gap ratio over n-gons");
  search->add_option("n", n, "Number of points (>= 3)")->required();
  search->add_option("budget", budget, "Polygon evaluations (>= 1)")->required();
  search->add_option("SEED", search_seed, "Seed (overrides --seed)");
  search->add_option("--restarts", restarts, "Independent restarts")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  search->add_option("--polygon-out", polygon_out, "Write the best polygon (.json or .csv)");
  add_common(search, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    auto parse_count = [](const std::string& s) {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(s, &pos);
      if (pos != s.size()) throw cgap::InputError("not a non-negative integer: " + s);
      return static_cast<std::uint64_t>(v);
    };
    auto need_one_input = [&](const char* cmd) {
      if (file.empty() == corpus.empty()) {
        throw cgap::InputError(std::string(cmd) + ": give either a polygon file or --corpus COUNT SEED");
      }
    };

    if (*verify) {
      need_one_input("verify");
      const cgap::RunReport rep =
          corpus.empty()
              ? cgap::run_verify(cgap::read_polygon_file(file), directions, flags.common)
              : cgap::run_verify_corpus(parse_count(corpus[0]), parse_count(corpus[1]), directions,
                                        flags.common);
      return finish(rep, flags.out);
    }
    if (*lemmas) {
      if (scalars_only) {
        if (!file.empty() || !corpus.empty()) {
          throw cgap::InputError("lemmas: --scalars-only takes no polygon input");
        }
        return finish(cgap::run_scalars(lemma_opts.samples, flags.common), flags.out);
      }
      need_one_input("lemmas");
      lemma_opts.include_scalars = !no_scalars;
      const cgap::RunReport rep =
          corpus.empty()
              ? cgap::run_lemmas(cgap::read_polygon_file(file), lemma_opts, flags.common)
              : cgap::run_lemmas_corpus(parse_count(corpus[0]), parse_count(corpus[1]), lemma_opts,
                                        flags.common);
      return finish(rep, flags.out);
    }
    if (*sweep) {
      emit(cgap::sweep_csv(cgap::read_polygon_file(file), theta, grid), flags.out);
      return kPass;
    }
    if (*extremal) {
      if (eps_list.empty()) eps_list = {0.1, 0.01, 0.001, 0.0001};
      return finish(cgap::run_extremal(eps_list, flags.common), flags.out);
    }
    if (*search) {
      if (search_seed) flags.common.seed = *search_seed;
      const cgap::RunReport rep = cgap::run_search(n, budget, restarts, flags.common);
      if (!polygon_out.empty()) cgap::write_polygon_file(rep.search->best_polygon, polygon_out);
      if (rep.search->bound_violated && polygon_out.empty()) {
        std::fprintf(stderr, "counterexample polygon:\n%s",
                     cgap::polygon_to_json(rep.search->best_polygon).c_str());
      }
      return finish(rep, flags.out);
    }
  } catch (const cgap::InternalInvariantViolation& e) {
    std::fprintf(stderr, "internal invariant violated: %s\n", e.what());
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
