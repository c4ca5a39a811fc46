#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "cgap/geometry.hpp"
#include "cgap/report.hpp"

namespace cgap {

/// Flags shared by every subcommand.
struct CommonOptions {
  double tol = 1e-9;       // relative tolerance
  std::uint64_t seed = 0;  // master seed for anything random
  std::size_t jobs = 1;    // worker threads; output does not depend on it
};

/// Gap ratio <= 1/6 over `directions` evenly spaced directions, plus
/// gap <= diameter/6 and gap <= perimeter/12.
RunReport run_verify(const ConvexPolygon& poly, std::size_t directions, const CommonOptions& opt);
/// The same checks over a seeded random corpus of `count` polygons.
RunReport run_verify_corpus(std::size_t count, std::uint64_t corpus_seed, std::size_t directions,
                            const CommonOptions& opt);

struct LemmaRunOptions {
  std::size_t directions = 16;
  std::size_t samples = 1'000'000;  // for the tan and region suites
  bool include_scalars = true;
};

/// Geometric lemma suite in every direction of the grid, then the scalar suites.
RunReport run_lemmas(const ConvexPolygon& poly, const LemmaRunOptions& lo, const CommonOptions& opt);
RunReport run_lemmas_corpus(std::size_t count, std::uint64_t corpus_seed, const LemmaRunOptions& lo,
                            const CommonOptions& opt);
/// Tan, quintic and region suites only.
RunReport run_scalars(std::size_t samples, const CommonOptions& opt);

/// Normalized-frame profile as CSV with header t,ell,A,P,Ptilde,a,p,c_a,c_p.
std::string sweep_csv(const ConvexPolygon& poly, double theta, std::size_t grid);

RunReport run_extremal(std::span<const double> eps_list, const CommonOptions& opt);
RunReport run_search(std::size_t n, std::size_t budget, std::size_t restarts, const CommonOptions& opt);

}  // namespace cgap
