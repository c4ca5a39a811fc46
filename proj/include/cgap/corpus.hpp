#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cgap/geometry.hpp"

namespace cgap {

/// One seeded random polygon of a test corpus. Item k depends only on
/// (master seed, k), never on how many items are generated or in what order.
struct CorpusItem {
  std::size_t index;
  std::uint64_t seed;
  std::size_t n_points;  // 3..30 draws; the hull may have fewer vertices
  double anisotropy;     // 1, 10 or 100
  ConvexPolygon polygon;
};

CorpusItem corpus_item(std::uint64_t master_seed, std::size_t index);
std::vector<CorpusItem> make_corpus(std::size_t count, std::uint64_t master_seed);

/// k evenly spaced directions angle_k = 2 pi k / count, k = 0..count-1.
std::vector<UnitVector> direction_grid(std::size_t count);

}  // namespace cgap
