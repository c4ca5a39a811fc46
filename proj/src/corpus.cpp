#include "cgap/corpus.hpp"

#include <numbers>

#include "cgap/errors.hpp"
#include "cgap/extremal.hpp"
#include "cgap/rng.hpp"

namespace cgap {

namespace {
constexpr std::size_t kMinPoints = 3;
constexpr std::size_t kMaxPoints = 30;
constexpr double kAnisotropies[] = {1.0, 10.0, 100.0};
}  // namespace

CorpusItem corpus_item(std::uint64_t master_seed, std::size_t index) {
  const std::uint64_t seed = derive_seed(master_seed, index);
  const std::size_t n = kMinPoints + mix_seed(seed) % (kMaxPoints - kMinPoints + 1);
  const double anisotropy = kAnisotropies[index % std::size(kAnisotropies)];
  return {index, seed, n, anisotropy, random_convex_polygon(n, seed, anisotropy)};
}

std::vector<CorpusItem> make_corpus(std::size_t count, std::uint64_t master_seed) {
  std::vector<CorpusItem> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(corpus_item(master_seed, k));
  return out;
}

std::vector<UnitVector> direction_grid(std::size_t count) {
  if (count == 0) throw DomainError("direction_grid: need at least one direction");
  std::vector<UnitVector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(UnitVector::from_angle(2.0 * std::numbers::pi * static_cast<double>(k) / count));
  }
  return out;
}

}  // namespace cgap
