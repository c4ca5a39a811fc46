#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgap/check.hpp"
#include "cgap/extremal.hpp"
#include "cgap/frame.hpp"

namespace cgap {

struct FrameRecord {
  FrameRecord(std::size_t item_index, NormalizedFrame f) : item(item_index), frame(std::move(f)) {}

  std::size_t item;
  NormalizedFrame frame;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  double worst_margin = 0.0;  // +inf when there are no checks
  std::string worst_context;  // "name: context" of the smallest margin
};

/// Everything one CLI run produced. Serialization is deterministic: fixed key
/// order, shortest round-trip numbers, non-finite values as null.
struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::vector<CheckReport> checks;
  std::vector<FrameRecord> frames;
  std::vector<ConvergenceRow> table;                       // extremal
  std::optional<SearchState> search;                       // search
  std::vector<std::pair<std::string, std::size_t>> counts;  // skipped checks and similar tallies

  ReportSummary summary() const;
  bool all_pass() const;
  std::string to_json() const;
};

/// Folds checks by name into the worst instance per name, keeping the order
/// in which names first appear.
class CheckFolder {
 public:
  /// Returns true when `c` became the new worst instance of its name.
  bool add(const CheckReport& c, const std::string& context_prefix = {});
  void add_all(const std::vector<CheckReport>& cs, const std::string& context_prefix = {});
  const std::vector<CheckReport>& checks() const { return checks_; }
  std::vector<CheckReport> take() { return std::move(checks_); }

 private:
  std::vector<CheckReport> checks_;
};

}  // namespace cgap
