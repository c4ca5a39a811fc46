#pragma once

#include <span>
#include <string>
#include <vector>

namespace cgap {

/// One evaluated inequality lhs <= rhs. margin = rhs - lhs; the check passes
/// when margin >= -tolerance.
struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string context;
};

/// Builds a report for lhs <= rhs.
CheckReport make_check(std::string name, double lhs, double rhs, double tolerance,
                       std::string context = {});

/// Builds a report for lhs >= rhs (stored as rhs <= lhs, so margin = lhs - rhs).
CheckReport make_check_ge(std::string name, double lhs, double rhs, double tolerance,
                          std::string context = {});

/// Folds many evaluations of one inequality into the worst instance. The
/// result fails if any input failed; an empty input yields a passing report
/// with margin +inf.
CheckReport worst_of(std::string name, std::span<const CheckReport> reports);

/// Appends `other` into `acc` keeping the worse of the two (by margin + tolerance).
void keep_worst(CheckReport& acc, const CheckReport& other);

/// True when an evaluation with this margin and tolerance would replace
/// `acc` under keep_worst.
inline bool is_worse(const CheckReport& acc, double margin, double tolerance) {
  const bool pass = margin >= -tolerance;
  if (acc.pass != pass) return !pass;
  return margin + tolerance < acc.margin + acc.tolerance;
}

/// keep_worst for lhs <= rhs without building a report per evaluation;
/// `context()` is only called when the evaluation becomes the worst one.
template <class ContextFn>
void fold_check(CheckReport& acc, double lhs, double rhs, double tolerance, ContextFn&& context) {
  const double margin = rhs - lhs;
  if (!is_worse(acc, margin, tolerance)) return;
  acc.lhs = lhs;
  acc.rhs = rhs;
  acc.margin = margin;
  acc.tolerance = tolerance;
  acc.pass = margin >= -tolerance;
  acc.context = context();
}

/// Compact "key=value" formatting for contexts; 17 significant digits.
std::string fmt_num(double v);

}  // namespace cgap
