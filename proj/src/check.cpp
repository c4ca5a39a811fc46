#include "cgap/check.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace cgap {

CheckReport make_check(std::string name, double lhs, double rhs, double tolerance,
                       std::string context) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.tolerance = tolerance;
  r.pass = r.margin >= -tolerance;  // NaN margins fail
  r.context = std::move(context);
  return r;
}

CheckReport make_check_ge(std::string name, double lhs, double rhs, double tolerance,
                          std::string context) {
  return make_check(std::move(name), rhs, lhs, tolerance, std::move(context));
}

void keep_worst(CheckReport& acc, const CheckReport& other) {
  const bool acc_pass = acc.pass;
  const bool other_pass = other.pass;
  bool replace;
  if (acc_pass != other_pass) {
    replace = !other_pass;
  } else {
    replace = other.margin + other.tolerance < acc.margin + acc.tolerance;
  }
  if (replace) {
    const std::string name = acc.name;
    acc = other;
    acc.name = name;
  }
}

CheckReport worst_of(std::string name, std::span<const CheckReport> reports) {
  CheckReport acc;
  acc.name = std::move(name);
  acc.margin = std::numeric_limits<double>::infinity();
  acc.pass = true;
  for (const auto& r : reports) keep_worst(acc, r);
  return acc;
}

std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace cgap
