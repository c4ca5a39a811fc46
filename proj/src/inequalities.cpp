#include "cgap/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cgap/errors.hpp"
#include "cgap/rng.hpp"

namespace cgap {

namespace {

constexpr double kScalarTol = 1e-12;
constexpr double kEdgeClamp = 1e-6;
constexpr long double kHalfPi = std::numbers::pi_v<long double> / 2;

CheckReport fold(const char* name) {
  CheckReport acc;
  acc.name = name;
  acc.margin = std::numeric_limits<double>::infinity();
  return acc;
}

void require_domain(long double lo, long double hi) {
  if (!(lo > -kHalfPi + kEdgeClamp) || !(hi < kHalfPi - kEdgeClamp) || !(hi > lo)) {
    throw DomainError("tan inequality needs -pi/2 < phi < phi + psi < pi/2 (1e-6 clearance)");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// tan

CheckReport tan_inequality_check(double phi, double psi) {
  const long double lphi = phi;
  const long double lpsi = psi;
  if (!(psi > 0.0)) throw DomainError("tan inequality needs psi > 0");
  require_domain(lphi, lphi + lpsi);
  const long double lhs = std::tan(lphi + lpsi);
  const long double rhs = std::tan(lphi) + 2.0L * std::tan(lpsi / 2.0L);
  return make_check("tan_inequality", static_cast<double>(rhs), static_cast<double>(lhs), kScalarTol,
                    "phi=" + fmt_num(phi) + " psi=" + fmt_num(psi));
}

CheckReport tan_chain_check(double phi, std::span<const double> psis) {
  long double total = phi;
  long double rhs = std::tan(static_cast<long double>(phi));
  for (double p : psis) {
    if (!(p > 0.0)) throw DomainError("tan chain needs every psi_k > 0");
    total += p;
    rhs += 2.0L * std::tan(static_cast<long double>(p) / 2.0L);
  }
  require_domain(phi, total);
  const long double lhs = std::tan(total);
  return make_check("tan_chain", static_cast<double>(rhs), static_cast<double>(lhs), kScalarTol,
                    "phi=" + fmt_num(phi) + " k=" + std::to_string(psis.size()));
}

TanSuiteReport tan_suite(std::size_t n_samples, std::uint64_t seed) {
  TanSuiteReport out;
  out.random = fold("tan_inequality");
  out.chain = fold("tan_chain");
  out.equality = fold("tan_equality");
  out.samples = n_samples;

  Rng rng(seed);
  const double lo = -std::numbers::pi / 2 + 2 * kEdgeClamp;
  const double hi = std::numbers::pi / 2 - 2 * kEdgeClamp;
  for (std::size_t k = 0; k < n_samples; ++k) {
    double a = rng.uniform(lo, hi);
    double b = rng.uniform(lo, hi);
    if (a > b) std::swap(a, b);
    if (!(b - a > 0.0)) continue;
    keep_worst(out.random, tan_inequality_check(a, b - a));
  }

  const std::size_t n_chain = std::max<std::size_t>(1, n_samples / 10);
  std::vector<double> psis;
  for (std::size_t k = 0; k < n_chain; ++k) {
    double a = rng.uniform(lo, hi);
    double b = rng.uniform(lo, hi);
    if (a > b) std::swap(a, b);
    const std::size_t terms = 1 + rng.below(8);
    std::vector<double> w(terms);
    double wsum = 0.0;
    for (auto& x : w) wsum += (x = rng.uniform_open_low());
    psis.clear();
    // Shrink slightly so rounding in the sum cannot leave the domain.
    const double span = (b - a) * (1.0 - 1e-12);
    for (double x : w) psis.push_back(span * x / wsum);
    if (std::any_of(psis.begin(), psis.end(), [](double p) { return !(p > 0.0); })) continue;
    keep_worst(out.chain, tan_chain_check(a, psis));
  }

  // Equality in the limit phi = -psi/2: the margin must vanish.
  for (int k = 1; k <= 10; ++k) {
    const double psi = std::numbers::pi * k / 11.0;
    const CheckReport r = tan_inequality_check(-psi / 2.0, psi);
    keep_worst(out.equality, make_check("tan_equality", std::abs(r.margin), 1e-9, 0.0,
                                        "psi=" + fmt_num(psi) + " margin=" + fmt_num(r.margin)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// polynomials

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

double IntPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + IntPoly{-1} * b; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

IntPoly quintic_polynomial() { return IntPoly{5, -10, -10, 35, -24, 6}; }

namespace {

std::string coeff_string(const IntPoly& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.coeffs()[i]);
  }
  return s + ")";
}

CheckReport exact_match(const char* name, const IntPoly& got, const IntPoly& want) {
  const bool same = got == want;
  CheckReport r = make_check(name, same ? 0.0 : 1.0, 0.0, 0.0,
                             "expanded=" + coeff_string(got) + " expected=" + coeff_string(want));
  return r;
}

}  // namespace

QuinticReport quintic_check() {
  QuinticReport out;
  const IntPoly q = quintic_polynomial();
  out.coefficients = q.coeffs();

  const IntPoly x{0, 1};
  const IntPoly one_minus_x{1, -1};
  const IntPoly decomposed = IntPoly{5, -16, 13} + IntPoly{0, 0, 1, -1} +
                             IntPoly{6} * x * one_minus_x * one_minus_x * one_minus_x * one_minus_x;
  out.decomposition = exact_match("quintic_decomposition", decomposed, q);

  // 30(1+x) times the integral bound, compared against 5(1+x).
  const IntPoly one_plus_x{1, 1};
  const IntPoly scaled_bound = IntPoly{-10} * one_plus_x * IntPoly{0, 0, 0, 1} +
                               one_plus_x * IntPoly{5, -1} * IntPoly{0, 0, -10, 6} +
                               IntPoly{0, 0, 60} + IntPoly{0, 15} * IntPoly{1, 0, -1};
  out.reduction = exact_match("quintic_reduction", IntPoly{5, 5} - scaled_bound, q);

  out.value_at_zero = make_check("quintic_at_zero", std::abs(q(0.0) - 5.0), 0.0, 0.0, "q(0)=" + fmt_num(q(0.0)));
  out.value_at_one = make_check("quintic_at_one", std::abs(q(1.0) - 2.0), 0.0, 0.0, "q(1)=" + fmt_num(q(1.0)));

  out.grid_min = fold("quintic_grid_min");
  out.terms_nonnegative = fold("quintic_terms_nonnegative");
  out.tangent_line = fold("sqrt_tangent_line");
  out.integral_bound = fold("integral_bound");
  const IntPoly t1{5, -16, 13};
  const IntPoly t2{0, 0, 1, -1};
  constexpr int kSteps = 100000;
  for (int i = 0; i <= kSteps; ++i) {
    const double lam = i == kSteps ? 1.0 : i * 1e-5;
    const std::string ctx = "lambda=" + fmt_num(lam);
    keep_worst(out.grid_min, make_check_ge("quintic_grid_min", q(lam), 0.0, kScalarTol, ctx));
    const double t3 = 6.0 * lam * std::pow(1.0 - lam, 4);
    keep_worst(out.terms_nonnegative,
               make_check_ge("quintic_terms_nonnegative", std::min({t1(lam), t2(lam), t3}), 0.0, kScalarTol, ctx));

    const double root = std::sqrt(2.0 / (1.0 + lam));
    keep_worst(out.tangent_line, make_check("sqrt_tangent_line", 0.25 * (5.0 - lam), root, kScalarTol, ctx));

    const double cubic = lam * lam * lam / 5.0 - lam * lam / 3.0;
    const double tail = 2.0 * lam * lam / (1.0 + lam) + 0.5 * lam * (1.0 - lam) - lam * lam * lam / 3.0;
    const double exact = tail + 4.0 * root * cubic;
    const double relaxed = tail + (5.0 - lam) * cubic;
    keep_worst(out.integral_bound, make_check("integral_bound", exact, relaxed, kScalarTol, ctx + " exact<=relaxed"));
    keep_worst(out.integral_bound, make_check("integral_bound", relaxed, 1.0 / 6.0, kScalarTol, ctx + " relaxed<=1/6"));
  }
  return out;
}

// ---------------------------------------------------------------------------
// region

namespace region {

double fedsm3(const RegionPoint& x) {
  const double q = x.u * x.u - x.u + 1.0;
  return (x.u - 2.0 + 1.0 / x.u) / 3.0 + (x.s * x.u * x.c / 2.0 - x.b / (3.0 * x.u) * q) / x.b -
         x.s * (x.c - 1.0 / 6.0) + 0.5 - x.u * x.lam / 4.0;
}

double fedsm4(const RegionPoint& x) {
  const double q = x.u * x.u - x.u + 1.0;
  return (x.u - 2.0 + 1.0 / x.u) / 3.0 + x.s * x.c - 2.0 * x.b * q / (3.0 * x.u * x.u) -
         x.s * (x.c - 1.0 / 6.0) + 0.5 - x.u * x.lam / 4.0;
}

double fedsm5(const RegionPoint& x) {
  return 1.0 / 6.0 + x.u * x.c / (2.0 * x.B) - x.s * (x.c - 1.0 / 6.0) - x.u * x.lam / 4.0;
}

double fedsm333(const RegionPoint& x) {
  return 1.0 / 6.0 + x.u * x.c / (2.0 * x.B) - x.s * (x.c - 1.0 / 6.0) - x.u / 2.0 +
         x.u / 2.0 * std::max(x.s * x.B, 0.5);
}

double fedsm333_low_c(const RegionPoint& x) {
  RegionPoint y = x;
  y.c = x.B / 2.0;
  return fedsm333(y);
}

double fedsm111(const RegionPoint& x) {
  return 1.0 / 6.0 + x.u / (4.0 * x.B) - x.s / 3.0 - x.u / 2.0 + x.u / 2.0 * std::max(x.s * x.B, 0.5);
}

double fedsm1111(const RegionPoint& x) {
  return 1.0 / 6.0 + x.u / (4.0 * x.B) - x.s / 3.0 - x.u / 2.0 + x.u / 2.0 * x.s * x.B;
}

double eeq(const RegionPoint& x) {
  const double q = x.u * x.u - x.u + 1.0;
  return (x.u - 2.0 + 1.0 / x.u) / 3.0 - 2.0 * x.b * q / (3.0 * x.u * x.u) + x.s / 6.0 + 0.5 -
         x.u * x.lam / 4.0;
}

double rho_form(const RegionPoint& x) {
  const double q = x.u * x.u - x.u + 1.0;
  const double tail = -x.s * (x.c - 1.0 / 6.0) + 0.5 - x.u * x.lam / 4.0;
  return (x.u - 2.0 + 1.0 / x.u) / (3.0 * (1.0 + x.rho)) +
         (x.s * x.u * x.c / 2.0 - x.b / (3.0 * x.u) * q) / (x.b + x.u * x.rho / 2.0) +
         tail / (1.0 + x.rho);
}

double closing_B(double B, double u) { return (1.0 / B - 1.0) * (u / 4.0 - 1.0 / 6.0); }

double closing_u(double u) { return (u - 1.0) * (u - 2.0) * (u - 2.0) / (12.0 * u * u); }

double closing_u_expanded(double u) {
  return -1.0 / (3.0 * u * u) + 2.0 / (3.0 * u) - 5.0 / 12.0 + u / 12.0;
}

}  // namespace region

bool RegionReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; });
}

RegionReport region_inequalities_check(std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < 10000) throw DomainError("region_inequalities_check: need at least 1e4 samples");
  Rng rng(seed);

  // Draw from [lo, hi], landing exactly on an end with probability 1/16 each.
  auto draw = [&rng](double lo, double hi, bool lo_allowed) {
    const std::uint64_t roll = rng.below(16);
    if (roll == 0) return hi;
    if (roll == 1 && lo_allowed) return lo;
    return lo + (hi - lo) * rng.uniform();
  };

  enum Idx {
    kF3, kF4, kF5, kF333, kF333Low, kF111, kF1111, kEEq, kRho, kCloseB, kCloseU,
    kIdF3F5, kIdF4EEq, kIdCloseU, kCount
  };
  const char* names[kCount] = {"fedsm3",       "fedsm4",          "fedsm5",
                               "fedsm333",     "fedsm333_c_low",  "fedsm111",
                               "fedsm1111",    "EEq",             "rho_form",
                               "closing_B",    "closing_u",       "identity_fedsm3_fedsm5",
                               "identity_fedsm4_EEq", "identity_closing_u"};
  RegionReport out;
  out.checks.resize(kCount);
  for (int i = 0; i < kCount; ++i) out.checks[i] = fold(names[i]);
  out.min_observed = std::numeric_limits<double>::infinity();

  auto ge0 = [&](Idx i, double value, const std::string& ctx) {
    out.min_observed = std::min(out.min_observed, value);
    keep_worst(out.checks[i], make_check_ge(names[i], value, 0.0, kScalarTol, ctx));
  };
  auto same = [&](Idx i, double a, double b, const std::string& ctx) {
    const double tol = kScalarTol * std::max({1.0, std::abs(a), std::abs(b)});
    keep_worst(out.checks[i], make_check(names[i], std::abs(a - b), 0.0, tol, ctx));
  };

  std::size_t done = 0;
  while (done < n_samples) {
    RegionPoint x;
    x.u = draw(1.0, 2.0, true);
    x.s = draw(0.0, 1.0, false);
    x.lam = draw(0.0, 1.0, false);
    if (!(x.s > 0.0) || !(x.lam > 0.0)) continue;
    const double b_max = std::min(1.0, (1.0 - x.lam / 2.0) / x.s);
    if (b_max < 0.5) {
      ++out.rejected;
      continue;
    }
    x.B = draw(0.5, b_max, true);
    x.c = draw(x.B / 2.0, 0.5, true);
    x.b = x.s * x.B;
    const double r = rng.uniform();
    x.rho = rng.below(16) == 0 ? 0.0 : r / (1.0 - r);
    ++done;

    // Contexts are only materialized when a value is a candidate worst case.
    auto ctx = [&x] {
      return "u=" + fmt_num(x.u) + " s=" + fmt_num(x.s) + " lambda=" + fmt_num(x.lam) +
             " B=" + fmt_num(x.B) + " c=" + fmt_num(x.c) + " rho=" + fmt_num(x.rho);
    };
    const double values[] = {region::fedsm3(x),   region::fedsm4(x),         region::fedsm5(x),
                             region::fedsm333(x), region::fedsm333_low_c(x), region::fedsm111(x)};
    for (int i = 0; i < 6; ++i) {
      const auto idx = static_cast<Idx>(i);
      if (values[i] < out.checks[idx].margin || !std::isfinite(values[i])) ge0(idx, values[i], ctx());
      else out.min_observed = std::min(out.min_observed, values[i]);
    }
    if (x.s >= 1.0 / (2.0 * x.B)) {
      const double v = region::fedsm1111(x);
      if (v < out.checks[kF1111].margin || !std::isfinite(v)) ge0(kF1111, v, ctx());
      out.min_observed = std::min(out.min_observed, v);
    }
    const double tail[] = {region::eeq(x), region::rho_form(x), region::closing_B(x.B, x.u),
                           region::closing_u(x.u)};
    for (int i = 0; i < 4; ++i) {
      const auto idx = static_cast<Idx>(kEEq + i);
      if (tail[i] < out.checks[idx].margin || !std::isfinite(tail[i])) ge0(idx, tail[i], ctx());
      else out.min_observed = std::min(out.min_observed, tail[i]);
    }
    same(kIdF3F5, values[kF3], values[kF5], {});
    same(kIdF4EEq, values[kF4], tail[0], {});
    same(kIdCloseU, tail[3], region::closing_u_expanded(x.u), {});
  }
  out.samples = done;
  return out;
}

}  // namespace cgap
