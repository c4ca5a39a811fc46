#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cgap/check.hpp"

namespace cgap {

// ---------------------------------------------------------------------------
// Tangent inequality: tan(phi + psi) >= tan(phi) + 2 tan(psi / 2) whenever
// -pi/2 < phi < phi + psi < pi/2.

/// Both ends must stay 1e-6 away from +-pi/2 and psi must be positive;
/// otherwise DomainError. Pass iff margin >= -1e-12.
CheckReport tan_inequality_check(double phi, double psi);

/// Iterated form: tan(phi + sum psi_k) >= tan(phi) + sum 2 tan(psi_k / 2).
CheckReport tan_chain_check(double phi, std::span<const double> psis);

struct TanSuiteReport {
  CheckReport random;    // worst over random admissible (phi, psi)
  CheckReport chain;     // worst over random chains with up to 8 terms
  CheckReport equality;  // |margin| at phi = -psi/2, must be <= 1e-9
  std::size_t samples = 0;

  std::vector<CheckReport> all() const { return {random, chain, equality}; }
};
TanSuiteReport tan_suite(std::size_t n_samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Quintic 5 - 10x - 10x^2 + 35x^3 - 24x^4 + 6x^5 >= 0 on [0, 1].

/// Integer polynomial, coefficient i multiplies x^i.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> c) : coeffs_(c) { trim(); }

  const std::vector<long long>& coeffs() const { return coeffs_; }
  double operator()(double x) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<long long> coeffs_;
};

IntPoly quintic_polynomial();

struct QuinticReport {
  CheckReport grid_min;        // min over [0, 1], step 1e-5
  CheckReport value_at_zero;   // exactly 5
  CheckReport value_at_one;    // exactly 2
  CheckReport decomposition;   // (5-16x+13x^2) + (x^2-x^3) + 6x(1-x)^4, integer coefficients
  CheckReport reduction;       // 5(1+x) - 30(1+x) K(x) expanded, integer coefficients
  CheckReport terms_nonnegative;
  CheckReport tangent_line;    // sqrt(2/(1+x)) >= (5-x)/4
  CheckReport integral_bound;  // the bound on c_p(0) - c_a(0) as a function of lambda is <= 1/6
  std::vector<long long> coefficients;

  std::vector<CheckReport> all() const {
    return {grid_min,  value_at_zero,     value_at_one, decomposition,
            reduction, terms_nonnegative, tangent_line, integral_bound};
  }
};
QuinticReport quintic_check();

// ---------------------------------------------------------------------------
// Free-variable region: u in [1,2], s, lam in (0,1],
// B in [1/2, min(1, (1 - lam/2)/s)], c in [B/2, 1/2], b = s B, rho >= 0.

struct RegionPoint {
  double u = 1.0;
  double s = 1.0;
  double lam = 1.0;
  double B = 0.5;
  double c = 0.25;
  double b = 0.5;
  double rho = 0.0;
};

namespace region {
// Each returns the quantity the proof shows to be >= 0.
double fedsm3(const RegionPoint& x);
double fedsm4(const RegionPoint& x);
double fedsm5(const RegionPoint& x);
double fedsm333(const RegionPoint& x);
double fedsm333_low_c(const RegionPoint& x);  // fedsm333 at c = B/2
double fedsm111(const RegionPoint& x);        // fedsm333 at c = 1/2
double fedsm1111(const RegionPoint& x);       // valid for s >= 1/(2B)
double eeq(const RegionPoint& x);
double rho_form(const RegionPoint& x);        // combined inequality, linear in rho after clearing denominators
double closing_B(double B, double u);         // (1/B - 1)(u/4 - 1/6)
double closing_u(double u);                   // (u - 1)(u - 2)^2 / (12 u^2)
double closing_u_expanded(double u);          // -1/(3u^2) + 2/(3u) - 5/12 + u/12
}  // namespace region

struct RegionReport {
  std::vector<CheckReport> checks;
  std::size_t samples = 0;
  std::size_t rejected = 0;      // draws whose B-interval was empty
  double min_observed = 0.0;     // smallest inequality value over all samples
  bool all_pass() const;
};

/// Draws n_samples points of the region (rejecting empty B-intervals, and
/// snapping coordinates to interval ends with small probability so that the
/// boundary is exercised) and evaluates every inequality. Needs n >= 1e4.
RegionReport region_inequalities_check(std::size_t n_samples, std::uint64_t seed);

}  // namespace cgap
