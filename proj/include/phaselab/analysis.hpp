#pragma once
// Closed-form predictions against which the simulations are compared.
// Conventions:
//   - 2-SAT densities are quoted as m = c*n clauses (threshold c = 1).
//   - Graph densities as m = c*n edges (threshold c = 1/2); where a
//     per-pair probability is needed it is p = 2c/n.
//   - Scaling-window coordinates: c = 1 + lambda * n^(-1/3) (formulas)
//     and c = 1/2 + lambda * n^(-1/3) (graphs).
// All functions are deterministic, allocation-free, and cheap; the
// root-finders bisect to 1e-12 or better.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "phaselab/generators.hpp"

namespace phaselab {
namespace analysis {

// --- unit-clause resolution on 2-SAT (supercritical) ----------------------

// Scaled clause counts along the unit-clause trajectory at 2-clause
// density c, parameterized by the unset-variable fraction rho:
//   rho2(rho) = c * rho^2
//   rho1(rho) = c*rho - c*rho^2 + rho*ln(rho)
struct TrajectoryPoint {
  double rho = 0, rho1 = 0, rho2 = 0;
};

inline double trajectory_rho2(double c, double rho) { return c * rho * rho; }

inline double trajectory_rho1(double c, double rho) {
  return c * rho - c * rho * rho + rho * std::log(rho);
}

inline std::vector<TrajectoryPoint> ode_trajectory(double c,
                                                   std::size_t points = 101) {
  if (points < 2) throw std::invalid_argument("ode_trajectory: need >= 2 points");
  std::vector<TrajectoryPoint> t(points);
  for (std::size_t i = 0; i < points; ++i) {
    double rho = 1.0 - static_cast<double>(i) / (points - 1);
    rho = std::max(rho, 1e-12);
    t[i] = {rho, trajectory_rho1(c, rho), trajectory_rho2(c, rho)};
  }
  return t;
}

// Unique root of c = ln(rho)/(rho - 1) in (0, 1): where the
// unit-clause supply dries up.  ln(rho)/(rho-1) falls from +inf to 1
// on (0,1), so a root exists iff c > 1.
inline double rho_star(double c) {
  if (!(c > 1.0))
    throw std::domain_error("rho_star: requires density c > 1");
  auto f = [c](double r) {
    return std::log1p(r - 1.0) / (r - 1.0) - c;  // log1p for r near 1
  };
  double lo = 1e-300, hi = 1.0 - 1e-16;
  // f(lo) > 0, f(hi) < 0 for c > 1.
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) > 0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-13 * hi) break;
  }
  return 0.5 * (lo + hi);
}

// Fraction of clauses' worth of variables dissatisfied by unit-clause
// resolution, per variable:  integral of rho1/(2 rho) over the
// trajectory, in closed form (1/2)(rho*-1) - (1/4)(rho*+1) ln rho*.
inline double rejected_density(double c) {
  double r = rho_star(c);
  return 0.5 * (r - 1.0) - 0.25 * (r + 1.0) * std::log1p(r - 1.0);
}

// --- online algorithms -----------------------------------------------------

// Expected per-variable score of the lazy online rule at density c:
//   3c/4 + (1 - e^-c)/4 + (1 - e^-c)^2/8  >=  3c/4 + 3/8.
inline double online_fraction(double c) {
  if (!(c >= 0)) throw std::domain_error("online_fraction: c must be >= 0");
  double q = -std::expm1(-c);  // 1 - e^-c
  return 0.75 * c + 0.25 * q + 0.125 * q * q;
}

// --- high-density second-order bounds --------------------------------------

// MAX-2-SAT: max F = (3/4)c n + Theta(sqrt(c)) n; the sqrt(c)
// coefficients below bracket the Theta.
inline double maxsat2_lower_coeff() {  // (sqrt(8) - 1) / (3 sqrt(pi)) ~ 0.343859
  return (std::sqrt(8.0) - 1.0) / (3.0 * std::sqrt(std::numbers::pi));
}
inline double maxsat2_upper_coeff() {  // sqrt(3 ln2 / 8) ~ 0.509833
  return std::sqrt(3.0 * std::numbers::ln2 / 8.0);
}

// MAX-CUT: max cut = c n / 2 + Theta(sqrt(c)) n.
inline double maxcut_lower_coeff() {  // sqrt(8 / (9 pi)) ~ 0.531923
  return std::sqrt(8.0 / (9.0 * std::numbers::pi));
}
inline double maxcut_upper_coeff() {  // sqrt(ln2 / 2) ~ 0.588705
  return std::sqrt(std::numbers::ln2 / 2.0);
}

struct Bounds {
  double lower = 0, upper = 0;
};

// General-k sequential-majority lower coefficient (per sqrt(c)):
// (2/(k+1)) sqrt(k / (pi 2^k)).  Exposed separately because for k = 2
// the potential-greedy analysis gives the sharper constant above.
inline double ksat_majority_lower_coeff(std::uint32_t k) {
  return 2.0 / (k + 1) *
         std::sqrt(k / (std::numbers::pi * std::pow(2.0, k)));
}

// First-moment coefficient sqrt((2^k - 1) ln2 / 2^(2k-1)).
inline double ksat_first_moment_upper_coeff(std::uint32_t k) {
  double pk = std::pow(2.0, k);
  return std::sqrt((pk - 1.0) * std::numbers::ln2 / (pk * pk / 2.0));
}

// MAX-k-SAT bounds on (max F)/n at clause density c:
//   (1 - 2^-k) c + coeff * sqrt(c).
// k = 2 uses the sharper potential-greedy lower constant.
inline Bounds highdensity_bounds_ksat(std::uint32_t k, double c) {
  if (k < 2 || k > core::max_clause_arity)
    throw std::invalid_argument("highdensity_bounds_ksat: k must be in [2,30]");
  if (!(c > 0)) throw std::domain_error("highdensity_bounds_ksat: c must be positive");
  double base = (1.0 - std::pow(2.0, -static_cast<double>(k))) * c;
  double lower_coeff =
      k == 2 ? maxsat2_lower_coeff() : ksat_majority_lower_coeff(k);
  double upper_coeff =
      k == 2 ? maxsat2_upper_coeff() : ksat_first_moment_upper_coeff(k);
  return {base + lower_coeff * std::sqrt(c), base + upper_coeff * std::sqrt(c)};
}

// MAX-CSP bounds for constraint g at density c, per variable:
//   lower  p c + sqrt(P Q^2 c / k)
//   upper  p c + sqrt(2 P Q ln2 c)
// with p = mean of g, P = min(p, 1-p), Q = 1 - P.  The two
// paper-grade 2-ary cases carry their sharper specialized constants:
// XOR/XNOR (majority greedy on the cut view) and the one-falsifying-
// pattern family (potential greedy).
inline Bounds csp_bounds(const generators::ConstraintFn& g, double c) {
  generators::validate_constraint(g);
  if (!(c > 0)) throw std::domain_error("csp_bounds: c must be positive");
  double p = g.density();
  if (p == 0.0 || p == 1.0)
    throw std::invalid_argument("csp_bounds: constant constraint is degenerate");
  double P = std::min(p, 1.0 - p);
  double Q = 1.0 - P;
  double lower = p * c + std::sqrt(P * Q * Q * c / g.k);
  double upper = p * c + std::sqrt(2.0 * P * Q * std::log(2.0) * c);
  if (g.k == 2) {
    std::uint32_t ones = 0;
    for (std::uint32_t x = 0; x < 4; ++x)
      if (g.eval(x)) ++ones;
    bool xor_like = g.table == 0b0110 || g.table == 0b1001;
    if (xor_like)
      lower = p * c + maxcut_lower_coeff() * std::sqrt(c);
    else if (ones == 3)  // exactly one falsifying pattern: 2-SAT-like
      lower = p * c + maxsat2_lower_coeff() * std::sqrt(c);
  }
  return {lower, upper};
}

// --- concentration ----------------------------------------------------------

// Two-sided martingale tail for max F at m = c n clauses/edges:
//   P(|max F - E max F| > lambda) < 2 exp(-2 lambda^2 / (c n)).
inline double azuma_tail(double lambda, double c, double n) {
  if (!(c > 0) || !(n > 0))
    throw std::domain_error("azuma_tail: c and n must be positive");
  return 2.0 * std::exp(-2.0 * lambda * lambda / (c * n));
}

// Binomial-style upper tail used for degree/occurrence counts:
//   P(X >= mu + delta) <= exp(-delta^2 / (2 mu + 2 delta / 3)).
inline double chernoff_upper(double mu, double delta) {
  if (!(mu >= 0) || !(delta > 0))
    throw std::domain_error("chernoff_upper: need mu >= 0 and delta > 0");
  return std::exp(-delta * delta / (2.0 * mu + 2.0 * delta / 3.0));
}

// --- sparse-graph structure -------------------------------------------------

// Expected number of cycles (length >= 3) in G(n, cn), n -> infinity,
// 2c < 1:  sum_{k>=3} (2c)^k / (2k) = -ln(1-2c)/2 - c - c^2.
inline double expected_cycles_subcritical(double c) {
  if (!(c > 0) || !(2.0 * c < 1.0))
    throw std::domain_error(
        "expected_cycles_subcritical: requires 0 < c < 1/2");
  return -0.5 * std::log1p(-2.0 * c) - c - c * c;
}

// Expected number of bicycles of length <= n in a 2-SAT instance at
// density c < 1: sum_{k=1..n} k^2 c^(k+1) / (2n); evaluated in closed
// form c^2 (1+c) / (2 n (1-c)^3) (the k > n tail is below any double
// at the densities where this is used).
inline double expected_bicycles(double c, double n) {
  if (!(c > 0) || !(c < 1))
    throw std::domain_error("expected_bicycles: requires 0 < c < 1");
  if (!(n > 0)) throw std::domain_error("expected_bicycles: n must be positive");
  double d = 1.0 - c;
  return c * c * (1.0 + c) / (2.0 * n * d * d * d);
}

// --- giant component --------------------------------------------------------

// Fraction of vertices outside the giant component of G(n, cn):
// solve t e^-t = 2c e^-2c with t < 1, then r from
// t^2/(4c) + 1 = t/(2c) + c r;  r = 1 for c <= 1/2.
inline double giant_free_fraction(double c) {
  if (!(c > 0)) throw std::domain_error("giant_free_fraction: c must be positive");
  if (c <= 0.5) return 1.0;
  const double target = 2.0 * c * std::exp(-2.0 * c);
  double lo = 0.0, hi = 1.0;  // t e^-t increases on (0,1)
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid * std::exp(-mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  double t = 0.5 * (lo + hi);
  return (t * t / (4.0 * c) + 1.0 - t / (2.0 * c)) / c;
}

// Density at which the giant-free fraction reaches the given value
// (bisection on the monotone-decreasing r(c), c > 1/2).
inline double giant_free_density_for(double r) {
  if (!(r > 0) || !(r < 1))
    throw std::domain_error("giant_free_density_for: r must be in (0, 1)");
  double lo = 0.5 + 1e-9, hi = 64.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (giant_free_fraction(mid) > r)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// --- miscellany -------------------------------------------------------------

// Binary entropy in nats: H(x) = -x ln x - (1-x) ln(1-x).
inline double entropy(double x) {
  if (!(x >= 0) || !(x <= 1)) throw std::domain_error("entropy: x must be in [0,1]");
  double a = x > 0 ? -x * std::log(x) : 0.0;
  double b = x < 1 ? -(1.0 - x) * std::log1p(-x) : 0.0;
  return a + b;
}

// Inverse of the entropy on [0, 1/2].
inline double entropy_inverse(double h) {
  if (!(h >= 0) || !(h <= std::log(2.0) + 1e-15))
    throw std::domain_error("entropy_inverse: h must be in [0, ln 2]");
  double lo = 0.0, hi = 0.5;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (entropy(mid) < h)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace analysis

using analysis::azuma_tail;
using analysis::Bounds;
using analysis::chernoff_upper;
using analysis::csp_bounds;
using analysis::entropy;
using analysis::entropy_inverse;
using analysis::expected_bicycles;
using analysis::expected_cycles_subcritical;
using analysis::giant_free_density_for;
using analysis::giant_free_fraction;
using analysis::highdensity_bounds_ksat;
using analysis::ode_trajectory;
using analysis::online_fraction;
using analysis::rejected_density;
using analysis::rho_star;

}  // namespace phaselab
