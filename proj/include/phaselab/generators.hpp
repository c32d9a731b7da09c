#pragma once
// Instance generators.  Conventions, used consistently by the CLI and
// the experiment harness:
//   - F(n, m): m clauses drawn independently with replacement; each
//     clause takes k distinct variables and fair-coin signs.
//   - G(n, m): m edges drawn independently with replacement from the
//     n(n-1)/2 unordered pairs (parallel edges possible, self-loops
//     never).  Densities are quoted as m = c*n, threshold c = 1/2.
//   - G(n, p): each pair present independently with probability p;
//     matched to G(n, m) via p = 2c/n.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "phaselab/core.hpp"
#include "phaselab/rng.hpp"

namespace phaselab {
namespace generators {

using core::Formula;
using core::Graph;
using core::Literal;

inline Formula gen_ksat(std::uint32_t n, std::uint64_t m, std::uint32_t k,
                        Seed seed) {
  if (k == 0 || k > core::max_clause_arity)
    throw std::invalid_argument("gen_ksat: k must be in [1, 30]");
  if (k > n)
    throw std::invalid_argument("gen_ksat: k exceeds n");
  SplitRng rng(seed);
  Formula f(n);
  f.reserve(m, m * k);
  std::vector<std::uint32_t> vars;
  std::vector<Literal> lits(k);
  for (std::uint64_t i = 0; i < m; ++i) {
    rng.distinct(n, k, vars);
    for (std::uint32_t j = 0; j < k; ++j)
      lits[j] = Literal::make(vars[j], rng.next_bool());
    f.add_clause(lits);
  }
  return f;
}

inline Graph gen_gnm(std::uint32_t n, std::uint64_t m, Seed seed) {
  if (n < 2 && m > 0)
    throw std::invalid_argument("gen_gnm: need n >= 2 to draw edges");
  SplitRng rng(seed);
  Graph g(n);
  g.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    auto u = static_cast<std::uint32_t>(rng.next_below(n));
    auto v = static_cast<std::uint32_t>(rng.next_below(n - 1));
    if (v >= u) ++v;  // uniform over ordered distinct pairs
    g.add_edge(u, v);
  }
  return g;
}

// Geometric skip sampling over the lexicographically ordered pairs:
// O(n + edges) regardless of p.
inline Graph gen_gnp(std::uint32_t n, double p, Seed seed) {
  if (!(p >= 0.0) || !(p <= 1.0))
    throw std::invalid_argument("gen_gnp: p must lie in [0, 1]");
  Graph g(n);
  if (n < 2 || p == 0.0) return g;
  SplitRng rng(seed);
  if (p == 1.0) {
    for (std::uint32_t u = 0; u + 1 < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  const double denom = std::log1p(-p);
  std::uint32_t u = 0, v = 0;  // cursor: next candidate is (u, v+1)
  while (u + 1 < n) {
    double x = 1.0 - rng.next_double();  // (0, 1]
    auto skip = static_cast<std::uint64_t>(std::floor(std::log(x) / denom));
    std::uint64_t col = static_cast<std::uint64_t>(v) + 1 + skip;
    while (u + 1 < n && col >= n) {
      col -= n - 1 - u;  // overshoot re-based into the next row,
      ++u;               // whose columns start at u+1
      ++col;
    }
    if (u + 1 >= n) break;
    v = static_cast<std::uint32_t>(col);
    g.add_edge(u, v);
    if (v + 1 >= n) {
      ++u;
      v = u;
    }
  }
  return g;
}

// Boolean constraint of arity k <= 4 as a truth table.  Bit b of
// `table` holds g(x) for the input pattern where argument j supplies
// bit (x >> j) & 1.
struct ConstraintFn {
  std::uint32_t k = 2;
  std::uint16_t table = 0;

  bool eval(std::uint32_t pattern) const {
    return ((table >> pattern) & 1u) != 0;
  }
  std::uint32_t patterns() const { return 1u << k; }

  // Mean of g over uniform inputs.
  double density() const {
    std::uint32_t ones = 0;
    for (std::uint32_t x = 0; x < patterns(); ++x)
      if (eval(x)) ++ones;
    return static_cast<double>(ones) / patterns();
  }

  static ConstraintFn or_k(std::uint32_t k) {
    ConstraintFn g{k, 0};
    g.table = static_cast<std::uint16_t>(((1u << (1u << k)) - 1u) & ~1u);
    return g;
  }
  static ConstraintFn xor2() { return ConstraintFn{2, 0b0110}; }
  static ConstraintFn xnor2() { return ConstraintFn{2, 0b1001}; }
};

inline void validate_constraint(const ConstraintFn& g) {
  if (g.k == 0 || g.k > 4)
    throw std::invalid_argument("constraint: arity must be in [1, 4]");
  if (g.table >= (1u << (1u << g.k)))
    throw std::invalid_argument("constraint: truth table wider than 2^k bits");
}

// MAX-CSP instance: each clause is an ordered k-tuple of distinct
// variables with a sign vector; clause value is g applied to the
// (possibly negated) variable values.
struct CspFormula {
  std::uint32_t n = 0;
  ConstraintFn g;
  std::vector<Literal> lits;  // m * g.k, flat

  std::size_t size() const { return g.k == 0 ? 0 : lits.size() / g.k; }
  std::span<const Literal> clause(std::size_t i) const {
    return {lits.data() + i * g.k, lits.data() + (i + 1) * g.k};
  }
};

inline std::uint64_t count_satisfied(const CspFormula& f,
                                     const core::Assignment& a) {
  if (a.size() != f.n)
    throw std::invalid_argument("count_satisfied: assignment size != n");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto c = f.clause(i);
    std::uint32_t pattern = 0;
    for (std::uint32_t j = 0; j < f.g.k; ++j)
      if (core::literal_true(c[j], a)) pattern |= 1u << j;
    if (f.g.eval(pattern)) ++s;
  }
  return s;
}

inline CspFormula gen_csp(std::uint32_t n, std::uint64_t m,
                          const ConstraintFn& g, Seed seed) {
  validate_constraint(g);
  if (g.k > n)
    throw std::invalid_argument("gen_csp: arity exceeds n");
  SplitRng rng(seed);
  CspFormula f;
  f.n = n;
  f.g = g;
  f.lits.reserve(m * g.k);
  std::vector<std::uint32_t> vars;
  for (std::uint64_t i = 0; i < m; ++i) {
    rng.distinct(n, g.k, vars);
    for (std::uint32_t j = 0; j < g.k; ++j)
      f.lits.push_back(Literal::make(vars[j], rng.next_bool()));
  }
  return f;
}

}  // namespace generators

using generators::ConstraintFn;
using generators::CspFormula;
using generators::gen_csp;
using generators::gen_gnm;
using generators::gen_gnp;
using generators::gen_ksat;

}  // namespace phaselab
