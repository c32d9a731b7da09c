#pragma once
// File formats:
//   - DIMACS CNF for formulas ("p cnf n m", 1-indexed signed literals,
//     clauses terminated by 0, 'c' comment lines ignored).
//   - Edge lists for graphs: first non-comment line "n m", then one
//     "u v" pair per line, 0-indexed; '#' starts a comment.
//   - CSP instances ride in DIMACS plus one "c constraint k=K table=T"
//     header line (T in binary, bit b = value on input pattern b);
//     literal order inside a clause carries the tuple order.
// Parse failures throw std::invalid_argument naming the line.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "phaselab/core.hpp"
#include "phaselab/generators.hpp"

namespace phaselab {
namespace io {

using core::Formula;
using core::Graph;
using core::Literal;

inline void write_dimacs(std::ostream& os, const Formula& f) {
  os << "p cnf " << f.n() << ' ' << f.size() << '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (Literal l : f.clause(i))
      os << (l.negated() ? -static_cast<std::int64_t>(l.var() + 1)
                         : static_cast<std::int64_t>(l.var() + 1))
         << ' ';
    os << "0\n";
  }
}

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw std::invalid_argument("parse error at line " + std::to_string(line) +
                              ": " + what);
}

}  // namespace detail

inline Formula read_dimacs(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  std::uint64_t n = 0, m = 0;
  bool have_header = false;
  Formula f;
  std::vector<Literal> lits;
  std::uint64_t clauses = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ss(line);
    if (!have_header) {
      std::string p, cnf;
      if (!(ss >> p >> cnf >> n >> m) || p != "p" || cnf != "cnf")
        detail::parse_fail(lineno, "expected header 'p cnf n m'");
      have_header = true;
      f = Formula(static_cast<std::uint32_t>(n));
      f.reserve(m, 2 * m);
      continue;
    }
    std::int64_t lit;
    while (ss >> lit) {
      if (lit == 0) {
        if (lits.empty()) detail::parse_fail(lineno, "empty clause");
        f.add_clause(lits);
        ++clauses;
        lits.clear();
      } else {
        std::uint64_t v = static_cast<std::uint64_t>(lit < 0 ? -lit : lit);
        if (v > n)
          detail::parse_fail(lineno, "literal " + std::to_string(lit) +
                                         " out of range for n=" +
                                         std::to_string(n));
        lits.push_back(
            Literal::make(static_cast<std::uint32_t>(v - 1), lit < 0));
      }
    }
    if (!ss.eof())
      detail::parse_fail(lineno, "unreadable token in clause data");
  }
  if (!have_header) detail::parse_fail(lineno, "missing 'p cnf' header");
  if (!lits.empty())
    detail::parse_fail(lineno, "last clause not terminated by 0");
  if (clauses != m)
    detail::parse_fail(lineno, "clause count " + std::to_string(clauses) +
                                   " does not match header m=" +
                                   std::to_string(m));
  return f;
}

inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline Graph read_edge_list(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0, seen = 0;
  Graph g;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    if (!have_header) {
      if (!(ss >> n >> m)) detail::parse_fail(lineno, "expected header 'n m'");
      have_header = true;
      g = Graph(static_cast<std::uint32_t>(n));
      g.reserve(m);
      continue;
    }
    std::uint64_t u, v;
    if (!(ss >> u >> v))
      detail::parse_fail(lineno, "expected edge 'u v'");
    if (u >= n || v >= n)
      detail::parse_fail(lineno, "endpoint out of range for n=" +
                                     std::to_string(n));
    if (u == v) detail::parse_fail(lineno, "self-loop");
    g.add_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    ++seen;
  }
  if (!have_header) detail::parse_fail(lineno, "missing 'n m' header");
  if (seen != m)
    detail::parse_fail(lineno, "edge count " + std::to_string(seen) +
                                   " does not match header m=" +
                                   std::to_string(m));
  return g;
}

inline void write_csp(std::ostream& os, const generators::CspFormula& f) {
  os << "c constraint k=" << f.g.k << " table=";
  for (std::uint32_t b = f.g.patterns(); b-- > 0;)
    os << ((f.g.table >> b) & 1u);
  os << '\n';
  os << "p cnf " << f.n << ' ' << f.size() << '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (Literal l : f.clause(i))
      os << (l.negated() ? -static_cast<std::int64_t>(l.var() + 1)
                         : static_cast<std::int64_t>(l.var() + 1))
         << ' ';
    os << "0\n";
  }
}

inline generators::CspFormula read_csp(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  generators::ConstraintFn g;
  bool have_constraint = false, have_header = false;
  std::uint64_t n = 0, m = 0;
  generators::CspFormula f;
  std::vector<Literal> lits;
  std::uint64_t clauses = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.rfind("c constraint ", 0) == 0) {
      std::string tail = line.substr(13);
      std::uint32_t k = 0;
      std::string bits;
      std::istringstream ss(tail);
      std::string tok;
      while (ss >> tok) {
        if (tok.rfind("k=", 0) == 0) k = std::stoul(tok.substr(2));
        if (tok.rfind("table=", 0) == 0) bits = tok.substr(6);
      }
      if (k == 0 || bits.size() != (1u << k))
        detail::parse_fail(lineno, "malformed constraint line");
      g.k = k;
      g.table = 0;
      for (char c : bits) {
        if (c != '0' && c != '1')
          detail::parse_fail(lineno, "constraint table must be binary");
        g.table = static_cast<std::uint16_t>((g.table << 1) | (c - '0'));
      }
      generators::validate_constraint(g);
      have_constraint = true;
      continue;
    }
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ss(line);
    if (!have_header) {
      std::string p, cnf;
      if (!(ss >> p >> cnf >> n >> m) || p != "p" || cnf != "cnf")
        detail::parse_fail(lineno, "expected header 'p cnf n m'");
      if (!have_constraint)
        detail::parse_fail(lineno, "missing 'c constraint' line before header");
      have_header = true;
      f.n = static_cast<std::uint32_t>(n);
      f.g = g;
      f.lits.reserve(m * g.k);
      continue;
    }
    std::int64_t lit;
    while (ss >> lit) {
      if (lit == 0) {
        if (lits.size() != g.k)
          detail::parse_fail(lineno, "clause arity does not match constraint");
        f.lits.insert(f.lits.end(), lits.begin(), lits.end());
        ++clauses;
        lits.clear();
      } else {
        std::uint64_t v = static_cast<std::uint64_t>(lit < 0 ? -lit : lit);
        if (v > n) detail::parse_fail(lineno, "literal out of range");
        lits.push_back(
            Literal::make(static_cast<std::uint32_t>(v - 1), lit < 0));
      }
    }
  }
  if (!have_header) detail::parse_fail(lineno, "missing 'p cnf' header");
  if (clauses != m)
    detail::parse_fail(lineno, "clause count does not match header");
  return f;
}

}  // namespace io
}  // namespace phaselab
