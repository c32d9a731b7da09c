#pragma once
// Value types shared by every component: literals, clauses, formulas,
// assignments, graphs, partitions, and the exact scoring functions.
// All types are plain values; nothing here mutates after construction
// except through the explicit add_* builders.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phaselab {

// Thrown when an operation would exceed its documented budget
// (enumeration too large, search step limit, ...).  Distinct from
// std::invalid_argument so callers can map it to a separate exit code.
class resource_limit_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace core {

// A literal is a variable index plus a sign, packed as 2*var | negated.
struct Literal {
  std::uint32_t code = 0;

  static Literal make(std::uint32_t var, bool negated) {
    return Literal{var * 2u + (negated ? 1u : 0u)};
  }
  static Literal pos(std::uint32_t var) { return make(var, false); }
  static Literal neg(std::uint32_t var) { return make(var, true); }

  std::uint32_t var() const { return code >> 1; }
  bool negated() const { return (code & 1u) != 0; }
  Literal operator~() const { return Literal{code ^ 1u}; }

  friend bool operator==(Literal a, Literal b) { return a.code == b.code; }
  friend bool operator!=(Literal a, Literal b) { return a.code != b.code; }
  friend bool operator<(Literal a, Literal b) { return a.code < b.code; }
};

// Convenience builder type; formulas store clauses in one flat pool.
using Clause = std::vector<Literal>;

inline constexpr std::uint32_t max_clause_arity = 30;

// Total assignment: one byte per variable, 0 = false, 1 = true.
using Assignment = std::vector<std::uint8_t>;

inline bool literal_true(Literal l, const Assignment& a) {
  return (a[l.var()] != 0) != l.negated();
}

// Truth of the literal when its variable takes the given value.
inline bool literal_true(Literal l, bool value) {
  return value != l.negated();
}

// CNF formula over n variables.  Duplicate clauses are permitted (the
// generators sample with replacement); a clause repeating a *variable*
// is rejected as improper.
class Formula {
public:
  Formula() : Formula(0) {}
  explicit Formula(std::uint32_t n) : n_(n) { off_.push_back(0); }

  std::uint32_t n() const { return n_; }
  std::size_t size() const { return off_.size() - 1; }
  std::uint32_t arity(std::size_t i) const {
    return off_[i + 1] - off_[i];
  }
  std::span<const Literal> clause(std::size_t i) const {
    return {pool_.data() + off_[i], pool_.data() + off_[i + 1]};
  }
  std::size_t literal_count() const { return pool_.size(); }

  void reserve(std::size_t clauses, std::size_t literals) {
    off_.reserve(clauses + 1);
    pool_.reserve(literals);
  }

  void add_clause(std::span<const Literal> lits) {
    if (lits.empty())
      throw std::invalid_argument("clause: must contain at least one literal");
    if (lits.size() > max_clause_arity)
      throw std::invalid_argument("clause: arity exceeds " +
                                  std::to_string(max_clause_arity));
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (lits[i].var() >= n_)
        throw std::invalid_argument("clause: variable index " +
                                    std::to_string(lits[i].var()) +
                                    " out of range for n=" + std::to_string(n_));
      for (std::size_t j = i + 1; j < lits.size(); ++j)
        if (lits[i].var() == lits[j].var())
          throw std::invalid_argument(
              "clause: variable repeated within a clause (improper)");
    }
    pool_.insert(pool_.end(), lits.begin(), lits.end());
    off_.push_back(static_cast<std::uint32_t>(pool_.size()));
  }

  void add_clause(std::initializer_list<Literal> lits) {
    add_clause(std::span<const Literal>(lits.begin(), lits.size()));
  }

private:
  std::uint32_t n_;
  std::vector<Literal> pool_;
  std::vector<std::uint32_t> off_;
};

inline bool clause_satisfied(std::span<const Literal> c, const Assignment& a) {
  for (Literal l : c)
    if (literal_true(l, a)) return true;
  return false;
}

inline std::uint64_t count_satisfied(const Formula& f, const Assignment& a) {
  if (a.size() != f.n())
    throw std::invalid_argument("count_satisfied: assignment size != n");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (clause_satisfied(f.clause(i), a)) ++s;
  return s;
}

inline std::uint64_t count_unsatisfied(const Formula& f, const Assignment& a) {
  return f.size() - count_satisfied(f, a);
}

// Undirected multigraph: self-loops rejected, parallel edges allowed
// and counted with multiplicity everywhere.
class Graph {
public:
  Graph() : Graph(0) {}
  explicit Graph(std::uint32_t n) : n_(n) {}

  std::uint32_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  std::pair<std::uint32_t, std::uint32_t> edge(std::size_t i) const {
    return edges_[i];
  }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const {
    return edges_;
  }

  void reserve(std::size_t m) { edges_.reserve(m); }

  void add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= n_ || v >= n_)
      throw std::invalid_argument("edge: endpoint out of range for n=" +
                                  std::to_string(n_));
    if (u == v)
      throw std::invalid_argument("edge: self-loops are not allowed");
    edges_.emplace_back(u, v);
  }

private:
  std::uint32_t n_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

// Two-sided vertex partition, same layout as Assignment.
using Partition = std::vector<std::uint8_t>;

inline std::uint64_t cut_size(const Graph& g, const Partition& p) {
  if (p.size() != g.n())
    throw std::invalid_argument("cut_size: partition size != n");
  std::uint64_t c = 0;
  for (auto [u, v] : g.edges())
    if (p[u] != p[v]) ++c;
  return c;
}

inline Partition complement(Partition p) {
  for (auto& b : p) b ^= 1u;
  return p;
}

// Compressed adjacency with edge ids, shared by the peeling /
// component / heuristic code.  nbr[k] and eid[k] describe the k-th
// incidence of a vertex; parallel edges appear once per copy.
struct Csr {
  std::vector<std::uint32_t> off;  // n+1
  std::vector<std::uint32_t> nbr;  // 2m
  std::vector<std::uint32_t> eid;  // 2m

  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return {nbr.data() + off[v], nbr.data() + off[v + 1]};
  }
  std::uint32_t degree(std::uint32_t v) const { return off[v + 1] - off[v]; }
};

inline Csr build_csr(const Graph& g) {
  Csr c;
  c.off.assign(g.n() + 1, 0);
  for (auto [u, v] : g.edges()) {
    ++c.off[u + 1];
    ++c.off[v + 1];
  }
  for (std::size_t i = 1; i < c.off.size(); ++i) c.off[i] += c.off[i - 1];
  c.nbr.resize(2 * g.m());
  c.eid.resize(2 * g.m());
  std::vector<std::uint32_t> cur(c.off.begin(), c.off.end() - 1);
  for (std::size_t e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    c.nbr[cur[u]] = v;
    c.eid[cur[u]++] = static_cast<std::uint32_t>(e);
    c.nbr[cur[v]] = u;
    c.eid[cur[v]++] = static_cast<std::uint32_t>(e);
  }
  return c;
}

}  // namespace core

using core::Assignment;
using core::Clause;
using core::Formula;
using core::Graph;
using core::Literal;
using core::Partition;

}  // namespace phaselab
