#pragma once
// Constructive lower-bound algorithms, instrumented to expose the
// quantities their analyses track.
//
// potential_greedy      sets variables in index order, each to the side
//                       that raises q = satisfied + (3/4)|2-clauses| +
//                       (1/2)|1-clauses|; q never decreases, so the
//                       final score is at least (3/4)m.
// unit_clause_resolve   seeds a few unit clauses, satisfies random
//                       units until none remain, then alternates
//                       random restarts with further resolution until
//                       every clause is adjudicated.
// ksat_sequential_greedy  sets each variable by majority vote over the
//                       unit clauses it closes.
// online_lazy           single-pass accept/reject rule that touches a
//                       variable only when forced.
// majority_greedy_cut   colors each vertex opposite the majority of
//                       its already-colored neighbors.
// unit_clause_cut       unit-clause resolution on cut constraints.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "phaselab/analysis.hpp"
#include "phaselab/core.hpp"
#include "phaselab/exact.hpp"
#include "phaselab/rng.hpp"

namespace phaselab {
namespace heuristics {

using core::Assignment;
using core::Formula;
using core::Graph;
using core::Literal;
using core::Partition;
using rng::Seed;
using rng::SplitRng;

// --- potential greedy -------------------------------------------------------

struct GreedyState {
  double q = 0;  // satisfied + (3/4) two_count + (1/2) unit_count
  std::uint64_t satisfied = 0;
  std::uint64_t unit_count = 0;
  std::uint64_t two_count = 0;
};

struct PotentialResult {
  std::uint64_t satisfied = 0;
  Assignment assignment;
  std::vector<GreedyState> trace;  // initial state, then one entry per step
};

// Deterministic: fixed index order, ties set the variable true.  The
// seed parameter exists for signature uniformity with the other
// heuristics and is not consumed.
inline PotentialResult potential_greedy(const Formula& f, Seed /*seed*/ = {}) {
  const std::uint32_t n = f.n();
  const std::size_t m = f.size();
  for (std::size_t i = 0; i < m; ++i)
    if (f.arity(i) > 2)
      throw std::invalid_argument("potential_greedy: clauses must have <= 2 literals");

  // Occurrence lists by variable.
  std::vector<std::uint32_t> occ_off(n + 1, 0), occ;
  for (std::size_t i = 0; i < m; ++i)
    for (Literal l : f.clause(i)) ++occ_off[l.var() + 1];
  for (std::uint32_t v = 0; v < n; ++v) occ_off[v + 1] += occ_off[v];
  occ.resize(occ_off[n]);
  {
    std::vector<std::uint32_t> fill(occ_off.begin(), occ_off.end() - 1);
    for (std::size_t i = 0; i < m; ++i)
      for (Literal l : f.clause(i))
        occ[fill[l.var()]++] = static_cast<std::uint32_t>(i);
  }

  std::vector<std::uint8_t> rem(m);    // unresolved literal count
  std::vector<Literal> pending(m, Literal{0});
  std::uint64_t units = 0, twos = 0, satisfied = 0;
  for (std::size_t i = 0; i < m; ++i) {
    rem[i] = static_cast<std::uint8_t>(f.arity(i));
    if (rem[i] == 1) {
      pending[i] = f.clause(i)[0];
      ++units;
    } else {
      ++twos;
    }
  }
  // q in exact quarter units: 4q = 4 satisfied + 3 twos + 2 units.
  std::uint64_t q4 = 3 * twos + 2 * units;

  PotentialResult res;
  res.assignment.assign(n, 0);
  res.trace.reserve(n + 1);
  auto snapshot = [&] {
    res.trace.push_back({static_cast<double>(q4) / 4.0, satisfied, units, twos});
  };
  snapshot();

  for (std::uint32_t v = 0; v < n; ++v) {
    // Delta toward "true" in quarter units: 2(A1 - nA1) + (A2 - nA2).
    std::int64_t delta = 0;
    for (std::uint32_t e = occ_off[v]; e < occ_off[v + 1]; ++e) {
      std::uint32_t ci = occ[e];
      if (rem[ci] == 2) {
        for (Literal l : f.clause(ci))
          if (l.var() == v) delta += l.negated() ? -1 : 1;
      } else if (rem[ci] == 1 && pending[ci].var() == v) {
        delta += pending[ci].negated() ? -2 : 2;
      }
    }
    const bool value = delta >= 0;
    res.assignment[v] = value;
    for (std::uint32_t e = occ_off[v]; e < occ_off[v + 1]; ++e) {
      std::uint32_t ci = occ[e];
      if (rem[ci] == 2) {
        Literal mine{0}, other{0};
        for (Literal l : f.clause(ci))
          (l.var() == v ? mine : other) = l;
        --twos;
        if (core::literal_true(mine, value)) {
          ++satisfied;
          rem[ci] = 0;
          q4 += 1;  // 3/4 -> 1
        } else {
          rem[ci] = 1;
          pending[ci] = other;
          ++units;
          q4 -= 1;  // 3/4 -> 1/2
        }
      } else if (rem[ci] == 1 && pending[ci].var() == v) {
        --units;
        rem[ci] = 0;
        if (core::literal_true(pending[ci], value)) {
          ++satisfied;
          q4 += 2;  // 1/2 -> 1
        } else {
          q4 -= 2;  // 1/2 -> 0
        }
      }
    }
    snapshot();
  }
  res.satisfied = satisfied;
  return res;
}

// --- unit-clause resolution on clauses ---------------------------------------

struct ResolutionCounts {
  std::uint64_t satisfied = 0, dissatisfied = 0, residual = 0;
};

struct ResolutionTrace {
  std::vector<analysis::TrajectoryPoint> samples;  // decreasing rho
  std::vector<ResolutionCounts> counts;            // parallel to samples
  std::uint64_t dissatisfied_unit = 0;
  std::uint64_t dissatisfied_residual = 0;
  std::uint64_t steps_phaseI_II = 0;
};

struct ResolveResult {
  Assignment assignment;
  ResolutionTrace trace;
};

namespace detail {

// Finish the variables the resolution process never touched: satisfy
// the leftover clauses exactly when possible, otherwise take the
// greedy assignment.  Returns the number of leftover clauses violated.
inline std::uint64_t complete_residual(const Formula& residual,
                                       Assignment& values) {
  if (residual.size() == 0) {
    values.assign(residual.n(), 0);
    return 0;
  }
  if (auto a = exact::two_sat_solve(residual)) {
    values = std::move(*a);
    return 0;
  }
  auto g = potential_greedy(residual);
  values = std::move(g.assignment);
  return residual.size() - g.satisfied;
}

}  // namespace detail

// Seeded unit-clause resolution.  seed_count random 2-clauses each
// lose one random literal, making the initial unit pool; while units
// exist a uniformly random one is satisfied; when none are left and
// unresolved clauses remain, a uniformly random unset literal is set
// true and resolution resumes.  Ends when every clause has been
// satisfied or dissatisfied; untouched variables are completed through
// the leftover-clause finisher (vacuously, all false).
inline ResolveResult unit_clause_resolve(const Formula& f, Seed seed,
                                         std::uint64_t seed_count) {
  const std::uint32_t n = f.n();
  const std::size_t m = f.size();
  for (std::size_t i = 0; i < m; ++i)
    if (f.arity(i) > 2)
      throw std::invalid_argument(
          "unit_clause_resolve: clauses must have <= 2 literals");
  SplitRng rng(seed);

  std::vector<std::uint32_t> occ_off(n + 1, 0), occ;
  for (std::size_t i = 0; i < m; ++i)
    for (Literal l : f.clause(i)) ++occ_off[l.var() + 1];
  for (std::uint32_t v = 0; v < n; ++v) occ_off[v + 1] += occ_off[v];
  occ.resize(occ_off[n]);
  {
    std::vector<std::uint32_t> fill(occ_off.begin(), occ_off.end() - 1);
    for (std::size_t i = 0; i < m; ++i)
      for (Literal l : f.clause(i))
        occ[fill[l.var()]++] = static_cast<std::uint32_t>(i);
  }

  std::vector<std::uint8_t> rem(m);
  std::vector<Literal> pending(m, Literal{0});
  // Position of each unit clause in the pick list, or npos.
  constexpr std::uint32_t npos = 0xFFFFFFFFu;
  std::vector<std::uint32_t> unit_pos(m, npos);
  std::vector<std::uint32_t> unit_list;
  std::uint64_t pool = m, units = 0, twos = 0, satisfied = 0, dissatisfied = 0;

  auto push_unit = [&](std::uint32_t ci) {
    unit_pos[ci] = static_cast<std::uint32_t>(unit_list.size());
    unit_list.push_back(ci);
    ++units;
  };
  auto drop_unit = [&](std::uint32_t ci) {
    std::uint32_t at = unit_pos[ci];
    std::uint32_t last = unit_list.back();
    unit_list[at] = last;
    unit_pos[last] = at;
    unit_list.pop_back();
    unit_pos[ci] = npos;
    --units;
  };

  for (std::size_t i = 0; i < m; ++i) {
    rem[i] = static_cast<std::uint8_t>(f.arity(i));
    if (rem[i] == 1) {
      pending[i] = f.clause(i)[0];
      push_unit(static_cast<std::uint32_t>(i));
    } else {
      ++twos;
    }
  }

  // Cut seed_count distinct 2-clauses down to units.
  {
    std::vector<std::uint32_t> two_ids;
    for (std::size_t i = 0; i < m; ++i)
      if (rem[i] == 2) two_ids.push_back(static_cast<std::uint32_t>(i));
    std::uint64_t want = std::min<std::uint64_t>(seed_count, two_ids.size());
    std::vector<std::uint32_t> picks;
    if (want > 0)
      rng.distinct(static_cast<std::uint32_t>(two_ids.size()),
                   static_cast<std::uint32_t>(want), picks);
    for (std::uint32_t p : picks) {
      std::uint32_t ci = two_ids[p];
      auto c = f.clause(ci);
      pending[ci] = c[rng.next_bool() ? 1 : 0];  // the survivor
      rem[ci] = 1;
      --twos;
      push_unit(ci);
    }
  }

  ResolveResult res;
  res.assignment.assign(n, 0);
  std::vector<std::uint8_t> is_set(n, 0);
  std::vector<std::uint32_t> unset_list(n), unset_pos(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    unset_list[v] = v;
    unset_pos[v] = v;
  }

  ResolutionTrace& tr = res.trace;
  const std::uint64_t interval = std::max<std::uint64_t>(1, n / 100);
  std::uint64_t steps = 0;
  auto sample = [&] {
    double dn = static_cast<double>(n);
    tr.samples.push_back({static_cast<double>(n - steps) / dn,
                          static_cast<double>(units) / dn,
                          static_cast<double>(twos) / dn});
    tr.counts.push_back({satisfied, dissatisfied, pool});
  };
  sample();

  auto set_var = [&](std::uint32_t v, bool value) {
    res.assignment[v] = value;
    is_set[v] = 1;
    std::uint32_t at = unset_pos[v], last = unset_list.back();
    unset_list[at] = last;
    unset_pos[last] = at;
    unset_list.pop_back();
    ++steps;
    for (std::uint32_t e = occ_off[v]; e < occ_off[v + 1]; ++e) {
      std::uint32_t ci = occ[e];
      if (rem[ci] == 2) {
        Literal mine{0}, other{0};
        for (Literal l : f.clause(ci))
          (l.var() == v ? mine : other) = l;
        --twos;
        if (core::literal_true(mine, value)) {
          rem[ci] = 0;
          ++satisfied;
          --pool;
        } else {
          rem[ci] = 1;
          pending[ci] = other;
          push_unit(ci);
        }
      } else if (rem[ci] == 1 && pending[ci].var() == v) {
        drop_unit(ci);
        rem[ci] = 0;
        --pool;
        if (core::literal_true(pending[ci], value)) {
          ++satisfied;
        } else {
          ++dissatisfied;
        }
      }
    }
    if (steps % interval == 0) sample();
  };

  while (true) {
    if (!unit_list.empty()) {
      std::uint32_t ci =
          unit_list[rng.next_below(unit_list.size())];
      Literal l = pending[ci];
      set_var(l.var(), !l.negated());
      continue;
    }
    if (pool == 0 || unset_list.empty()) break;
    // Restart: random unset literal, set true.
    std::uint32_t v = unset_list[static_cast<std::size_t>(
        rng.next_below(unset_list.size()))];
    set_var(v, rng.next_bool());
  }
  tr.steps_phaseI_II = steps;
  tr.dissatisfied_unit = dissatisfied;

  // Leftover clauses (none when the loop drained the pool) and
  // untouched variables.
  if (pool > 0) {
    std::vector<std::uint32_t> back(n, npos);
    Formula residual(0);
    std::vector<std::uint32_t> fwd;
    std::uint32_t nfree = 0;
    for (std::uint32_t v : unset_list) {
      back[v] = nfree++;
      fwd.push_back(v);
    }
    residual = Formula(nfree);
    core::Clause c;
    for (std::size_t i = 0; i < m; ++i) {
      if (rem[i] == 0) continue;
      c.clear();
      if (rem[i] == 1) {
        c.push_back(Literal::make(back[pending[i].var()],
                                  pending[i].negated()));
      } else {
        for (Literal l : f.clause(i))
          c.push_back(Literal::make(back[l.var()], l.negated()));
      }
      residual.add_clause(c);
    }
    Assignment sub;
    tr.dissatisfied_residual = detail::complete_residual(residual, sub);
    for (std::uint32_t i = 0; i < nfree; ++i) res.assignment[fwd[i]] = sub[i];
  }
  return res;
}

// --- sequential majority greedy for k-SAT ------------------------------------

// First ell-1 variables are set by coin flips; each variable after
// that is set by majority over the unit clauses it closes (clauses
// whose other k-1 literals are all set false).  Returns the number of
// clauses the final assignment satisfies.
inline std::uint64_t ksat_sequential_greedy(const Formula& f,
                                            std::uint32_t ell, Seed seed) {
  const std::uint32_t n = f.n();
  const std::size_t m = f.size();
  if (ell < 1 || ell > n)
    throw std::invalid_argument("ksat_sequential_greedy: need 1 <= ell <= n");
  if (m == 0) return 0;
  const std::uint32_t k = f.arity(0);
  for (std::size_t i = 0; i < m; ++i)
    if (f.arity(i) != k)
      throw std::invalid_argument(
          "ksat_sequential_greedy: clauses must share one arity");
  SplitRng rng(seed);

  std::vector<std::uint32_t> occ_off(n + 1, 0), occ;
  for (std::size_t i = 0; i < m; ++i)
    for (Literal l : f.clause(i)) ++occ_off[l.var() + 1];
  for (std::uint32_t v = 0; v < n; ++v) occ_off[v + 1] += occ_off[v];
  occ.resize(occ_off[n]);
  {
    std::vector<std::uint32_t> fill(occ_off.begin(), occ_off.end() - 1);
    for (std::size_t i = 0; i < m; ++i)
      for (Literal l : f.clause(i))
        occ[fill[l.var()]++] = static_cast<std::uint32_t>(i);
  }

  Assignment a(n, 0);
  std::vector<std::uint8_t> satisfied(m, 0);
  std::vector<std::uint8_t> false_set(m, 0);  // literals set and false

  auto apply = [&](std::uint32_t v, bool value) {
    a[v] = value;
    for (std::uint32_t e = occ_off[v]; e < occ_off[v + 1]; ++e) {
      std::uint32_t ci = occ[e];
      if (satisfied[ci]) continue;
      for (Literal l : f.clause(ci))
        if (l.var() == v) {
          if (core::literal_true(l, value))
            satisfied[ci] = 1;
          else
            ++false_set[ci];
        }
    }
  };

  for (std::uint32_t v = 0; v + 1 < ell; ++v) apply(v, rng.next_bool());
  for (std::uint32_t v = ell - 1; v < n; ++v) {
    std::int64_t vote = 0;
    for (std::uint32_t e = occ_off[v]; e < occ_off[v + 1]; ++e) {
      std::uint32_t ci = occ[e];
      if (satisfied[ci] || false_set[ci] + 1u != k) continue;
      // All other literals are false iff the one unset literal is on v.
      for (Literal l : f.clause(ci))
        if (l.var() == v) vote += l.negated() ? -1 : 1;
    }
    apply(v, vote >= 0);
  }
  return core::count_satisfied(f, a);
}

// --- lazy online rule --------------------------------------------------------

inline constexpr std::uint8_t online_unset = 2;

struct OnlineResult {
  std::uint64_t accepted = 0;
  std::vector<std::uint8_t> assignment;     // 0, 1, or online_unset
  std::vector<std::uint8_t> accepted_mask;  // one flag per clause
};

// Single pass over the clauses in order.  A clause with a true literal
// is accepted untouched; with both literals unset, the first is set
// true; with one false and one unset, the unset one is set true; with
// both false it is rejected.  Deterministic — the seed parameter is
// kept for signature uniformity and not consumed.
inline OnlineResult online_lazy(const Formula& f, Seed /*seed*/ = {}) {
  const std::size_t m = f.size();
  for (std::size_t i = 0; i < m; ++i)
    if (f.arity(i) > 2)
      throw std::invalid_argument("online_lazy: clauses must have <= 2 literals");
  OnlineResult res;
  res.assignment.assign(f.n(), online_unset);
  res.accepted_mask.assign(m, 0);
  auto value = [&](Literal l) -> std::uint8_t {
    std::uint8_t v = res.assignment[l.var()];
    if (v == online_unset) return online_unset;
    return (v == 1) != l.negated() ? 1 : 0;
  };
  for (std::size_t i = 0; i < m; ++i) {
    auto c = f.clause(i);
    bool any_true = false;
    Literal first_unset{0};
    bool have_unset = false;
    for (Literal l : c) {
      std::uint8_t v = value(l);
      if (v == 1) any_true = true;
      if (v == online_unset && !have_unset) {
        first_unset = l;
        have_unset = true;
      }
    }
    if (any_true) {
      res.accepted_mask[i] = 1;
      ++res.accepted;
    } else if (have_unset) {
      res.assignment[first_unset.var()] = first_unset.negated() ? 0 : 1;
      res.accepted_mask[i] = 1;
      ++res.accepted;
    }
    // else: every literal false — rejected.
  }
  return res;
}

// --- majority greedy for cuts ------------------------------------------------

struct CutGreedyResult {
  std::uint64_t cut = 0;
  Partition partition;
};

// Color vertices in the given order, each opposite the majority of its
// already-colored neighbors; ties flip a coin from the seed.
inline CutGreedyResult majority_greedy_cut(const Graph& g,
                                           std::span<const std::uint32_t> order,
                                           Seed tie_seed) {
  const std::uint32_t n = g.n();
  if (order.size() != n)
    throw std::invalid_argument("majority_greedy_cut: order size != n");
  {
    std::vector<std::uint8_t> seen(n, 0);
    for (std::uint32_t v : order) {
      if (v >= n || seen[v])
        throw std::invalid_argument(
            "majority_greedy_cut: order is not a permutation");
      seen[v] = 1;
    }
  }
  SplitRng rng(tie_seed);
  auto csr = core::build_csr(g);
  CutGreedyResult res;
  res.partition.assign(n, 0);
  std::vector<std::uint8_t> colored(n, 0);
  for (std::uint32_t v : order) {
    std::int64_t balance = 0;  // colored neighbors: side1 minus side0
    for (std::uint32_t e = csr.off[v]; e < csr.off[v + 1]; ++e) {
      std::uint32_t w = csr.nbr[e];
      if (colored[w]) balance += res.partition[w] ? 1 : -1;
    }
    std::uint8_t color;
    if (balance > 0)
      color = 0;
    else if (balance < 0)
      color = 1;
    else
      color = rng.next_bool() ? 1 : 0;
    res.partition[v] = color;
    colored[v] = 1;
  }
  res.cut = core::cut_size(g, res.partition);
  return res;
}

// Seeded-random order variant.
inline CutGreedyResult majority_greedy_cut(const Graph& g, Seed seed) {
  SplitRng rng(rng::Seed{rng::mix64(seed.master), seed.stream});
  std::vector<std::uint32_t> order(g.n());
  for (std::uint32_t v = 0; v < g.n(); ++v) order[v] = v;
  for (std::uint32_t i = g.n(); i > 1; --i) {
    std::uint32_t j = static_cast<std::uint32_t>(rng.next_below(i));
    std::swap(order[i - 1], order[j]);
  }
  return majority_greedy_cut(g, order, seed);
}

// --- unit-clause resolution on cut constraints --------------------------------

struct CutUnitResult {
  Partition partition;
  std::uint64_t uncut = 0;
  ResolutionTrace trace;
};

// Edges are want-different constraints.  While some edge has exactly
// one colored endpoint, a uniformly random such edge has its free
// endpoint colored oppositely; when none exists, a random endpoint of
// a random untouched edge is colored by a coin flip.  Runs until every
// edge is adjudicated; vertices in no edge get side 0.
inline CutUnitResult unit_clause_cut(const Graph& g, Seed seed) {
  const std::uint32_t n = g.n();
  const std::size_t m = g.m();
  SplitRng rng(seed);
  auto csr = core::build_csr(g);

  constexpr std::uint32_t npos = 0xFFFFFFFFu;
  std::vector<std::uint8_t> rem(m, 2);
  std::vector<std::uint32_t> unit_list, unit_pos(m, npos);
  std::vector<std::uint32_t> two_list(m), two_pos(m);
  for (std::size_t e = 0; e < m; ++e) {
    two_list[e] = static_cast<std::uint32_t>(e);
    two_pos[e] = static_cast<std::uint32_t>(e);
  }
  std::uint64_t pool = m, units = 0, twos = m, cut = 0, uncut = 0;

  auto drop_two = [&](std::uint32_t e) {
    std::uint32_t at = two_pos[e], last = two_list.back();
    two_list[at] = last;
    two_pos[last] = at;
    two_list.pop_back();
    two_pos[e] = npos;
    --twos;
  };
  auto push_unit = [&](std::uint32_t e) {
    unit_pos[e] = static_cast<std::uint32_t>(unit_list.size());
    unit_list.push_back(e);
    ++units;
  };
  auto drop_unit = [&](std::uint32_t e) {
    std::uint32_t at = unit_pos[e], last = unit_list.back();
    unit_list[at] = last;
    unit_pos[last] = at;
    unit_list.pop_back();
    unit_pos[e] = npos;
    --units;
  };

  CutUnitResult res;
  res.partition.assign(n, 0);
  std::vector<std::uint8_t> colored(n, 0);

  ResolutionTrace& tr = res.trace;
  const std::uint64_t interval = std::max<std::uint64_t>(1, n / 100);
  std::uint64_t steps = 0;
  auto sample = [&] {
    double dn = static_cast<double>(n);
    tr.samples.push_back({static_cast<double>(n - steps) / dn,
                          static_cast<double>(units) / dn,
                          static_cast<double>(twos) / dn});
    tr.counts.push_back({cut, uncut, pool});
  };
  sample();

  auto color_vertex = [&](std::uint32_t v, std::uint8_t side) {
    res.partition[v] = side;
    colored[v] = 1;
    ++steps;
    for (std::uint32_t e = csr.off[v]; e < csr.off[v + 1]; ++e) {
      std::uint32_t ei = csr.eid[e];
      if (rem[ei] == 2) {
        drop_two(ei);
        rem[ei] = 1;
        push_unit(ei);
      } else if (rem[ei] == 1) {
        drop_unit(ei);
        rem[ei] = 0;
        --pool;
        std::uint32_t w = csr.nbr[e];
        if (res.partition[w] != side)
          ++cut;
        else
          ++uncut;
      }
    }
    if (steps % interval == 0) sample();
  };

  while (true) {
    if (!unit_list.empty()) {
      std::uint32_t ei = unit_list[rng.next_below(unit_list.size())];
      auto [u, v] = g.edge(ei);
      std::uint32_t free_end = colored[u] ? v : u;
      std::uint32_t held_end = colored[u] ? u : v;
      color_vertex(free_end, res.partition[held_end] ^ 1);
      continue;
    }
    if (pool == 0) break;
    std::uint32_t ei = two_list[static_cast<std::size_t>(
        rng.next_below(two_list.size()))];
    auto [u, v] = g.edge(ei);
    std::uint32_t pick = rng.next_bool() ? v : u;
    color_vertex(pick, rng.next_bool() ? 1 : 0);
  }
  tr.steps_phaseI_II = steps;
  tr.dissatisfied_unit = uncut;
  res.uncut = uncut;
  return res;
}

}  // namespace heuristics

using heuristics::CutGreedyResult;
using heuristics::CutUnitResult;
using heuristics::GreedyState;
using heuristics::ksat_sequential_greedy;
using heuristics::majority_greedy_cut;
using heuristics::online_lazy;
using heuristics::OnlineResult;
using heuristics::potential_greedy;
using heuristics::PotentialResult;
using heuristics::ResolutionCounts;
using heuristics::ResolutionTrace;
using heuristics::ResolveResult;
using heuristics::unit_clause_cut;
using heuristics::unit_clause_resolve;

}  // namespace phaselab
