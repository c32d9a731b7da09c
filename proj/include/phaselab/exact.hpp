#pragma once
// Exact solvers.
//
// brute_max_sat / brute_max_cut enumerate all assignments for n <= 30:
// the low six variables ride in the 64 lanes of a machine word, the
// remaining variables advance in Gray-code order so each step flips a
// single variable and touches only the clauses containing it.  Scores
// sit in bit-sliced counters (one word per binary digit, one lane per
// assignment); new-maximum candidates are detected with a bit-sliced
// comparison against the running best.  Ties resolve to the
// lexicographically smallest assignment (variable 0 first, false <
// true).
//
// two_sat_solve is the standard implication-graph SCC test (iterative
// Tarjan, linear time) with witness extraction; two_sat_decide wraps
// it.  min_uncut_via_components answers MAX-CUT exactly on graphs
// whose components are all trees or unicyclic.

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "phaselab/core.hpp"

namespace phaselab {
namespace exact {

using core::Assignment;
using core::Formula;
using core::Graph;
using core::Partition;

inline constexpr std::uint32_t brute_budget = 30;

// Lane L of lane_pattern[b] holds bit b of L: the value of low
// variable b in the assignment riding lane L.
inline constexpr std::uint64_t lane_pattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

namespace detail {

// 64 parallel counters, one per lane, bit-sliced across `planes` words.
struct SlicedCounter {
  std::uint64_t plane[32];
  int planes = 0;

  void init(std::uint64_t max_value) {
    planes = std::max(1, static_cast<int>(std::bit_width(max_value)));
    for (int p = 0; p < planes; ++p) plane[p] = 0;
  }
  void add(std::uint64_t mask) {
    for (int p = 0; mask && p < planes; ++p) {
      std::uint64_t t = plane[p];
      plane[p] = t ^ mask;
      mask &= t;
    }
  }
  void sub(std::uint64_t mask) {
    for (int p = 0; mask && p < planes; ++p) {
      std::uint64_t t = plane[p];
      plane[p] = t ^ mask;
      mask &= ~t;
    }
  }
  // Lanes whose counter is >= k (k < 2^planes).
  std::uint64_t ge_mask(std::uint64_t k) const {
    std::uint64_t ge = 0, eq = ~0ull;
    for (int p = planes - 1; p >= 0; --p) {
      std::uint64_t kb = ((k >> p) & 1u) ? ~0ull : 0ull;
      std::uint64_t b = plane[p];
      ge |= eq & b & ~kb;
      eq &= ~(b ^ kb);
    }
    return ge | eq;
  }
  std::uint64_t extract(unsigned lane) const {
    std::uint64_t v = 0;
    for (int p = 0; p < planes; ++p) v |= ((plane[p] >> lane) & 1u) << p;
    return v;
  }
};

// Lexicographic order on assignments packed bit v = value of variable
// v: compare at the lowest differing variable, false < true.
inline bool lex_less(std::uint32_t a, std::uint32_t b) {
  std::uint32_t t = a ^ b;
  if (t == 0) return false;
  return ((a >> std::countr_zero(t)) & 1u) == 0;
}

struct BestTracker {
  std::uint64_t best = 0;
  std::uint32_t packed = 0;

  void consider(std::uint64_t cnt, std::uint32_t assignment) {
    if (cnt > best) {
      best = cnt;
      packed = assignment;
    } else if (cnt == best && lex_less(assignment, packed)) {
      packed = assignment;
    }
  }
};

inline std::uint64_t valid_lane_mask(std::uint32_t n) {
  if (n >= 6) return ~0ull;
  return (1ull << (1u << n)) - 1;
}

}  // namespace detail

struct MaxSatResult {
  std::uint64_t best = 0;
  Assignment witness;
};

inline MaxSatResult brute_max_sat(const Formula& f) {
  const std::uint32_t n = f.n();
  if (n > brute_budget)
    throw resource_limit_error("brute_max_sat: n exceeds enumeration budget " +
                               std::to_string(brute_budget));
  MaxSatResult res;
  res.witness.assign(n, 0);
  const std::uint64_t m = f.size();
  if (m == 0) return res;

  const std::uint32_t nlow = std::min<std::uint32_t>(n, 6);
  const std::uint32_t nhigh = n - nlow;
  const std::uint64_t valid = detail::valid_lane_mask(n);

  // Per-clause: satisfied-lanes word assuming no high literal is true,
  // count of currently-true high literals, current word.
  std::vector<std::uint64_t> low_mask(m, 0), cur(m);
  std::vector<std::int32_t> high_true(m, 0);
  // Occurrences of high variables, CSR-flattened: entry = cid<<1 | neg.
  std::vector<std::uint32_t> occ_off(nhigh + 1, 0), occ;
  for (std::size_t cid = 0; cid < m; ++cid)
    for (core::Literal l : f.clause(cid))
      if (l.var() >= nlow) ++occ_off[l.var() - nlow + 1];
  for (std::size_t i = 1; i < occ_off.size(); ++i) occ_off[i] += occ_off[i - 1];
  occ.resize(occ_off.back());
  {
    std::vector<std::uint32_t> fill(occ_off.begin(), occ_off.end() - 1);
    for (std::size_t cid = 0; cid < m; ++cid)
      for (core::Literal l : f.clause(cid)) {
        if (l.var() < nlow) {
          std::uint64_t w = lane_pattern[l.var()];
          low_mask[cid] |= l.negated() ? ~w : w;
        } else {
          occ[fill[l.var() - nlow]++] =
              (static_cast<std::uint32_t>(cid) << 1) | (l.negated() ? 1u : 0u);
          if (l.negated()) ++high_true[cid];  // all-false start
        }
      }
  }

  detail::SlicedCounter sc;
  sc.init(m);
  for (std::size_t cid = 0; cid < m; ++cid) {
    cur[cid] = high_true[cid] > 0 ? ~0ull : low_mask[cid];
    if (cur[cid]) sc.add(cur[cid]);
  }

  std::uint32_t highval = 0;
  detail::BestTracker bt;
  bt.best = sc.extract(0);  // all-false lane, always valid
  bt.packed = 0;

  auto scan = [&]() {
    std::uint64_t mask = sc.ge_mask(bt.best) & valid;
    while (mask) {
      unsigned lane = static_cast<unsigned>(std::countr_zero(mask));
      mask &= mask - 1;
      bt.consider(sc.extract(lane), lane | (highval << nlow));
    }
  };
  scan();

  const std::uint64_t steps = nhigh == 0 ? 1 : (1ull << nhigh);
  for (std::uint64_t t = 1; t < steps; ++t) {
    const auto h = static_cast<std::uint32_t>(std::countr_zero(t));
    highval ^= 1u << h;
    const bool hv = (highval >> h) & 1u;
    for (std::uint32_t i = occ_off[h]; i < occ_off[h + 1]; ++i) {
      const std::uint32_t cid = occ[i] >> 1;
      const bool neg = occ[i] & 1u;
      high_true[cid] += (hv != neg) ? 1 : -1;
      const std::uint64_t nw = high_true[cid] > 0 ? ~0ull : low_mask[cid];
      if (nw != cur[cid]) {
        const std::uint64_t off = cur[cid] & ~nw;
        const std::uint64_t on = nw & ~cur[cid];
        if (off) sc.sub(off);
        if (on) sc.add(on);
        cur[cid] = nw;
      }
    }
    scan();
  }

  res.best = bt.best;
  for (std::uint32_t v = 0; v < n; ++v)
    res.witness[v] = (bt.packed >> v) & 1u;
  return res;
}

// Parity (XOR) constraint over two boolean variables; endpoint
// `fixed_false` denotes the pinned constant.  want_cut = true asks the
// endpoints to differ.  a == b is allowed (constant constraint).
struct ParityConstraint {
  std::uint32_t a = 0, b = 0;
  bool want_cut = true;

  static constexpr std::uint32_t fixed_false = 0xFFFFFFFFu;
};

struct ParityBruteResult {
  std::uint64_t max_satisfied = 0;
  std::vector<std::uint8_t> values;  // one per free variable
};

inline ParityBruteResult brute_max_parity(
    std::uint32_t nfree, std::span<const ParityConstraint> cons) {
  if (nfree > brute_budget - 1)
    throw resource_limit_error(
        "brute_max_parity: free variable count exceeds enumeration budget");
  ParityBruteResult res;
  res.values.assign(nfree, 0);
  const std::uint64_t m = cons.size();
  if (m == 0) return res;

  const std::uint32_t nlow = std::min<std::uint32_t>(nfree, 6);
  const std::uint32_t nhigh = nfree - nlow;
  const std::uint64_t valid = detail::valid_lane_mask(nfree);

  auto static_word = [&](std::uint32_t x) -> std::uint64_t {
    // Word of variable x with all high variables false.
    if (x == ParityConstraint::fixed_false) return 0;
    if (x < nlow) return lane_pattern[x];
    return 0;
  };

  std::vector<std::uint64_t> cur(m);
  std::vector<std::uint32_t> occ_off(nhigh + 1, 0), occ;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = cons[i];
    if ((c.a != ParityConstraint::fixed_false && c.a >= nfree) ||
        (c.b != ParityConstraint::fixed_false && c.b >= nfree))
      throw std::invalid_argument("brute_max_parity: endpoint out of range");
    // A high endpoint flips the word iff exactly one endpoint is that
    // variable; a == b contributes a constant.
    if (c.a != c.b) {
      if (c.a >= nlow && c.a != ParityConstraint::fixed_false)
        ++occ_off[c.a - nlow + 1];
      if (c.b >= nlow && c.b != ParityConstraint::fixed_false)
        ++occ_off[c.b - nlow + 1];
    }
  }
  for (std::size_t i = 1; i < occ_off.size(); ++i) occ_off[i] += occ_off[i - 1];
  occ.resize(occ_off.back());
  {
    std::vector<std::uint32_t> fill(occ_off.begin(), occ_off.end() - 1);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = cons[i];
      if (c.a != c.b) {
        if (c.a >= nlow && c.a != ParityConstraint::fixed_false)
          occ[fill[c.a - nlow]++] = static_cast<std::uint32_t>(i);
        if (c.b >= nlow && c.b != ParityConstraint::fixed_false)
          occ[fill[c.b - nlow]++] = static_cast<std::uint32_t>(i);
      }
    }
  }

  detail::SlicedCounter sc;
  sc.init(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = cons[i];
    std::uint64_t w = static_word(c.a) ^ static_word(c.b);
    if (!c.want_cut) w = ~w;
    cur[i] = w;
    if (w) sc.add(w);
  }

  std::uint32_t highval = 0;
  detail::BestTracker bt;
  bt.best = sc.extract(0);
  bt.packed = 0;

  auto scan = [&]() {
    std::uint64_t mask = sc.ge_mask(bt.best) & valid;
    while (mask) {
      unsigned lane = static_cast<unsigned>(std::countr_zero(mask));
      mask &= mask - 1;
      bt.consider(sc.extract(lane), lane | (highval << nlow));
    }
  };
  scan();

  const std::uint64_t steps = nhigh == 0 ? 1 : (1ull << nhigh);
  for (std::uint64_t t = 1; t < steps; ++t) {
    const auto h = static_cast<std::uint32_t>(std::countr_zero(t));
    highval ^= 1u << h;
    for (std::uint32_t i = occ_off[h]; i < occ_off[h + 1]; ++i) {
      const std::uint32_t cid = occ[i];
      const std::uint64_t nw = ~cur[cid];
      sc.sub(cur[cid] & ~nw);
      sc.add(nw & ~cur[cid]);
      cur[cid] = nw;
    }
    scan();
  }

  res.max_satisfied = bt.best;
  for (std::uint32_t v = 0; v < nfree; ++v)
    res.values[v] = (bt.packed >> v) & 1u;
  return res;
}

struct MaxCutResult {
  std::uint64_t best = 0;
  Partition witness;
};

// Enumerates the 2^(n-1) partitions with vertex 0 pinned to side 0.
inline MaxCutResult brute_max_cut(const Graph& g) {
  const std::uint32_t n = g.n();
  if (n > brute_budget)
    throw resource_limit_error("brute_max_cut: n exceeds enumeration budget " +
                               std::to_string(brute_budget));
  MaxCutResult res;
  res.witness.assign(n, 0);
  if (g.m() == 0 || n == 0) return res;

  std::vector<ParityConstraint> cons;
  cons.reserve(g.m());
  for (auto [u, v] : g.edges())
    cons.push_back({u == 0 ? ParityConstraint::fixed_false : u - 1,
                    v == 0 ? ParityConstraint::fixed_false : v - 1, true});
  auto pr = brute_max_parity(n - 1, cons);
  res.best = pr.max_satisfied;
  for (std::uint32_t v = 1; v < n; ++v) res.witness[v] = pr.values[v - 1];
  return res;
}

// --- 2-SAT ---------------------------------------------------------------

// Satisfying assignment via strongly connected components of the
// implication digraph (node id = literal code), or nullopt when some
// variable shares a component with its negation.
inline std::optional<Assignment> two_sat_solve(const Formula& f) {
  const std::uint32_t n = f.n();
  const std::uint32_t nodes = 2 * n;
  std::vector<std::uint32_t> eoff(nodes + 1, 0), enext;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto c = f.clause(i);
    if (c.size() > 2)
      throw std::invalid_argument("two_sat: clause arity exceeds 2");
    if (c.size() == 2) {
      ++eoff[(~c[0]).code + 1];
      ++eoff[(~c[1]).code + 1];
    } else {
      ++eoff[(~c[0]).code + 1];
    }
  }
  for (std::size_t i = 1; i < eoff.size(); ++i) eoff[i] += eoff[i - 1];
  enext.resize(eoff.back());
  {
    std::vector<std::uint32_t> fill(eoff.begin(), eoff.end() - 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto c = f.clause(i);
      if (c.size() == 2) {
        enext[fill[(~c[0]).code]++] = c[1].code;
        enext[fill[(~c[1]).code]++] = c[0].code;
      } else {
        enext[fill[(~c[0]).code]++] = c[0].code;
      }
    }
  }

  // Iterative Tarjan; component ids increase in completion order,
  // which is reverse topological order of the condensation.
  constexpr std::uint32_t unvisited = 0xFFFFFFFFu;
  std::vector<std::uint32_t> index(nodes, unvisited), low(nodes),
      comp(nodes, unvisited), stack;
  std::vector<std::uint8_t> on_stack(nodes, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> frames;  // node, edge pos
  std::uint32_t next_index = 0, next_comp = 0;
  stack.reserve(nodes);

  for (std::uint32_t s = 0; s < nodes; ++s) {
    if (index[s] != unvisited) continue;
    frames.emplace_back(s, eoff[s]);
    index[s] = low[s] = next_index++;
    stack.push_back(s);
    on_stack[s] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < eoff[v + 1]) {
        std::uint32_t w = enext[pos++];
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, eoff[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          while (true) {
            std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
        std::uint32_t vv = v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().first] =
              std::min(low[frames.back().first], low[vv]);
      }
    }
  }

  Assignment a(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
    // Completion order is reverse-topological: a literal is set true
    // when its component is implied-by (completes before) its negation's.
    a[v] = comp[2 * v] < comp[2 * v + 1] ? 1 : 0;
  }
  return a;
}

inline bool two_sat_decide(const Formula& f) {
  return two_sat_solve(f).has_value();
}

// --- component-exact MAX-CUT --------------------------------------------

// Minimum uncut edge count when every component is a tree or
// unicyclic: one per odd (non-bipartite) unicyclic component.
// Returns nullopt when a complex component is present.
inline std::optional<std::uint64_t> min_uncut_via_components(const Graph& g) {
  const std::uint32_t n = g.n();
  std::vector<std::uint32_t> parent(n);
  for (std::uint32_t v = 0; v < n; ++v) parent[v] = v;
  std::vector<std::uint32_t> rank_(n, 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (auto [u, v] : g.edges()) {
    std::uint32_t a = find(u), b = find(v);
    if (a == b) continue;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }
  std::vector<std::uint32_t> comp_size(n, 0), comp_edges(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) ++comp_size[find(v)];
  for (auto [u, v] : g.edges()) ++comp_edges[find(u)];
  for (std::uint32_t r = 0; r < n; ++r) {
    if (comp_size[r] == 0) continue;
    if (comp_edges[r] + 1 >= comp_size[r] + 2) return std::nullopt;  // complex
  }

  // 2-color everything; a coloring conflict marks its component odd.
  auto csr = core::build_csr(g);
  std::vector<std::uint8_t> color(n, 2);
  std::vector<std::uint8_t> odd(n, 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (color[s] != 2) continue;
    color[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      std::uint32_t v = queue.back();
      queue.pop_back();
      for (std::uint32_t w : csr.neighbors(v)) {
        if (color[w] == 2) {
          color[w] = color[v] ^ 1u;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          odd[find(v)] = 1;
        }
      }
    }
  }
  std::uint64_t count = 0;
  for (std::uint32_t r = 0; r < n; ++r)
    if (comp_size[r] > 0 && odd[r]) ++count;
  return count;
}

}  // namespace exact

using exact::brute_budget;
using exact::brute_max_cut;
using exact::brute_max_sat;
using exact::MaxCutResult;
using exact::MaxSatResult;
using exact::min_uncut_via_components;
using exact::two_sat_decide;
using exact::two_sat_solve;

}  // namespace phaselab
