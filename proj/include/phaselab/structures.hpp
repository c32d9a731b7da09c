#pragma once
// Structural analyzers: bicycle chains in the implication digraph of a
// 2-CNF formula, 2-core peeling, contraction of the core to a kernel
// multigraph with parity bookkeeping, component taxonomy, and an exact/
// local-search optimizer for the kernel's cut/uncut constraint system.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "phaselab/core.hpp"
#include "phaselab/rng.hpp"

namespace phaselab::structures {

// A chain of k+1 clauses reading u -> w1 -> ... -> wk -> v in the
// implication digraph: clause t+1 is {~w_t, w_{t+1}}, the first clause is
// {~u, w1}, the last {~wk, v}.  Interior variables are pairwise distinct
// and both endpoints land back on interior variables: u = ±w_i, v = ±w_j.
struct Bicycle {
  std::vector<std::uint32_t> clause_indices;  // k+1 clause positions in F
  core::Literal u, v;                         // wheel endpoints
  std::uint32_t i = 0, j = 0;                 // 1-based attachment positions
  std::uint32_t length = 0;                   // k, the interior path length
};

// Step budget for enumerate_bicycles: every path extension and every
// endpoint-pairing attempt costs one unit.
inline constexpr std::uint64_t bicycle_budget = 50'000'000;

// All bicycles with interior length <= k_max, found by depth-first walks
// over the implication digraph.  Each bicycle is identified by its ordered
// clause-index tuple; a chain and its literal-complemented reversal are the
// same object and are reported once, as the lexicographically smaller
// tuple.  Requires a pure 2-CNF formula; throws resource_limit_error once
// the walk exceeds `budget` steps.
inline std::vector<Bicycle> enumerate_bicycles(
    const core::Formula& f, std::uint32_t k_max,
    std::uint64_t budget = bicycle_budget) {
  const std::uint32_t n = f.n();
  const std::size_t m = f.size();
  for (std::size_t ci = 0; ci < m; ++ci)
    if (f.clause(ci).size() != 2)
      throw std::invalid_argument(
          "enumerate_bicycles: clause arity must be 2");

  // Implication arcs in flat adjacency form keyed by literal code: a
  // clause {a, b} yields ~a -> b and ~b -> a; in_* mirrors out_*.
  struct Arc {
    core::Literal lit;
    std::uint32_t clause;
  };
  std::vector<std::uint32_t> out_off(2 * n + 1, 0), in_off(2 * n + 1, 0);
  for (std::size_t ci = 0; ci < m; ++ci) {
    auto cl = f.clause(ci);
    ++out_off[(~cl[0]).code + 1];
    ++out_off[(~cl[1]).code + 1];
    ++in_off[cl[0].code + 1];
    ++in_off[cl[1].code + 1];
  }
  for (std::uint32_t l = 0; l < 2 * n; ++l) {
    out_off[l + 1] += out_off[l];
    in_off[l + 1] += in_off[l];
  }
  std::vector<Arc> out_arc(2 * m), in_arc(2 * m);
  {
    std::vector<std::uint32_t> ofill(out_off.begin(), out_off.end() - 1);
    std::vector<std::uint32_t> ifill(in_off.begin(), in_off.end() - 1);
    for (std::size_t ci = 0; ci < m; ++ci) {
      auto cl = f.clause(ci);
      core::Literal a = cl[0], b = cl[1];
      auto idx = static_cast<std::uint32_t>(ci);
      out_arc[ofill[(~a).code]++] = {b, idx};
      out_arc[ofill[(~b).code]++] = {a, idx};
      in_arc[ifill[b.code]++] = {~a, idx};
      in_arc[ifill[a.code]++] = {~b, idx};
    }
  }

  std::vector<Bicycle> found;
  std::unordered_set<std::string> seen;
  std::uint64_t steps = 0;
  const auto charge = [&](std::uint64_t units) {
    steps += units;
    if (steps > budget)
      throw resource_limit_error("enumerate_bicycles: step budget exceeded");
  };

  // pos_of[v] = 1-based position of variable v on the current path, 0 if
  // absent.  The explicit frame stack keeps the walk depth off the C stack.
  std::vector<std::uint32_t> pos_of(n, 0);
  std::vector<core::Literal> path;
  std::vector<std::uint32_t> path_clauses;
  struct Frame {
    core::Literal lit;
    std::uint32_t next_arc;
  };
  std::vector<Frame> stack;
  std::vector<std::uint32_t> tuple, rev;

  const auto try_attach = [&](core::Literal start) {
    const std::uint32_t k = static_cast<std::uint32_t>(path.size());
    for (std::uint32_t ue = in_off[start.code]; ue < in_off[start.code + 1];
         ++ue) {
      const Arc& ua = in_arc[ue];
      std::uint32_t i = pos_of[ua.lit.var()];
      if (i == 0) continue;
      const std::uint32_t vcode = path.back().code;
      for (std::uint32_t ve = out_off[vcode]; ve < out_off[vcode + 1]; ++ve) {
        const Arc& va = out_arc[ve];
        charge(1);
        std::uint32_t j = pos_of[va.lit.var()];
        if (j == 0 || va.clause == ua.clause) continue;
        tuple.assign(1, ua.clause);
        tuple.insert(tuple.end(), path_clauses.begin(), path_clauses.end());
        tuple.push_back(va.clause);
        rev.assign(tuple.rbegin(), tuple.rend());
        if (rev < tuple) continue;  // reported from the other direction
        std::string key(reinterpret_cast<const char*>(tuple.data()),
                        tuple.size() * sizeof(std::uint32_t));
        if (!seen.insert(std::move(key)).second) continue;
        found.push_back(Bicycle{tuple, ua.lit, va.lit, i, j, k});
      }
    }
  };

  const std::uint32_t depth_cap = std::min(k_max, n);
  for (std::uint32_t code = 0; code < 2 * n && depth_cap >= 2; ++code) {
    core::Literal start{code};
    stack.assign(1, Frame{start, 0});
    path.assign(1, start);
    path_clauses.clear();
    pos_of[start.var()] = 1;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const std::uint32_t base = out_off[fr.lit.code];
      const std::uint32_t deg = out_off[fr.lit.code + 1] - base;
      if (fr.next_arc < deg && path.size() < depth_cap) {
        const Arc& a = out_arc[base + fr.next_arc++];
        charge(1);
        if (pos_of[a.lit.var()] != 0) continue;
        path.push_back(a.lit);
        path_clauses.push_back(a.clause);
        pos_of[a.lit.var()] = static_cast<std::uint32_t>(path.size());
        stack.push_back(Frame{a.lit, 0});
        try_attach(start);
      } else {
        pos_of[fr.lit.var()] = 0;
        stack.pop_back();
        if (!path_clauses.empty()) path_clauses.pop_back();
        path.pop_back();
      }
    }
  }
  return found;
}

// Recovers the interior literals of a bicycle from its clause tuple and
// reports whether it certifies unsatisfiability: u = ~w_i and v = ~w_j
// with i <= j forces w_i true and w_j false along the same implication
// chain, so no assignment satisfies all k+1 clauses.
inline bool is_bad_bicycle(const Bicycle& b, const core::Formula& f) {
  if (b.clause_indices.size() < 2) return false;
  auto other = [&](std::uint32_t ci, core::Literal known) {
    auto cl = f.clause(ci);
    return cl[0] == known ? cl[1] : cl[0];
  };
  core::Literal w = other(b.clause_indices[0], ~b.u);  // w1
  core::Literal wi, wj;
  if (b.i == 1) wi = w;
  if (b.j == 1) wj = w;
  for (std::uint32_t t = 1; t < b.length; ++t) {
    w = other(b.clause_indices[t], ~w);  // w_{t+1}
    if (b.i == t + 1) wi = w;
    if (b.j == t + 1) wj = w;
  }
  return b.u == ~wi && b.v == ~wj && b.i <= b.j;
}

// Iteratively removes vertices of degree <= 1.  The result keeps the
// original vertex ids (peeled vertices simply become isolated) and
// contains exactly the edges of the 2-core, parallel edges included.
inline core::Graph two_core(const core::Graph& g) {
  auto csr = core::build_csr(g);
  std::vector<std::uint32_t> deg(g.n());
  for (std::uint32_t v = 0; v < g.n(); ++v) deg[v] = csr.off[v + 1] - csr.off[v];
  std::vector<std::uint8_t> dead(g.m(), 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < g.n(); ++v)
    if (deg[v] <= 1) queue.push_back(v);
  while (!queue.empty()) {
    std::uint32_t v = queue.back();
    queue.pop_back();
    if (deg[v] == 0) continue;
    for (std::uint32_t e = csr.off[v]; e < csr.off[v + 1]; ++e) {
      std::uint32_t eid = csr.eid[e];
      if (dead[eid]) continue;
      dead[eid] = 1;
      --deg[v];
      std::uint32_t u = csr.nbr[e];
      if (--deg[u] == 1) queue.push_back(u);
    }
  }
  core::Graph core_g(g.n());
  for (std::size_t e = 0; e < g.m(); ++e)
    if (!dead[e]) {
      auto [u, v] = g.edge(e);
      core_g.add_edge(u, v);
    }
  return core_g;
}

// One contracted edge of the kernel: a maximal chain of degree-2 core
// vertices between two branch vertices (possibly the same one).
struct KernelEdge {
  std::uint32_t a = 0, b = 0;              // branch endpoints, original ids
  std::vector<std::uint32_t> interior;     // contracted chain, a-side first
  std::uint64_t path_length = 1;           // interior.size() + 1 core edges
  bool odd = true;                         // path_length % 2 == 1
};

// The 2-core with every maximal degree-2 chain replaced by a single edge.
// Core components that are bare cycles (no vertex of degree >= 3) carry no
// kernel structure and are reported separately as vertex sequences.
struct KernelGraph {
  std::uint32_t n = 0;                     // vertex count of the source graph
  std::vector<std::uint32_t> vertices;     // branch vertices, ascending
  std::vector<KernelEdge> edges;
  std::vector<std::vector<std::uint32_t>> bare_cycles;
};

inline KernelGraph kernel(const core::Graph& g) {
  core::Graph core_g = two_core(g);
  auto csr = core::build_csr(core_g);
  std::vector<std::uint32_t> deg(core_g.n());
  for (std::uint32_t v = 0; v < core_g.n(); ++v)
    deg[v] = csr.off[v + 1] - csr.off[v];

  KernelGraph k;
  k.n = g.n();
  for (std::uint32_t v = 0; v < core_g.n(); ++v)
    if (deg[v] >= 3) k.vertices.push_back(v);

  // Walks from a used core edge to the next branch vertex, consuming the
  // degree-2 chain in between.
  std::vector<std::uint8_t> used(core_g.m(), 0);
  const auto step_from = [&](std::uint32_t at, std::uint32_t came_eid,
                             std::uint32_t* next_eid) {
    for (std::uint32_t e = csr.off[at]; e < csr.off[at + 1]; ++e) {
      if (csr.eid[e] == came_eid || used[csr.eid[e]]) continue;
      *next_eid = csr.eid[e];
      return csr.nbr[e];
    }
    return at;  // unreachable on a degree-2 interior vertex
  };

  for (std::uint32_t a : k.vertices) {
    for (std::uint32_t e = csr.off[a]; e < csr.off[a + 1]; ++e) {
      std::uint32_t eid = csr.eid[e];
      if (used[eid]) continue;
      used[eid] = 1;
      KernelEdge ke;
      ke.a = a;
      std::uint32_t cur = csr.nbr[e];
      while (deg[cur] == 2) {
        ke.interior.push_back(cur);
        std::uint32_t next_eid = 0;
        cur = step_from(cur, eid, &next_eid);
        eid = next_eid;
        used[eid] = 1;
      }
      ke.b = cur;
      ke.path_length = ke.interior.size() + 1;
      ke.odd = (ke.path_length % 2) == 1;
      k.edges.push_back(std::move(ke));
    }
  }

  // Whatever core edges remain belong to components made entirely of
  // degree-2 vertices: bare cycles.
  for (std::size_t e0 = 0; e0 < core_g.m(); ++e0) {
    if (used[e0]) continue;
    used[e0] = 1;
    auto [u, v] = core_g.edge(e0);
    std::vector<std::uint32_t> cycle{u};
    std::uint32_t eid = static_cast<std::uint32_t>(e0), cur = v;
    while (cur != u) {
      cycle.push_back(cur);
      std::uint32_t next_eid = 0;
      cur = step_from(cur, eid, &next_eid);
      eid = next_eid;
      used[eid] = 1;
    }
    k.bare_cycles.push_back(std::move(cycle));
  }
  return k;
}

enum class ComponentClass { tree, unicyclic, complex };

struct ComponentInfo {
  std::uint32_t size = 0;
  std::uint64_t edges = 0;
  ComponentClass cls = ComponentClass::tree;
};

struct ComponentReport {
  std::vector<ComponentInfo> components;  // in order of smallest vertex id
  std::uint32_t giant = 0;                // size of the largest component
  std::uint64_t odd_unicyclic = 0;        // unicyclic with an odd cycle
};

// Breadth-first component scan with 2-coloring.  The class follows the
// edge/vertex excess (-1 tree, 0 unicyclic, >0 complex); a unicyclic
// component's cycle is odd exactly when the component is not bipartite.
inline ComponentReport classify_components(const core::Graph& g) {
  auto csr = core::build_csr(g);
  std::vector<std::int8_t> color(g.n(), -1);
  std::vector<std::uint32_t> frontier;
  ComponentReport rep;
  for (std::uint32_t s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    frontier.assign(1, s);
    std::uint32_t size = 0;
    std::uint64_t half_edges = 0;
    bool bipartite = true;
    while (!frontier.empty()) {
      std::uint32_t v = frontier.back();
      frontier.pop_back();
      ++size;
      for (std::uint32_t e = csr.off[v]; e < csr.off[v + 1]; ++e) {
        ++half_edges;
        std::uint32_t u = csr.nbr[e];
        if (color[u] < 0) {
          color[u] = static_cast<std::int8_t>(1 - color[v]);
          frontier.push_back(u);
        } else if (color[u] == color[v]) {
          bipartite = false;
        }
      }
    }
    ComponentInfo info;
    info.size = size;
    info.edges = half_edges / 2;
    if (info.edges + 1 == size) {
      info.cls = ComponentClass::tree;
    } else if (info.edges == size) {
      info.cls = ComponentClass::unicyclic;
      if (!bipartite) ++rep.odd_unicyclic;
    } else {
      info.cls = ComponentClass::complex;
    }
    rep.giant = std::max(rep.giant, size);
    rep.components.push_back(info);
  }
  return rep;
}

struct CutBoundResult {
  std::uint64_t violated = 0;   // minimum failed constraints found
  std::uint64_t satisfied = 0;  // kernel edges minus violated
  bool exact = false;           // true when the minimum is certified
};

// Vertex count up to which kernel_cut_bound enumerates all side choices.
inline constexpr std::uint32_t kernel_brute_vertices = 30;

// Two-sides the kernel vertices to minimize failed parity constraints: an
// odd edge wants its endpoints on opposite sides, an even edge on the same
// side.  Exhaustive (Gray-code) search when the kernel has at most
// kernel_brute_vertices vertices; otherwise 32 seeded single-flip
// local-search restarts, reporting the best local minimum.
inline CutBoundResult kernel_cut_bound(const KernelGraph& k, Seed seed = {}) {
  std::vector<std::uint32_t> dense(k.n, 0);
  const auto nv = static_cast<std::uint32_t>(k.vertices.size());
  for (std::uint32_t i = 0; i < nv; ++i) dense[k.vertices[i]] = i;

  struct Constraint {
    std::uint32_t a, b;
    bool want_cut;
  };
  std::vector<Constraint> cons;
  std::uint64_t fixed_violated = 0;
  for (const KernelEdge& e : k.edges) {
    if (e.a == e.b) {
      // A chain from a vertex back to itself can never be cut.
      if (e.odd) ++fixed_violated;
    } else {
      cons.push_back({dense[e.a], dense[e.b], e.odd});
    }
  }

  CutBoundResult r;
  if (cons.empty() || nv <= 1) {
    r.violated = fixed_violated + [&] {
      std::uint64_t v = 0;
      for (const Constraint& c : cons) v += c.want_cut ? 1 : 0;
      return v;
    }();
    r.satisfied = k.edges.size() - r.violated;
    r.exact = true;
    return r;
  }

  std::vector<std::vector<std::uint32_t>> incident(nv);
  for (std::uint32_t ci = 0; ci < cons.size(); ++ci) {
    incident[cons[ci].a].push_back(ci);
    incident[cons[ci].b].push_back(ci);
  }
  std::vector<std::uint8_t> side(nv, 0), viol(cons.size(), 0);
  const auto count_violated = [&] {
    std::uint64_t total = 0;
    for (std::uint32_t ci = 0; ci < cons.size(); ++ci) {
      bool cut = side[cons[ci].a] != side[cons[ci].b];
      viol[ci] = cut != cons[ci].want_cut;
      total += viol[ci];
    }
    return total;
  };

  std::uint64_t best;
  if (nv <= kernel_brute_vertices) {
    // Gray-code walk over the sides of vertices 1..nv-1 (vertex 0 pinned).
    std::uint64_t cur = count_violated();
    best = cur;
    const std::uint64_t span = 1ull << (nv - 1);
    for (std::uint64_t g = 1; g < span; ++g) {
      auto flip = static_cast<std::uint32_t>(std::countr_zero(g)) + 1;
      side[flip] ^= 1;
      for (std::uint32_t ci : incident[flip]) {
        bool cut = side[cons[ci].a] != side[cons[ci].b];
        std::uint8_t bad = cut != cons[ci].want_cut;
        cur += bad;
        cur -= viol[ci];
        viol[ci] = bad;
      }
      best = std::min(best, cur);
    }
    r.exact = true;
  } else {
    SplitRng rng(seed);
    best = cons.size() + 1;
    for (int restart = 0; restart < 32; ++restart) {
      for (auto& s : side) s = rng.next_bool() ? 1 : 0;
      std::uint64_t cur = count_violated();
      bool improved = true;
      while (improved) {
        improved = false;
        for (std::uint32_t v = 0; v < nv; ++v) {
          std::int64_t delta = 0;
          for (std::uint32_t ci : incident[v])
            delta += viol[ci] ? -1 : 1;
          if (delta < 0) {
            side[v] ^= 1;
            for (std::uint32_t ci : incident[v]) {
              viol[ci] ^= 1;
              cur = viol[ci] ? cur + 1 : cur - 1;
            }
            improved = true;
          }
        }
      }
      best = std::min(best, cur);
    }
    r.exact = false;
  }

  r.violated = fixed_violated + best;
  r.satisfied = k.edges.size() - r.violated;
  return r;
}

}  // namespace phaselab::structures

namespace phaselab {
using structures::bicycle_budget;
using structures::Bicycle;
using structures::classify_components;
using structures::ComponentClass;
using structures::ComponentInfo;
using structures::ComponentReport;
using structures::CutBoundResult;
using structures::enumerate_bicycles;
using structures::is_bad_bicycle;
using structures::kernel;
using structures::kernel_cut_bound;
using structures::KernelEdge;
using structures::KernelGraph;
using structures::two_core;
}  // namespace phaselab
