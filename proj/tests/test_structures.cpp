#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include "phaselab/exact.hpp"
#include "phaselab/generators.hpp"
#include "phaselab/structures.hpp"

using namespace phaselab;
using core::Literal;
using Catch::Approx;

namespace {

// Reconstructs the interior literal chain and asserts every structural
// invariant of a reported bicycle.
void check_bicycle(const Bicycle& b, const Formula& f) {
  REQUIRE(b.length >= 2);
  REQUIRE(b.clause_indices.size() == b.length + 1);
  auto other = [&](std::uint32_t ci, Literal known) {
    auto cl = f.clause(ci);
    REQUIRE(cl.size() == 2);
    REQUIRE((cl[0] == known || cl[1] == known));
    return cl[0] == known ? cl[1] : cl[0];
  };
  std::vector<Literal> w(b.length);
  w[0] = other(b.clause_indices[0], ~b.u);
  for (std::uint32_t t = 1; t < b.length; ++t)
    w[t] = other(b.clause_indices[t], ~w[t - 1]);
  Literal tail = other(b.clause_indices[b.length], ~w[b.length - 1]);
  REQUIRE(tail == b.v);
  std::set<std::uint32_t> vars;
  for (Literal l : w) vars.insert(l.var());
  REQUIRE(vars.size() == b.length);  // interior variables distinct
  REQUIRE(b.i >= 1);
  REQUIRE(b.i <= b.length);
  REQUIRE(b.j >= 1);
  REQUIRE(b.j <= b.length);
  REQUIRE(b.u.var() == w[b.i - 1].var());
  REQUIRE(b.v.var() == w[b.j - 1].var());
  std::vector<std::uint32_t> rev(b.clause_indices.rbegin(),
                                 b.clause_indices.rend());
  REQUIRE(!(rev < b.clause_indices));  // canonical direction reported
}

// Expected number of reversal-deduplicated bicycles in F(n, m): sum over
// interior length k of  2^k (n)_k * 4(k-1)^2 * (m)_{k+1} / (2n(n-1))^{k+1},
// halved because a chain and its reversal share one clause tuple.  The
// factor 2(k-1) counts the signed attachment choices at each end (the
// endpoint variable cannot sit at the near end of the path, or the closing
// clause would need a repeated variable).
double expected_bicycles_exact(std::uint32_t n, std::uint32_t m) {
  long double p = 1.0L / (2.0L * n * (n - 1));
  long double total = 0;
  for (std::uint32_t k = 2; k <= n && k + 1 <= m; ++k) {
    long double term = 1;
    for (std::uint32_t t = 0; t < k; ++t) term *= 2.0L * (n - t) * p;
    for (std::uint32_t t = 0; t <= k; ++t) term *= (m - t);
    term *= p;
    term *= 4.0L * (k - 1) * (k - 1);
    total += term;
  }
  return static_cast<double>(total / 2);
}

Formula gadget() {
  Formula f(3);
  f.add_clause({Literal::neg(0), Literal::pos(1)});
  f.add_clause({Literal::neg(1), Literal::neg(0)});
  f.add_clause({Literal::pos(0), Literal::pos(2)});
  f.add_clause({Literal::neg(2), Literal::pos(0)});
  return f;
}

Formula subformula(const Formula& f, const std::vector<std::uint32_t>& cis) {
  Formula sub(f.n());
  for (auto ci : cis) sub.add_clause(f.clause(ci));
  return sub;
}

}  // namespace

TEST_CASE("enumerate_bicycles finds the textbook chain") {
  Formula f = gadget();
  REQUIRE_FALSE(two_sat_decide(f));
  auto bikes = enumerate_bicycles(f, 3);
  REQUIRE(!bikes.empty());
  bool saw_len3 = false, saw_bad = false;
  for (const auto& b : bikes) {
    check_bicycle(b, f);
    if (b.length == 3) saw_len3 = true;
    if (is_bad_bicycle(b, f)) {
      saw_bad = true;
      CHECK_FALSE(two_sat_decide(subformula(f, b.clause_indices)));
    }
  }
  CHECK(saw_len3);
  CHECK(saw_bad);

  CHECK(enumerate_bicycles(Formula(4), 4).empty());
  Formula wide(3);
  wide.add_clause({Literal::pos(0), Literal::pos(1), Literal::pos(2)});
  CHECK_THROWS_AS(enumerate_bicycles(wide, 3), std::invalid_argument);
}

TEST_CASE("enumerate_bicycles respects its step budget") {
  Formula f = gen_ksat(30, 200, 2, Seed{11, 0});
  CHECK_THROWS_AS(enumerate_bicycles(f, 30, 2000), resource_limit_error);
}

TEST_CASE("bicycle structure and dedup on random formulas") {
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    Formula f = gen_ksat(12, 14, 2, Seed{3100 + s, 0});
    auto bikes = enumerate_bicycles(f, 12);
    std::set<std::vector<std::uint32_t>> keys;
    for (const auto& b : bikes) {
      check_bicycle(b, f);
      CHECK(keys.insert(b.clause_indices).second);  // no duplicates
      if (is_bad_bicycle(b, f))
        CHECK_FALSE(two_sat_decide(subformula(f, b.clause_indices)));
    }
    total += bikes.size();
  }
  CHECK(total > 0);
}

TEST_CASE("unsatisfiable formulas contain bicycles, satisfiable no bad ones") {
  int unsat_seen = 0;
  for (std::uint64_t s = 0; s < 400; ++s) {
    std::uint32_t n = 4 + s % 13;  // up to 16
    auto m = static_cast<std::uint64_t>(1.7 * n);
    Formula f = gen_ksat(n, m, 2, Seed{3500 + s, 0});
    bool sat = two_sat_decide(f);
    auto bikes = enumerate_bicycles(f, n);
    if (!sat) {
      ++unsat_seen;
      REQUIRE(!bikes.empty());
    } else {
      for (const auto& b : bikes) CHECK_FALSE(is_bad_bicycle(b, f));
    }
  }
  CHECK(unsat_seen >= 50);
}

TEST_CASE("mean bicycle count matches the tuple combinatorics") {
  struct Point {
    std::uint32_t n, m;
    std::uint64_t salt;
  };
  for (Point pt : {Point{10, 9, 40}, Point{12, 6, 41}}) {
    const std::uint64_t trials = 200000;
    std::uint64_t count = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Formula f = gen_ksat(pt.n, pt.m, 2, Seed{pt.salt, t});
      count += enumerate_bicycles(f, pt.n).size();
    }
    double mean = static_cast<double>(count) / trials;
    double expect = expected_bicycles_exact(pt.n, pt.m);
    double margin = 6.0 * std::sqrt(expect / trials) + 0.02 * expect;
    INFO("n=" << pt.n << " m=" << pt.m << " mean=" << mean
              << " expect=" << expect);
    CHECK(std::abs(mean - expect) <= margin);
  }
}

TEST_CASE("subcritical bicycle counts decay like 1/n") {
  // Each point is anchored to the exact tuple expectation; the fitted
  // slope then confirms the 1/n law.  Over this n range the exact
  // expectation itself fits to slope -0.93 (falling-factorial terms
  // suppress the smaller n), so the slope band is centred there rather
  // than on the n -> infinity value of -1.  Counts are overdispersed
  // (one dense cluster yields several chains, var/mean ~ 2.5), which
  // the per-point margins account for.
  const std::uint32_t ns[4] = {250, 500, 1000, 2000};
  const std::uint64_t trials[4] = {20000, 40000, 80000, 160000};
  double lx[4], ly[4];
  for (std::uint64_t pt = 0; pt < 4; ++pt) {
    std::uint64_t count = 0;
    for (std::uint64_t t = 0; t < trials[pt]; ++t) {
      Formula f = gen_ksat(ns[pt], ns[pt] / 2, 2, Seed{9500 + pt, t});
      count += enumerate_bicycles(f, ns[pt]).size();
    }
    double mean = static_cast<double>(count) / trials[pt];
    double expect = expected_bicycles_exact(ns[pt], ns[pt] / 2);
    double margin =
        4.5 * std::sqrt(2.5 * expect / trials[pt]) + 0.02 * expect;
    INFO("n=" << ns[pt] << " mean=" << mean << " expect=" << expect);
    CHECK(std::abs(mean - expect) <= margin);
    lx[pt] = std::log(static_cast<double>(ns[pt]));
    ly[pt] = std::log(mean);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::uint64_t pt = 0; pt < 4; ++pt) {
    sx += lx[pt];
    sy += ly[pt];
    sxx += lx[pt] * lx[pt];
    sxy += lx[pt] * ly[pt];
  }
  double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
  INFO("log-log slope = " << slope);
  CHECK(slope >= -1.15);
  CHECK(slope <= -0.72);
}

TEST_CASE("two_core peels down to the cycle-bearing remainder") {
  // Random trees peel to nothing.
  for (std::uint64_t s = 0; s < 10; ++s) {
    Graph tree(40);
    SplitRng rng(Seed{s, 7});
    for (std::uint32_t v = 1; v < 40; ++v)
      tree.add_edge(v, static_cast<std::uint32_t>(rng.next_below(v)));
    CHECK(two_core(tree).m() == 0);
  }

  // A 5-cycle with a pendant edge keeps exactly the cycle.
  Graph g(6);
  for (std::uint32_t v = 0; v < 5; ++v) g.add_edge(v, (v + 1) % 5);
  g.add_edge(2, 5);
  Graph core_g = two_core(g);
  CHECK(core_g.m() == 5);
  for (std::size_t e = 0; e < core_g.m(); ++e) {
    auto [u, v] = core_g.edge(e);
    CHECK(u != 5);
    CHECK(v != 5);
  }

  // Theta graph: already min-degree 2, unchanged.
  Graph theta(5);
  theta.add_edge(0, 1);
  theta.add_edge(0, 2);
  theta.add_edge(2, 1);
  theta.add_edge(0, 3);
  theta.add_edge(3, 4);
  theta.add_edge(4, 1);
  CHECK(two_core(theta).m() == 6);

  // Long pendant chains peel iteratively.
  Graph chain(8);
  chain.add_edge(0, 1);
  chain.add_edge(1, 2);
  chain.add_edge(2, 3);
  for (std::uint32_t v = 3; v < 7; ++v) chain.add_edge(v, v + 1);
  chain.add_edge(7, 3);  // cycle 3-4-5-6-7
  Graph cc = two_core(chain);
  CHECK(cc.m() == 5);
}

TEST_CASE("kernel contracts chains and reports bare cycles") {
  // Bare 6-cycle: empty kernel, one reported cycle.
  Graph c6(6);
  for (std::uint32_t v = 0; v < 6; ++v) c6.add_edge(v, (v + 1) % 6);
  KernelGraph k6 = kernel(c6);
  CHECK(k6.vertices.empty());
  CHECK(k6.edges.empty());
  REQUIRE(k6.bare_cycles.size() == 1);
  CHECK(k6.bare_cycles[0].size() == 6);

  // Theta with chain lengths 1, 2, 3.
  Graph theta(5);
  theta.add_edge(0, 1);
  theta.add_edge(0, 2);
  theta.add_edge(2, 1);
  theta.add_edge(0, 3);
  theta.add_edge(3, 4);
  theta.add_edge(4, 1);
  KernelGraph kt = kernel(theta);
  CHECK(kt.vertices == std::vector<std::uint32_t>{0, 1});
  REQUIRE(kt.edges.size() == 3);
  std::vector<std::uint64_t> lens;
  for (const auto& e : kt.edges) {
    CHECK(e.path_length == e.interior.size() + 1);
    CHECK(e.odd == (e.path_length % 2 == 1));
    CHECK(((e.a == 0 && e.b == 1) || (e.a == 1 && e.b == 0)));
    lens.push_back(e.path_length);
  }
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(kt.bare_cycles.empty());

  // Figure eight: two triangles sharing vertex 0 become two odd loops.
  Graph eight(5);
  eight.add_edge(0, 1);
  eight.add_edge(1, 2);
  eight.add_edge(2, 0);
  eight.add_edge(0, 3);
  eight.add_edge(3, 4);
  eight.add_edge(4, 0);
  KernelGraph ke = kernel(eight);
  CHECK(ke.vertices == std::vector<std::uint32_t>{0});
  REQUIRE(ke.edges.size() == 2);
  for (const auto& e : ke.edges) {
    CHECK(e.a == 0);
    CHECK(e.b == 0);
    CHECK(e.path_length == 3);
    CHECK(e.odd);
  }
}

TEST_CASE("kernel expansion reproduces the 2-core") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Graph g = gen_gnm(200, 130 + 8 * (s % 13), Seed{s, 21});
    Graph core_g = two_core(g);
    KernelGraph k = kernel(g);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> expanded, core_edges;
    auto push_edge = [&](std::uint32_t a, std::uint32_t b) {
      expanded.emplace_back(std::min(a, b), std::max(a, b));
    };
    for (const auto& e : k.edges) {
      CHECK(e.path_length == e.interior.size() + 1);
      CHECK(e.odd == (e.path_length % 2 == 1));
      std::uint32_t prev = e.a;
      for (std::uint32_t mid : e.interior) {
        push_edge(prev, mid);
        prev = mid;
      }
      push_edge(prev, e.b);
    }
    for (const auto& cyc : k.bare_cycles) {
      for (std::size_t t = 0; t + 1 < cyc.size(); ++t)
        push_edge(cyc[t], cyc[t + 1]);
      push_edge(cyc.back(), cyc.front());
    }
    for (std::size_t e = 0; e < core_g.m(); ++e) {
      auto [u, v] = core_g.edge(e);
      core_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(expanded.begin(), expanded.end());
    std::sort(core_edges.begin(), core_edges.end());
    REQUIRE(expanded == core_edges);

    // Branch vertices really branch; interior vertices really do not.
    std::vector<std::uint32_t> deg(core_g.n(), 0);
    for (std::size_t e = 0; e < core_g.m(); ++e) {
      auto [u, v] = core_g.edge(e);
      ++deg[u];
      ++deg[v];
    }
    for (std::uint32_t v : k.vertices) CHECK(deg[v] >= 3);
    for (const auto& e : k.edges)
      for (std::uint32_t mid : e.interior) CHECK(deg[mid] == 2);
  }
}

TEST_CASE("kernel size at scale matches the branching prediction") {
  // A vertex of G(n, cn/2) joins the kernel when at least three of its
  // edges lead into the giant component.  With gamma the survival
  // fraction solving gamma = 1 - exp(-c*gamma), the number of surviving
  // neighbours is Poisson(c*gamma), so the kernel density is
  // P(Pois(c*gamma) >= 3).  Writing c = 1 + 2*eps and letting eps -> 0
  // this tends to (32/3)*eps^3, but at eps ~ 0.06 the first-order
  // deficit is already ~26%, so the test anchors to the full expression
  // and only loosely to the cube law.
  const std::uint32_t n = 1000000;
  const double eps = std::pow(static_cast<double>(n), -0.2);
  const auto m = static_cast<std::uint64_t>((0.5 + eps) * n);
  const double c = 2.0 * static_cast<double>(m) / n;
  double lo = 1e-9, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (1.0 - std::exp(-c * mid) > mid ? lo : hi) = mid;
  }
  const double lam = c * 0.5 * (lo + hi);
  const double predicted =
      n * (1.0 - std::exp(-lam) * (1.0 + lam + 0.5 * lam * lam));
  const double cube_law = (32.0 / 3.0) * eps * eps * eps * n;

  const int trials = 20;
  double total = 0;
  for (int t = 0; t < trials; ++t) {
    Graph g = gen_gnm(n, m, Seed{5000 + static_cast<std::uint64_t>(t), 0});
    total += static_cast<double>(kernel(g).vertices.size());
  }
  double mean = total / trials;
  INFO("mean kernel vertices = " << mean << ", predicted = " << predicted
                                 << ", cube law = " << cube_law);
  CHECK(mean >= 0.90 * predicted);
  CHECK(mean <= 1.10 * predicted);
  CHECK(mean >= 0.55 * cube_law);
  CHECK(mean <= 1.00 * cube_law);
}

TEST_CASE("classify_components taxonomy") {
  // A forest: a 30-vertex tree plus isolated vertices.
  Graph forest(35);
  SplitRng rng(Seed{9, 9});
  for (std::uint32_t v = 1; v < 30; ++v)
    forest.add_edge(v, static_cast<std::uint32_t>(rng.next_below(v)));
  ComponentReport fr = classify_components(forest);
  CHECK(fr.giant == 30);
  CHECK(fr.odd_unicyclic == 0);
  std::uint64_t sz = 0, eg = 0;
  for (const auto& comp : fr.components) {
    CHECK(comp.cls == ComponentClass::tree);
    sz += comp.size;
    eg += comp.edges;
  }
  CHECK(sz == 35);
  CHECK(eg == 29);

  // C3 + C4: one odd unicyclic of the two.
  Graph cycles(7);
  cycles.add_edge(0, 1);
  cycles.add_edge(1, 2);
  cycles.add_edge(2, 0);
  cycles.add_edge(3, 4);
  cycles.add_edge(4, 5);
  cycles.add_edge(5, 6);
  cycles.add_edge(6, 3);
  ComponentReport cr = classify_components(cycles);
  REQUIRE(cr.components.size() == 2);
  CHECK(cr.components[0].cls == ComponentClass::unicyclic);
  CHECK(cr.components[1].cls == ComponentClass::unicyclic);
  CHECK(cr.odd_unicyclic == 1);
  CHECK(cr.giant == 4);

  // Theta graph is complex.
  Graph theta(5);
  theta.add_edge(0, 1);
  theta.add_edge(0, 2);
  theta.add_edge(2, 1);
  theta.add_edge(0, 3);
  theta.add_edge(3, 4);
  theta.add_edge(4, 1);
  CHECK(classify_components(theta).components[0].cls ==
        ComponentClass::complex);

  // Conservation on random graphs.
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = gen_gnm(300, 100 + 30 * s, Seed{s, 31});
    ComponentReport rep = classify_components(g);
    std::uint64_t vs = 0, es = 0;
    for (const auto& comp : rep.components) {
      vs += comp.size;
      es += comp.edges;
    }
    CHECK(vs == g.n());
    CHECK(es == g.m());
  }
}

TEST_CASE("subcritical graphs have no complex components") {
  int clean = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Graph g = gen_gnm(100000, 45000, Seed{6000 + t, 0});
    ComponentReport rep = classify_components(g);
    bool complex_found = false;
    for (const auto& comp : rep.components)
      if (comp.cls == ComponentClass::complex) complex_found = true;
    if (!complex_found) ++clean;
  }
  CHECK(clean >= 95);
}

TEST_CASE("kernel_cut_bound solves hand-built systems") {
  // All-odd theta (chain lengths 1, 3, 5): bipartite, zero violations.
  Graph theta(8);
  theta.add_edge(0, 1);
  theta.add_edge(0, 2);
  theta.add_edge(2, 3);
  theta.add_edge(3, 1);
  theta.add_edge(0, 4);
  theta.add_edge(4, 5);
  theta.add_edge(5, 6);
  theta.add_edge(6, 7);
  theta.add_edge(7, 1);
  auto r = kernel_cut_bound(kernel(theta));
  CHECK(r.violated == 0);
  CHECK(r.satisfied == 3);
  CHECK(r.exact);

  // Two vertices, three parallel constraints (odd, odd, even): whichever
  // side choice is made, exactly the minority constraint type fails.
  KernelGraph hand;
  hand.n = 2;
  hand.vertices = {0, 1};
  hand.edges.push_back(KernelEdge{0, 1, {}, 1, true});
  hand.edges.push_back(KernelEdge{0, 1, {}, 3, true});
  hand.edges.push_back(KernelEdge{0, 1, {}, 2, false});
  auto rh = kernel_cut_bound(hand);
  CHECK(rh.violated == 1);
  CHECK(rh.satisfied == 2);
  CHECK(rh.exact);

  // Figure eight: two odd loops, both forced violated.
  Graph eight(5);
  eight.add_edge(0, 1);
  eight.add_edge(1, 2);
  eight.add_edge(2, 0);
  eight.add_edge(0, 3);
  eight.add_edge(3, 4);
  eight.add_edge(4, 0);
  auto re = kernel_cut_bound(kernel(eight));
  CHECK(re.violated == 2);
  CHECK(re.satisfied == 0);
  CHECK(re.exact);

  // Empty kernel.
  auto rn = kernel_cut_bound(KernelGraph{});
  CHECK(rn.violated == 0);
  CHECK(rn.exact);
}

TEST_CASE("kernel_cut_bound local search handles large kernels") {
  // A star of 40 branch vertices: satisfiable, and single flips reach the
  // optimum from any start, so the heuristic path must report zero.
  KernelGraph star;
  star.n = 41;
  for (std::uint32_t v = 0; v < 41; ++v) star.vertices.push_back(v);
  for (std::uint32_t v = 1; v < 41; ++v)
    star.edges.push_back(KernelEdge{0, v, {}, 1 + (v % 2), (v % 2) == 0});
  auto r = kernel_cut_bound(star, Seed{77, 1});
  CHECK_FALSE(r.exact);
  CHECK(r.violated == 0);
  CHECK(r.satisfied == star.edges.size());
  auto r2 = kernel_cut_bound(star, Seed{77, 1});
  CHECK(r2.violated == r.violated);
}

TEST_CASE("kernel accounting equals the exact minimum uncut") {
  for (std::uint64_t s = 0; s < 160; ++s) {
    std::uint32_t n = 4 + s % 17;  // up to 20
    std::uint64_t m = 3 + s % 28;
    Graph g = gen_gnm(n, m, Seed{7000 + s, 0});
    std::uint64_t uncut_exact = g.m() - brute_max_cut(g).best;
    KernelGraph k = kernel(g);
    auto bound = kernel_cut_bound(k);
    REQUIRE(bound.exact);
    std::uint64_t odd_bare = 0;
    for (const auto& cyc : k.bare_cycles)
      if (cyc.size() % 2 == 1) ++odd_bare;
    CHECK(bound.violated + odd_bare == uncut_exact);
  }
  for (std::uint64_t s = 0; s < 10; ++s) {
    Graph g = gen_gnm(24, 26 + s, Seed{7500 + s, 0});
    std::uint64_t uncut_exact = g.m() - brute_max_cut(g).best;
    KernelGraph k = kernel(g);
    auto bound = kernel_cut_bound(k);
    REQUIRE(bound.exact);
    std::uint64_t odd_bare = 0;
    for (const auto& cyc : k.bare_cycles)
      if (cyc.size() % 2 == 1) ++odd_bare;
    CHECK(bound.violated + odd_bare == uncut_exact);
  }
}
