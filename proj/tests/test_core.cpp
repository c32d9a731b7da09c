#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "phaselab/core.hpp"
#include "phaselab/io.hpp"
#include "phaselab/rng.hpp"

using namespace phaselab;
using core::Literal;

TEST_CASE("literal packing and negation") {
  Literal a = Literal::pos(7), b = Literal::neg(7);
  CHECK(a.var() == 7);
  CHECK_FALSE(a.negated());
  CHECK(b.negated());
  CHECK(~a == b);
  CHECK(~b == a);
  CHECK(a != b);
}

TEST_CASE("formula validates clauses") {
  Formula f(4);
  f.add_clause({Literal::pos(0), Literal::neg(3)});
  CHECK(f.size() == 1);
  CHECK(f.arity(0) == 2);
  SECTION("repeated variable is improper") {
    CHECK_THROWS_AS(f.add_clause({Literal::pos(1), Literal::neg(1)}),
                    std::invalid_argument);
  }
  SECTION("variable out of range") {
    CHECK_THROWS_AS(f.add_clause({Literal::pos(4)}), std::invalid_argument);
  }
  SECTION("empty clause") {
    CHECK_THROWS_AS(f.add_clause(std::span<const Literal>{}),
                    std::invalid_argument);
  }
  SECTION("duplicate clauses are fine") {
    f.add_clause({Literal::pos(0), Literal::neg(3)});
    CHECK(f.size() == 2);
  }
}

TEST_CASE("count_satisfied on a hand-checked formula") {
  // (x0 | ~x1) & (~x0 | x2) & (x1 | x2)
  Formula f(3);
  f.add_clause({Literal::pos(0), Literal::neg(1)});
  f.add_clause({Literal::neg(0), Literal::pos(2)});
  f.add_clause({Literal::pos(1), Literal::pos(2)});
  CHECK(core::count_satisfied(f, {0, 0, 0}) == 2);  // middle + first
  CHECK(core::count_satisfied(f, {1, 1, 1}) == 3);
  CHECK(core::count_satisfied(f, {1, 1, 0}) == 2);
  CHECK(core::count_unsatisfied(f, {1, 1, 0}) == 1);
  CHECK_THROWS_AS(core::count_satisfied(f, {0, 0}), std::invalid_argument);
}

// Exact identity: summing count_satisfied over all 2^n assignments of
// any proper 2-clause formula gives (3/4) m 2^n — checked in integers.
TEST_CASE("average satisfied count over all assignments is exactly 3m/4") {
  SplitRng rng(11, 0);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint32_t n = 4 + static_cast<std::uint32_t>(rng.next_below(6));
    std::uint64_t m = 1 + rng.next_below(3 * n);
    Formula f(n);
    std::vector<std::uint32_t> vars;
    for (std::uint64_t i = 0; i < m; ++i) {
      rng.distinct(n, 2, vars);
      f.add_clause({Literal::make(vars[0], rng.next_bool()),
                    Literal::make(vars[1], rng.next_bool())});
    }
    std::uint64_t total = 0;
    Assignment a(n, 0);
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
      for (std::uint32_t v = 0; v < n; ++v) a[v] = (bits >> v) & 1u;
      total += core::count_satisfied(f, a);
    }
    CHECK(4 * total == 3 * m * (1ull << n));
  }
}

TEST_CASE("cut_size and complement") {
  Graph g(4);  // path 0-1-2-3 plus a parallel copy of 1-2
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  Partition p = {0, 1, 0, 1};
  CHECK(core::cut_size(g, p) == 4);  // parallel edges count twice
  CHECK(core::cut_size(g, core::complement(p)) == core::cut_size(g, p));
  CHECK(core::cut_size(g, {0, 0, 0, 0}) == 0);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
}

TEST_CASE("average cut over all partitions is exactly m/2") {
  SplitRng rng(12, 0);
  for (int trial = 0; trial < 10; ++trial) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.next_below(5));
    std::uint64_t m = 1 + rng.next_below(2 * n);
    Graph g(n);
    for (std::uint64_t i = 0; i < m; ++i) {
      auto u = static_cast<std::uint32_t>(rng.next_below(n));
      auto v = static_cast<std::uint32_t>(rng.next_below(n - 1));
      if (v >= u) ++v;
      g.add_edge(u, v);
    }
    std::uint64_t total = 0;
    Partition p(n, 0);
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
      for (std::uint32_t v = 0; v < n; ++v) p[v] = (bits >> v) & 1u;
      total += core::cut_size(g, p);
    }
    CHECK(2 * total == m * (1ull << n));
  }
}

TEST_CASE("dimacs round trip and fixed text") {
  Formula f(3);
  f.add_clause({Literal::pos(0), Literal::neg(2)});
  f.add_clause({Literal::neg(1)});
  std::ostringstream os;
  io::write_dimacs(os, f);
  CHECK(os.str() == "p cnf 3 2\n1 -3 0\n-2 0\n");

  std::istringstream is(os.str());
  Formula g = io::read_dimacs(is);
  REQUIRE(g.n() == 3);
  REQUIRE(g.size() == 2);
  CHECK(g.clause(0)[0] == Literal::pos(0));
  CHECK(g.clause(0)[1] == Literal::neg(2));
  CHECK(g.clause(1)[0] == Literal::neg(1));
}

TEST_CASE("dimacs parser handles comments and rejects malformed input") {
  {
    std::istringstream is("c a comment\np cnf 2 1\nc another\n1 2 0\n");
    CHECK(io::read_dimacs(is).size() == 1);
  }
  {
    std::istringstream is("p dnf 2 1\n1 2 0\n");
    CHECK_THROWS_AS(io::read_dimacs(is), std::invalid_argument);
  }
  {
    std::istringstream is("p cnf 2 1\n1 3 0\n");  // literal out of range
    CHECK_THROWS_AS(io::read_dimacs(is), std::invalid_argument);
  }
  {
    std::istringstream is("p cnf 2 2\n1 2 0\n");  // count mismatch
    CHECK_THROWS_AS(io::read_dimacs(is), std::invalid_argument);
  }
  {
    std::istringstream is("p cnf 2 1\n1 2\n");  // missing terminator
    CHECK_THROWS_AS(io::read_dimacs(is), std::invalid_argument);
  }
}

TEST_CASE("edge list round trip and errors") {
  Graph g(5);
  g.add_edge(0, 4);
  g.add_edge(2, 1);
  std::ostringstream os;
  io::write_edge_list(os, g);
  CHECK(os.str() == "5 2\n0 4\n2 1\n");
  std::istringstream is(os.str());
  Graph h = io::read_edge_list(is);
  REQUIRE(h.n() == 5);
  REQUIRE(h.m() == 2);
  CHECK(h.edge(1) == std::make_pair(2u, 1u));

  std::istringstream bad1("3 1\n0 3\n");
  CHECK_THROWS_AS(io::read_edge_list(bad1), std::invalid_argument);
  std::istringstream bad2("3 1\n1 1\n");
  CHECK_THROWS_AS(io::read_edge_list(bad2), std::invalid_argument);
  std::istringstream bad3("3 2\n0 1\n");
  CHECK_THROWS_AS(io::read_edge_list(bad3), std::invalid_argument);
}

TEST_CASE("csp file round trip keeps tuple order and constraint") {
  auto g = ConstraintFn::xor2();
  CspFormula f;
  f.n = 4;
  f.g = g;
  f.lits = {Literal::pos(2), Literal::neg(0), Literal::neg(3), Literal::pos(1)};
  std::ostringstream os;
  io::write_csp(os, f);
  std::istringstream is(os.str());
  CspFormula h = io::read_csp(is);
  CHECK(h.n == 4);
  CHECK(h.g.k == 2);
  CHECK(h.g.table == g.table);
  REQUIRE(h.lits.size() == 4);
  CHECK(h.lits[0] == Literal::pos(2));
  CHECK(h.lits[1] == Literal::neg(0));
}

TEST_CASE("rng streams are deterministic and independent") {
  SplitRng a(Seed{123, 7}), b(Seed{123, 7}), c(Seed{123, 8});
  bool differ = false;
  for (int i = 0; i < 64; ++i) {
    auto x = a.next_u64();
    CHECK(x == b.next_u64());
    if (x != c.next_u64()) differ = true;
  }
  CHECK(differ);
}

TEST_CASE("next_below is in range and roughly uniform") {
  SplitRng rng(99, 1);
  constexpr std::uint64_t buckets = 16, draws = 100000;
  std::vector<std::uint64_t> count(buckets, 0);
  for (std::uint64_t i = 0; i < draws; ++i) {
    auto x = rng.next_below(buckets);
    REQUIRE(x < buckets);
    ++count[x];
  }
  // Chi-square against uniform: df = 15, mean 15, sd sqrt(30); 5 sigma.
  double chi2 = 0, expect = static_cast<double>(draws) / buckets;
  for (auto c : count) {
    double d = static_cast<double>(c) - expect;
    chi2 += d * d / expect;
  }
  CHECK(std::abs(chi2 - 15.0) < 5.0 * std::sqrt(30.0));
}

TEST_CASE("next_double lies in [0,1) and distinct sampling is distinct") {
  SplitRng rng(5, 5);
  for (int i = 0; i < 1000; ++i) {
    double d = rng.next_double();
    REQUIRE(d >= 0.0);
    REQUIRE(d < 1.0);
  }
  std::vector<std::uint32_t> out;
  for (int i = 0; i < 200; ++i) {
    rng.distinct(10, 4, out);
    REQUIRE(out.size() == 4);
    for (std::size_t a = 0; a < out.size(); ++a)
      for (std::size_t b = a + 1; b < out.size(); ++b)
        REQUIRE(out[a] != out[b]);
  }
  CHECK_THROWS_AS(rng.distinct(3, 4, out), std::invalid_argument);
  CHECK_THROWS_AS(rng.next_below(0), std::invalid_argument);
}
