// Command-line surface for the phaselab library: instance generation,
// exact solving, heuristics, structure analysis, closed-form
// predictions, and the Monte Carlo experiment runner.
//
// Density convention, stated once and used everywhere: an instance on n
// variables (or vertices) at density c has m = round(c * n) clauses
// (edges).  The SAT threshold sits at c = 1, the cut threshold at
// c = 1/2.
//
// Exit codes: 0 success, 2 validation error, 3 resource limit.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "phaselab/analysis.hpp"
#include "phaselab/core.hpp"
#include "phaselab/exact.hpp"
#include "phaselab/generators.hpp"
#include "phaselab/harness.hpp"
#include "phaselab/heuristics.hpp"
#include "phaselab/io.hpp"
#include "phaselab/rng.hpp"
#include "phaselab/structures.hpp"

namespace {

using nlohmann::json;
using namespace phaselab;

// --- plumbing ----------------------------------------------------------------

bool use_stdio(const std::string& path) { return path.empty() || path == "-"; }

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw std::invalid_argument("cannot open output file '" + path + "'");
  return out;
}

Formula load_formula(const std::string& path) {
  if (use_stdio(path)) return io::read_dimacs(std::cin);
  auto in = open_input(path);
  return io::read_dimacs(in);
}

Graph load_graph(const std::string& path) {
  if (use_stdio(path)) return io::read_edge_list(std::cin);
  auto in = open_input(path);
  return io::read_edge_list(in);
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (use_stdio(path)) {
    fn(std::cout);
  } else {
    auto out = open_output(path);
    fn(out);
  }
}

std::int64_t lit_int(core::Literal l) {
  const auto v = static_cast<std::int64_t>(l.var()) + 1;
  return l.negated() ? -v : v;
}

std::uint64_t clause_count(std::optional<std::uint64_t> m, double c,
                           std::uint32_t n) {
  return m ? *m : static_cast<std::uint64_t>(std::llround(c * n));
}

struct Grid {
  double lo = 0, hi = 0, step = 0;
};

Grid parse_grid(const std::string& text) {
  Grid g;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &g.lo, &g.hi, &g.step,
                  &tail) != 3 ||
      !(g.step > 0) || g.hi < g.lo)
    throw std::invalid_argument(
        "--grid expects lo:hi:step with step > 0 and hi >= lo");
  if ((g.hi - g.lo) / g.step > 1e6)
    throw std::invalid_argument("--grid asks for more than 1e6 samples");
  return g;
}

std::vector<double> grid_values(const Grid& g) {
  std::vector<double> v;
  const auto count =
      static_cast<std::size_t>(std::floor((g.hi - g.lo) / g.step + 1e-9)) + 1;
  v.reserve(count);
  for (std::size_t i = 0; i < count; ++i) v.push_back(g.lo + g.step * i);
  return v;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// --- gen ---------------------------------------------------------------------

struct GenKsatOpts {
  std::uint32_t n = 20;
  std::optional<std::uint64_t> m;
  double c = 1.0;
  std::uint32_t k = 2;
  std::uint64_t seed = 1;
  std::string out;
};

void run_gen_ksat(const GenKsatOpts& o) {
  Formula f = generators::gen_ksat(o.n, clause_count(o.m, o.c, o.n), o.k,
                                   Seed{o.seed, 0});
  with_output(o.out, [&](std::ostream& os) { io::write_dimacs(os, f); });
}

struct GenGraphOpts {
  std::uint32_t n = 100;
  std::optional<std::uint64_t> m;
  std::optional<double> c;
  std::optional<double> p;
  std::uint64_t seed = 1;
  std::string out;
};

void run_gen_graph(const GenGraphOpts& o) {
  if (o.p && (o.m || o.c))
    throw std::invalid_argument("--p excludes --m and --c");
  Graph g = o.p ? generators::gen_gnp(o.n, *o.p, Seed{o.seed, 0})
                : generators::gen_gnm(o.n,
                                      clause_count(o.m, o.c.value_or(0.5), o.n),
                                      Seed{o.seed, 0});
  with_output(o.out, [&](std::ostream& os) { io::write_edge_list(os, g); });
}

struct GenCspOpts {
  std::uint32_t n = 20;
  std::optional<std::uint64_t> m;
  double c = 1.0;
  std::uint32_t k = 2;
  std::optional<std::uint32_t> table;
  std::uint64_t seed = 1;
  std::string out;
};

void run_gen_csp(const GenCspOpts& o) {
  generators::ConstraintFn g = generators::ConstraintFn::or_k(o.k);
  if (o.table) {
    if (*o.table > 0xFFFFu)
      throw std::invalid_argument("--table must fit in 16 bits");
    g = generators::ConstraintFn{o.k, static_cast<std::uint16_t>(*o.table)};
  }
  auto f =
      generators::gen_csp(o.n, clause_count(o.m, o.c, o.n), g, Seed{o.seed, 0});
  with_output(o.out, [&](std::ostream& os) { io::write_csp(os, f); });
}

// --- solve -------------------------------------------------------------------

void run_solve_maxsat(const std::string& in) {
  Formula f = load_formula(in);
  auto res = exact::brute_max_sat(f);
  std::cout << "best " << res.best << " of " << f.size() << '\n';
}

void run_solve_maxcut(const std::string& in) {
  Graph g = load_graph(in);
  auto res = exact::brute_max_cut(g);
  std::cout << "best " << res.best << " of " << g.m() << '\n';
}

void run_solve_2sat(const std::string& in) {
  Formula f = load_formula(in);
  std::cout << (exact::two_sat_decide(f) ? "SAT" : "UNSAT") << '\n';
}

// --- heuristic ---------------------------------------------------------------

struct HeuristicOpts {
  std::string in;
  std::uint32_t n = 1000;
  double c = 1.0;
  std::uint32_t k = 2;
  std::uint64_t seed = 1;
  std::string trace_out;
};

Formula heuristic_formula(const HeuristicOpts& o) {
  if (!o.in.empty()) return load_formula(o.in);
  return generators::gen_ksat(
      o.n, static_cast<std::uint64_t>(std::llround(o.c * o.n)), o.k,
      Seed{o.seed, 0});
}

Graph heuristic_graph(const HeuristicOpts& o) {
  if (!o.in.empty()) return load_graph(o.in);
  return generators::gen_gnm(
      o.n, static_cast<std::uint64_t>(std::llround(o.c * o.n)),
      Seed{o.seed, 0});
}

void reject_trace(const HeuristicOpts& o, const char* algo) {
  if (!o.trace_out.empty())
    throw std::invalid_argument(std::string("heuristic ") + algo +
                                ": no trace available");
}

void write_resolution_trace(const std::string& path,
                            const heuristics::ResolutionTrace& trace) {
  auto os = open_output(path);
  os << "rho,rho1,rho2,satisfied,dissatisfied,residual\n";
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    const auto& s = trace.samples[i];
    const auto& cnt = trace.counts[i];
    os << harness::format_g9(s.rho) << ',' << harness::format_g9(s.rho1) << ','
       << harness::format_g9(s.rho2) << ',' << cnt.satisfied << ','
       << cnt.dissatisfied << ',' << cnt.residual << '\n';
  }
}

void run_heuristic(const std::string& algo, const HeuristicOpts& o) {
  if (algo == "potential") {
    Formula f = heuristic_formula(o);
    auto res = heuristics::potential_greedy(f, Seed{o.seed, 1});
    std::cout << "satisfied " << res.satisfied << " of " << f.size() << '\n';
    if (!o.trace_out.empty()) {
      auto os = open_output(o.trace_out);
      os << "step,q,satisfied,unit_count,two_count\n";
      for (std::size_t i = 0; i < res.trace.size(); ++i) {
        const auto& s = res.trace[i];
        os << i << ',' << harness::format_g9(s.q) << ',' << s.satisfied << ','
           << s.unit_count << ',' << s.two_count << '\n';
      }
    }
  } else if (algo == "unitclause") {
    Formula f = heuristic_formula(o);
    const auto seeds = static_cast<std::uint64_t>(
        std::llround(std::pow(static_cast<double>(f.n()), 0.1)));
    auto res = heuristics::unit_clause_resolve(f, Seed{o.seed, 1}, seeds);
    std::cout << "satisfied " << core::count_satisfied(f, res.assignment)
              << " of " << f.size() << " (unit dissatisfied "
              << res.trace.dissatisfied_unit << ", residual dissatisfied "
              << res.trace.dissatisfied_residual << ")\n";
    if (!o.trace_out.empty()) write_resolution_trace(o.trace_out, res.trace);
  } else if (algo == "online") {
    reject_trace(o, "online");
    Formula f = heuristic_formula(o);
    auto res = heuristics::online_lazy(f, Seed{o.seed, 1});
    std::cout << "accepted " << res.accepted << " of " << f.size() << '\n';
  } else if (algo == "ksat") {
    reject_trace(o, "ksat");
    Formula f = heuristic_formula(o);
    auto sat = heuristics::ksat_sequential_greedy(f, 1, Seed{o.seed, 1});
    std::cout << "satisfied " << sat << " of " << f.size() << '\n';
  } else if (algo == "cutgreedy") {
    reject_trace(o, "cutgreedy");
    Graph g = heuristic_graph(o);
    auto res = heuristics::majority_greedy_cut(g, Seed{o.seed, 1});
    std::cout << "cut " << res.cut << " of " << g.m() << '\n';
  } else {  // cutunit
    Graph g = heuristic_graph(o);
    auto res = heuristics::unit_clause_cut(g, Seed{o.seed, 1});
    std::cout << "cut " << g.m() - res.uncut << " of " << g.m() << '\n';
    if (!o.trace_out.empty()) write_resolution_trace(o.trace_out, res.trace);
  }
}

// --- analyze -----------------------------------------------------------------

struct AnalyzeOpts {
  std::string in;
  std::uint32_t k_max = 0;  // 0 -> n
  std::uint64_t budget = structures::bicycle_budget;
};

void run_analyze_bicycles(const AnalyzeOpts& o) {
  Formula f = load_formula(o.in);
  const std::uint32_t k_max = o.k_max ? o.k_max : f.n();
  auto bikes = structures::enumerate_bicycles(f, k_max, o.budget);
  json out;
  out["count"] = bikes.size();
  json arr = json::array();
  std::uint64_t bad = 0;
  for (const auto& b : bikes) {
    const bool is_bad = structures::is_bad_bicycle(b, f);
    bad += is_bad;
    json bj;
    bj["clauses"] = b.clause_indices;
    bj["u"] = lit_int(b.u);
    bj["v"] = lit_int(b.v);
    bj["i"] = b.i;
    bj["j"] = b.j;
    bj["length"] = b.length;
    bj["bad"] = is_bad;
    arr.push_back(std::move(bj));
  }
  out["bad_count"] = bad;
  out["bicycles"] = std::move(arr);
  print_json(out);
}

void run_analyze_core(const AnalyzeOpts& o) {
  Graph g = load_graph(o.in);
  Graph core_g = structures::two_core(g);
  json out;
  out["n"] = core_g.n();
  out["edge_count"] = core_g.m();
  json edges = json::array();
  for (std::size_t e = 0; e < core_g.m(); ++e) {
    auto [u, v] = core_g.edge(e);
    edges.push_back({u, v});
  }
  out["edges"] = std::move(edges);
  print_json(out);
}

void run_analyze_kernel(const AnalyzeOpts& o) {
  Graph g = load_graph(o.in);
  auto k = structures::kernel(g);
  json out;
  out["vertex_count"] = k.vertices.size();
  out["vertices"] = k.vertices;
  json edges = json::array();
  for (const auto& e : k.edges) {
    json ej;
    ej["a"] = e.a;
    ej["b"] = e.b;
    ej["path_length"] = e.path_length;
    ej["odd"] = e.odd;
    ej["interior"] = e.interior;
    edges.push_back(std::move(ej));
  }
  out["edges"] = std::move(edges);
  out["bare_cycles"] = k.bare_cycles;
  auto bound = structures::kernel_cut_bound(k, Seed{1, 0});
  out["parity_violations"] = bound.violated;
  out["parity_exact"] = bound.exact;
  print_json(out);
}

void run_analyze_components(const AnalyzeOpts& o) {
  Graph g = load_graph(o.in);
  auto rep = structures::classify_components(g);
  json out;
  json comps = json::array();
  std::uint64_t trees = 0, unicyclic = 0, complex_count = 0;
  for (const auto& comp : rep.components) {
    const char* cls = comp.cls == structures::ComponentClass::tree
                          ? "tree"
                          : comp.cls == structures::ComponentClass::unicyclic
                                ? "unicyclic"
                                : "complex";
    (comp.cls == structures::ComponentClass::tree
         ? trees
         : comp.cls == structures::ComponentClass::unicyclic ? unicyclic
                                                             : complex_count)++;
    comps.push_back({{"size", comp.size}, {"edges", comp.edges}, {"class", cls}});
  }
  out["components"] = std::move(comps);
  out["giant"] = rep.giant;
  out["odd_unicyclic"] = rep.odd_unicyclic;
  out["tree_count"] = trees;
  out["unicyclic_count"] = unicyclic;
  out["complex_count"] = complex_count;
  print_json(out);
}

// --- predict -----------------------------------------------------------------

struct PredictOpts {
  double c = 1.5;
  std::uint32_t k = 2;
  std::optional<double> n;
  std::optional<double> r;
  std::size_t points = 101;
  std::string grid;
};

void run_predict(const std::string& what, const PredictOpts& o) {
  if (what == "trajectory") {
    auto pts = analysis::ode_trajectory(o.c, o.points);
    if (!o.grid.empty())
      throw std::invalid_argument(
          "predict trajectory: already a curve; use --points");
    json out;
    out["c"] = o.c;
    json arr = json::array();
    for (const auto& p : pts)
      arr.push_back({{"rho", p.rho}, {"rho1", p.rho1}, {"rho2", p.rho2}});
    out["points"] = std::move(arr);
    print_json(out);
    return;
  }

  if (!o.grid.empty()) {
    const Grid g = parse_grid(o.grid);
    if (what == "rejected")
      std::cout << "c,rho_star,rejected_density\n";
    else if (what == "online")
      std::cout << "c,online_fraction\n";
    else if (what == "giantfree")
      std::cout << "c,giant_free_fraction\n";
    else if (what == "bounds")
      std::cout << "c,lower,upper\n";
    else
      std::cout << "c,expected_cycles\n";
    for (double c : grid_values(g)) {
      if (what == "rejected")
        std::cout << harness::format_g9(c) << ','
                  << harness::format_g9(analysis::rho_star(c)) << ','
                  << harness::format_g9(analysis::rejected_density(c)) << '\n';
      else if (what == "online")
        std::cout << harness::format_g9(c) << ','
                  << harness::format_g9(analysis::online_fraction(c)) << '\n';
      else if (what == "giantfree")
        std::cout << harness::format_g9(c) << ','
                  << harness::format_g9(analysis::giant_free_fraction(c))
                  << '\n';
      else if (what == "bounds") {
        auto b = analysis::highdensity_bounds_ksat(o.k, c);
        std::cout << harness::format_g9(c) << ','
                  << harness::format_g9(b.lower) << ','
                  << harness::format_g9(b.upper) << '\n';
      } else {
        std::cout << harness::format_g9(c) << ','
                  << harness::format_g9(analysis::expected_cycles_subcritical(c))
                  << '\n';
      }
    }
    return;
  }

  json out;
  if (what == "rejected") {
    out["c"] = o.c;
    out["rho_star"] = analysis::rho_star(o.c);
    out["rejected_density"] = analysis::rejected_density(o.c);
  } else if (what == "online") {
    out["c"] = o.c;
    out["online_fraction"] = analysis::online_fraction(o.c);
  } else if (what == "giantfree") {
    if (o.r) {
      out["r"] = *o.r;
      out["density"] = analysis::giant_free_density_for(*o.r);
    } else {
      out["c"] = o.c;
      out["giant_free_fraction"] = analysis::giant_free_fraction(o.c);
    }
  } else if (what == "bounds") {
    auto b = analysis::highdensity_bounds_ksat(o.k, o.c);
    out["k"] = o.k;
    out["c"] = o.c;
    out["lower"] = b.lower;
    out["upper"] = b.upper;
    out["constants"] = {
        {"maxsat2_lower_coeff", analysis::maxsat2_lower_coeff()},
        {"maxsat2_upper_coeff", analysis::maxsat2_upper_coeff()},
        {"maxcut_lower_coeff", analysis::maxcut_lower_coeff()},
        {"maxcut_upper_coeff", analysis::maxcut_upper_coeff()},
    };
  } else {  // cycles
    out["c"] = o.c;
    out["expected_cycles"] = analysis::expected_cycles_subcritical(o.c);
    if (o.n) out["expected_bicycles"] = analysis::expected_bicycles(o.c, *o.n);
  }
  print_json(out);
}

// --- run / report ------------------------------------------------------------

void run_run(const std::string& config_path) {
  auto in = open_input(config_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") +
                                e.what());
  }
  ExperimentConfig cfg = config_from_json(j);
  if (cfg.output.empty())
    throw std::invalid_argument("config.output: required by the run command");

  const auto start = std::chrono::steady_clock::now();
  auto result = run_experiment(cfg);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  auto os = open_output(cfg.output);
  write_records_csv(os, result.records);
  print_json(summary_json(cfg, result.cells));
  std::cerr << result.records.size() << " records -> " << cfg.output << " in "
            << harness::format_g9(wall) << "s\n";
}

void run_report(const std::string& csv_path) {
  auto in = open_input(csv_path);
  auto records = read_records_csv(in);
  harness::sort_records(records);
  auto cells = build_summary(records);
  json out;
  out["record_count"] = records.size();
  json arr = json::array();
  for (const auto& cell : cells) {
    json cj;
    cj["n"] = cell.n;
    cj["c"] = cell.c;
    cj["algorithm"] = cell.algorithm;
    cj["trials"] = cell.trials;
    cj["total"] = cell.total;
    cj["mean_score"] = cell.mean_score;
    cj["stddev_score"] = cell.stddev_score;
    cj["ci95_half"] = cell.ci95_half;
    cj["mean_dissatisfied"] = cell.mean_dissatisfied;
    arr.push_back(std::move(cj));
  }
  out["cells"] = std::move(arr);
  print_json(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "phaselab: random MAX-SAT / MAX-CUT laboratory.\n"
      "Density convention: m = round(c*n); thresholds c=1 (SAT), c=1/2 "
      "(cut)."};
  app.require_subcommand(1);
  std::function<void()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate random instances");
  gen->require_subcommand(1);
  GenKsatOpts gk;
  auto* gen_ksat = gen->add_subcommand("ksat", "Random k-SAT formula (DIMACS)");
  gen_ksat->add_option("--n", gk.n, "variable count");
  gen_ksat->add_option("--m", gk.m, "clause count (overrides --c)");
  gen_ksat->add_option("--c", gk.c, "clause density m/n");
  gen_ksat->add_option("--k", gk.k, "clause arity");
  gen_ksat->add_option("--seed", gk.seed, "master seed");
  gen_ksat->add_option("--out", gk.out, "output path (default stdout)");
  gen_ksat->callback([&] { action = [&] { run_gen_ksat(gk); }; });

  GenGraphOpts gg;
  auto* gen_graph = gen->add_subcommand("graph", "Random graph (edge list)");
  gen_graph->add_option("--n", gg.n, "vertex count");
  gen_graph->add_option("--m", gg.m, "edge count (overrides --c)");
  gen_graph->add_option("--c", gg.c, "edge density m/n");
  gen_graph->add_option("--p", gg.p, "edge probability (G(n,p) model)");
  gen_graph->add_option("--seed", gg.seed, "master seed");
  gen_graph->add_option("--out", gg.out, "output path (default stdout)");
  gen_graph->callback([&] { action = [&] { run_gen_graph(gg); }; });

  GenCspOpts gc;
  auto* gen_csp = gen->add_subcommand("csp", "Random boolean CSP");
  gen_csp->add_option("--n", gc.n, "variable count");
  gen_csp->add_option("--m", gc.m, "constraint count (overrides --c)");
  gen_csp->add_option("--c", gc.c, "constraint density m/n");
  gen_csp->add_option("--k", gc.k, "constraint arity (<= 4)");
  gen_csp->add_option("--table", gc.table,
                      "truth table bits (default OR of k literals)");
  gen_csp->add_option("--seed", gc.seed, "master seed");
  gen_csp->add_option("--out", gc.out, "output path (default stdout)");
  gen_csp->callback([&] { action = [&] { run_gen_csp(gc); }; });

  // solve
  auto* solve = app.add_subcommand("solve", "Exact solvers (n <= 30)");
  solve->require_subcommand(1);
  std::string solve_in;
  for (const char* name : {"maxsat", "maxcut", "2sat"}) {
    auto* sub = solve->add_subcommand(
        name, std::string("Exact ") + name + " via enumeration");
    sub->add_option("--in", solve_in, "input path (default stdin)");
    std::string which = name;
    sub->callback([&, which] {
      action = [&, which] {
        if (which == "maxsat")
          run_solve_maxsat(solve_in);
        else if (which == "maxcut")
          run_solve_maxcut(solve_in);
        else
          run_solve_2sat(solve_in);
      };
    });
  }

  // heuristic
  auto* heur = app.add_subcommand("heuristic", "Approximation algorithms");
  heur->require_subcommand(1);
  HeuristicOpts ho;
  for (const char* name : {"potential", "unitclause", "online", "cutgreedy",
                           "cutunit", "ksat"}) {
    auto* sub = heur->add_subcommand(name, std::string("Run ") + name);
    sub->add_option("--in", ho.in, "input instance (else generated)");
    sub->add_option("--n", ho.n, "generated size");
    sub->add_option("--c", ho.c, "generated density m/n");
    sub->add_option("--k", ho.k, "generated clause arity");
    sub->add_option("--seed", ho.seed, "master seed");
    sub->add_option("--trace-out", ho.trace_out, "CSV of trace samples");
    std::string which = name;
    sub->callback([&, which] { action = [&, which] { run_heuristic(which, ho); }; });
  }

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Structural reports (JSON)");
  analyze->require_subcommand(1);
  AnalyzeOpts ao;
  for (const char* name : {"bicycles", "core", "kernel", "components"}) {
    auto* sub = analyze->add_subcommand(name, std::string("Report ") + name);
    sub->add_option("--in", ao.in, "input path (default stdin)");
    if (std::string(name) == "bicycles") {
      sub->add_option("--k-max", ao.k_max, "maximum chain length (0 = n)");
      sub->add_option("--budget", ao.budget, "enumeration step budget");
    }
    std::string which = name;
    sub->callback([&, which] {
      action = [&, which] {
        if (which == "bicycles")
          run_analyze_bicycles(ao);
        else if (which == "core")
          run_analyze_core(ao);
        else if (which == "kernel")
          run_analyze_kernel(ao);
        else
          run_analyze_components(ao);
      };
    });
  }

  // predict
  auto* predict =
      app.add_subcommand("predict", "Closed-form predictions (JSON)");
  predict->require_subcommand(1);
  PredictOpts po;
  for (const char* name :
       {"rejected", "trajectory", "online", "giantfree", "bounds", "cycles"}) {
    auto* sub = predict->add_subcommand(name, std::string("Predict ") + name);
    sub->add_option("--c", po.c, "density");
    sub->add_option("--k", po.k, "clause arity (bounds)");
    sub->add_option("--n", po.n, "size (bicycle count scaling)");
    sub->add_option("--r", po.r, "target giant-free fraction");
    sub->add_option("--points", po.points, "trajectory sample count");
    sub->add_option("--grid", po.grid, "lo:hi:step CSV sweep over c");
    std::string which = name;
    sub->callback([&, which] { action = [&, which] { run_predict(which, po); }; });
  }

  // run / report
  std::string config_path, csv_path;
  auto* run_cmd =
      app.add_subcommand("run", "Execute an experiment config (JSON)");
  run_cmd->add_option("config", config_path, "config JSON path")->required();
  run_cmd->callback([&] { action = [&] { run_run(config_path); }; });

  auto* report_cmd =
      app.add_subcommand("report", "Summarize a records CSV (JSON)");
  report_cmd->add_option("csv", csv_path, "records CSV path")->required();
  report_cmd->callback([&] { action = [&] { run_report(csv_path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    action();
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
