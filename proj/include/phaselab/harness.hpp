#pragma once

// Deterministic Monte Carlo experiment runner: seeded sweeps over random
// instance ensembles, per-trial CSV records, and JSON summaries.  The
// record stream is a pure function of the config — independent of the
// worker-thread count — so reruns are byte-identical.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "phaselab/analysis.hpp"
#include "phaselab/core.hpp"
#include "phaselab/exact.hpp"
#include "phaselab/generators.hpp"
#include "phaselab/heuristics.hpp"
#include "phaselab/rng.hpp"

namespace phaselab::harness {

using core::Formula;
using core::Graph;

// --- config ------------------------------------------------------------------

struct ExperimentConfig {
  std::string kind;     // transition-sweep, scaling-window, trajectory,
                        // algo-compare, concentration, monotonicity, cut-sweep
  std::string problem;  // "maxsat-<k>" or "maxcut"
  std::vector<std::uint32_t> n_values;
  std::vector<double> c_values;       // clause/edge density axis
  std::vector<double> lambda_values;  // window axis (scaling-window only)
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  std::vector<std::string> algorithms;
  std::string output;  // CSV destination used by the CLI; may be empty
};

inline const std::set<std::string>& experiment_kinds() {
  static const std::set<std::string> kinds = {
      "transition-sweep", "scaling-window", "trajectory", "algo-compare",
      "concentration",    "monotonicity",   "cut-sweep"};
  return kinds;
}

// Returns k for "maxsat-<k>", 0 for "maxcut"; throws otherwise.
inline std::uint32_t parse_problem(const std::string& problem) {
  if (problem == "maxcut") return 0;
  if (problem.rfind("maxsat-", 0) == 0) {
    const std::string tail = problem.substr(7);
    if (!tail.empty() && tail.size() <= 2 &&
        tail.find_first_not_of("0123456789") == std::string::npos) {
      const int k = std::stoi(tail);
      if (k >= 1 && k <= static_cast<int>(core::max_clause_arity))
        return static_cast<std::uint32_t>(k);
    }
  }
  throw std::invalid_argument(
      "config.problem: expected 'maxcut' or 'maxsat-<k>' with 1 <= k <= " +
      std::to_string(core::max_clause_arity) + ", got '" + problem + "'");
}

inline const std::set<std::string>& algorithms_for(std::uint32_t k) {
  static const std::set<std::string> cut = {"oracle", "cutgreedy", "cutunit"};
  static const std::set<std::string> sat2 = {"oracle", "potential",
                                             "unitclause", "online",
                                             "majority"};
  static const std::set<std::string> satk = {"oracle", "majority"};
  if (k == 0) return cut;
  return k == 2 ? sat2 : satk;
}

// Density at which a scaling-window cell operates: the threshold for the
// problem rescaled by 1 + lambda * n^{-1/3}.
inline double window_density(std::uint32_t k, double lambda, std::uint32_t n) {
  const double thr = (k == 0) ? 0.5 : 1.0;
  return thr * (1.0 + lambda * std::pow(static_cast<double>(n), -1.0 / 3.0));
}

inline void validate_config(const ExperimentConfig& cfg) {
  if (!experiment_kinds().count(cfg.kind))
    throw std::invalid_argument("config.kind: unknown kind '" + cfg.kind +
                                "'");
  const std::uint32_t k = parse_problem(cfg.problem);
  if (cfg.trials < 1)
    throw std::invalid_argument("config.trials: must be >= 1");

  if (cfg.n_values.empty())
    throw std::invalid_argument("config.n_values: must be nonempty");
  if (std::set<std::uint32_t>(cfg.n_values.begin(), cfg.n_values.end())
          .size() != cfg.n_values.size())
    throw std::invalid_argument("config.n_values: duplicate value");
  for (std::uint32_t n : cfg.n_values) {
    if (k > 0 && n < k)
      throw std::invalid_argument("config.n_values: n=" + std::to_string(n) +
                                  " below clause arity " + std::to_string(k));
    if (n < 1) throw std::invalid_argument("config.n_values: n must be >= 1");
  }

  const bool window = cfg.kind == "scaling-window";
  if (window) {
    if (cfg.lambda_values.empty())
      throw std::invalid_argument(
          "config.lambda_values: required for scaling-window");
    if (!cfg.c_values.empty())
      throw std::invalid_argument(
          "config.c_values: must be empty for scaling-window");
    if (k != 0 && k != 2)
      throw std::invalid_argument(
          "config.problem: scaling-window requires maxsat-2 or maxcut");
  } else {
    if (cfg.c_values.empty())
      throw std::invalid_argument("config.c_values: required for kind '" +
                                  cfg.kind + "'");
    if (!cfg.lambda_values.empty())
      throw std::invalid_argument(
          "config.lambda_values: only valid for scaling-window");
    for (double c : cfg.c_values)
      if (!(c >= 0) || !std::isfinite(c))
        throw std::invalid_argument(
            "config.c_values: densities must be finite and >= 0");
  }
  const std::vector<double>& axis = window ? cfg.lambda_values : cfg.c_values;
  const char* axis_name = window ? "config.lambda_values" : "config.c_values";
  if (std::set<double>(axis.begin(), axis.end()).size() != axis.size())
    throw std::invalid_argument(std::string(axis_name) + ": duplicate value");

  if (cfg.kind == "cut-sweep" && k != 0)
    throw std::invalid_argument("config.kind: cut-sweep requires maxcut");
  if (cfg.kind == "trajectory" && k != 2)
    throw std::invalid_argument("config.kind: trajectory requires maxsat-2");

  if (cfg.algorithms.empty())
    throw std::invalid_argument("config.algorithms: must be nonempty");
  if (std::set<std::string>(cfg.algorithms.begin(), cfg.algorithms.end())
          .size() != cfg.algorithms.size())
    throw std::invalid_argument("config.algorithms: duplicate entry");
  for (const std::string& a : cfg.algorithms) {
    if (!algorithms_for(k).count(a))
      throw std::invalid_argument("config.algorithms: '" + a +
                                  "' is not valid for problem " + cfg.problem);
    if (cfg.kind == "trajectory" && a != "unitclause")
      throw std::invalid_argument(
          "config.algorithms: trajectory runs only 'unitclause'");
    if ((cfg.kind == "monotonicity" || cfg.kind == "concentration") &&
        a != "oracle")
      throw std::invalid_argument("config.algorithms: " + cfg.kind +
                                  " runs only 'oracle'");
  }

  for (std::uint32_t n : cfg.n_values) {
    for (double v : axis) {
      const double c = window ? window_density(k, v, n) : v;
      if (!(c >= 0) || !std::isfinite(c))
        throw std::invalid_argument(std::string(axis_name) +
                                    ": density is negative at n=" +
                                    std::to_string(n));
      const auto m = static_cast<std::uint64_t>(std::llround(c * n));
      if (k == 0) {
        const std::uint64_t cap = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        if (m > cap)
          throw std::invalid_argument(
              std::string(axis_name) + ": density " + std::to_string(v) +
              " exceeds simple-graph capacity at n=" + std::to_string(n));
      }
    }
  }

  for (const std::string& a : cfg.algorithms)
    if (a == "oracle")
      for (std::uint32_t n : cfg.n_values)
        if (n > exact::brute_budget)
          throw resource_limit_error(
              "run_experiment: oracle requested at n=" + std::to_string(n) +
              " beyond enumeration budget " +
              std::to_string(exact::brute_budget));
}

// --- JSON binding -------------------------------------------------------------

inline nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["kind"] = cfg.kind;
  j["problem"] = cfg.problem;
  j["n_values"] = cfg.n_values;
  if (!cfg.c_values.empty()) j["c_values"] = cfg.c_values;
  if (!cfg.lambda_values.empty()) j["lambda_values"] = cfg.lambda_values;
  j["trials"] = cfg.trials;
  j["master_seed"] = cfg.master_seed;
  j["algorithms"] = cfg.algorithms;
  if (!cfg.output.empty()) j["output"] = cfg.output;
  return j;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw std::invalid_argument("config: expected a JSON object");
  static const std::set<std::string> known = {
      "kind",   "problem",     "n_values",   "c_values", "lambda_values",
      "trials", "master_seed", "algorithms", "output"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key()))
      throw std::invalid_argument("config." + it.key() + ": unknown field");

  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key))
      throw std::invalid_argument("config." + std::string(key) +
                                  ": missing required field");
    return j.at(key);
  };
  auto fail = [](const char* key, const char* want) -> std::string {
    return "config." + std::string(key) + ": expected " + want;
  };

  auto get_u64 = [&](const nlohmann::json& v,
                     const char* key) -> std::uint64_t {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) {
      const auto sv = v.get<std::int64_t>();
      if (sv >= 0) return static_cast<std::uint64_t>(sv);
    }
    throw std::invalid_argument(fail(key, "an unsigned integer"));
  };

  ExperimentConfig cfg;
  try {
    cfg.kind = require("kind").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(fail("kind", "a string"));
  }
  try {
    cfg.problem = require("problem").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(fail("problem", "a string"));
  }
  {
    const nlohmann::json& arr = require("n_values");
    if (!arr.is_array())
      throw std::invalid_argument(fail("n_values", "an array of sizes"));
    for (const auto& v : arr) {
      const std::uint64_t n = get_u64(v, "n_values");
      if (n > 0xFFFFFFFFull)
        throw std::invalid_argument("config.n_values: size too large");
      cfg.n_values.push_back(static_cast<std::uint32_t>(n));
    }
  }
  try {
    if (j.contains("c_values"))
      cfg.c_values = j.at("c_values").get<std::vector<double>>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(fail("c_values", "an array of numbers"));
  }
  try {
    if (j.contains("lambda_values"))
      cfg.lambda_values = j.at("lambda_values").get<std::vector<double>>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(fail("lambda_values", "an array of numbers"));
  }
  cfg.trials = get_u64(require("trials"), "trials");
  cfg.master_seed = get_u64(require("master_seed"), "master_seed");
  try {
    cfg.algorithms = require("algorithms").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(fail("algorithms", "an array of names"));
  }
  try {
    if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(fail("output", "a string path"));
  }
  validate_config(cfg);
  return cfg;
}

// --- records ------------------------------------------------------------------

struct TrialRecord {
  std::uint64_t trial_index = 0;
  std::uint32_t n = 0;
  double c = 0;  // the configured axis value: density, or lambda for windows
  std::string algorithm;
  std::uint64_t score = 0;        // satisfied clauses or cut edges
  std::uint64_t total = 0;        // m
  std::uint64_t dissatisfied = 0; // total - score
  bool exact_flag = false;        // true only for oracle rows
  std::uint64_t seed = 0;         // cell salt; Seed{seed, 2t(+1)} reproduces
  double runtime_ms = 0;          // 0 unless PHASELAB_TIMING=1 (see README)

  bool operator==(const TrialRecord&) const = default;
};

inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
  return fnv1a64(s.data(), s.size(), h);
}

// Salt for one (n, axis, algorithm) cell: mixing per cell keeps every
// cell's trial stream stable when other cells are added or removed.
inline std::uint64_t cell_salt(const ExperimentConfig& cfg, std::uint32_t n,
                               double axis, const std::string& algorithm) {
  std::uint64_t h = fnv1a64(cfg.problem);
  const std::uint64_t nn = n;
  h = fnv1a64(&nn, sizeof nn, h);
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(axis);
  h = fnv1a64(&bits, sizeof bits, h);
  h = fnv1a64(algorithm, h);
  return rng::mix_combine(rng::mix64(cfg.master_seed), h);
}

// --- the runner ---------------------------------------------------------------

inline unsigned worker_count() {
  if (const char* env = std::getenv("PHASELAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 256)
      throw std::invalid_argument(
          "PHASELAB_THREADS: expected an integer in [1, 256]");
    return static_cast<unsigned>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

namespace detail {

struct Cell {
  std::uint32_t n = 0;
  double axis = 0;
  double density = 0;
  std::string algorithm;
  std::uint64_t salt = 0;
};

inline void run_one(const Cell& cell, std::uint32_t k, std::uint64_t t,
                    TrialRecord& out, bool timing) {
  const auto m =
      static_cast<std::uint64_t>(std::llround(cell.density * cell.n));
  const Seed instance_seed{cell.salt, 2 * t};
  const Seed algo_seed{cell.salt, 2 * t + 1};
  const auto start = std::chrono::steady_clock::now();

  std::uint64_t score = 0;
  bool exact = false;
  if (k == 0) {
    Graph g = generators::gen_gnm(cell.n, m, instance_seed);
    if (cell.algorithm == "oracle") {
      score = exact::brute_max_cut(g).best;
      exact = true;
    } else if (cell.algorithm == "cutgreedy") {
      score = heuristics::majority_greedy_cut(g, algo_seed).cut;
    } else {  // cutunit
      score = g.m() - heuristics::unit_clause_cut(g, algo_seed).uncut;
    }
  } else {
    Formula f = generators::gen_ksat(cell.n, m, k, instance_seed);
    if (cell.algorithm == "oracle") {
      score = exact::brute_max_sat(f).best;
      exact = true;
    } else if (cell.algorithm == "potential") {
      score = heuristics::potential_greedy(f, algo_seed).satisfied;
    } else if (cell.algorithm == "unitclause") {
      const auto seeds = static_cast<std::uint64_t>(
          std::llround(std::pow(static_cast<double>(cell.n), 0.1)));
      auto res = heuristics::unit_clause_resolve(f, algo_seed, seeds);
      score = core::count_satisfied(f, res.assignment);
    } else if (cell.algorithm == "online") {
      score = heuristics::online_lazy(f, algo_seed).accepted;
    } else {  // majority
      score = heuristics::ksat_sequential_greedy(f, 1, algo_seed);
    }
  }

  out.trial_index = t;
  out.n = cell.n;
  out.c = cell.axis;
  out.algorithm = cell.algorithm;
  out.score = score;
  out.total = m;
  out.dissatisfied = m - score;
  out.exact_flag = exact;
  out.seed = cell.salt;
  out.runtime_ms =
      timing ? std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count()
             : 0.0;
}

}  // namespace detail

struct CellSummary {
  std::uint32_t n = 0;
  double c = 0;
  std::string algorithm;
  std::uint64_t trials = 0;
  std::uint64_t total = 0;
  double mean_score = 0;
  double stddev_score = 0;  // sample standard deviation
  double ci95_half = 0;     // normal-approximation half width
  double mean_dissatisfied = 0;
};

inline void sort_records(std::vector<TrialRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const TrialRecord& a, const TrialRecord& b) {
                     if (a.n != b.n) return a.n < b.n;
                     if (a.c != b.c) return a.c < b.c;
                     if (a.algorithm != b.algorithm)
                       return a.algorithm < b.algorithm;
                     return a.trial_index < b.trial_index;
                   });
}

// Groups a stream sorted by (n, c, algorithm, trial_index) into
// per-cell means, sample stddevs, and 95% normal-approximation CIs.
inline std::vector<CellSummary> build_summary(
    std::span<const TrialRecord> records) {
  std::vector<CellSummary> cells;
  std::size_t i = 0;
  while (i < records.size()) {
    std::size_t jx = i;
    double sum = 0, sum_dis = 0;
    while (jx < records.size() && records[jx].n == records[i].n &&
           records[jx].c == records[i].c &&
           records[jx].algorithm == records[i].algorithm) {
      sum += static_cast<double>(records[jx].score);
      sum_dis += static_cast<double>(records[jx].dissatisfied);
      ++jx;
    }
    const auto cnt = static_cast<double>(jx - i);
    CellSummary cell;
    cell.n = records[i].n;
    cell.c = records[i].c;
    cell.algorithm = records[i].algorithm;
    cell.trials = jx - i;
    cell.total = records[i].total;
    cell.mean_score = sum / cnt;
    cell.mean_dissatisfied = sum_dis / cnt;
    double ss = 0;
    for (std::size_t r = i; r < jx; ++r) {
      const double d = static_cast<double>(records[r].score) - cell.mean_score;
      ss += d * d;
    }
    cell.stddev_score = cnt > 1 ? std::sqrt(ss / (cnt - 1)) : 0.0;
    cell.ci95_half = 1.959963985 * cell.stddev_score / std::sqrt(cnt);
    cells.push_back(std::move(cell));
    i = jx;
  }
  return cells;
}

struct ExperimentResult {
  std::vector<TrialRecord> records;  // sorted by (n, c, algorithm, trial)
  std::vector<CellSummary> cells;
};

inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const std::uint32_t k = parse_problem(cfg.problem);
  const bool window = cfg.kind == "scaling-window";
  const std::vector<double>& axis = window ? cfg.lambda_values : cfg.c_values;

  std::vector<detail::Cell> cells;
  for (std::uint32_t n : cfg.n_values)
    for (double v : axis)
      for (const std::string& a : cfg.algorithms) {
        detail::Cell cell;
        cell.n = n;
        cell.axis = v;
        cell.density = window ? window_density(k, v, n) : v;
        cell.algorithm = a;
        cell.salt = cell_salt(cfg, n, v, a);
        cells.push_back(std::move(cell));
      }

  const bool timing = [] {
    const char* env = std::getenv("PHASELAB_TIMING");
    return env && std::string(env) == "1";
  }();

  const std::uint64_t tasks = cells.size() * cfg.trials;
  std::vector<TrialRecord> records(tasks);
  std::atomic<std::uint64_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;

  auto worker = [&] {
    while (true) {
      const std::uint64_t ti = next.fetch_add(1, std::memory_order_relaxed);
      if (ti >= tasks) return;
      try {
        detail::run_one(cells[ti / cfg.trials], k, ti % cfg.trials,
                        records[ti], timing);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        next.store(tasks, std::memory_order_relaxed);
        return;
      }
    }
  };

  const unsigned nw = static_cast<unsigned>(
      std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(tasks, 1)));
  if (nw <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (unsigned w = 0; w < nw; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);

  ExperimentResult result;
  result.records = std::move(records);
  sort_records(result.records);
  result.cells = build_summary(result.records);
  return result;
}

// --- CSV ----------------------------------------------------------------------

inline constexpr const char* csv_header =
    "trial_index,n,c,algorithm,score,total,dissatisfied,exact_flag,seed,"
    "runtime_ms";

inline std::string format_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline void write_records_csv(std::ostream& os,
                              std::span<const TrialRecord> records) {
  os << csv_header << '\n';
  for (const TrialRecord& r : records) {
    os << r.trial_index << ',' << r.n << ',' << format_g9(r.c) << ','
       << r.algorithm << ',' << r.score << ',' << r.total << ','
       << r.dissatisfied << ',' << (r.exact_flag ? 1 : 0) << ',' << r.seed
       << ',' << format_g9(r.runtime_ms) << '\n';
  }
}

inline std::vector<TrialRecord> read_records_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != csv_header)
    throw std::invalid_argument("csv: missing or unexpected header row");
  std::vector<TrialRecord> records;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      f.push_back(line.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (f.size() != 10)
      throw std::invalid_argument("csv: line " + std::to_string(lineno) +
                                  ": expected 10 fields");
    try {
      TrialRecord r;
      r.trial_index = std::stoull(f[0]);
      r.n = static_cast<std::uint32_t>(std::stoul(f[1]));
      r.c = std::stod(f[2]);
      r.algorithm = f[3];
      r.score = std::stoull(f[4]);
      r.total = std::stoull(f[5]);
      r.dissatisfied = std::stoull(f[6]);
      r.exact_flag = f[7] == "1";
      r.seed = std::stoull(f[8]);
      r.runtime_ms = std::stod(f[9]);
      records.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("csv: line " + std::to_string(lineno) +
                                  ": malformed field");
    }
  }
  return records;
}

// --- summary JSON -------------------------------------------------------------

inline std::string content_hash(const ExperimentConfig& cfg) {
  const std::string canon = config_to_json(cfg).dump();
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canon)));
  return std::string("fnv1a:") + buf;
}

inline nlohmann::json summary_json(const ExperimentConfig& cfg,
                                   std::span<const CellSummary> cells) {
  nlohmann::json j;
  j["config"] = config_to_json(cfg);
  j["content_hash"] = content_hash(cfg);
  nlohmann::json arr = nlohmann::json::array();
  for (const CellSummary& cell : cells) {
    nlohmann::json cj;
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
  j["cells"] = std::move(arr);
  return j;
}

// --- dedicated probes ---------------------------------------------------------

struct MonotonicityRow {
  std::uint64_t m = 0;
  double mean_best = 0;  // exact optimum, averaged
  double ratio = 0;      // mean_best / m
  double se_ratio = 0;   // standard error of the ratio estimate
};

// Exact mean optimum per clause count m = 1..m_max, reported as the
// per-clause ratio.  The expectation of the ratio is non-increasing in
// m, a fact the tests lean on.
inline std::vector<MonotonicityRow> monotonicity_probe(std::uint32_t n,
                                                       std::uint64_t m_max,
                                                       std::uint64_t trials,
                                                       Seed seed,
                                                       std::uint32_t k = 2) {
  if (trials < 1)
    throw std::invalid_argument("monotonicity_probe: trials must be >= 1");
  if (m_max < 1)
    throw std::invalid_argument("monotonicity_probe: m_max must be >= 1");
  std::vector<MonotonicityRow> rows;
  rows.reserve(m_max);
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    double sum = 0, ss = 0;
    const std::uint64_t salt = rng::mix_combine(rng::mix64(seed.master), m);
    for (std::uint64_t t = 0; t < trials; ++t) {
      Formula f = generators::gen_ksat(
          n, m, k, Seed{salt, rng::mix_combine(seed.stream, t)});
      const auto best = static_cast<double>(exact::brute_max_sat(f).best);
      sum += best;
      ss += best * best;
    }
    MonotonicityRow row;
    row.m = m;
    row.mean_best = sum / static_cast<double>(trials);
    row.ratio = row.mean_best / static_cast<double>(m);
    const double var =
        trials > 1
            ? (ss - sum * sum / static_cast<double>(trials)) /
                  static_cast<double>(trials - 1)
            : 0.0;
    row.se_ratio = std::sqrt(std::max(var, 0.0) / static_cast<double>(trials)) /
                   static_cast<double>(m);
    rows.push_back(row);
  }
  return rows;
}

struct CurvePoint {
  double lambda = 0;
  double c = 0;      // 1 + lambda * n^{-1/3}
  double p_sat = 0;  // Monte Carlo satisfiability frequency
};

// Satisfiability frequency of F(n, c n) across the scaling window
// c = 1 + lambda n^{-1/3}, via the linear-time decision procedure.
inline std::vector<CurvePoint> satisfiability_curve(
    std::uint32_t n, std::span<const double> lambda_values,
    std::uint64_t trials, Seed seed) {
  if (trials < 1)
    throw std::invalid_argument("satisfiability_curve: trials must be >= 1");
  std::vector<CurvePoint> points;
  points.reserve(lambda_values.size());
  for (double lambda : lambda_values) {
    const double c = window_density(2, lambda, n);
    if (!(c >= 0))
      throw std::invalid_argument(
          "satisfiability_curve: lambda yields negative density");
    const auto m = static_cast<std::uint64_t>(std::llround(c * n));
    const std::uint64_t salt = rng::mix_combine(
        rng::mix64(seed.master), std::bit_cast<std::uint64_t>(lambda));
    std::uint64_t sat = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Formula f = generators::gen_ksat(
          n, m, 2, Seed{salt, rng::mix_combine(seed.stream, t)});
      sat += exact::two_sat_decide(f) ? 1 : 0;
    }
    points.push_back(
        {lambda, c, static_cast<double>(sat) / static_cast<double>(trials)});
  }
  return points;
}

}  // namespace phaselab::harness

namespace phaselab {
using harness::build_summary;
using harness::CellSummary;
using harness::config_from_json;
using harness::config_to_json;
using harness::content_hash;
using harness::CurvePoint;
using harness::ExperimentConfig;
using harness::ExperimentResult;
using harness::monotonicity_probe;
using harness::MonotonicityRow;
using harness::read_records_csv;
using harness::run_experiment;
using harness::satisfiability_curve;
using harness::summary_json;
using harness::TrialRecord;
using harness::validate_config;
using harness::write_records_csv;
}  // namespace phaselab
