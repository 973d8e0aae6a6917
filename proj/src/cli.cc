// Copyright 2026 The OnlineLP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "olp/cli.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include "CLI11.hpp"
#include "olp/error.h"
#include "olp/metrics.h"
#include "olp/mkp.h"
#include "olp/mps.h"
#include "olp/sifting.h"
#include "olp/simplex.h"

namespace olp {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Replaces "--config FILE" by one "--key=value" argument per line of FILE,
// placed right after the subcommand so that later command-line flags win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw InvalidConfigError("--config needs a file");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::vector<std::string> extra;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(path + ": expected key=value", line_no);
    }
    extra.push_back("--" + trim(line.substr(0, eq)) + "=" +
                    trim(line.substr(eq + 1)));
  }
  const std::size_t at = args.empty() ? 0 : 1;
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(),
              extra.end());
  return args;
}

std::string output_path(const std::string& path) {
  if (path.empty()) return path;
  const char* dir = std::getenv("OLP_OUTPUT_DIR");
  std::filesystem::path p(path);
  if (dir == nullptr || *dir == '\0' || p.is_absolute()) return path;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / p).string();
}

struct InstanceArgs {
  std::string gen;
  std::string mps;
  bool netlib = false;
};

void add_instance_options(CLI::App* app, InstanceArgs& a) {
  app->add_option("--gen", a.gen,
                  "MKP generator parameters, e.g. m=5,n=100,tau=0.25,sigma=1,seed=7");
  app->add_option("--mps", a.mps, "MPS model file");
  app->add_flag("--netlib", a.netlib,
                "restore source rows, b <- max(b, 1e-3), u <- min(u, 100)");
}

std::string instance_label(const InstanceArgs& a) {
  if (!a.gen.empty() && !a.mps.empty()) {
    throw InvalidConfigError("give either --gen or --mps, not both");
  }
  if (!a.gen.empty()) return parse_mkp_params(a.gen).label();
  if (!a.mps.empty()) return a.netlib ? "netlib:" + a.mps : a.mps;
  throw InvalidConfigError("an instance is required (--gen or --mps)");
}

struct OnlineArgs {
  std::string method = "explicit";
  int k = 1;
  double gamma = 0.0;
  std::string stepsize = "simple";
  std::uint64_t seed = 0;
  std::string start = "zero";
  bool enforce = true;
  bool lazy = false;
  bool block = false;
  bool check_bounds = true;
};

void add_online_options(CLI::App* app, OnlineArgs& a) {
  app->add_option("--method", a.method, "explicit or implicit")
      ->check(CLI::IsMember({"explicit", "implicit"}))
      ->capture_default_str();
  app->add_option("--k", a.k, "number of column copies K")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--gamma", a.gamma, "fixed stepsize (overrides --stepsize)");
  app->add_option("--stepsize", a.stepsize, "simple or theorem")
      ->check(CLI::IsMember({"simple", "theorem"}))
      ->capture_default_str();
  app->add_option("--seed", a.seed, "permutation seed")->capture_default_str();
  app->add_option("--start", a.start, "dual start point: zero or ones")
      ->check(CLI::IsMember({"zero", "ones"}))
      ->capture_default_str();
  app->add_flag("--enforce-feasibility,!--no-enforce-feasibility", a.enforce,
                "accept a column only while capacity remains")
      ->capture_default_str();
  app->add_flag("--lazy", a.lazy, "O(nnz) explicit pass");
  app->add_flag("--block", a.block,
                "visit the K copies as K independent permutations");
  app->add_flag("--check-bounds,!--no-check-bounds", a.check_bounds,
                "verify the dual-iterate bounds")
      ->capture_default_str();
}

RunConfig make_config(const OnlineArgs& a) {
  RunConfig c;
  c.method = a.method == "implicit" ? Method::kImplicit : Method::kExplicit;
  c.duplication_k = a.k;
  if (a.gamma > 0.0) {
    c.stepsize_mode = StepsizeMode::kFixed;
    c.fixed_gamma = a.gamma;
  } else if (a.gamma < 0.0) {
    throw InvalidConfigError("--gamma must be positive");
  } else {
    c.stepsize_mode =
        a.stepsize == "theorem" ? StepsizeMode::kTheoremOptimal : StepsizeMode::kSimple;
  }
  c.seed = a.seed;
  c.start_point = a.start == "ones" ? StartPoint::kOnes : StartPoint::kZero;
  c.enforce_feasibility = a.enforce;
  c.lazy = a.lazy;
  c.block_permutation = a.block;
  c.check_dual_bounds = a.check_bounds;
  c.validate();
  return c;
}

double resolved_gamma(const LpInstance& inst, const RunConfig& c) {
  return default_stepsize(compute_stats(inst), inst.num_rows(), inst.num_cols(),
                          c.duplication_k, c.method, c.stepsize_mode,
                          c.fixed_gamma);
}

void echo_instance(std::ostream& out, const std::string& label,
                   const LpInstance& inst) {
  out << "instance: " << label << " (m=" << inst.num_rows()
      << ", n=" << inst.num_cols() << ", nnz=" << inst.nnz() << ")\n";
}

void echo_config(std::ostream& out, const LpInstance& inst,
                 const RunConfig& c) {
  out << "config: method=" << to_string(c.method) << " K=" << c.duplication_k
      << " stepsize=" << to_string(c.stepsize_mode)
      << " gamma=" << real(resolved_gamma(inst, c)) << " seed=" << c.seed
      << " start=" << to_string(c.start_point)
      << " enforce_feasibility=" << (c.enforce_feasibility ? "on" : "off")
      << " lazy=" << (c.lazy ? "on" : "off")
      << " block=" << (c.block_permutation ? "on" : "off")
      << " check_bounds=" << (c.check_dual_bounds ? "on" : "off") << "\n";
}

std::pair<OnlineSolution, double> timed_pass(const LpInstance& inst,
                                             const RunConfig& c) {
  const auto start = Clock::now();
  OnlineSolution sol = run_duplicated(inst, c);
  return {std::move(sol), seconds_since(start)};
}

ResultRecord make_record(const std::string& label, const RunConfig& c,
                         const OnlineSolution& sol, double seconds,
                         const LpInstance& inst,
                         std::optional<double> opt_value) {
  ResultRecord r;
  r.instance = label;
  r.method = method_label(c);
  r.k = c.duplication_k;
  r.gamma = sol.gamma;
  r.seed = c.seed;
  r.objective = sol.objective;
  r.violation = sol.violation;
  if (opt_value && *opt_value != 0.0) {
    r.rel_opt = relative_optimality(inst, sol.x_hat, *opt_value);
  }
  r.wall_time_s = seconds;
  return r;
}

std::optional<double> exact_optimum(const LpInstance& inst) {
  const SimplexResult res = solve_lp(inst);
  if (!res.optimal()) return std::nullopt;
  return res.obj + 0.0;
}

void write_csv_if_requested(const std::vector<ResultRecord>& records,
                            const std::string& out_arg, std::ostream& out) {
  if (out_arg.empty()) return;
  const std::string path = output_path(out_arg);
  write_results_csv(records, path);
  out << "wrote " << records.size() << " record(s) to " << path << "\n";
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  MkpParams params;
  std::string out;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  const LpInstance inst = generate_mkp(a.params);
  const InstanceStats st = compute_stats(inst);
  echo_instance(out, a.params.label(), inst);
  out << "stats: a_bar=" << real(st.a_bar) << " c_bar=" << real(st.c_bar)
      << " d_lo=" << real(st.d_lo) << " d_hi=" << real(st.d_hi) << "\n";
  if (!a.out.empty()) {
    const std::string path = output_path(a.out);
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    write_mps(inst, f);
    f.flush();
    if (!f) throw IoError("write to '" + path + "' failed");
    out << "wrote " << path << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  InstanceArgs inst;
  OnlineArgs online;
  double until_eps = 0.0;
  int max_k = 5000;
  bool exact = false;
  std::string out;
};

int run_solve(const SolveArgs& a, std::ostream& out) {
  const std::string label = instance_label(a.inst);
  const LpInstance inst = load_instance(label);
  RunConfig cfg = make_config(a.online);
  echo_instance(out, label, inst);
  if (a.until_eps > 0.0) {
    out << "config: until_eps=" << real(a.until_eps) << " max_k=" << a.max_k
        << "\n";
  }
  std::optional<double> opt_value;
  if (a.exact) {
    opt_value = exact_optimum(inst);
    out << "exact: " << (opt_value ? real(*opt_value) : "unavailable") << "\n";
  }
  int code = kExitOk;
  std::vector<ResultRecord> records;
  while (true) {
    echo_config(out, inst, cfg);
    auto [sol, seconds] = timed_pass(inst, cfg);
    const double residual = stopping_residual(inst, sol.x_hat, sol.y_final);
    records.push_back(make_record(label, cfg, sol, seconds, inst, opt_value));
    out << "objective: " << real(sol.objective) << "\n"
        << "violation: " << real(sol.violation) << "\n"
        << "residual: " << real(residual) << "\n";
    if (records.back().rel_opt) {
      out << "rel_opt: " << real(*records.back().rel_opt) << "\n";
    }
    if (sol.bounds.checked) {
      out << "dual_bound_violations: " << sol.bounds.violations << "\n";
    }
    out << "time_s: " << real(seconds) << "\n";
    if (a.until_eps <= 0.0 || residual <= a.until_eps) break;
    if (cfg.duplication_k >= a.max_k) {
      out << "K cap " << a.max_k << " reached with residual " << real(residual)
          << " > " << real(a.until_eps) << "\n";
      code = kExitLimit;
      break;
    }
    cfg.duplication_k = std::min(2 * cfg.duplication_k, a.max_k);
  }
  write_csv_if_requested(records, a.out, out);
  return code;
}

// ---------------------------------------------------------------- sift

struct SiftArgs {
  InstanceArgs inst;
  OnlineArgs online;
  double alpha = 0.4;
  bool no_anchor = false;
  double init_threshold = -1.0;
  int max_rounds = 200;
  int max_new = 0;
  double tolerance = 1e-7;
  std::string out;
};

int run_sift(const SiftArgs& a, std::ostream& out) {
  const std::string label = instance_label(a.inst);
  const LpInstance inst = load_instance(label);
  const RunConfig cfg = make_config(a.online);
  SiftConfig sc;
  sc.stabilization_alpha = a.alpha;
  sc.use_online_anchor = !a.no_anchor;
  sc.init_threshold = a.init_threshold >= 0.0
                          ? a.init_threshold
                          : 1.0 / static_cast<double>(cfg.duplication_k);
  sc.max_rounds = a.max_rounds;
  sc.max_new_columns_per_round = a.max_new;
  sc.pricing_tolerance = a.tolerance;
  sc.validate();
  echo_instance(out, label, inst);
  echo_config(out, inst, cfg);
  out << "config: alpha=" << real(sc.stabilization_alpha)
      << " anchor=" << (sc.use_online_anchor ? "on" : "off")
      << " init_threshold=" << real(sc.init_threshold)
      << " tolerance=" << real(sc.pricing_tolerance)
      << " max_rounds=" << sc.max_rounds << " max_new="
      << (sc.max_new_columns_per_round > 0
              ? std::to_string(sc.max_new_columns_per_round)
              : std::string("unlimited"))
      << "\n";
  auto [sol, online_seconds] = timed_pass(inst, cfg);
  const SiftResult res = sift(inst, sol, sc);
  if (res.fallback_used) {
    out << "init: no column reached the threshold; using the top-m fallback\n";
  }
  for (const SiftRound& r : res.trace) {
    out << "round " << r.round << ": |W|=" << r.working_size
        << " |I|=" << r.priced << " objective=" << real(r.objective)
        << " t=" << real(r.seconds) << "\n";
  }
  out << "objective: " << real(res.objective) << "\n"
      << "rounds: " << res.rounds << "\n"
      << "converged: " << (res.converged ? "yes" : "no") << "\n"
      << "certified: " << (res.certified ? "yes" : "no") << "\n"
      << "rdc: " << real(res.rdc) << "\n"
      << "acc: " << (res.acc ? real(*res.acc) : "unavailable") << "\n";
  if (res.reference_objective) {
    out << "reference_objective: " << real(*res.reference_objective) << "\n";
  }
  const double seconds = online_seconds + res.seconds;
  out << "time_s: " << real(seconds) << " (online " << real(online_seconds)
      << ")\n";

  ResultRecord r;
  r.instance = label;
  r.method = "sift/" + method_label(cfg);
  r.k = cfg.duplication_k;
  r.gamma = sol.gamma;
  r.seed = cfg.seed;
  r.objective = res.objective;
  r.violation = res.x_full.empty() ? 0.0 : constraint_violation(inst, res.x_full);
  if (res.reference_objective && *res.reference_objective != 0.0) {
    r.rel_opt = std::abs(res.objective / *res.reference_objective);
  }
  r.acc = res.acc;
  r.rdc = res.rdc;
  r.rounds = res.rounds;
  r.wall_time_s = seconds;
  write_csv_if_requested({r}, a.out, out);
  if (!res.exact.optimal()) return kExitSolve;
  return res.converged ? kExitOk : kExitLimit;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string preset;
  int reps = 1;
  std::vector<std::string> sizes;
  std::vector<double> taus;
  std::vector<int> ks;
  std::vector<std::string> methods;
  double sigma = 1.0;
  std::uint64_t seed = 1;
  bool enforce = true;
  bool lazy = false;
  int jobs = 0;
  std::string out = "bench.csv";
};

struct BenchTask {
  MkpParams params;
  bool need_opt = true;
  std::vector<RunConfig> configs;
};

std::pair<int, int> parse_size(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos) throw InvalidConfigError("size '" + s + "' is not MxN");
  try {
    return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
  } catch (const std::exception&) {
    throw InvalidConfigError("size '" + s + "' is not MxN");
  }
}

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    out.push_back(std::pow(10.0, std::log10(lo) + t * (std::log10(hi) - std::log10(lo))));
  }
  return out;
}

std::vector<BenchTask> bench_grid(const BenchArgs& a) {
  std::vector<std::pair<int, int>> sizes;
  std::vector<double> taus = a.taus;
  std::vector<int> ks = a.ks;
  std::vector<std::string> methods = a.methods;
  for (const std::string& s : a.sizes) sizes.push_back(parse_size(s));
  const std::vector<std::pair<int, int>> paper_sizes{
      {5, 100}, {8, 1000}, {16, 2000}, {32, 4000}};
  std::vector<BenchTask> tasks;

  if (a.preset == "cputime") {
    // (m, n, nnz) rows of the timing table with nnz <= 1e6.
    const std::vector<std::tuple<int, int, double>> rows{
        {100, 100, 1e3},     {100, 1000, 1e4},    {100, 10000, 1e4},
        {100, 100000, 1e5},  {100, 1000000, 1e6}, {1000, 100, 1e4},
        {1000, 1000, 1e4},   {1000, 10000, 1e5},  {1000, 100000, 1e6},
        {1000, 1000000, 1e5}, {10000, 100, 1e4},  {10000, 1000, 1e5},
        {10000, 10000, 1e6}, {10000, 100000, 1e5}, {10000, 1000000, 1e6},
        {100000, 100, 1e5},  {100000, 1000, 1e6}, {100000, 10000, 1e5},
        {100000, 100000, 1e6}, {1000000, 100, 1e6}, {1000000, 1000, 1e5},
        {1000000, 10000, 1e6}};
    for (const auto& [m, n, nnz] : rows) {
      for (int rep = 0; rep < a.reps; ++rep) {
        BenchTask t;
        t.params.m = m;
        t.params.n = n;
        t.params.tightness = taus.empty() ? 0.25 : taus.front();
        t.params.density = std::min(1.0, nnz / (static_cast<double>(m) * n));
        t.params.seed = a.seed + static_cast<std::uint64_t>(rep);
        t.params.allow_zero_rhs = true;
        t.need_opt = false;
        RunConfig c;
        c.method = Method::kExplicit;
        c.duplication_k = ks.empty() ? 100 : ks.front();
        c.seed = t.params.seed;
        c.lazy = true;
        c.block_permutation = true;
        c.check_dual_bounds = false;
        t.configs.push_back(c);
        tasks.push_back(std::move(t));
      }
    }
    return tasks;
  }
  if (a.preset == "paper-fig1") {
    if (sizes.empty()) sizes = paper_sizes;
    if (taus.empty()) taus = log_grid(1e-2, 1.0, 10);
    if (ks.empty()) ks = {1, 8};
    if (methods.empty()) methods = {"explicit", "implicit"};
  } else if (a.preset == "paper-fig2") {
    if (sizes.empty()) sizes = paper_sizes;
    if (taus.empty()) taus = {0.25};
    if (ks.empty()) ks = {1, 2, 4, 8, 16, 32};
    if (methods.empty()) methods = {"explicit", "implicit"};
  } else if (!a.preset.empty()) {
    throw InvalidConfigError("unknown preset '" + a.preset + "'");
  }
  for (const auto& [m, n] : sizes) {
    for (double tau : taus) {
      for (int rep = 0; rep < a.reps; ++rep) {
        BenchTask t;
        t.params.m = m;
        t.params.n = n;
        t.params.tightness = tau;
        t.params.density = a.sigma;
        t.params.seed = a.seed + static_cast<std::uint64_t>(rep);
        t.params.validate();
        for (int k : ks) {
          for (const std::string& method : methods) {
            RunConfig c;
            if (method == "implicit") {
              c.method = Method::kImplicit;
            } else if (method == "explicit") {
              c.method = Method::kExplicit;
            } else {
              throw InvalidConfigError("unknown method '" + method + "'");
            }
            c.duplication_k = k;
            c.seed = t.params.seed;
            c.enforce_feasibility = a.enforce;
            c.lazy = a.lazy && c.method == Method::kExplicit;
            c.validate();
            t.configs.push_back(c);
          }
        }
        if (!t.configs.empty()) tasks.push_back(std::move(t));
      }
    }
  }
  return tasks;
}

std::vector<ResultRecord> run_task(const BenchTask& t, int& failures) {
  std::vector<ResultRecord> out;
  const std::string label = t.params.label();
  std::optional<LpInstance> inst;
  std::optional<double> opt_value;
  try {
    inst = generate_mkp(t.params);
    if (t.need_opt) {
      opt_value = exact_optimum(*inst);
      if (!opt_value) ++failures;
    }
  } catch (const std::exception&) {
    ++failures;
  }
  for (const RunConfig& c : t.configs) {
    try {
      if (!inst) throw InvalidInstanceError("generation failed");
      auto [sol, seconds] = timed_pass(*inst, c);
      out.push_back(make_record(label, c, sol, seconds, *inst, opt_value));
    } catch (const std::exception&) {
      ++failures;
      ResultRecord r;
      r.instance = label;
      r.method = method_label(c) + "+failed";
      r.k = c.duplication_k;
      r.seed = c.seed;
      r.objective = std::numeric_limits<double>::quiet_NaN();
      r.violation = std::numeric_limits<double>::quiet_NaN();
      out.push_back(r);
    }
  }
  return out;
}

int run_bench(const BenchArgs& a, std::ostream& out) {
  if (a.reps < 1) throw InvalidConfigError("--reps must be >= 1");
  const std::vector<BenchTask> tasks = bench_grid(a);
  int jobs = a.jobs > 0 ? a.jobs
                        : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  // The timing preset fixes its own pass configuration.
  const bool cputime = a.preset == "cputime";
  out << "config: preset=" << (a.preset.empty() ? "(grid)" : a.preset)
      << " reps=" << a.reps << " sigma=" << real(a.sigma) << " seed=" << a.seed
      << " enforce_feasibility=" << (a.enforce && !cputime ? "on" : "off")
      << " lazy=" << (a.lazy || cputime ? "on" : "off") << " jobs=" << jobs
      << " tasks=" << tasks.size() << "\n";

  std::vector<std::vector<ResultRecord>> results(tasks.size());
  std::vector<int> failures(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      results[i] = run_task(tasks[i], failures[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<ResultRecord> records;
  int failed = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    failed += failures[i];
    records.insert(records.end(), results[i].begin(), results[i].end());
  }

  // Mean relative optimality per (instance size, method, K).
  std::map<std::tuple<std::string, std::string, std::int64_t>,
           std::pair<double, int>> groups;
  for (const ResultRecord& r : records) {
    if (!r.rel_opt) continue;
    const std::string size = r.instance.substr(0, r.instance.find(",tau="));
    auto& g = groups[{size, r.method, r.k}];
    g.first += *r.rel_opt;
    g.second += 1;
  }
  for (const auto& [key, g] : groups) {
    out << std::get<0>(key) << " " << std::get<1>(key) << " K=" << std::get<2>(key)
        << " mean_rel_opt=" << real(g.first / g.second) << " (" << g.second
        << " runs)\n";
  }
  const std::string path = output_path(a.out);
  write_results_csv(records, path);
  out << "wrote " << records.size() << " record(s) to " << path << "\n";
  if (failed > 0) {
    out << failed << " cell(s) failed\n";
    return kExitSolve;
  }
  return kExitOk;
}

}  // namespace

std::string method_label(const RunConfig& c) {
  std::string s = to_string(c.method);
  if (c.enforce_feasibility) s += "+feas";
  if (c.start_point == StartPoint::kOnes) s += "+ones";
  if (c.start_point == StartPoint::kGiven) s += "+given";
  if (c.lazy) s += "+lazy";
  if (c.block_permutation) s += "+block";
  return s;
}

RunConfig parse_method_label(const std::string& label) {
  RunConfig c;
  std::istringstream is(label);
  std::string tok;
  bool first = true;
  while (std::getline(is, tok, '+')) {
    if (first) {
      if (tok == "explicit") {
        c.method = Method::kExplicit;
      } else if (tok == "implicit") {
        c.method = Method::kImplicit;
      } else {
        throw InvalidConfigError("unknown method '" + tok + "'");
      }
      first = false;
    } else if (tok == "feas") {
      c.enforce_feasibility = true;
    } else if (tok == "ones") {
      c.start_point = StartPoint::kOnes;
    } else if (tok == "lazy") {
      c.lazy = true;
    } else if (tok == "block") {
      c.block_permutation = true;
    } else {
      throw InvalidConfigError("cannot replay method flag '" + tok + "'");
    }
  }
  if (first) throw InvalidConfigError("empty method label");
  return c;
}

LpInstance load_instance(const std::string& label) {
  if (label.rfind("mkp:", 0) == 0) return generate_mkp(parse_mkp_params(label));
  if (label.rfind("netlib:", 0) == 0) {
    return netlib_modify(parse_mps_file(label.substr(7)));
  }
  return parse_mps_file(label);
}

ResultRecord run_online_record(const LpInstance& instance,
                               const std::string& label,
                               const RunConfig& config,
                               std::optional<double> opt_value) {
  auto [sol, seconds] = timed_pass(instance, config);
  return make_record(label, config, sol, seconds, instance, opt_value);
}

ResultRecord replay_record(const ResultRecord& record) {
  const LpInstance inst = load_instance(record.instance);
  RunConfig c = parse_method_label(record.method);
  c.duplication_k = static_cast<int>(record.k);
  c.seed = record.seed;
  c.stepsize_mode = StepsizeMode::kFixed;
  c.fixed_gamma = record.gamma;
  ResultRecord r = run_online_record(inst, record.instance, c, std::nullopt);
  r.rel_opt = record.rel_opt;
  return r;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Online first-order LP solving, sifting and benchmarks", "olp"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an MKP instance");
  gen_cmd->add_option("--m", gen.params.m, "rows")->capture_default_str();
  gen_cmd->add_option("--n", gen.params.n, "columns")->capture_default_str();
  gen_cmd->add_option("--tau", gen.params.tightness, "tightness")->capture_default_str();
  gen_cmd->add_option("--sigma", gen.params.density, "density")->capture_default_str();
  gen_cmd->add_option("--seed", gen.params.seed, "seed")->capture_default_str();
  gen_cmd->add_flag("--perturb-a3", gen.params.perturb_a3, "jitter c by <= 1e-9");
  gen_cmd->add_flag("--rhs-before-sparsify", gen.params.rhs_before_sparsify,
                    "b from the row sums before zeroing");
  gen_cmd->add_option("--out", gen.out, "write the instance as MPS");

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "approximate solve by online passes");
  add_instance_options(solve_cmd, solve.inst);
  add_online_options(solve_cmd, solve.online);
  solve_cmd->add_option("--until-eps", solve.until_eps,
                        "double K until the stopping residual is <= eps");
  solve_cmd->add_option("--max-k", solve.max_k, "cap on K for --until-eps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve_cmd->add_flag("--exact", solve.exact,
                      "also solve exactly and report relative optimality");
  solve_cmd->add_option("--out", solve.out, "results CSV");

  SiftArgs sift_args;
  sift_args.online.start = "ones";
  sift_args.online.k = 2;
  sift_args.online.enforce = false;
  CLI::App* sift_cmd = app.add_subcommand("sift", "sifting seeded by an online pass");
  add_instance_options(sift_cmd, sift_args.inst);
  add_online_options(sift_cmd, sift_args.online);
  sift_cmd->add_option("--alpha", sift_args.alpha, "dual stabilization weight")
      ->capture_default_str();
  sift_cmd->add_flag("--no-anchor", sift_args.no_anchor,
                     "price with the working dual only");
  sift_cmd->add_option("--init-threshold", sift_args.init_threshold,
                       "working-set threshold (default 1/K)");
  sift_cmd->add_option("--max-rounds", sift_args.max_rounds)->capture_default_str();
  sift_cmd->add_option("--max-new", sift_args.max_new,
                       "columns added per round (0 = all)")
      ->capture_default_str();
  sift_cmd->add_option("--tolerance", sift_args.tolerance, "pricing tolerance")
      ->capture_default_str();
  sift_cmd->add_option("--out", sift_args.out, "results CSV");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "benchmark grids to CSV");
  bench_cmd->add_option("--preset", bench.preset, "paper-fig1, paper-fig2 or cputime")
      ->check(CLI::IsMember({"paper-fig1", "paper-fig2", "cputime"}));
  bench_cmd->add_option("--reps", bench.reps, "seeds per cell")->capture_default_str();
  bench_cmd->add_option("--sizes", bench.sizes, "MxN list")->delimiter(',');
  bench_cmd->add_option("--taus", bench.taus, "tightness list")->delimiter(',');
  bench_cmd->add_option("--ks", bench.ks, "K list")->delimiter(',');
  bench_cmd->add_option("--methods", bench.methods, "explicit,implicit")->delimiter(',');
  bench_cmd->add_option("--sigma", bench.sigma, "density")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "first seed")->capture_default_str();
  bench_cmd->add_flag("--enforce-feasibility,!--no-enforce-feasibility", bench.enforce)
      ->capture_default_str();
  bench_cmd->add_flag("--lazy", bench.lazy, "lazy explicit passes");
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads (0 = all cores)");
  bench_cmd->add_option("--out", bench.out, "results CSV")->capture_default_str();

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (solve_cmd->parsed()) return run_solve(solve, out);
    if (sift_cmd->parsed()) return run_sift(sift_args, out);
    if (bench_cmd->parsed()) return run_bench(bench, out);
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidConfigError& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitGeneric;
  } catch (const Error& e) {
    err << "solve error: " << e.what() << "\n";
    return kExitSolve;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitGeneric;
  }
}

}  // namespace olp
