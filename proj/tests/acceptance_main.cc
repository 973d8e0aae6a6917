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

// Acceptance suite: one PASS/FAIL line per criterion with the measured values.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "olp/cli.h"
#include "olp/error.h"
#include "olp/lp_instance.h"
#include "olp/metrics.h"
#include "olp/mkp.h"
#include "olp/online.h"
#include "olp/results_csv.h"
#include "olp/rng.h"
#include "olp/sifting.h"
#include "olp/simplex.h"
#include "test_util.h"

namespace olp {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

// Tally of the runtime dual-iterate bound checks over every online pass made
// by this suite.
struct BoundTally {
  std::int64_t checked_runs = 0;
  std::int64_t unchecked_runs = 0;
  std::int64_t violations = 0;
  double worst_ratio = 0.0;  // max ||y^k|| / bound
};
BoundTally g_bounds;

OnlineSolution tracked(const LpInstance& lp, const RunConfig& cfg) {
  OnlineSolution s = run_duplicated(lp, cfg);
  if (s.bounds.checked) {
    ++g_bounds.checked_runs;
    g_bounds.violations += s.bounds.violations;
    if (std::isfinite(s.max_dual_norm)) {
      g_bounds.worst_ratio =
          std::max(g_bounds.worst_ratio, s.max_dual_norm / s.bounds.norm_bound);
    }
  } else {
    ++g_bounds.unchecked_runs;
  }
  return s;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

LpInstance mkp(int m, int n, double tau, double sigma, std::uint64_t seed) {
  MkpParams p;
  p.m = m;
  p.n = n;
  p.tightness = tau;
  p.density = sigma;
  p.seed = seed;
  return generate_mkp(p);
}

// ---------------------------------------------------------------- 1

Outcome oracle_equivalence() {
  Rng rng(20260101);
  int agree = 0;
  int feasible = 0;
  double worst = 0.0;
  const auto start = Clock::now();
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng.below(6));
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(12 - m)));
    const bool mixed = t % 2 == 1;
    const auto d = testing::random_dense(rng, m, n, mixed ? -2.0 : 0.0, 3.0, 0.25,
                                         mixed ? -1.0 : 0.0, 4.0, -1.0, 3.0, 3);
    const LpInstance lp = testing::to_instance(d);
    const SimplexResult r = solve_lp(lp);
    bool oracle_feasible = true;
    double oracle = 0.0;
    try {
      oracle = enumerate_vertices_oracle(lp).opt_value;
    } catch (const InfeasibleSetError&) {
      oracle_feasible = false;
    }
    if (!oracle_feasible) {
      agree += r.status == SimplexStatus::kInfeasible;
      continue;
    }
    ++feasible;
    const double err = std::abs(r.obj - oracle);
    if (r.optimal() && err <= 1e-8) ++agree;
    if (r.optimal()) worst = std::max(worst, err);
  }
  const double secs = seconds_since(start);
  Outcome o;
  o.pass = agree == 200 && secs < 10.0;
  o.detail = std::to_string(agree) + "/200 agree (" + std::to_string(feasible) +
             " feasible), max |obj - oracle| = " + fmt("%.2e", worst) + ", " +
             fmt("%.2f", secs) + " s";
  return o;
}

// ---------------------------------------------------------------- 2

Outcome toy_recovery() {
  const LpInstance toy = LpInstance::from_dense({{1.0, 1.0}}, {0.5}, {1.0, 1.0});
  RunConfig cfg;
  cfg.stepsize_mode = StepsizeMode::kFixed;
  cfg.fixed_gamma = 0.005;
  cfg.enforce_feasibility = true;
  double worst_implicit = 0.0;
  double worst_explicit = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    cfg.seed = seed;
    cfg.method = Method::kImplicit;
    worst_implicit =
        std::max(worst_implicit, std::abs(tracked(toy, cfg).objective - 0.5));
    cfg.method = Method::kExplicit;
    worst_explicit = std::max(worst_explicit, std::abs(tracked(toy, cfg).objective));
  }
  Outcome o;
  o.pass = worst_implicit <= 1e-9 && worst_explicit == 0.0;
  o.detail = "implicit max |obj - 0.5| = " + fmt("%.3e", worst_implicit) +
             ", explicit max |obj| = " + fmt("%.3g", worst_explicit) + " over 20 seeds";
  return o;
}

// ---------------------------------------------------------------- 3

Outcome lazy_equals_dense() {
  Rng rng(3);
  const auto start = Clock::now();
  int identical = 0;
  double worst_y = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int n = 100 + static_cast<int>(rng.below(9901));
    const int m = 2 + static_cast<int>(rng.below(60));
    const double sigma = t % 2 ? 0.1 : 0.01;
    const LpInstance lp = testing::random_sparse(rng, m, n, sigma);
    RunConfig cfg;
    cfg.seed = 7 * t;
    cfg.start_point = t % 3 == 0 ? StartPoint::kOnes : StartPoint::kZero;
    cfg.duplication_k = 1 + t % 3;
    cfg.enforce_feasibility = t % 4 == 0;
    const OnlineSolution dense = tracked(lp, cfg);
    cfg.lazy = true;
    const OnlineSolution lazy = tracked(lp, cfg);
    bool same = dense.x_hat == lazy.x_hat && dense.objective == lazy.objective &&
                dense.violation == lazy.violation;
    // The dense path rounds after each of up to nK drift steps while the lazy
    // path applies them in one product, so y agrees to that rounding bound.
    const double y_tol = 4.0 * std::numeric_limits<double>::epsilon() * n * cfg.duplication_k;
    for (std::size_t i = 0; i < dense.y_final.size(); ++i) {
      const double rel = std::abs(dense.y_final[i] - lazy.y_final[i]) /
                         std::max(1.0, std::abs(dense.y_final[i]));
      worst_y = std::max(worst_y, rel / y_tol);
      same = same && rel <= y_tol;
    }
    identical += same;
  }

  // Wall time at fixed n across nnz in {1e4, 1e5, 1e6}.
  const int n = 10000;
  const int m = 100;
  std::vector<double> times;
  for (double sigma : {0.01, 0.1, 1.0}) {
    const LpInstance lp = mkp(m, n, 0.25, sigma, 77);
    RunConfig cfg;
    cfg.lazy = true;
    cfg.duplication_k = 4;
    cfg.check_dual_bounds = false;
    std::vector<double> reps;
    for (int r = 0; r < 5; ++r) {
      cfg.seed = r;
      const auto t0 = Clock::now();
      tracked(lp, cfg);
      reps.push_back(seconds_since(t0));
    }
    times.push_back(median(reps));
  }
  const double g1 = times[1] / times[0];
  const double g2 = times[2] / times[1];
  const double secs = seconds_since(start);
  Outcome o;
  o.pass = identical == 50 && g1 <= 20.0 && g2 <= 20.0 && secs < 60.0;
  o.detail = std::to_string(identical) +
             "/50 identical (x_hat, objective, violation bitwise; y within " +
             fmt("%.2f", worst_y) + " of the nK rounding bound), lazy time nnz 1e4/1e5/1e6 = " +
             fmt("%.4f", times[0]) + "/" + fmt("%.4f", times[1]) + "/" +
             fmt("%.4f", times[2]) + " s (growth x" + fmt("%.1f", g1) + ", x" +
             fmt("%.1f", g2) + " per 10x nnz, limit 20), " + fmt("%.1f", secs) + " s";
  return o;
}

// ---------------------------------------------------------------- 5

Outcome duplication_monotonicity() {
  const auto start = Clock::now();
  const std::vector<int> ks{1, 4, 16, 32};
  const std::vector<double> taus{0.05, 0.25, 1.0};
  // means[tau][method][k]
  std::vector<std::vector<std::vector<double>>> sums(
      taus.size(), std::vector<std::vector<double>>(2, std::vector<double>(ks.size(), 0.0)));
  const int seeds = 20;
  for (std::size_t ti = 0; ti < taus.size(); ++ti) {
    for (int s = 0; s < seeds; ++s) {
      const LpInstance lp = mkp(8, 1000, taus[ti], 1.0, 500 + s);
      const double opt = solve_lp(lp).obj;
      for (int mi = 0; mi < 2; ++mi) {
        for (std::size_t ki = 0; ki < ks.size(); ++ki) {
          RunConfig cfg;
          cfg.method = mi == 0 ? Method::kExplicit : Method::kImplicit;
          cfg.duplication_k = ks[ki];
          cfg.seed = static_cast<std::uint64_t>(s);
          cfg.enforce_feasibility = true;
          const OnlineSolution sol = tracked(lp, cfg);
          sums[ti][mi][ki] += relative_optimality(lp, sol.x_hat, opt);
        }
      }
    }
  }
  bool pass = true;
  std::ostringstream os;
  for (std::size_t ti = 0; ti < taus.size(); ++ti) {
    for (int mi = 0; mi < 2; ++mi) {
      int inversions = 0;
      bool big = false;
      std::vector<double> mu;
      for (double v : sums[ti][mi]) mu.push_back(v / seeds);
      for (std::size_t k = 1; k < mu.size(); ++k) {
        if (mu[k] < mu[k - 1]) {
          ++inversions;
          big = big || mu[k - 1] - mu[k] > 0.005;
        }
      }
      const bool ok_mono = inversions == 0 || (inversions == 1 && !big);
      const bool ok_level = taus[ti] < 0.25 || mu.back() >= 0.90;
      pass = pass && ok_mono && ok_level;
      os << " tau=" << taus[ti] << (mi == 0 ? " explicit" : " implicit") << " [";
      for (std::size_t k = 0; k < mu.size(); ++k) os << (k ? " " : "") << fmt("%.3f", mu[k]);
      os << "]" << (ok_mono ? "" : " NONMONOTONE") << (ok_level ? "" : " BELOW-0.90") << ";";
    }
  }
  const double secs = seconds_since(start);
  pass = pass && secs < 300.0;
  Outcome o;
  o.pass = pass;
  o.detail = "mean rel_opt at K=1,4,16,32:" + os.str() + " " + fmt("%.1f", secs) + " s";
  return o;
}

// ---------------------------------------------------------------- 6

Outcome implicit_beats_explicit() {
  const auto start = Clock::now();
  std::ostringstream os;
  bool pass = true;
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{5, 100}, {8, 1000}}) {
    std::vector<double> ex;
    std::vector<double> im;
    for (int s = 0; s < 20; ++s) {
      const LpInstance lp = mkp(m, n, 0.01, 1.0, 900 + s);
      const double opt = solve_lp(lp).obj;
      RunConfig cfg;
      cfg.seed = static_cast<std::uint64_t>(s);
      cfg.enforce_feasibility = true;
      ex.push_back(relative_optimality(lp, tracked(lp, cfg).x_hat, opt));
      cfg.method = Method::kImplicit;
      im.push_back(relative_optimality(lp, tracked(lp, cfg).x_hat, opt));
    }
    pass = pass && mean(im) >= mean(ex);
    os << " (" << m << "," << n << "): implicit " << fmt("%.4f", mean(im)) << " vs explicit "
       << fmt("%.4f", mean(ex)) << ";";
  }
  const double secs = seconds_since(start);
  Outcome o;
  o.pass = pass && secs < 120.0;
  o.detail = "tau=0.01, K=1, 20 seeds, mean rel_opt" + os.str() + " " + fmt("%.1f", secs) + " s";
  return o;
}

// ---------------------------------------------------------------- 7

Outcome violation_tradeoff() {
  int runs = 0;
  int stated_ok = 0;
  int tight_ok = 0;
  int formula_ok = 0;
  int formula_checks = 0;
  double worst_ratio = 0.0;
  for (int s = 0; s < 12; ++s) {
    const LpInstance lp = mkp(4 + s % 5, 200 + 50 * s, 0.05 + 0.08 * s, s % 2 ? 0.5 : 1.0, 700 + s);
    const InstanceStats st = compute_stats(lp);
    const double base =
        default_stepsize(st, lp.num_rows(), lp.num_cols(), 1, Method::kExplicit,
                         StepsizeMode::kSimple);
    double prev_bound = -1.0;
    for (int h = 0; h < 6; ++h) {
      const double gamma = base * 4.0 / std::pow(2.0, h);
      const double bound_formula = st.c_bar / (gamma * st.d_lo);
      if (prev_bound >= 0.0) {
        ++formula_checks;
        formula_ok += bound_formula >= prev_bound;
      }
      prev_bound = bound_formula;
      for (int k : {1, 4}) {
        RunConfig cfg;
        cfg.stepsize_mode = StepsizeMode::kFixed;
        cfg.fixed_gamma = gamma;
        cfg.duplication_k = k;
        cfg.seed = static_cast<std::uint64_t>(h);
        const OnlineSolution sol = tracked(lp, cfg);
        const double y = norm2(sol.y_final);
        const double slack = 1e-9 * (1.0 + y / gamma);
        ++runs;
        stated_ok += sol.violation <= y / gamma + slack;
        tight_ok += sol.violation <= y / (k * gamma) + slack;
        if (y > 0.0) worst_ratio = std::max(worst_ratio, sol.violation / (y / gamma));
      }
    }
  }
  Outcome o;
  o.pass = stated_ok == runs && tight_ok == runs && formula_ok == formula_checks;
  o.detail = std::to_string(stated_ok) + "/" + std::to_string(runs) +
             " runs with v <= ||y||/gamma (" + std::to_string(tight_ok) +
             " also <= ||y||/(K gamma); max v/(||y||/gamma) = " + fmt("%.3f", worst_ratio) +
             "), c_bar/(gamma d_lo) nondecreasing under halving in " +
             std::to_string(formula_ok) + "/" + std::to_string(formula_checks) + " steps";
  return o;
}

// ---------------------------------------------------------------- 8

// Independent global pricing over every column with the working dual.
bool globally_priced(const LpInstance& lp, const std::vector<double>& x,
                     const std::vector<double>& y, double tol) {
  const auto dense = lp.to_dense();
  for (double v : y) {
    if (v < -tol) return false;
  }
  for (int j = 0; j < lp.num_cols(); ++j) {
    double rc = lp.obj()[j];
    for (int i = 0; i < lp.num_rows(); ++i) rc -= dense[i][j] * y[i];
    if (rc > tol * (1.0 + std::abs(lp.obj()[j])) && x[j] < lp.upper()[j] - 1e-9) {
      return false;
    }
  }
  return true;
}

Outcome sifting_correctness() {
  const auto start = Clock::now();
  int matched = 0;
  int certified = 0;
  double worst = 0.0;
  for (int s = 0; s < 30; ++s) {
    const LpInstance lp = mkp(20, 2000, 0.02 + 0.03 * (s % 10), s % 3 ? 1.0 : 0.3, 1500 + s);
    RunConfig cfg;
    cfg.start_point = StartPoint::kOnes;
    cfg.duplication_k = 2;
    cfg.seed = static_cast<std::uint64_t>(s);
    const OnlineSolution online = tracked(lp, cfg);
    SiftConfig sc;
    sc.init_threshold = 0.5;
    sc.reference_max_cells = 0.0;
    const SiftResult res = sift(lp, online, sc);
    const double direct = solve_lp(lp).obj;
    const double rel = std::abs(res.objective - direct) / std::max(1.0, std::abs(direct));
    worst = std::max(worst, rel);
    matched += res.converged && rel <= 1e-6;
    certified += res.certified && globally_priced(lp, res.x_full, res.exact.y_star, 1e-7);
  }
  const double secs = seconds_since(start);
  Outcome o;
  o.pass = matched == 30 && certified == 30 && secs < 180.0;
  o.detail = std::to_string(matched) + "/30 within 1e-6 of the direct solve (max rel diff " +
             fmt("%.2e", worst) + "), " + std::to_string(certified) +
             "/30 with an empty global pricing set, " + fmt("%.1f", secs) + " s";
  return o;
}

// ---------------------------------------------------------------- 9

Outcome basis_prediction() {
  const auto start = Clock::now();
  std::vector<double> accs;
  std::vector<double> rdcs;
  int fallbacks = 0;
  for (int s = 0; s < 10; ++s) {
    const LpInstance lp = mkp(100, 10000, 0.05, 0.1, 2000 + s);
    RunConfig cfg;
    cfg.start_point = StartPoint::kOnes;
    cfg.duplication_k = 2;
    cfg.seed = static_cast<std::uint64_t>(s);
    const OnlineSolution online = tracked(lp, cfg);
    SiftConfig sc;
    sc.init_threshold = 0.5;
    const SiftResult res = sift(lp, online, sc);
    fallbacks += res.fallback_used;
    rdcs.push_back(res.rdc);
    if (res.acc) accs.push_back(*res.acc);
  }
  const double secs = seconds_since(start);
  const double med_rdc = median(rdcs);
  const double med_acc = accs.empty() ? std::numeric_limits<double>::quiet_NaN() : median(accs);
  Outcome o;
  o.pass = med_rdc <= 0.2 && accs.size() == 10;
  o.detail = "median rdc = " + fmt("%.4f", med_rdc) + " (limit 0.2), median acc = " +
             fmt("%.4f", med_acc) + " (target 0.8, reported only" +
             std::string(med_acc >= 0.8 ? ", met" : ", not met") + "), top-m fallback in " +
             std::to_string(fallbacks) + "/10, " + fmt("%.1f", secs) + " s";
  return o;
}

// ---------------------------------------------------------------- 10

// Brute force over active sets: every KKT point of the projection is
// y_S = v_S - theta w_S with theta from the equality, y = 0 off S.
bool brute_projection(const std::vector<double>& v, const std::vector<double>& w,
                      double target, std::vector<double>& best) {
  const int n = static_cast<int>(v.size());
  double best_val = std::numeric_limits<double>::infinity();
  for (int mask = 0; mask < (1 << n); ++mask) {
    double ww = 0.0;
    double wv = 0.0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        ww += w[i] * w[i];
        wv += w[i] * v[i];
      }
    }
    if (ww == 0.0) continue;
    const double theta = (wv - target) / ww;
    std::vector<double> y(n, 0.0);
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        y[i] = v[i] - theta * w[i];
        if (y[i] < -1e-12) ok = false;
        y[i] = std::max(y[i], 0.0);
      }
    }
    if (!ok) continue;
    double val = 0.0;
    for (int i = 0; i < n; ++i) val += (y[i] - v[i]) * (y[i] - v[i]);
    if (val < best_val) {
      best_val = val;
      best = y;
    }
  }
  return std::isfinite(best_val);
}

Outcome projection_correctness() {
  Rng rng(10);
  int ok = 0;
  int mixed = 0;
  double worst_y = 0.0;
  double worst_res = 0.0;
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + static_cast<int>(rng.below(8));
    std::vector<double> v(n), w(n);
    bool pos = false;
    bool neg = false;
    for (int i = 0; i < n; ++i) {
      v[i] = 4.0 * rng.uniform01() - 2.0;
      w[i] = 0.1 + 2.0 * rng.uniform01();
      if (t % 2 && rng.uniform01() < 0.4) w[i] = -w[i];
      pos = pos || w[i] > 0;
      neg = neg || w[i] < 0;
    }
    if (!pos) w[0] = std::abs(w[0]);
    mixed += pos && neg;
    const double target = 3.0 * rng.uniform01();
    std::vector<double> expect;
    if (!brute_projection(v, w, target, expect)) continue;
    const WeightedProjection got = project_weighted_simplex(v, w, target);
    double dy = 0.0;
    double dot = 0.0;
    double scale = std::abs(target);
    for (int i = 0; i < n; ++i) {
      dy = std::max(dy, std::abs(got.y[i] - expect[i]));
      dot += w[i] * got.y[i];
      scale = std::max(scale, std::abs(w[i] * got.y[i]));
    }
    const double res = std::abs(dot - target) / std::max(1.0, scale);
    worst_y = std::max(worst_y, dy);
    worst_res = std::max(worst_res, res);
    ok += dy <= 1e-7 && res <= 1e-9;
  }
  Outcome o;
  o.pass = ok == 500;
  o.detail = std::to_string(ok) + "/500 match (" + std::to_string(mixed) +
             " with mixed-sign weights), max |y - oracle| = " + fmt("%.2e", worst_y) +
             ", max relative equality residual = " + fmt("%.2e", worst_res);
  return o;
}

// ---------------------------------------------------------------- 11

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "olp_acceptance";
  std::filesystem::create_directories(dir);
  const std::string on = (dir / "det_on.csv").string();
  const std::string off = (dir / "det_off.csv").string();
  std::ostringstream sink;
  const std::vector<std::string> grid{"bench", "--sizes", "5x100,8x1000", "--taus",
                                      "0.05,0.5", "--ks", "1,2,8", "--methods",
                                      "explicit,implicit", "--reps", "2", "--jobs", "4"};
  auto a = grid;
  a.insert(a.end(), {"--out", on});
  auto b = grid;
  b.insert(b.end(), {"--no-enforce-feasibility", "--lazy", "--out", off});
  const int c1 = run_cli(a, sink, sink);
  const int c2 = run_cli(b, sink, sink);
  std::vector<ResultRecord> rows = read_results_csv(on);
  const auto more = read_results_csv(off);
  rows.insert(rows.end(), more.begin(), more.end());
  int same = 0;
  for (const ResultRecord& r : rows) {
    const ResultRecord again = replay_record(r);
    same += again.objective == r.objective && again.violation == r.violation;
  }
  std::filesystem::remove_all(dir);
  Outcome o;
  o.pass = c1 == kExitOk && c2 == kExitOk && !rows.empty() &&
           same == static_cast<int>(rows.size());
  o.detail = std::to_string(same) + "/" + std::to_string(rows.size()) +
             " CSV rows replayed bitwise (objective and violation)";
  return o;
}

// ---------------------------------------------------------------- 4

Outcome dual_bounds() {
  // Extra checked runs beyond the other criteria: both methods, several
  // stepsizes and start points on MKP and random sparse data.
  Rng rng(4);
  for (int s = 0; s < 40; ++s) {
    const LpInstance lp =
        s % 2 ? mkp(3 + s % 7, 100 + 20 * s, 0.02 + 0.02 * s, s % 3 ? 1.0 : 0.2, 3000 + s)
              : testing::random_sparse(rng, 2 + s % 9, 50 + 10 * s, 0.3);
    for (int mi = 0; mi < 2; ++mi) {
      RunConfig cfg;
      cfg.method = mi ? Method::kImplicit : Method::kExplicit;
      cfg.stepsize_mode = s % 3 == 0 ? StepsizeMode::kTheoremOptimal : StepsizeMode::kSimple;
      cfg.start_point = s % 4 == 1 ? StartPoint::kOnes : StartPoint::kZero;
      cfg.duplication_k = 1 + s % 5;
      cfg.enforce_feasibility = s % 2 == 0;
      cfg.lazy = s % 5 == 0;
      cfg.seed = static_cast<std::uint64_t>(s);
      tracked(lp, cfg);
    }
  }
  Outcome o;
  o.pass = g_bounds.checked_runs > 0 && g_bounds.violations == 0;
  o.detail = std::to_string(g_bounds.checked_runs) + " checked passes (" +
             std::to_string(g_bounds.unchecked_runs) +
             " timing passes ran without checks), " + std::to_string(g_bounds.violations) +
             " bound violations, max ||y^k||/bound = " + fmt("%.3f", g_bounds.worst_ratio);
  return o;
}

}  // namespace
}  // namespace olp

int main() {
  using olp::Outcome;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  // Criterion 4 aggregates the bound checks of every other criterion, so it
  // runs last.
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", olp::oracle_equivalence},
      {2, "toy LP recovery", olp::toy_recovery},
      {3, "lazy pass equals dense pass", olp::lazy_equals_dense},
      {5, "duplication monotonicity", olp::duplication_monotonicity},
      {6, "implicit beats explicit at tight tau", olp::implicit_beats_explicit},
      {7, "violation trade-off", olp::violation_tradeoff},
      {8, "sifting correctness", olp::sifting_correctness},
      {9, "basis prediction quality", olp::basis_prediction},
      {10, "projection correctness", olp::projection_correctness},
      {11, "determinism", olp::determinism},
      {4, "dual-iterate bounds", olp::dual_bounds},
  };
  std::vector<std::pair<int, std::string>> lines;
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::string line = std::string(o.pass ? "PASS" : "FAIL") + " criterion " +
                       std::to_string(c.id) + " (" + c.name + "): " + o.detail;
    std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    lines.emplace_back(c.id, line);
  }
  std::sort(lines.begin(), lines.end());
  std::printf("\nsummary:\n");
  for (const auto& [id, line] : lines) std::printf("  %s\n", line.substr(0, line.find(':')).c_str());
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
