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

#include "olp/online.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "olp/error.h"
#include "olp/metrics.h"
#include "olp/rng.h"

namespace olp {
namespace {

constexpr double kKktTolerance = 1e-8;
constexpr std::uint64_t kPermutationStream = 1;
// Capacity kept in reserve by feasibility enforcement, relative to K |b_i|,
// so that recomputing A x_hat in a different summation order cannot push a
// row over its bound.
constexpr double kCapacityMargin = 1e-11;

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void require_finite_upper(const LpInstance& instance) {
  for (double u : instance.upper()) {
    if (!std::isfinite(u)) {
      throw InvalidConfigError(
          "online passes need finite upper bounds (apply netlib_modify first)");
    }
  }
}

// True when accepting x for `column` keeps every touched row of `remaining`
// above its margin.
bool fits(ColumnView column, double x, std::span<const double> remaining,
          std::span<const double> margin) {
  for (std::size_t p = 0; p < column.size(); ++p) {
    const int r = column.rows[p];
    if (remaining[r] - column.values[p] * x < margin[r]) return false;
  }
  return true;
}

double kkt_residual(std::span<const double> center, ColumnView column,
                    double cs, std::span<const double> d, double gamma,
                    double scale, std::span<const double> y_plus, double x) {
  double stat = 0.0;
  double zmax = 0.0;
  double dmax = 0.0;
  double amax = 0.0;
  std::size_t p = 0;
  for (std::size_t i = 0; i < center.size(); ++i) {
    double a = 0.0;
    if (p < column.size() && column.rows[p] == static_cast<int>(i)) {
      a = scale * column.values[p++];
    }
    const double expected = std::max(center[i] - gamma * d[i] + gamma * x * a, 0.0);
    stat = std::max(stat, std::abs(y_plus[i] - expected));
    zmax = std::max(zmax, std::abs(center[i]));
    dmax = std::max(dmax, std::abs(d[i]));
    amax = std::max(amax, std::abs(a));
  }
  double ay = 0.0;
  double ay_abs = 0.0;
  for (std::size_t q = 0; q < column.size(); ++q) {
    const double term = scale * column.values[q] * y_plus[column.rows[q]];
    ay += term;
    ay_abs += std::abs(term);
  }
  const double slack = cs - ay;
  double comp;
  if (x >= 1.0 - 1e-12) {
    comp = std::max(0.0, -slack);
  } else if (x <= 1e-12) {
    comp = std::max(0.0, slack);
  } else {
    comp = std::abs(slack);
  }
  const double s1 = 1.0 + zmax + gamma * (dmax + amax);
  const double s2 = 1.0 + std::abs(cs) + ay_abs;
  return std::max(stat / s1, comp / s2);
}

struct BoundMonitor {
  bool active = false;
  double norm_bound = std::numeric_limits<double>::infinity();
  double step_bound = std::numeric_limits<double>::infinity();
  bool check_step = false;
  double max_norm = 0.0;
  double max_step = 0.0;
  std::int64_t violations = 0;

  void observe(double norm, double step) {
    max_norm = std::max(max_norm, norm);
    max_step = std::max(max_step, step);
    if (!active) return;
    if (norm > norm_bound) ++violations;
    if (check_step && step > step_bound) ++violations;
  }

  DualBoundReport report() const {
    DualBoundReport r;
    r.checked = active;
    r.norm_bound = norm_bound;
    r.step_bound = step_bound;
    r.max_step = max_step;
    r.violations = violations;
    return r;
  }
};

// Calls f(j) for every visited column in order. Block orders are produced one
// block at a time; the sequence matches visit_order.
template <typename F>
void for_each_visit(int n, int k, std::uint64_t seed, bool block, F&& f) {
  if (!block) {
    const std::vector<std::uint32_t> order = visit_order(n, k, seed, false);
    const auto nn = static_cast<std::uint32_t>(n);
    for (std::uint32_t e : order) f(static_cast<int>(e % nn));
    return;
  }
  Rng rng(derive_seed(seed, {kPermutationStream}));
  std::vector<std::uint32_t> perm(static_cast<std::size_t>(n));
  for (int r = 0; r < k; ++r) {
    std::iota(perm.begin(), perm.end(), 0U);
    rng.shuffle(std::span<std::uint32_t>(perm));
    for (std::uint32_t e : perm) f(static_cast<int>(e));
  }
}

struct PassSetup {
  int m = 0;
  int n = 0;
  int k = 1;
  InstanceStats stats;
  double gamma = 0.0;
  std::vector<double> d;
  std::vector<double> y0;
  std::uint64_t seed = 0;
  bool block = false;
  std::vector<double> remaining;
  std::vector<double> margin;
  BoundMonitor monitor;
};

PassSetup prepare(const LpInstance& instance, const RunConfig& config, int k) {
  config.validate();
  require_finite_upper(instance);
  PassSetup s;
  s.m = instance.num_rows();
  s.n = instance.num_cols();
  s.k = k;
  s.stats = compute_stats(instance);
  s.gamma = default_stepsize(s.stats, s.m, s.n, k, config.method,
                             config.stepsize_mode, config.fixed_gamma);
  const auto b = instance.rhs();
  s.d.resize(static_cast<std::size_t>(s.m));
  for (int i = 0; i < s.m; ++i) s.d[i] = b[i] / static_cast<double>(s.n);
  switch (config.start_point) {
    case StartPoint::kZero:
      s.y0.assign(static_cast<std::size_t>(s.m), 0.0);
      break;
    case StartPoint::kOnes:
      s.y0.assign(static_cast<std::size_t>(s.m), 1.0);
      break;
    case StartPoint::kGiven:
      if (config.start_dual.size() != static_cast<std::size_t>(s.m)) {
        throw DimensionError("start_dual has length " +
                             std::to_string(config.start_dual.size()) +
                             ", expected " + std::to_string(s.m));
      }
      s.y0 = config.start_dual;
      for (double& v : s.y0) v = std::max(v, 0.0);
      break;
  }
  if (static_cast<std::uint64_t>(s.n) * static_cast<std::uint64_t>(k) >
      std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidConfigError("n K exceeds 2^32 column visits");
  }
  s.seed = config.seed;
  s.block = config.block_permutation;
  if (config.enforce_feasibility) {
    s.remaining.resize(static_cast<std::size_t>(s.m));
    s.margin.resize(static_cast<std::size_t>(s.m));
    for (int i = 0; i < s.m; ++i) {
      s.remaining[i] = static_cast<double>(k) * b[i];
      s.margin[i] = kCapacityMargin * (1.0 + std::abs(s.remaining[i]));
    }
  }

  BoundMonitor& mon = s.monitor;
  mon.active = config.check_dual_bounds && s.stats.assumptions_ok &&
               instance.unit_upper_bounds();
  if (mon.active) {
    const double ad = s.stats.a_bar + s.stats.d_hi;
    const double m = static_cast<double>(s.m);
    const double growth = config.method == Method::kExplicit ? 1.0 : 3.0;
    const double bound = growth * m * ad * ad * s.gamma / s.stats.d_lo +
                         std::sqrt(m) * ad * s.gamma +
                         s.stats.c_bar / s.stats.d_lo;
    const double slack = 1e-12;
    mon.norm_bound = std::max(norm2(s.y0), bound) * (1.0 + slack) + slack;
    mon.step_bound = std::sqrt(m) * ad * s.gamma * (1.0 + slack) + slack;
    mon.check_step = config.method == Method::kImplicit;
  }
  return s;
}

OnlineSolution finish(const LpInstance& instance, PassSetup& s,
                      std::vector<double> xsum, std::vector<double> y,
                      double max_norm) {
  OnlineSolution out;
  const double k = static_cast<double>(s.k);
  for (double& v : xsum) v /= k;
  out.x_hat = std::move(xsum);
  out.y_final = std::move(y);
  out.objective = objective_value(instance, out.x_hat);
  out.violation = constraint_violation(instance, out.x_hat);
  out.max_dual_norm = max_norm;
  out.elapsed_columns = static_cast<std::int64_t>(s.n) * s.k;
  out.gamma = s.gamma;
  out.bounds = s.monitor.report();
  return out;
}

// Dense explicit kernel shared by explicit_step and the dense pass. Updates y
// in place and returns x (0 or `u`).
double explicit_kernel(std::span<double> y, ColumnView column, double c,
                       double u, std::span<const double> d, double gamma,
                       std::span<const double> remaining,
                       std::span<const double> margin) {
  double dot = 0.0;
  for (std::size_t p = 0; p < column.size(); ++p) {
    dot += column.values[p] * y[column.rows[p]];
  }
  double x = c > dot ? u : 0.0;
  if (x > 0.0 && !remaining.empty() && !fits(column, x, remaining, margin)) {
    x = 0.0;
  }
  std::size_t p = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    double a = 0.0;
    if (p < column.size() && column.rows[p] == static_cast<int>(i)) {
      a = column.values[p++];
    }
    const double v = y[i] + gamma * (a * x - d[i]);
    y[i] = v > 0.0 ? v : 0.0;
  }
  return x;
}

void consume(ColumnView column, double x, std::span<double> remaining) {
  for (std::size_t p = 0; p < column.size(); ++p) {
    remaining[column.rows[p]] -= column.values[p] * x;
  }
}

OnlineSolution dense_pass(const LpInstance& instance, const RunConfig& config,
                          int k) {
  PassSetup s = prepare(instance, config, k);
  const auto c = instance.obj();
  const auto u = instance.upper();
  const bool enforce = config.enforce_feasibility;
  std::vector<double> y = s.y0;
  std::vector<double> xsum(static_cast<std::size_t>(s.n), 0.0);
  s.monitor.observe(norm2(y), 0.0);
  for_each_visit(s.n, k, s.seed, s.block, [&](int j) {
    const ColumnView col = instance.column(j);
    double x;
    double step = 0.0;
    if (config.method == Method::kExplicit) {
      x = explicit_kernel(y, col, c[j], u[j], s.d, s.gamma, s.remaining,
                          s.margin);
    } else {
      ProximalSolution prox = implicit_step(y, col, c[j], s.d, s.gamma, u[j]);
      double frac = prox.x;
      if (enforce && frac > 0.0) {
        for (std::size_t p = 0; p < col.size(); ++p) {
          const double need = col.values[p] * u[j];
          if (need > 0.0) {
            const int r = col.rows[p];
            const double room = s.remaining[r] - s.margin[r];
            frac = std::min(frac, std::max(room, 0.0) / need);
          }
        }
      }
      x = u[j] * frac;
      if (s.monitor.active) {
        double ss = 0.0;
        for (int i = 0; i < s.m; ++i) {
          const double diff = prox.y_plus[i] - y[i];
          ss += diff * diff;
        }
        step = std::sqrt(ss);
      }
      y = std::move(prox.y_plus);
    }
    if (enforce && x > 0.0) consume(col, x, s.remaining);
    xsum[j] += x;
    s.monitor.observe(norm2(y), step);
  });
  const double max_norm = s.monitor.max_norm;
  return finish(instance, s, std::move(xsum), std::move(y), max_norm);
}

}  // namespace

std::string to_string(Method method) {
  return method == Method::kExplicit ? "explicit" : "implicit";
}

std::string to_string(StepsizeMode mode) {
  switch (mode) {
    case StepsizeMode::kSimple:
      return "simple";
    case StepsizeMode::kTheoremOptimal:
      return "theorem";
    case StepsizeMode::kFixed:
      return "fixed";
  }
  return "?";
}

std::string to_string(StartPoint start) {
  switch (start) {
    case StartPoint::kZero:
      return "zero";
    case StartPoint::kOnes:
      return "ones";
    case StartPoint::kGiven:
      return "given";
  }
  return "?";
}

void RunConfig::validate() const {
  if (duplication_k < 1) {
    throw InvalidConfigError("duplication K must be >= 1");
  }
  if (stepsize_mode == StepsizeMode::kFixed &&
      !(fixed_gamma > 0.0 && std::isfinite(fixed_gamma))) {
    throw InvalidConfigError("fixed stepsize must be positive");
  }
}

double default_stepsize(const InstanceStats& stats, int m, int n, int k,
                        Method method, StepsizeMode mode, double fixed_gamma) {
  if (m < 1 || n < 1 || k < 1) {
    throw InvalidConfigError("m, n and K must be positive");
  }
  const double mnk = static_cast<double>(m) * static_cast<double>(n) *
                     static_cast<double>(k);
  switch (mode) {
    case StepsizeMode::kSimple:
      return 1.0 / std::sqrt(mnk);
    case StepsizeMode::kTheoremOptimal: {
      if (!(stats.d_lo > 0.0)) {
        throw AssumptionError(
            "theorem stepsize needs min_i b_i / n > 0 (got " +
            std::to_string(stats.d_lo) + ")");
      }
      const double ad = stats.a_bar + stats.d_hi;
      const double factor = method == Method::kExplicit ? 1.0 : 5.0;
      const double gamma =
          std::sqrt(2.0 * stats.c_bar / (factor * stats.d_lo * ad * ad * mnk));
      if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw InvalidConfigError("theorem stepsize is not a positive number");
      }
      return gamma;
    }
    case StepsizeMode::kFixed:
      if (!(fixed_gamma > 0.0)) {
        throw InvalidConfigError("fixed stepsize must be positive");
      }
      return fixed_gamma;
  }
  return 0.0;
}

ExplicitStep explicit_step(std::span<const double> y, ColumnView column,
                           double c, std::span<const double> d, double gamma,
                           std::span<const double> remaining) {
  if (d.size() != y.size()) throw DimensionError("d and y differ in length");
  if (!remaining.empty() && remaining.size() != y.size()) {
    throw DimensionError("remaining capacity and y differ in length");
  }
  ExplicitStep out;
  out.y_next.assign(y.begin(), y.end());
  const std::vector<double> no_margin(remaining.size(), 0.0);
  out.x = explicit_kernel(out.y_next, column, c, 1.0, d, gamma, remaining,
                          no_margin);
  return out;
}

double prox_objective(std::span<const double> candidate,
                      std::span<const double> center, ColumnView column,
                      double c, std::span<const double> d, double gamma,
                      double scale) {
  double lin = 0.0;
  double dist = 0.0;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    lin += d[i] * candidate[i];
    const double diff = candidate[i] - center[i];
    dist += diff * diff;
  }
  double ay = 0.0;
  for (std::size_t p = 0; p < column.size(); ++p) {
    ay += scale * column.values[p] * candidate[column.rows[p]];
  }
  return lin + std::max(scale * c - ay, 0.0) + dist / (2.0 * gamma);
}

ProximalSolution implicit_step(std::span<const double> y, ColumnView column,
                               double c, std::span<const double> d,
                               double gamma, double scale) {
  if (d.size() != y.size()) throw DimensionError("d and y differ in length");
  if (!(gamma > 0.0)) throw InvalidConfigError("stepsize must be positive");
  const std::size_t m = y.size();
  const double cs = scale * c;

  // Rows outside the column's support always follow [y - gamma d]_+.
  std::vector<double> base(m);
  std::vector<double> low(m);
  for (std::size_t i = 0; i < m; ++i) {
    base[i] = y[i] - gamma * d[i];
    low[i] = base[i] > 0.0 ? base[i] : 0.0;
  }

  ProximalSolution out;
  // Case x = 1: y+ = [y - gamma (d - a)]_+, valid iff c - <a, y+> > 0.
  {
    double ay = 0.0;
    for (std::size_t p = 0; p < column.size(); ++p) {
      const int r = column.rows[p];
      const double a = scale * column.values[p];
      ay += a * std::max(base[r] + gamma * a, 0.0);
    }
    if (cs - ay > 0.0) {
      out.y_plus = low;
      for (std::size_t p = 0; p < column.size(); ++p) {
        const int r = column.rows[p];
        out.y_plus[r] = std::max(base[r] + gamma * scale * column.values[p], 0.0);
      }
      out.x = 1.0;
      out.case_tag = ProxCase::kKinkInactiveHigh;
    }
  }
  // Case x = 0: y+ = [y - gamma d]_+, valid iff c - <a, y+> < 0.
  if (out.y_plus.empty()) {
    double ay = 0.0;
    for (std::size_t p = 0; p < column.size(); ++p) {
      ay += scale * column.values[p] * low[column.rows[p]];
    }
    if (cs - ay < 0.0) {
      out.y_plus = low;
      out.x = 0.0;
      out.case_tag = ProxCase::kKinkInactiveLow;
    }
  }
  // Kink active: project y - gamma d onto {<a, y> = c, y >= 0} on the support.
  if (out.y_plus.empty()) {
    std::vector<double> v(column.size());
    std::vector<double> w(column.size());
    for (std::size_t p = 0; p < column.size(); ++p) {
      v[p] = base[column.rows[p]];
      w[p] = scale * column.values[p];
    }
    const WeightedProjection proj = project_weighted_simplex(v, w, cs);
    // y+ = [v + gamma x a]_+ matches the projection's [v - theta w]_+ at
    // theta = -gamma x; any theta of the solution interval gives the same y.
    double theta = std::clamp(proj.theta, -gamma, 0.0);
    theta = std::clamp(theta, proj.theta_lo, proj.theta_hi);
    out.y_plus = low;
    for (std::size_t p = 0; p < column.size(); ++p) {
      out.y_plus[column.rows[p]] = proj.y[p];
    }
    out.x = std::clamp(-theta / gamma, 0.0, 1.0);
    out.case_tag = ProxCase::kKinkActive;
  }
  out.kkt_residual =
      kkt_residual(y, column, cs, d, gamma, scale, out.y_plus, out.x);
  if (!(out.kkt_residual <= kKktTolerance)) {
    throw NumericalError("proximal step failed KKT verification (residual " +
                         std::to_string(out.kkt_residual) + ")");
  }
  return out;
}

LazyDualState::LazyDualState(std::vector<double> y0, std::span<const double> d,
                             double gamma)
    : y_base_(std::move(y0)),
      last_update_(y_base_.size(), -1),
      drift_(y_base_.size()),
      gamma_(gamma) {
  for (std::size_t i = 0; i < drift_.size(); ++i) drift_[i] = gamma * d[i];
}

std::vector<double> LazyDualState::materialize_all(std::int64_t k) const {
  std::vector<double> y(y_base_.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = materialize(static_cast<int>(i), k);
  }
  return y;
}

std::vector<std::uint32_t> visit_order(int n, int k, std::uint64_t seed,
                                       bool block) {
  const std::uint64_t total =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(k);
  if (total > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidConfigError("n K exceeds 2^32 column visits");
  }
  std::vector<std::uint32_t> order(total);
  std::iota(order.begin(), order.end(), 0U);
  Rng rng(derive_seed(seed, {kPermutationStream}));
  if (block) {
    for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(k); ++r) {
      rng.shuffle(std::span<std::uint32_t>(order).subspan(
          r * static_cast<std::uint64_t>(n), static_cast<std::size_t>(n)));
    }
  } else {
    rng.shuffle(std::span<std::uint32_t>(order));
  }
  return order;
}

OnlineSolution run_pass(const LpInstance& instance, const RunConfig& config) {
  return dense_pass(instance, config, 1);
}

OnlineSolution lazy_explicit_pass(const LpInstance& instance,
                                  const RunConfig& config) {
  if (config.method != Method::kExplicit) {
    throw InvalidConfigError("the lazy pass implements the explicit update only");
  }
  PassSetup s = prepare(instance, config, config.duplication_k);
  const auto c = instance.obj();
  const auto u = instance.upper();
  const bool enforce = config.enforce_feasibility;
  LazyDualState state(s.y0, s.d, s.gamma);
  std::vector<double> xsum(static_cast<std::size_t>(s.n), 0.0);
  std::vector<double> touched;
  const bool track = s.monitor.active;
  if (track) s.monitor.observe(norm2(s.y0), 0.0);

  std::int64_t k = 0;
  for_each_visit(s.n, s.k, s.seed, s.block, [&](int j) {
    const ColumnView col = instance.column(j);
    touched.resize(col.size());
    double dot = 0.0;
    for (std::size_t p = 0; p < col.size(); ++p) {
      touched[p] = state.materialize(col.rows[p], k);
      dot += col.values[p] * touched[p];
    }
    double x = c[j] > dot ? u[j] : 0.0;
    if (x > 0.0 && enforce && !fits(col, x, s.remaining, s.margin)) x = 0.0;
    for (std::size_t p = 0; p < col.size(); ++p) {
      const int r = col.rows[p];
      const double v = touched[p] + s.gamma * (col.values[p] * x - s.d[r]);
      state.set(r, k, v > 0.0 ? v : 0.0);
    }
    if (enforce && x > 0.0) consume(col, x, s.remaining);
    xsum[j] += x;
    ++k;
    if (track) s.monitor.observe(norm2(state.materialize_all(k)), 0.0);
  });
  std::vector<double> y = state.materialize_all(k);
  const double max_norm =
      track ? s.monitor.max_norm : std::numeric_limits<double>::quiet_NaN();
  return finish(instance, s, std::move(xsum), std::move(y), max_norm);
}

OnlineSolution run_duplicated(const LpInstance& instance,
                              const RunConfig& config) {
  if (config.lazy && config.method == Method::kExplicit) {
    return lazy_explicit_pass(instance, config);
  }
  return dense_pass(instance, config, config.duplication_k);
}

}  // namespace olp
