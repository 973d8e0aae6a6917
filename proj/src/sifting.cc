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

#include "olp/sifting.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "olp/error.h"

namespace olp {
namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<double> clamp_nonnegative(std::vector<double> y) {
  for (double& v : y) v = std::max(v, 0.0);
  return y;
}

}  // namespace

void SiftConfig::validate() const {
  if (!(stabilization_alpha > 0.0 && stabilization_alpha <= 1.0)) {
    throw InvalidConfigError("stabilization alpha must lie in (0, 1]");
  }
  if (!(init_threshold >= 0.0)) {
    throw InvalidConfigError("init threshold must be >= 0");
  }
  if (!(pricing_tolerance >= 0.0)) {
    throw InvalidConfigError("pricing tolerance must be >= 0");
  }
  if (max_new_columns_per_round < 0 || max_rounds < 1) {
    throw InvalidConfigError("invalid sifting round limits");
  }
}

std::vector<int> init_working_set(std::span<const double> x_hat,
                                  double threshold, int m,
                                  bool* fallback_used) {
  std::vector<int> out;
  for (std::size_t j = 0; j < x_hat.size(); ++j) {
    if (x_hat[j] >= threshold) out.push_back(static_cast<int>(j));
  }
  if (fallback_used != nullptr) *fallback_used = out.empty();
  if (!out.empty()) return out;
  std::vector<int> idx(x_hat.size());
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t keep =
      std::min(idx.size(), static_cast<std::size_t>(std::max(m, 0)));
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(keep),
                    idx.end(), [&](int a, int b) {
                      if (x_hat[a] != x_hat[b]) return x_hat[a] > x_hat[b];
                      return a < b;
                    });
  idx.resize(keep);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<int> price(const LpInstance& instance,
                       std::span<const int> working_set,
                       std::span<const double> y, double tol, int max_new) {
  if (y.size() != static_cast<std::size_t>(instance.num_rows())) {
    throw DimensionError("price: y has the wrong length");
  }
  const int n = instance.num_cols();
  std::vector<char> in_w(static_cast<std::size_t>(n), 0);
  for (int j : working_set) in_w[j] = 1;
  const auto c = instance.obj();
  std::vector<std::pair<double, int>> found;
  for (int j = 0; j < n; ++j) {
    if (in_w[j]) continue;
    const double rc = c[j] - instance.column_dot(j, y);
    if (rc > tol) found.emplace_back(rc, j);
  }
  if (max_new > 0 && found.size() > static_cast<std::size_t>(max_new)) {
    std::partial_sort(found.begin(), found.begin() + max_new, found.end(),
                      [](const auto& a, const auto& b) {
                        if (a.first != b.first) return a.first > b.first;
                        return a.second < b.second;
                      });
    found.resize(static_cast<std::size_t>(max_new));
  }
  std::vector<int> out;
  out.reserve(found.size());
  for (const auto& f : found) out.push_back(f.second);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> stabilize(std::span<const double> y_working,
                              std::span<const double> y_anchor, double alpha) {
  if (y_working.size() != y_anchor.size()) {
    throw DimensionError("stabilize: dual vectors differ in length");
  }
  std::vector<double> out(y_working.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = alpha * y_working[i] + (1.0 - alpha) * y_anchor[i];
  }
  return out;
}

bool certify_optimality(const LpInstance& instance, std::span<const double> x,
                        std::span<const double> y, double tol) {
  for (double v : y) {
    if (v < -tol) return false;
  }
  const auto c = instance.obj();
  const auto u = instance.upper();
  for (int j = 0; j < instance.num_cols(); ++j) {
    const double rc = c[j] - instance.column_dot(j, y);
    if (rc > tol && x[j] < u[j] - 1e-9 * (1.0 + std::abs(u[j]))) return false;
  }
  return true;
}

std::pair<double, double> basis_metrics(std::span<const int> reference_basis,
                                        std::span<const int> working_set,
                                        int n) {
  if (reference_basis.empty()) {
    throw DomainError("basis metrics need a nonempty reference basis");
  }
  if (n <= 0) throw DomainError("basis metrics need n > 0");
  std::vector<int> b(reference_basis.begin(), reference_basis.end());
  std::vector<int> w(working_set.begin(), working_set.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  std::vector<int> common;
  std::set_intersection(b.begin(), b.end(), w.begin(), w.end(),
                        std::back_inserter(common));
  return {static_cast<double>(common.size()) / static_cast<double>(b.size()),
          static_cast<double>(w.size()) / static_cast<double>(n)};
}

std::vector<int> reference_support(const LpInstance& instance,
                                   const SimplexResult& full_solve,
                                   double tol) {
  if (!full_solve.optimal()) {
    throw DomainError("reference support needs an optimal full solve");
  }
  std::vector<int> out;
  for (int j = 0; j < instance.num_cols(); ++j) {
    if (full_solve.x_star[j] > tol) out.push_back(j);
  }
  return out;
}

SiftResult sift(const LpInstance& instance, const OnlineSolution& online,
                const SiftConfig& config) {
  config.validate();
  const int m = instance.num_rows();
  const int n = instance.num_cols();
  for (double b : instance.rhs()) {
    if (b < 0.0) throw InvalidInstanceError("sifting needs b >= 0");
  }
  if (online.x_hat.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("online x_hat has the wrong length");
  }
  const bool anchored =
      config.use_online_anchor && config.stabilization_alpha < 1.0;
  if (anchored && online.y_final.size() != static_cast<std::size_t>(m)) {
    throw DimensionError("online y_final has the wrong length");
  }
  const auto start = std::chrono::steady_clock::now();

  SiftResult out;
  out.initial_working_set =
      init_working_set(online.x_hat, config.init_threshold, m,
                       &out.fallback_used);
  out.rdc = static_cast<double>(out.initial_working_set.size()) /
            static_cast<double>(n);

  std::vector<int> working = out.initial_working_set;
  // Status of every column seen so far, kept across rounds for warm starts.
  std::vector<VarStatus> col_status(static_cast<std::size_t>(n),
                                    VarStatus::kAtLower);
  std::vector<VarStatus> slack_status(static_cast<std::size_t>(m),
                                      VarStatus::kBasic);
  bool have_basis = false;

  for (int round = 1; round <= config.max_rounds; ++round) {
    const LpInstance sub = instance.restrict_columns(working);
    SimplexBasis warm;
    warm.status.reserve(working.size() + static_cast<std::size_t>(m));
    for (int j : working) warm.status.push_back(col_status[j]);
    warm.status.insert(warm.status.end(), slack_status.begin(),
                       slack_status.end());
    SimplexResult res = solve_lp(sub, have_basis ? &warm : nullptr,
                                 config.simplex);
    out.rounds = round;
    if (!res.optimal()) {
      out.exact = std::move(res);
      out.final_working_set = working;
      out.seconds = seconds_since(start);
      return out;
    }
    for (std::size_t p = 0; p < working.size(); ++p) {
      col_status[working[p]] = res.basis.status[p];
    }
    std::copy(res.basis.status.begin() + static_cast<std::ptrdiff_t>(working.size()),
              res.basis.status.end(), slack_status.begin());
    have_basis = true;

    const std::vector<double> y_w = clamp_nonnegative(res.y_star);
    std::vector<int> entering;
    if (anchored) {
      const std::vector<double> y_s =
          stabilize(y_w, online.y_final, config.stabilization_alpha);
      entering = price(instance, working, y_s, config.pricing_tolerance,
                       config.max_new_columns_per_round);
    }
    if (entering.empty()) {
      entering = price(instance, working, y_w, config.pricing_tolerance,
                       config.max_new_columns_per_round);
    }
    SiftRound rec;
    rec.round = round;
    rec.working_size = static_cast<int>(working.size());
    rec.priced = static_cast<int>(entering.size());
    rec.objective = res.obj;
    rec.seconds = seconds_since(start);
    out.trace.push_back(rec);

    out.exact = std::move(res);
    if (entering.empty()) {
      out.converged = true;
      break;
    }
    std::vector<int> merged;
    merged.reserve(working.size() + entering.size());
    std::merge(working.begin(), working.end(), entering.begin(), entering.end(),
               std::back_inserter(merged));
    working = std::move(merged);
  }
  out.final_working_set = working;
  out.x_full.assign(static_cast<std::size_t>(n), 0.0);
  for (std::size_t p = 0; p < working.size(); ++p) {
    out.x_full[working[p]] = out.exact.x_star[p];
  }
  out.objective = out.exact.obj;
  if (out.converged) {
    out.certified = certify_optimality(instance, out.x_full, out.exact.y_star,
                                       config.pricing_tolerance);
  }
  out.seconds = seconds_since(start);

  if (static_cast<double>(m) * static_cast<double>(n) <=
      config.reference_max_cells) {
    const SimplexResult full = solve_lp(instance, nullptr, config.simplex);
    if (full.optimal()) {
      out.reference_objective = full.obj;
      const std::vector<int> support = reference_support(instance, full);
      if (!support.empty()) {
        out.acc = basis_metrics(support, out.initial_working_set, n).first;
      }
    }
  }
  return out;
}

}  // namespace olp
