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

#include "olp/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "olp/error.h"

namespace olp {
namespace {

void check_primal(const LpInstance& instance, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(instance.num_cols())) {
    throw DimensionError("primal vector has length " + std::to_string(x.size()) +
                         ", expected " + std::to_string(instance.num_cols()));
  }
}

void check_dual(const LpInstance& instance, std::span<const double> y) {
  if (y.size() != static_cast<std::size_t>(instance.num_rows())) {
    throw DimensionError("dual vector has length " + std::to_string(y.size()) +
                         ", expected " + std::to_string(instance.num_rows()));
  }
}

}  // namespace

double objective_value(const LpInstance& instance, std::span<const double> x) {
  check_primal(instance, x);
  const auto c = instance.obj();
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) s += c[j] * x[j];
  return s;
}

double constraint_violation(const LpInstance& instance,
                            std::span<const double> x) {
  check_primal(instance, x);
  const std::vector<double> ax = instance.multiply(x);
  const auto b = instance.rhs();
  double s = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    const double r = std::max(ax[i] - b[i], 0.0);
    s += r * r;
  }
  return std::sqrt(s);
}

double optimality_gap(const LpInstance& instance, std::span<const double> x,
                      double opt_value) {
  return opt_value - objective_value(instance, x);
}

double relative_optimality(const LpInstance& instance,
                           std::span<const double> x, double opt_value) {
  const double value = objective_value(instance, x);
  if (opt_value == 0.0) {
    throw DomainError("relative optimality is undefined for a zero optimum");
  }
  return std::abs(value / opt_value);
}

double dual_objective(const LpInstance& instance, std::span<const double> y,
                      bool* clamped) {
  check_dual(instance, y);
  std::vector<double> yp(y.begin(), y.end());
  bool any = false;
  for (double& v : yp) {
    if (v < 0.0) {
      v = 0.0;
      any = true;
    }
  }
  if (clamped != nullptr) *clamped = any;
  const auto b = instance.rhs();
  const auto c = instance.obj();
  const auto u = instance.upper();
  double bound = 0.0;
  for (std::size_t i = 0; i < yp.size(); ++i) bound += b[i] * yp[i];
  for (int j = 0; j < instance.num_cols(); ++j) {
    const double rc = c[j] - instance.column_dot(j, yp);
    if (rc > 0.0) bound += u[j] * rc;
  }
  return bound;
}

double stopping_residual(const LpInstance& instance, std::span<const double> x,
                         std::span<const double> y) {
  const double violation = constraint_violation(instance, x);
  double b1 = 0.0;
  for (double bi : instance.rhs()) b1 += std::abs(bi);
  const double primal = objective_value(instance, x);
  const double dual = dual_objective(instance, y);
  const double infeas = violation / (b1 + 1.0);
  const double gap =
      std::abs(dual - primal) / (std::abs(dual) + std::abs(primal) + 1.0);
  return std::max(infeas, gap);
}

Metrics evaluate(const LpInstance& instance, std::span<const double> x,
                 std::span<const double> y, double opt_value) {
  Metrics m;
  m.gap = optimality_gap(instance, x, opt_value);
  m.violation = constraint_violation(instance, x);
  m.relative_opt = opt_value != 0.0 ? relative_optimality(instance, x, opt_value)
                                    : 0.0;
  m.dual_bound = dual_objective(instance, y);
  return m;
}

}  // namespace olp
