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

#ifndef OLP_METRICS_H_
#define OLP_METRICS_H_

#include <span>

#include "olp/lp_instance.h"

namespace olp {

// Quality measures of an approximate primal point. All functions are pure and
// throw DimensionError on length mismatch.

// v(x) = || [A x - b]_+ ||_2.
double constraint_violation(const LpInstance& instance,
                            std::span<const double> x);

// rho(x) = opt_value - <c, x>.
double optimality_gap(const LpInstance& instance, std::span<const double> x,
                      double opt_value);

// r(x) = |<c, x> / opt_value|. Throws DomainError when opt_value == 0.
double relative_optimality(const LpInstance& instance,
                           std::span<const double> x, double opt_value);

// <b, y> + <u, [c - A^T y]_+>, an upper bound on the LP optimum for y >= 0.
// Negative entries of y are clamped to zero; `clamped` reports whether that
// happened.
double dual_objective(const LpInstance& instance, std::span<const double> y,
                      bool* clamped = nullptr);

// max{ ||[Ax - b]_+|| / (||b||_1 + 1),
//      |dual - primal| / (|dual| + |primal| + 1) }.
double stopping_residual(const LpInstance& instance, std::span<const double> x,
                         std::span<const double> y);

double objective_value(const LpInstance& instance, std::span<const double> x);

struct Metrics {
  double gap = 0.0;
  double violation = 0.0;
  double relative_opt = 0.0;
  double dual_bound = 0.0;
};

Metrics evaluate(const LpInstance& instance, std::span<const double> x,
                 std::span<const double> y, double opt_value);

}  // namespace olp

#endif  // OLP_METRICS_H_
