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

#ifndef OLP_SIFTING_H_
#define OLP_SIFTING_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "olp/lp_instance.h"
#include "olp/online.h"
#include "olp/simplex.h"

namespace olp {

struct SiftConfig {
  // Working set seed {j : x_hat_j >= init_threshold}; 1/K for a pass with K
  // copies (0.5 matches the default K = 2).
  double init_threshold = 0.5;
  double stabilization_alpha = 0.4;
  bool use_online_anchor = true;
  double pricing_tolerance = 1e-7;
  int max_new_columns_per_round = 0;  // 0 = unlimited
  int max_rounds = 200;
  // Solve the full LP once to measure acc when m n is at most this value.
  double reference_max_cells = 2e7;
  SimplexOptions simplex;

  void validate() const;
};

struct SiftRound {
  int round = 0;
  int working_size = 0;
  int priced = 0;
  double objective = 0.0;
  double seconds = 0.0;
};

struct SiftResult {
  std::vector<int> initial_working_set;
  std::vector<int> final_working_set;
  bool fallback_used = false;
  SimplexResult exact;  // on the final working problem
  std::vector<double> x_full;  // exact.x_star scattered to all n columns
  double objective = 0.0;
  int rounds = 0;
  bool converged = false;  // stopped because pricing found nothing
  bool certified = false;  // full-instance dual feasibility check passed
  std::optional<double> acc;
  double rdc = 0.0;
  std::optional<double> reference_objective;
  std::vector<SiftRound> trace;
  double seconds = 0.0;
};

// {j : x_hat_j >= threshold}, or the m largest entries (ties to the smaller
// index) when that set is empty. Sorted.
std::vector<int> init_working_set(std::span<const double> x_hat,
                                  double threshold, int m,
                                  bool* fallback_used = nullptr);

// {j not in working_set : c_j - <a_j, y> > tol}, sorted. With max_new > 0
// only the max_new most violated columns are kept.
std::vector<int> price(const LpInstance& instance,
                       std::span<const int> working_set,
                       std::span<const double> y, double tol,
                       int max_new = 0);

// alpha y_working + (1 - alpha) y_anchor.
std::vector<double> stabilize(std::span<const double> y_working,
                              std::span<const double> y_anchor, double alpha);

// True when (x, y) satisfies dual feasibility on every column of the
// instance: c_j - <a_j, y> <= tol unless x_j sits at u_j, and y >= -tol.
bool certify_optimality(const LpInstance& instance, std::span<const double> x,
                        std::span<const double> y, double tol);

// acc = |B cap W| / |B| and rdc = |W| / n. Throws DomainError for an empty B.
std::pair<double, double> basis_metrics(std::span<const int> reference_basis,
                                        std::span<const int> working_set,
                                        int n);

// Columns carrying a positive value in an optimal solution of the full
// instance.
std::vector<int> reference_support(const LpInstance& instance,
                                   const SimplexResult& full_solve,
                                   double tol = 1e-9);

// Sifting seeded by the online pass: x_hat gives the initial working set,
// y_final the stabilization anchor. Requires b >= 0.
SiftResult sift(const LpInstance& instance, const OnlineSolution& online,
                const SiftConfig& config);

}  // namespace olp

#endif  // OLP_SIFTING_H_
