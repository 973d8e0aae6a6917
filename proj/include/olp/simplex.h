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

#ifndef OLP_SIMPLEX_H_
#define OLP_SIMPLEX_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "olp/lp_instance.h"

namespace olp {

enum class SimplexStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string to_string(SimplexStatus status);

enum class VarStatus : std::uint8_t { kBasic, kAtLower, kAtUpper };

// Basis over the n structural columns followed by the m slack columns
// (slack i has column e_i, bounds [0, inf)). Exactly m entries are kBasic.
struct SimplexBasis {
  std::vector<VarStatus> status;

  // Indices of the basic columns in increasing order; slack i is n + i.
  std::vector<int> basic_columns() const;
};

struct SimplexOptions {
  int max_rows = 2000;
  // 0 selects 50 (m + n).
  std::int64_t iteration_limit = 0;
  int refactor_interval = 100;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int stall_threshold = 50;
  double feasibility_tol = 1e-7;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-9;
};

struct SimplexResult {
  SimplexStatus status = SimplexStatus::kIterationLimit;
  std::vector<double> x_star;  // length n when optimal
  std::vector<double> y_star;  // row prices, length m when optimal
  double obj = 0.0;
  SimplexBasis basis;
  std::int64_t iterations = 0;

  bool optimal() const { return status == SimplexStatus::kOptimal; }
};

// Bounded-variable primal simplex for max <c,x> s.t. Ax <= b, 0 <= x <= u.
// Slacks are added internally; rows with b_i < 0 get an artificial column and
// a phase 1. A warm basis is used when it is structurally valid, nonsingular
// and primal feasible; otherwise the solve starts from the slack basis.
// Throws InvalidConfigError when m exceeds options.max_rows and
// NumericalError when the basis cannot be factorized.
SimplexResult solve_lp(const LpInstance& instance,
                       const SimplexBasis* warm_basis = nullptr,
                       const SimplexOptions& options = {});

struct VertexOracleResult {
  double opt_value = 0.0;
  std::vector<double> x_star;
};

// Exhaustive search over the vertices of {Ax <= b, 0 <= x <= u}: every choice
// of variables fixed at a bound plus an equal number of tight rows. Needs
// m + n <= 14 and finite u. Throws InfeasibleSetError when no candidate point
// is feasible.
VertexOracleResult enumerate_vertices_oracle(const LpInstance& instance);

}  // namespace olp

#endif  // OLP_SIMPLEX_H_
