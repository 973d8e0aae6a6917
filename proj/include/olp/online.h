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

#ifndef OLP_ONLINE_H_
#define OLP_ONLINE_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "olp/lp_instance.h"

namespace olp {

enum class Method { kExplicit, kImplicit };
enum class StepsizeMode { kSimple, kTheoremOptimal, kFixed };
enum class StartPoint { kZero, kOnes, kGiven };

std::string to_string(Method method);
std::string to_string(StepsizeMode mode);
std::string to_string(StartPoint start);

struct RunConfig {
  Method method = Method::kExplicit;
  StepsizeMode stepsize_mode = StepsizeMode::kSimple;
  double fixed_gamma = 0.0;  // used by StepsizeMode::kFixed
  int duplication_k = 1;
  std::uint64_t seed = 0;
  // Accept a column only while the remaining capacity K b - sum a_j x_j stays
  // nonnegative.
  bool enforce_feasibility = false;
  StartPoint start_point = StartPoint::kZero;
  std::vector<double> start_dual;  // used by StartPoint::kGiven
  // O(nnz) explicit pass; ignored by run_pass.
  bool lazy = false;
  // Visit the K copies as K consecutive blocks, each an independent
  // permutation of [n], instead of one permutation of all nK copies.
  bool block_permutation = false;
  // Check the dual-iterate norm bounds at every iteration. Only active when
  // u = 1 and d_lo > 0. Costs O(m) per column on the lazy path.
  bool check_dual_bounds = true;

  void validate() const;
};

// Runtime verification of the dual-iterate bounds
//   explicit: ||y^k|| <= m (a+d)^2 g / d_lo + sqrt(m) (a+d) g + c / d_lo
//   implicit: ||y^k|| <= 3 m (a+d)^2 g / d_lo + sqrt(m) (a+d) g + c / d_lo,
//             ||y^{k+1} - y^k|| <= sqrt(m) (a+d) g
// with a = a_bar, d = d_hi, c = c_bar, g = gamma. When the start point is
// larger than the bound, the bound is replaced by ||y^0||.
struct DualBoundReport {
  bool checked = false;
  double norm_bound = std::numeric_limits<double>::infinity();
  double step_bound = std::numeric_limits<double>::infinity();
  double max_step = 0.0;
  std::int64_t violations = 0;
};

struct OnlineSolution {
  std::vector<double> x_hat;    // in [0, u]
  std::vector<double> y_final;  // >= 0
  double objective = 0.0;
  double violation = 0.0;
  // max_k ||y^k||; NaN when the lazy path ran without bound checks.
  double max_dual_norm = 0.0;
  std::int64_t elapsed_columns = 0;  // n K
  double gamma = 0.0;
  DualBoundReport bounds;
};

// gamma = 1/sqrt(K m n) (Simple); sqrt(2 c / (d_lo (a + d)^2 m n K)) for the
// explicit update and the same with an extra factor 5 in the denominator for
// the implicit update (TheoremOptimal); `fixed_gamma` (Fixed).
double default_stepsize(const InstanceStats& stats, int m, int n, int k,
                        Method method, StepsizeMode mode,
                        double fixed_gamma = 0.0);

struct ExplicitStep {
  std::vector<double> y_next;
  double x = 0.0;  // 0 or 1
};

// x = 1{c > <a, y>}, forced to 0 when `remaining` is given and
// remaining - a < 0 in some row; y_next = [y + gamma (a x - d)]_+.
ExplicitStep explicit_step(std::span<const double> y, ColumnView column,
                           double c, std::span<const double> d, double gamma,
                           std::span<const double> remaining = {});

struct WeightedProjection {
  std::vector<double> y;
  // y = [v - theta w]_+. Every theta in [theta_lo, theta_hi] gives the same y.
  double theta = 0.0;
  double theta_lo = 0.0;
  double theta_hi = 0.0;
};

// argmin ||y - v||^2 over {y >= 0, <w, y> = target}. Weights may have any
// sign. Throws InfeasibleSetError when the set is empty.
WeightedProjection project_weighted_simplex(std::span<const double> v,
                                            std::span<const double> w,
                                            double target);

enum class ProxCase { kKinkInactiveHigh, kKinkInactiveLow, kKinkActive };

struct ProximalSolution {
  std::vector<double> y_plus;
  double x = 0.0;  // multiplier of s >= c - <a, y>, in [0, 1]
  ProxCase case_tag = ProxCase::kKinkInactiveLow;
  double kkt_residual = 0.0;
};

// argmin_{y' >= 0} <d, y'> + [c - <a, y'>]_+ + ||y' - y||^2 / (2 gamma) for
// the column a scaled by `scale` (the objective coefficient is scaled too).
ProximalSolution implicit_step(std::span<const double> y, ColumnView column,
                               double c, std::span<const double> d,
                               double gamma, double scale = 1.0);

// Value of the proximal objective at `candidate` with center `center`.
double prox_objective(std::span<const double> candidate,
                      std::span<const double> center, ColumnView column,
                      double c, std::span<const double> d, double gamma,
                      double scale = 1.0);

// Maintains y lazily for the explicit update: between two touches of row i the
// only change is the drift y_i <- [y_i - gamma d_i]_+, which collapses to
// [y_i - t gamma d_i]_+ after t iterations.
class LazyDualState {
 public:
  LazyDualState(std::vector<double> y0, std::span<const double> d,
                double gamma);

  // Value of y_i at the start of iteration k.
  double materialize(int i, std::int64_t k) const {
    const auto steps = static_cast<double>(k - last_update_[i] - 1);
    const double v = y_base_[i] - steps * drift_[i];
    return v > 0.0 ? v : 0.0;
  }

  // Records the post-update value of y_i produced at iteration k.
  void set(int i, std::int64_t k, double value) {
    y_base_[i] = value;
    last_update_[i] = k;
  }

  // y at the start of iteration k, all rows.
  std::vector<double> materialize_all(std::int64_t k) const;

  double drift(int i) const { return drift_[i]; }
  double step() const { return gamma_; }

 private:
  std::vector<double> y_base_;
  std::vector<std::int64_t> last_update_;
  std::vector<double> drift_;  // gamma * d_i
  double gamma_;
};

// Order in which the n K column copies are visited; entry e refers to column
// e mod n.
std::vector<std::uint32_t> visit_order(int n, int k, std::uint64_t seed,
                                       bool block);

// One pass over a random permutation of the columns (dense dual update,
// K = 1 regardless of config.duplication_k).
OnlineSolution run_pass(const LpInstance& instance, const RunConfig& config);

// Explicit pass with per-column work proportional to the column's nonzeros.
// Supports duplication.
OnlineSolution lazy_explicit_pass(const LpInstance& instance,
                                  const RunConfig& config);

// Pass over a random permutation of K copies of every column (right-hand side
// K b) and averaging of the copies' estimates. Uses the lazy path when
// config.lazy is set and the method is explicit.
OnlineSolution run_duplicated(const LpInstance& instance,
                              const RunConfig& config);

}  // namespace olp

#endif  // OLP_ONLINE_H_
