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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "olp/error.h"
#include "olp/metrics.h"
#include "olp/simplex.h"
#include "test_util.h"

namespace olp {
namespace {

LpInstance toy() {
  return LpInstance::from_dense({{1.0, 1.0}}, {0.5}, {1.0, 1.0});
}

TEST(MetricsTest, ToyValues) {
  const LpInstance lp = toy();
  const std::vector<double> x{1.0, 1.0};
  EXPECT_DOUBLE_EQ(constraint_violation(lp, x), 1.5);
  EXPECT_DOUBLE_EQ(objective_value(lp, x), 2.0);
  EXPECT_DOUBLE_EQ(optimality_gap(lp, x, 0.5), -1.5);
  EXPECT_DOUBLE_EQ(relative_optimality(lp, std::vector<double>{0.25, 0.0}, 0.5), 0.5);
  EXPECT_THROW(relative_optimality(lp, x, 0.0), DomainError);
  // y = 1: <b,y> = 0.5 and c - A^T y = 0.
  EXPECT_DOUBLE_EQ(dual_objective(lp, std::vector<double>{1.0}), 0.5);
}

TEST(MetricsTest, ViolationIsEuclideanNormOfPositivePart) {
  const LpInstance lp =
      LpInstance::from_dense({{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}, {0.0, 0.0, 5.0},
                             {1.0, 1.0});
  EXPECT_DOUBLE_EQ(constraint_violation(lp, std::vector<double>{0.3, 0.4}), 0.5);
}

TEST(MetricsTest, DualObjectiveClampsNegativeEntries) {
  const LpInstance lp = toy();
  bool clamped = false;
  const double v = dual_objective(lp, std::vector<double>{-2.0}, &clamped);
  EXPECT_TRUE(clamped);
  EXPECT_DOUBLE_EQ(v, 2.0);  // y -> 0, bound <u, [c]_+> = 2
  dual_objective(lp, std::vector<double>{0.5}, &clamped);
  EXPECT_FALSE(clamped);
}

TEST(MetricsTest, LengthMismatchThrows) {
  const LpInstance lp = toy();
  EXPECT_THROW(constraint_violation(lp, std::vector<double>{1.0}), DimensionError);
  EXPECT_THROW(dual_objective(lp, std::vector<double>{1.0, 2.0}), DimensionError);
}

// Weak duality against the vertex oracle: every y >= 0 bounds the optimum.
TEST(MetricsTest, DualObjectiveIsUpperBound) {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const auto d = testing::random_dense(rng, 3, 4, 0, 2, 0.3, 0.5, 2, -1, 3, 2);
    const LpInstance lp = testing::to_instance(d);
    const double opt = enumerate_vertices_oracle(lp).opt_value;
    for (int s = 0; s < 5; ++s) {
      std::vector<double> y(3);
      for (double& v : y) v = 3.0 * rng.uniform01();
      EXPECT_GE(dual_objective(lp, y), opt - 1e-9);
    }
  }
}

TEST(MetricsTest, StoppingResidualVanishesAtPrimalDualOptimum) {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto d = testing::random_dense(rng, 3, 5, 0, 2, 0.2, 0.5, 2, 0, 3);
    const LpInstance lp = testing::to_instance(d);
    const SimplexResult r = solve_lp(lp);
    ASSERT_TRUE(r.optimal());
    EXPECT_LE(stopping_residual(lp, r.x_star, r.y_star), 1e-8);
    const Metrics m = evaluate(lp, r.x_star, r.y_star, r.obj);
    EXPECT_NEAR(m.gap, 0.0, 1e-9);
    EXPECT_NEAR(m.relative_opt, 1.0, 1e-9);
    EXPECT_NEAR(m.dual_bound, r.obj, 1e-7);
  }
}

TEST(MetricsTest, StoppingResidualFormula) {
  const LpInstance lp = toy();
  const std::vector<double> x{1.0, 0.0};
  const std::vector<double> y{0.0};
  // violation 0.5 / (0.5 + 1); duality |2 - 1| / (2 + 1 + 1).
  EXPECT_DOUBLE_EQ(stopping_residual(lp, x, y), std::max(0.5 / 1.5, 1.0 / 4.0));
}

}  // namespace
}  // namespace olp
