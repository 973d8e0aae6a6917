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

#include <algorithm>
#include <cmath>
#include <vector>

#include "olp/error.h"
#include "olp/mkp.h"
#include "olp/online.h"
#include "olp/sifting.h"
#include "olp/simplex.h"
#include "test_util.h"

namespace olp {
namespace {

OnlineSolution fake_online(std::vector<double> x_hat, std::vector<double> y) {
  OnlineSolution s;
  s.x_hat = std::move(x_hat);
  s.y_final = std::move(y);
  return s;
}

TEST(SiftingTest, InitWorkingSet) {
  bool fallback = true;
  EXPECT_EQ(init_working_set(std::vector<double>{1.0, 0.0, 0.5}, 0.5, 2, &fallback),
            (std::vector<int>{0, 2}));
  EXPECT_FALSE(fallback);
  EXPECT_EQ(init_working_set(std::vector<double>{0.0, 0.0, 0.0}, 0.5, 2, &fallback),
            (std::vector<int>{0, 1}));
  EXPECT_TRUE(fallback);
  EXPECT_EQ(init_working_set(std::vector<double>{0.1, 0.3, 0.2, 0.3}, 2.0, 2),
            (std::vector<int>{1, 3}));
  EXPECT_EQ(init_working_set(std::vector<double>{0.1}, 2.0, 5), (std::vector<int>{0}));
}

TEST(SiftingTest, Stabilize) {
  const std::vector<double> w{1.0, 0.0};
  const std::vector<double> anchor{0.0, 1.0};
  EXPECT_EQ(stabilize(w, anchor, 1.0), w);
  const auto s = stabilize(w, anchor, 0.4);
  EXPECT_DOUBLE_EQ(s[0], 0.4);
  EXPECT_DOUBLE_EQ(s[1], 0.6);
  EXPECT_EQ(stabilize(w, w, 0.3), w);
  EXPECT_THROW(stabilize(w, std::vector<double>{1.0}, 0.5), DimensionError);
}

TEST(SiftingTest, PriceMatchesDenseScan) {
  Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    const auto d = testing::random_dense(rng, 4, 30, 0, 2, 0.5, 1, 3, 0, 3);
    const LpInstance lp = testing::to_instance(d);
    std::vector<double> y(4);
    for (double& v : y) v = rng.uniform01();
    std::vector<int> w;
    for (int j = 0; j < 30; ++j) {
      if (rng.uniform01() < 0.3) w.push_back(j);
    }
    std::vector<int> expect;
    std::vector<std::pair<double, int>> scored;
    for (int j = 0; j < 30; ++j) {
      if (std::binary_search(w.begin(), w.end(), j)) continue;
      double rc = d.c[j];
      for (int i = 0; i < 4; ++i) rc -= d.a[i][j] * y[i];
      if (rc > 1e-7) {
        expect.push_back(j);
        scored.emplace_back(-rc, j);
      }
    }
    EXPECT_EQ(price(lp, w, y, 1e-7), expect);
    std::sort(scored.begin(), scored.end());
    std::vector<int> top;
    for (std::size_t k = 0; k < std::min<std::size_t>(3, scored.size()); ++k) {
      top.push_back(scored[k].second);
    }
    std::sort(top.begin(), top.end());
    EXPECT_EQ(price(lp, w, y, 1e-7, 3), top);
  }
}

TEST(SiftingTest, PriceWithFullDualIsEmpty) {
  Rng rng(62);
  const LpInstance lp = testing::random_sparse(rng, 5, 80, 0.5);
  const SimplexResult r = solve_lp(lp);
  ASSERT_TRUE(r.optimal());
  std::vector<int> w;
  for (int j = 0; j < 80; ++j) {
    if (r.x_star[j] > 1e-9) w.push_back(j);
  }
  EXPECT_TRUE(price(lp, w, r.y_star, 1e-7).empty());
  EXPECT_TRUE(certify_optimality(lp, r.x_star, r.y_star, 1e-7));
  const std::vector<double> zero(5, 0.0);
  EXPECT_FALSE(price(lp, std::vector<int>{}, zero, 1e-7).empty());
}

TEST(SiftingTest, BasisMetrics) {
  const std::vector<int> b{1, 2, 3};
  auto [acc, rdc] = basis_metrics(b, b, 10);
  EXPECT_DOUBLE_EQ(acc, 1.0);
  EXPECT_DOUBLE_EQ(rdc, 0.3);
  EXPECT_DOUBLE_EQ(basis_metrics(b, std::vector<int>{4, 5}, 10).first, 0.0);
  EXPECT_THROW(basis_metrics(std::vector<int>{}, b, 10), DomainError);

  // 301 reference columns, 11862 working columns sharing 271 of them.
  std::vector<int> ref;
  std::vector<int> work;
  for (int j = 0; j < 301; ++j) ref.push_back(j);
  for (int j = 30; j < 30 + 11862; ++j) work.push_back(j);
  auto [a2, r2] = basis_metrics(ref, work, 62171);
  EXPECT_DOUBLE_EQ(a2, 271.0 / 301.0);
  EXPECT_DOUBLE_EQ(r2, 11862.0 / 62171.0);
}

TEST(SiftingTest, TinyInstancesMatchOracleForAnySeedSet) {
  Rng rng(63);
  for (int t = 0; t < 40; ++t) {
    const int m = 1 + static_cast<int>(rng.below(4));
    const int n = 1 + static_cast<int>(rng.below(6));
    const auto d = testing::random_dense(rng, m, n, 0, 2, 0.3, 0, 3, -1, 3, 2);
    const LpInstance lp = testing::to_instance(d);
    const double opt = enumerate_vertices_oracle(lp).opt_value;
    std::vector<double> x_hat(n), y(m);
    for (double& v : x_hat) v = rng.uniform01();
    for (double& v : y) v = 2.0 * rng.uniform01();
    SiftConfig cfg;
    cfg.init_threshold = rng.uniform01();
    cfg.stabilization_alpha = 0.1 + 0.9 * rng.uniform01();
    const SiftResult r = sift(lp, fake_online(x_hat, y), cfg);
    EXPECT_TRUE(r.converged);
    EXPECT_TRUE(r.certified);
    EXPECT_NEAR(r.objective, opt, 1e-8 * (1.0 + std::abs(opt)));
  }
}

TEST(SiftingTest, FullSeedSetTerminatesInOneRound) {
  Rng rng(64);
  const LpInstance lp = testing::random_sparse(rng, 5, 50, 0.5);
  const SiftResult r =
      sift(lp, fake_online(std::vector<double>(50, 1.0), std::vector<double>(5, 0.0)),
           SiftConfig{});
  EXPECT_EQ(r.rounds, 1);
  EXPECT_TRUE(r.certified);
  EXPECT_DOUBLE_EQ(r.rdc, 1.0);
}

TEST(SiftingTest, SupportSeedSetTerminatesInOneRound) {
  Rng rng(65);
  const LpInstance lp = testing::random_sparse(rng, 5, 50, 0.5);
  const SimplexResult full = solve_lp(lp);
  std::vector<double> x_hat(50, 0.0);
  for (int j : reference_support(lp, full)) x_hat[j] = 1.0;
  for (int j : full.basis.basic_columns()) {
    if (j < 50) x_hat[j] = 1.0;
  }
  SiftConfig cfg;
  cfg.use_online_anchor = false;
  const SiftResult r = sift(lp, fake_online(x_hat, {}), cfg);
  EXPECT_EQ(r.rounds, 1);
  EXPECT_NEAR(r.objective, full.obj, 1e-9 * full.obj);
  ASSERT_TRUE(r.acc.has_value());
  EXPECT_DOUBLE_EQ(*r.acc, 1.0);
}

TEST(SiftingTest, MonotoneTraceAndAlphaOneMatchesNoAnchor) {
  MkpParams p;
  p.m = 10;
  p.n = 600;
  p.tightness = 0.1;
  p.seed = 4;
  const LpInstance lp = generate_mkp(p);
  RunConfig rc;
  rc.start_point = StartPoint::kOnes;
  rc.duplication_k = 2;
  const OnlineSolution online = run_duplicated(lp, rc);
  SiftConfig cfg;
  cfg.max_new_columns_per_round = 20;
  const SiftResult a = sift(lp, online, cfg);
  ASSERT_TRUE(a.converged);
  for (std::size_t k = 1; k < a.trace.size(); ++k) {
    EXPECT_GE(a.trace[k].objective, a.trace[k - 1].objective - 1e-9 * a.trace[k].objective);
  }
  const double direct = solve_lp(lp).obj;
  EXPECT_NEAR(a.objective, direct, 1e-6 * direct);
  EXPECT_TRUE(a.certified);

  cfg.stabilization_alpha = 1.0;
  const SiftResult b = sift(lp, online, cfg);
  cfg.use_online_anchor = false;
  const SiftResult c = sift(lp, online, cfg);
  ASSERT_EQ(b.trace.size(), c.trace.size());
  for (std::size_t k = 0; k < b.trace.size(); ++k) {
    EXPECT_EQ(b.trace[k].working_size, c.trace[k].working_size);
    EXPECT_EQ(b.trace[k].priced, c.trace[k].priced);
    EXPECT_EQ(b.trace[k].objective, c.trace[k].objective);
  }
  EXPECT_NEAR(b.objective, a.objective, 1e-6 * direct);
}

TEST(SiftingTest, RoundLimitReturnsPartialResult) {
  MkpParams p;
  p.m = 5;
  p.n = 300;
  p.seed = 2;
  const LpInstance lp = generate_mkp(p);
  SiftConfig cfg;
  cfg.max_rounds = 1;
  cfg.max_new_columns_per_round = 1;
  cfg.init_threshold = 2.0;
  const SiftResult r = sift(
      lp, fake_online(std::vector<double>(300, 0.0), std::vector<double>(5, 0.0)), cfg);
  EXPECT_EQ(r.rounds, 1);
  EXPECT_FALSE(r.converged);
  EXPECT_TRUE(r.fallback_used);
  EXPECT_EQ(r.initial_working_set.size(), 5u);
}

TEST(SiftingTest, RejectsNegativeRhsAndBadConfig) {
  const LpInstance lp = LpInstance::from_dense({{1.0}}, {-1.0}, {1.0});
  EXPECT_THROW(sift(lp, fake_online({1.0}, {0.0}), SiftConfig{}), InvalidInstanceError);
  SiftConfig bad;
  bad.stabilization_alpha = 0.0;
  EXPECT_THROW(bad.validate(), InvalidConfigError);
}

}  // namespace
}  // namespace olp
