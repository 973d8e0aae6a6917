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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "olp/error.h"
#include "olp/simplex.h"

namespace olp {
namespace {

// Solves the k x k system in place (row-major `mat`, right-hand side `rhs`).
// Returns false when the matrix is numerically singular.
bool solve_dense(std::vector<double>& mat, std::vector<double>& rhs, int k) {
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r) {
      if (std::abs(mat[r * k + col]) > std::abs(mat[piv * k + col])) piv = r;
    }
    if (std::abs(mat[piv * k + col]) < 1e-12) return false;
    if (piv != col) {
      for (int c = 0; c < k; ++c) std::swap(mat[piv * k + c], mat[col * k + c]);
      std::swap(rhs[piv], rhs[col]);
    }
    for (int r = col + 1; r < k; ++r) {
      const double f = mat[r * k + col] / mat[col * k + col];
      if (f == 0.0) continue;
      for (int c = col; c < k; ++c) mat[r * k + c] -= f * mat[col * k + c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int r = k - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < k; ++c) s -= mat[r * k + c] * rhs[c];
    rhs[r] = s / mat[r * k + r];
  }
  return true;
}

}  // namespace

VertexOracleResult enumerate_vertices_oracle(const LpInstance& instance) {
  const int m = instance.num_rows();
  const int n = instance.num_cols();
  if (m + n > 14) {
    throw InvalidConfigError("vertex oracle limited to m + n <= 14");
  }
  const auto u = instance.upper();
  for (double v : u) {
    if (!std::isfinite(v)) {
      throw InvalidConfigError("vertex oracle needs finite upper bounds");
    }
  }
  const std::vector<std::vector<double>> a = instance.to_dense();
  const auto b = instance.rhs();
  const auto c = instance.obj();
  double scale = 1.0;
  for (double v : b) scale = std::max(scale, std::abs(v));
  for (double v : u) scale = std::max(scale, std::abs(v));
  const double tol = 1e-9 * scale;

  VertexOracleResult best;
  best.opt_value = -std::numeric_limits<double>::infinity();
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 free, 1 at 0, 2 at u
  std::vector<int> free_vars;
  std::vector<double> x(static_cast<std::size_t>(n));
  std::int64_t combos = 1;
  for (int j = 0; j < n; ++j) combos *= 3;

  for (std::int64_t code = 0; code < combos; ++code) {
    std::int64_t rest = code;
    free_vars.clear();
    for (int j = 0; j < n; ++j) {
      state[j] = static_cast<int>(rest % 3);
      rest /= 3;
      if (state[j] == 0) free_vars.push_back(j);
    }
    const int k = static_cast<int>(free_vars.size());
    if (k > m) continue;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<double> mat(static_cast<std::size_t>(k * k));
      std::vector<double> rhs(static_cast<std::size_t>(k));
      int r = 0;
      for (int i = 0; i < m; ++i) {
        if (!(mask & (1U << i))) continue;
        double s = b[i];
        for (int j = 0; j < n; ++j) {
          if (state[j] == 2) s -= a[i][j] * u[j];
        }
        rhs[r] = s;
        for (int f = 0; f < k; ++f) mat[r * k + f] = a[i][free_vars[f]];
        ++r;
      }
      if (k > 0 && !solve_dense(mat, rhs, k)) continue;
      for (int j = 0; j < n; ++j) x[j] = state[j] == 2 ? u[j] : 0.0;
      for (int f = 0; f < k; ++f) x[free_vars[f]] = rhs[f];
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        ok = x[j] >= -tol && x[j] <= u[j] + tol;
      }
      for (int i = 0; i < m && ok; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += a[i][j] * x[j];
        ok = s <= b[i] + tol;
      }
      if (!ok) continue;
      double obj = 0.0;
      for (int j = 0; j < n; ++j) obj += c[j] * x[j];
      if (obj > best.opt_value) {
        best.opt_value = obj;
        best.x_star = x;
      }
    }
  }
  if (best.x_star.empty()) {
    throw InfeasibleSetError("no feasible vertex found");
  }
  return best;
}

}  // namespace olp
