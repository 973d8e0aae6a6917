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

#include "olp/lp_instance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "olp/error.h"

namespace olp {

LpInstance LpInstance::from_csc(int num_rows, int num_cols,
                                std::vector<int> col_ptr,
                                std::vector<int> row_idx,
                                std::vector<double> values,
                                std::vector<double> rhs,
                                std::vector<double> obj,
                                std::vector<double> upper,
                                LpMetadata metadata) {
  if (num_rows < 1 || num_cols < 1) {
    throw InvalidInstanceError("instance needs at least one row and column");
  }
  if (col_ptr.size() != static_cast<std::size_t>(num_cols) + 1) {
    throw InvalidInstanceError("col_ptr must have num_cols + 1 entries");
  }
  if (row_idx.size() != values.size()) {
    throw InvalidInstanceError("row_idx and values differ in length");
  }
  if (upper.empty()) upper.assign(static_cast<std::size_t>(num_cols), 1.0);

  LpInstance lp;
  lp.num_rows_ = num_rows;
  lp.num_cols_ = num_cols;
  lp.rhs_ = std::move(rhs);
  lp.obj_ = std::move(obj);
  lp.upper_ = std::move(upper);
  lp.metadata_ = std::move(metadata);

  if (col_ptr.front() != 0 || col_ptr.back() != static_cast<int>(values.size())) {
    throw InvalidInstanceError("col_ptr must start at 0 and end at nnz");
  }
  bool has_zeros = false;
  for (int j = 0; j < num_cols; ++j) {
    if (col_ptr[j + 1] < col_ptr[j]) {
      throw InvalidInstanceError("col_ptr is not nondecreasing at column " +
                                 std::to_string(j));
    }
  }
  for (double v : values) has_zeros |= (v == 0.0);
  if (has_zeros) {
    std::vector<int> ptr(col_ptr.size(), 0);
    std::vector<int> rows;
    std::vector<double> vals;
    rows.reserve(row_idx.size());
    vals.reserve(values.size());
    for (int j = 0; j < num_cols; ++j) {
      for (int p = col_ptr[j]; p < col_ptr[j + 1]; ++p) {
        if (values[p] == 0.0) continue;
        rows.push_back(row_idx[p]);
        vals.push_back(values[p]);
      }
      ptr[j + 1] = static_cast<int>(rows.size());
    }
    col_ptr = std::move(ptr);
    row_idx = std::move(rows);
    values = std::move(vals);
  }
  lp.col_ptr_ = std::move(col_ptr);
  lp.row_idx_ = std::move(row_idx);
  lp.values_ = std::move(values);
  lp.validate();
  return lp;
}

LpInstance LpInstance::from_dense(const std::vector<std::vector<double>>& a,
                                  std::vector<double> rhs,
                                  std::vector<double> obj,
                                  std::vector<double> upper) {
  const int m = static_cast<int>(a.size());
  const int n = m > 0 ? static_cast<int>(a.front().size()) : 0;
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) {
      throw InvalidInstanceError("ragged dense matrix");
    }
  }
  std::vector<int> col_ptr(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> row_idx;
  std::vector<double> values;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      if (a[i][j] != 0.0) {
        row_idx.push_back(i);
        values.push_back(a[i][j]);
      }
    }
    col_ptr[j + 1] = static_cast<int>(values.size());
  }
  return from_csc(m, n, std::move(col_ptr), std::move(row_idx),
                  std::move(values), std::move(rhs), std::move(obj),
                  std::move(upper));
}

void LpInstance::validate() const {
  const auto m = static_cast<std::size_t>(num_rows_);
  const auto n = static_cast<std::size_t>(num_cols_);
  if (rhs_.size() != m) throw InvalidInstanceError("rhs length != num_rows");
  if (obj_.size() != n) throw InvalidInstanceError("obj length != num_cols");
  if (upper_.size() != n) throw InvalidInstanceError("upper length != num_cols");
  for (int j = 0; j < num_cols_; ++j) {
    int prev = -1;
    for (int p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
      const int i = row_idx_[p];
      if (i < 0 || i >= num_rows_) {
        throw InvalidInstanceError("row index out of range in column " +
                                   std::to_string(j));
      }
      if (i <= prev) {
        throw InvalidInstanceError("row indices not strictly increasing in column " +
                                   std::to_string(j));
      }
      if (!std::isfinite(values_[p])) {
        throw InvalidInstanceError("non-finite matrix entry in column " +
                                   std::to_string(j));
      }
      prev = i;
    }
    if (!std::isfinite(obj_[j])) throw InvalidInstanceError("non-finite objective");
    if (!(upper_[j] > 0.0) || std::isnan(upper_[j])) {
      throw InvalidInstanceError("upper bound must be positive at column " +
                                 std::to_string(j));
    }
  }
  for (double b : rhs_) {
    if (!std::isfinite(b)) throw InvalidInstanceError("non-finite rhs");
  }
}

bool LpInstance::unit_upper_bounds() const {
  return std::all_of(upper_.begin(), upper_.end(),
                     [](double u) { return u == 1.0; });
}

std::vector<double> LpInstance::multiply(std::span<const double> x) const {
  if (x.size() != static_cast<std::size_t>(num_cols_)) {
    throw DimensionError("x has length " + std::to_string(x.size()) +
                         ", expected " + std::to_string(num_cols_));
  }
  std::vector<double> ax(static_cast<std::size_t>(num_rows_), 0.0);
  for (int j = 0; j < num_cols_; ++j) {
    const double xj = x[j];
    if (xj == 0.0) continue;
    for (int p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
      ax[row_idx_[p]] += values_[p] * xj;
    }
  }
  return ax;
}

double LpInstance::column_dot(int j, std::span<const double> y) const {
  double s = 0.0;
  for (int p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
    s += values_[p] * y[row_idx_[p]];
  }
  return s;
}

std::vector<double> LpInstance::multiply_transpose(
    std::span<const double> y) const {
  if (y.size() != static_cast<std::size_t>(num_rows_)) {
    throw DimensionError("y has length " + std::to_string(y.size()) +
                         ", expected " + std::to_string(num_rows_));
  }
  std::vector<double> aty(static_cast<std::size_t>(num_cols_));
  for (int j = 0; j < num_cols_; ++j) aty[j] = column_dot(j, y);
  return aty;
}

LpInstance LpInstance::restrict_columns(std::span<const int> columns) const {
  std::vector<int> ptr(columns.size() + 1, 0);
  std::vector<int> rows;
  std::vector<double> vals;
  std::vector<double> c;
  std::vector<double> u;
  c.reserve(columns.size());
  u.reserve(columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const int j = columns[k];
    if (j < 0 || j >= num_cols_) throw DimensionError("column id out of range");
    const ColumnView col = column(j);
    rows.insert(rows.end(), col.rows.begin(), col.rows.end());
    vals.insert(vals.end(), col.values.begin(), col.values.end());
    ptr[k + 1] = static_cast<int>(rows.size());
    c.push_back(obj_[j]);
    u.push_back(upper_[j]);
  }
  LpMetadata meta;
  meta.name = metadata_.name;
  meta.row_names = metadata_.row_names;
  meta.row_origin = metadata_.row_origin;
  if (!metadata_.col_names.empty()) {
    for (int j : columns) meta.col_names.push_back(metadata_.col_names[j]);
  }
  return from_csc(num_rows_, static_cast<int>(columns.size()), std::move(ptr),
                  std::move(rows), std::move(vals), rhs_, std::move(c),
                  std::move(u), std::move(meta));
}

LpInstance LpInstance::with_rhs(std::vector<double> rhs) const {
  LpInstance lp = *this;
  lp.rhs_ = std::move(rhs);
  lp.validate();
  return lp;
}

LpInstance LpInstance::with_upper(std::vector<double> upper) const {
  LpInstance lp = *this;
  lp.upper_ = std::move(upper);
  lp.validate();
  return lp;
}

std::vector<std::vector<double>> LpInstance::to_dense() const {
  std::vector<std::vector<double>> a(
      static_cast<std::size_t>(num_rows_),
      std::vector<double>(static_cast<std::size_t>(num_cols_), 0.0));
  for (int j = 0; j < num_cols_; ++j) {
    for (int p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
      a[row_idx_[p]][j] = values_[p];
    }
  }
  return a;
}

LpInstance perturb_rhs(const LpInstance& instance, double eps) {
  std::vector<double> b(instance.rhs().begin(), instance.rhs().end());
  for (double& bi : b) bi = std::max(bi, eps);
  return instance.with_rhs(std::move(b));
}

InstanceStats compute_stats(const LpInstance& instance) {
  InstanceStats s;
  for (double v : instance.values()) s.a_bar = std::max(s.a_bar, std::abs(v));
  for (double c : instance.obj()) s.c_bar = std::max(s.c_bar, std::abs(c));
  const auto rhs = instance.rhs();
  const double n = static_cast<double>(instance.num_cols());
  const auto [lo, hi] = std::minmax_element(rhs.begin(), rhs.end());
  s.d_lo = *lo / n;
  s.d_hi = *hi / n;
  s.nnz = instance.nnz();
  s.assumptions_ok = s.d_lo > 0.0;
  return s;
}

}  // namespace olp
