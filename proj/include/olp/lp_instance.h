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

#ifndef OLP_LP_INSTANCE_H_
#define OLP_LP_INSTANCE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace olp {

// Nonzeros of one column of A, row indices strictly increasing.
struct ColumnView {
  std::span<const int> rows;
  std::span<const double> values;

  std::size_t size() const { return rows.size(); }
  bool empty() const { return rows.empty(); }
};

// Where an instance row came from when it was built from an MPS file. Ranged
// and equality rows expand into two rows; only one of them carries the
// original right-hand side and is flagged `primary`.
struct RowOrigin {
  int source_row = 0;
  bool negated = false;
  bool primary = true;
};

struct LpMetadata {
  std::string name;
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  // Empty for instances that were not parsed from a file.
  std::vector<RowOrigin> row_origin;
  // Constant added to <c, x> to recover the objective of the source model
  // (in maximization sense).
  double objective_offset = 0.0;
  bool source_minimize = false;
};

// max <c, x>  s.t.  A x <= b,  0 <= x <= u.
//
// A is stored column-major (CSC). Instances are immutable after construction;
// every factory validates the data and throws InvalidInstanceError.
class LpInstance {
 public:
  // Explicit zeros in `values` are dropped. An empty `upper` means u = 1.
  static LpInstance from_csc(int num_rows, int num_cols,
                             std::vector<int> col_ptr,
                             std::vector<int> row_idx,
                             std::vector<double> values,
                             std::vector<double> rhs, std::vector<double> obj,
                             std::vector<double> upper = {},
                             LpMetadata metadata = {});

  // Row-major dense matrix, mostly for tests and tiny examples.
  static LpInstance from_dense(const std::vector<std::vector<double>>& a,
                               std::vector<double> rhs, std::vector<double> obj,
                               std::vector<double> upper = {});

  int num_rows() const { return num_rows_; }
  int num_cols() const { return num_cols_; }
  std::int64_t nnz() const { return static_cast<std::int64_t>(values_.size()); }

  std::span<const int> col_ptr() const { return col_ptr_; }
  std::span<const int> row_idx() const { return row_idx_; }
  std::span<const double> values() const { return values_; }
  std::span<const double> rhs() const { return rhs_; }
  std::span<const double> obj() const { return obj_; }
  std::span<const double> upper() const { return upper_; }
  const LpMetadata& metadata() const { return metadata_; }

  ColumnView column(int j) const {
    const auto begin = static_cast<std::size_t>(col_ptr_[j]);
    const auto len = static_cast<std::size_t>(col_ptr_[j + 1] - col_ptr_[j]);
    return {std::span<const int>(row_idx_).subspan(begin, len),
            std::span<const double>(values_).subspan(begin, len)};
  }

  bool unit_upper_bounds() const;

  // A x and A^T y.
  std::vector<double> multiply(std::span<const double> x) const;
  std::vector<double> multiply_transpose(std::span<const double> y) const;
  double column_dot(int j, std::span<const double> y) const;

  // Restriction to the given columns, in the given order.
  LpInstance restrict_columns(std::span<const int> columns) const;

  LpInstance with_rhs(std::vector<double> rhs) const;
  LpInstance with_upper(std::vector<double> upper) const;

  std::vector<std::vector<double>> to_dense() const;

 private:
  LpInstance() = default;
  void validate() const;

  int num_rows_ = 0;
  int num_cols_ = 0;
  std::vector<int> col_ptr_;
  std::vector<int> row_idx_;
  std::vector<double> values_;
  std::vector<double> rhs_;
  std::vector<double> obj_;
  std::vector<double> upper_;
  LpMetadata metadata_;
};

// Replaces every b_i by max{b_i, eps}.
LpInstance perturb_rhs(const LpInstance& instance, double eps = 1e-3);

struct InstanceStats {
  double a_bar = 0.0;  // max_j ||a_j||_inf
  double c_bar = 0.0;  // max_j |c_j|
  double d_lo = 0.0;   // min_i b_i / n
  double d_hi = 0.0;   // max_i b_i / n
  std::int64_t nnz = 0;
  bool assumptions_ok = false;  // d_lo > 0
};

InstanceStats compute_stats(const LpInstance& instance);

}  // namespace olp

#endif  // OLP_LP_INSTANCE_H_
