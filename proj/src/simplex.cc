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

#include "olp/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "olp/error.h"

namespace olp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Solver {
 public:
  Solver(const LpInstance& instance, const SimplexOptions& options)
      : inst_(instance),
        opt_(options),
        m_(instance.num_rows()),
        n_(instance.num_cols()) {
    limit_ = opt_.iteration_limit > 0
                 ? opt_.iteration_limit
                 : 50 * (static_cast<std::int64_t>(m_) + n_);
    double bmax = 0.0;
    for (double b : inst_.rhs()) bmax = std::max(bmax, std::abs(b));
    feas_tol_ = opt_.feasibility_tol * (1.0 + bmax);
  }

  SimplexResult run(const SimplexBasis* warm) {
    SimplexResult out;
    bool started = warm != nullptr && try_warm(*warm);
    if (!started) {
      cold_start();
      if (num_art_ > 0) {
        set_phase_costs(1);
        const SimplexStatus s = iterate();
        if (s == SimplexStatus::kIterationLimit) return finish(s);
        double infeas = 0.0;
        for (int k = 0; k < m_; ++k) {
          if (head_[k] >= n_ + m_) infeas += xb_[k];
        }
        if (infeas > feas_tol_) return finish(SimplexStatus::kInfeasible);
        drive_out_artificials();
        for (int a = 0; a < num_art_; ++a) ub_[n_ + m_ + a] = 0.0;
      }
    }
    set_phase_costs(2);
    return finish(iterate());
  }

 private:
  int total() const { return n_ + m_ + num_art_; }

  template <typename F>
  void for_column(int j, F&& f) const {
    if (j < n_) {
      const ColumnView col = inst_.column(j);
      for (std::size_t p = 0; p < col.size(); ++p) f(col.rows[p], col.values[p]);
    } else if (j < n_ + m_) {
      f(j - n_, 1.0);
    } else {
      f(art_row_[j - n_ - m_], -1.0);
    }
  }

  double lower(int) const { return 0.0; }

  double nonbasic_value(int j) const {
    return status_[j] == VarStatus::kAtUpper ? ub_[j] : 0.0;
  }

  void base_arrays(int num_art) {
    num_art_ = num_art;
    const int nt = total();
    ub_.assign(static_cast<std::size_t>(nt), kInf);
    const auto u = inst_.upper();
    for (int j = 0; j < n_; ++j) ub_[j] = u[j];
    status_.assign(static_cast<std::size_t>(nt), VarStatus::kAtLower);
    head_.assign(static_cast<std::size_t>(m_), -1);
    xb_.assign(static_cast<std::size_t>(m_), 0.0);
  }

  bool try_warm(const SimplexBasis& warm) {
    if (warm.status.size() != static_cast<std::size_t>(n_ + m_)) return false;
    base_arrays(0);
    int k = 0;
    for (int j = 0; j < n_ + m_; ++j) {
      const VarStatus s = warm.status[j];
      if (s == VarStatus::kBasic) {
        if (k == m_) return false;
        head_[k++] = j;
      } else if (s == VarStatus::kAtUpper && !std::isfinite(ub_[j])) {
        return false;
      }
      status_[j] = s;
    }
    if (k != m_) return false;
    if (!refactor()) return false;
    for (int r = 0; r < m_; ++r) {
      const int j = head_[r];
      if (xb_[r] < -feas_tol_ || xb_[r] > ub_[j] + feas_tol_) return false;
    }
    return true;
  }

  void cold_start() {
    const auto b = inst_.rhs();
    art_row_.clear();
    for (int i = 0; i < m_; ++i) {
      if (b[i] < 0.0) art_row_.push_back(i);
    }
    base_arrays(static_cast<int>(art_row_.size()));
    int a = 0;
    for (int i = 0; i < m_; ++i) {
      const int j = b[i] < 0.0 ? n_ + m_ + a++ : n_ + i;
      head_[i] = j;
      status_[j] = VarStatus::kBasic;
    }
    if (!refactor()) throw NumericalError("singular starting basis");
  }

  void set_phase_costs(int phase) {
    cost_.assign(static_cast<std::size_t>(total()), 0.0);
    if (phase == 1) {
      for (int a = 0; a < num_art_; ++a) cost_[n_ + m_ + a] = -1.0;
    } else {
      const auto c = inst_.obj();
      for (int j = 0; j < n_; ++j) cost_[j] = c[j];
    }
    double cmax = 0.0;
    for (double v : cost_) cmax = std::max(cmax, std::abs(v));
    opt_tol_ = opt_.optimality_tol * (1.0 + cmax);
  }

  // Inverts the basis matrix with Gauss-Jordan elimination and partial
  // pivoting, then recomputes the basic values. Returns false if singular.
  bool refactor() {
    const std::size_t m = static_cast<std::size_t>(m_);
    std::vector<double> bmat(m * m, 0.0);
    for (int k = 0; k < m_; ++k) {
      for_column(head_[k], [&](int i, double v) { bmat[i * m + k] = v; });
    }
    binv_.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) binv_[i * m + i] = 1.0;
    for (std::size_t col = 0; col < m; ++col) {
      std::size_t piv = col;
      double best = std::abs(bmat[col * m + col]);
      for (std::size_t r = col + 1; r < m; ++r) {
        if (std::abs(bmat[r * m + col]) > best) {
          best = std::abs(bmat[r * m + col]);
          piv = r;
        }
      }
      if (best < 1e-11) return false;
      if (piv != col) {
        for (std::size_t c = 0; c < m; ++c) {
          std::swap(bmat[piv * m + c], bmat[col * m + c]);
          std::swap(binv_[piv * m + c], binv_[col * m + c]);
        }
      }
      const double inv = 1.0 / bmat[col * m + col];
      for (std::size_t c = 0; c < m; ++c) {
        bmat[col * m + c] *= inv;
        binv_[col * m + c] *= inv;
      }
      for (std::size_t r = 0; r < m; ++r) {
        if (r == col) continue;
        const double f = bmat[r * m + col];
        if (f == 0.0) continue;
        for (std::size_t c = 0; c < m; ++c) {
          bmat[r * m + c] -= f * bmat[col * m + c];
          binv_[r * m + c] -= f * binv_[col * m + c];
        }
      }
    }
    since_refactor_ = 0;
    recompute_basic_values();
    return true;
  }

  void recompute_basic_values() {
    std::vector<double> rhs(inst_.rhs().begin(), inst_.rhs().end());
    for (int j = 0; j < total(); ++j) {
      if (status_[j] != VarStatus::kAtUpper) continue;
      const double v = ub_[j];
      for_column(j, [&](int i, double a) { rhs[i] -= a * v; });
    }
    const std::size_t m = static_cast<std::size_t>(m_);
    for (std::size_t k = 0; k < m; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += binv_[k * m + i] * rhs[i];
      xb_[k] = s;
    }
  }

  std::vector<double> ftran(int j) const {
    const std::size_t m = static_cast<std::size_t>(m_);
    std::vector<double> alpha(m, 0.0);
    for_column(j, [&](int i, double v) {
      for (std::size_t k = 0; k < m; ++k) alpha[k] += binv_[k * m + i] * v;
    });
    return alpha;
  }

  std::vector<double> duals() const {
    const std::size_t m = static_cast<std::size_t>(m_);
    std::vector<double> y(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
      const double cb = cost_[head_[k]];
      if (cb == 0.0) continue;
      for (std::size_t i = 0; i < m; ++i) y[i] += cb * binv_[k * m + i];
    }
    return y;
  }

  double reduced_cost(int j, const std::vector<double>& y) const {
    double d = cost_[j];
    for_column(j, [&](int i, double a) { d -= a * y[i]; });
    return d;
  }

  void pivot(int leave, const std::vector<double>& alpha) {
    const std::size_t m = static_cast<std::size_t>(m_);
    const std::size_t r = static_cast<std::size_t>(leave);
    const double inv = 1.0 / alpha[r];
    for (std::size_t c = 0; c < m; ++c) binv_[r * m + c] *= inv;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == r || alpha[k] == 0.0) continue;
      const double f = alpha[k];
      for (std::size_t c = 0; c < m; ++c) binv_[k * m + c] -= f * binv_[r * m + c];
    }
  }

  SimplexStatus iterate() {
    int stall = 0;
    while (true) {
      if (iterations_ >= limit_) return SimplexStatus::kIterationLimit;
      const bool bland = stall >= opt_.stall_threshold;
      const std::vector<double> y = duals();
      int q = -1;
      double best = 0.0;
      for (int j = 0; j < total(); ++j) {
        if (status_[j] == VarStatus::kBasic || ub_[j] <= 0.0) continue;
        const double d = reduced_cost(j, y);
        double score = 0.0;
        if (status_[j] == VarStatus::kAtLower && d > opt_tol_) score = d;
        if (status_[j] == VarStatus::kAtUpper && d < -opt_tol_) score = -d;
        if (score <= 0.0) continue;
        if (bland) {
          q = j;
          break;
        }
        if (score > best) {
          best = score;
          q = j;
        }
      }
      if (q < 0) return SimplexStatus::kOptimal;

      std::vector<double> alpha = ftran(q);
      const double dir = status_[q] == VarStatus::kAtLower ? 1.0 : -1.0;
      double t_best = ub_[q];
      int leave = -1;
      bool leave_to_upper = false;
      for (int k = 0; k < m_; ++k) {
        const double rate = -dir * alpha[k];
        const int hk = head_[k];
        double t;
        bool to_upper;
        if (rate < -opt_.pivot_tol) {
          t = std::max(xb_[k] - lower(hk), 0.0) / -rate;
          to_upper = false;
        } else if (rate > opt_.pivot_tol && std::isfinite(ub_[hk])) {
          t = std::max(ub_[hk] - xb_[k], 0.0) / rate;
          to_upper = true;
        } else {
          continue;
        }
        // A tie with the entering column's own bound keeps the bound flip.
        const double tie =
            std::isfinite(t_best) ? 1e-12 * (1.0 + t_best) : 0.0;
        bool take = !std::isfinite(t_best) || t < t_best - tie;
        if (!take && leave >= 0 && t <= t_best + tie) {
          take = bland ? hk < head_[leave]
                       : std::abs(alpha[k]) > std::abs(alpha[leave]);
        }
        if (take) {
          t_best = t;
          leave = k;
          leave_to_upper = to_upper;
        }
      }
      if (leave < 0 && !std::isfinite(t_best)) return SimplexStatus::kUnbounded;

      for (int k = 0; k < m_; ++k) xb_[k] -= dir * alpha[k] * t_best;
      if (leave < 0) {
        status_[q] = dir > 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
      } else {
        if (std::abs(alpha[leave]) < 1e-11) {
          // Inaccurate pivot element: refresh the factorization and retry.
          if (since_refactor_ == 0 || !refactor()) {
            throw NumericalError("basis factorization failed");
          }
          continue;
        }
        const int out = head_[leave];
        status_[out] = leave_to_upper ? VarStatus::kAtUpper : VarStatus::kAtLower;
        const double entering_value = (dir > 0 ? 0.0 : ub_[q]) + dir * t_best;
        head_[leave] = q;
        status_[q] = VarStatus::kBasic;
        pivot(leave, alpha);
        xb_[leave] = entering_value;
        if (++since_refactor_ >= opt_.refactor_interval && !refactor()) {
          throw NumericalError("basis factorization failed");
        }
      }
      ++iterations_;
      stall = t_best <= 1e-12 ? stall + 1 : 0;
    }
  }

  // Replaces basic artificial columns (all at zero after a successful phase
  // 1) by nonbasic slack or structural columns.
  void drive_out_artificials() {
    const std::size_t m = static_cast<std::size_t>(m_);
    for (int r = 0; r < m_; ++r) {
      if (head_[r] < n_ + m_) continue;
      int best_j = -1;
      double best = 1e-9;
      for (int j = 0; j < n_ + m_; ++j) {
        if (status_[j] == VarStatus::kBasic) continue;
        double v = 0.0;
        for_column(j, [&](int i, double a) { v += binv_[r * m + i] * a; });
        if (std::abs(v) > best) {
          best = std::abs(v);
          best_j = j;
        }
      }
      if (best_j < 0) continue;
      const std::vector<double> alpha = ftran(best_j);
      const int out = head_[r];
      status_[out] = VarStatus::kAtLower;
      head_[r] = best_j;
      status_[best_j] = VarStatus::kBasic;
      pivot(r, alpha);
      recompute_basic_values();
    }
    if (!refactor()) throw NumericalError("basis factorization failed");
  }

  SimplexResult finish(SimplexStatus status) {
    SimplexResult out;
    out.status = status;
    out.iterations = iterations_;
    out.basis.status.assign(status_.begin(), status_.begin() + n_ + m_);
    if (status != SimplexStatus::kOptimal) return out;
    const auto u = inst_.upper();
    out.x_star.assign(static_cast<std::size_t>(n_), 0.0);
    for (int j = 0; j < n_; ++j) out.x_star[j] = nonbasic_value(j);
    for (int k = 0; k < m_; ++k) {
      if (head_[k] < n_) out.x_star[head_[k]] = xb_[k];
    }
    for (int j = 0; j < n_; ++j) {
      out.x_star[j] = std::clamp(out.x_star[j], 0.0, u[j]);
    }
    out.y_star = duals();
    const auto c = inst_.obj();
    for (int j = 0; j < n_; ++j) out.obj += c[j] * out.x_star[j];
    return out;
  }

  const LpInstance& inst_;
  SimplexOptions opt_;
  int m_;
  int n_;
  int num_art_ = 0;
  std::int64_t limit_ = 0;
  std::int64_t iterations_ = 0;
  int since_refactor_ = 0;
  double feas_tol_ = 0.0;
  double opt_tol_ = 0.0;
  std::vector<int> art_row_;
  std::vector<double> ub_;
  std::vector<double> cost_;
  std::vector<VarStatus> status_;
  std::vector<int> head_;
  std::vector<double> xb_;
  std::vector<double> binv_;
};

}  // namespace

std::string to_string(SimplexStatus status) {
  switch (status) {
    case SimplexStatus::kOptimal:
      return "optimal";
    case SimplexStatus::kInfeasible:
      return "infeasible";
    case SimplexStatus::kUnbounded:
      return "unbounded";
    case SimplexStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "?";
}

std::vector<int> SimplexBasis::basic_columns() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < status.size(); ++j) {
    if (status[j] == VarStatus::kBasic) out.push_back(static_cast<int>(j));
  }
  return out;
}

SimplexResult solve_lp(const LpInstance& instance,
                       const SimplexBasis* warm_basis,
                       const SimplexOptions& options) {
  if (instance.num_rows() > options.max_rows) {
    throw InvalidConfigError("dense simplex limited to " +
                             std::to_string(options.max_rows) + " rows, got " +
                             std::to_string(instance.num_rows()));
  }
  Solver solver(instance, options);
  return solver.run(warm_basis);
}

}  // namespace olp
