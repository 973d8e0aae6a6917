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
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "olp/error.h"
#include "olp/online.h"

namespace olp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Solves g(theta) = sum_i w_i [v_i - theta w_i]_+ = target, where g is
// nonincreasing, by a sweep over the sorted breakpoints v_i / w_i.
void solve_general(std::span<const double> v, std::span<const double> w,
                   double target, double tol, WeightedProjection& out) {
  struct Breakpoint {
    double t;
    double wv;
    double ww;
    bool positive;
  };
  std::vector<Breakpoint> bps;
  bps.reserve(v.size());
  // Active set at theta -> -inf: all positive weights.
  double p0 = 0.0;
  double q0 = 0.0;
  bool any_pos = false;
  bool any_neg = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (w[i] == 0.0) continue;
    const bool pos = w[i] > 0.0;
    any_pos |= pos;
    any_neg |= !pos;
    bps.push_back({v[i] / w[i], w[i] * v[i], w[i] * w[i], pos});
    if (pos) {
      p0 += w[i] * v[i];
      q0 += w[i] * w[i];
    }
  }
  std::sort(bps.begin(), bps.end(),
            [](const Breakpoint& a, const Breakpoint& b) { return a.t < b.t; });

  // Pieces: piece k covers [t_{k-1}, t_k] (t_{-1} = -inf, t_p = +inf) with
  // g = P_k - theta Q_k.
  const std::size_t p = bps.size();
  std::vector<double> pp(p + 1);
  std::vector<double> qq(p + 1);
  std::vector<double> lo(p + 1);
  std::vector<double> hi(p + 1);
  double pc = p0;
  double qc = q0;
  for (std::size_t k = 0; k <= p; ++k) {
    pp[k] = pc;
    qq[k] = std::max(qc, 0.0);
    lo[k] = k == 0 ? -kInf : bps[k - 1].t;
    hi[k] = k == p ? kInf : bps[k].t;
    if (k < p) {
      if (bps[k].positive) {
        pc -= bps[k].wv;
        qc -= bps[k].ww;
      } else {
        pc += bps[k].wv;
        qc += bps[k].ww;
      }
    }
  }
  auto g_at = [&](std::size_t k, double theta) {
    if (qq[k] == 0.0) return pp[k];
    return pp[k] - theta * qq[k];
  };
  const double g_minus = any_pos ? kInf : 0.0;
  const double g_plus = any_neg ? -kInf : 0.0;
  if (target > g_minus + tol || target < g_plus - tol) {
    throw InfeasibleSetError("no point of the weighted simplex attains target " +
                             std::to_string(target));
  }

  // theta_lo: smallest theta with g(theta) <= target.
  double theta_lo = kInf;
  for (std::size_t k = 0; k <= p; ++k) {
    const double right = k == p ? g_plus : g_at(k, hi[k]);
    if (right <= target + tol) {
      if (qq[k] > 0.0) {
        theta_lo = std::clamp((pp[k] - target) / qq[k], lo[k], hi[k]);
      } else {
        theta_lo = lo[k];
      }
      break;
    }
  }
  // theta_hi: largest theta with g(theta) >= target.
  double theta_hi = -kInf;
  for (std::size_t kk = p + 1; kk-- > 0;) {
    const double left = kk == 0 ? g_minus : g_at(kk, lo[kk]);
    if (left >= target - tol) {
      if (qq[kk] > 0.0) {
        theta_hi = std::clamp((pp[kk] - target) / qq[kk], lo[kk], hi[kk]);
      } else {
        theta_hi = hi[kk];
      }
      break;
    }
  }
  if (theta_hi < theta_lo) std::swap(theta_lo, theta_hi);
  out.theta_lo = theta_lo;
  out.theta_hi = theta_hi;
  if (std::isfinite(theta_lo)) {
    out.theta = theta_lo;
  } else if (std::isfinite(theta_hi)) {
    out.theta = theta_hi;
  } else {
    out.theta = 0.0;
  }
}

// All weights positive: visit breakpoints in decreasing order and stop once
// the threshold lies above the next breakpoint.
void solve_positive(std::span<const double> v, std::span<const double> w,
                    double target, WeightedProjection& out) {
  std::vector<std::size_t> order;
  order.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (w[i] > 0.0) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return v[a] / w[a] > v[b] / w[b];
  });
  double p = 0.0;
  double q = 0.0;
  double theta = 0.0;
  std::size_t k = 0;
  for (; k < order.size(); ++k) {
    const std::size_t i = order[k];
    p += w[i] * v[i];
    q += w[i] * w[i];
    theta = (p - target) / q;
    const double next =
        k + 1 < order.size() ? v[order[k + 1]] / w[order[k + 1]] : -kInf;
    if (next <= theta) break;
  }
  out.theta = theta;
  out.theta_lo = theta;
  out.theta_hi = theta;
}

}  // namespace

WeightedProjection project_weighted_simplex(std::span<const double> v,
                                            std::span<const double> w,
                                            double target) {
  if (v.size() != w.size()) {
    throw DimensionError("projection point and weights differ in length");
  }
  const double tol = 1e-12 * (1.0 + std::abs(target));
  WeightedProjection out;
  bool all_zero = true;
  bool all_nonneg = true;
  for (double wi : w) {
    all_zero &= (wi == 0.0);
    all_nonneg &= (wi >= 0.0);
  }
  if (all_zero) {
    if (std::abs(target) > tol) {
      throw InfeasibleSetError("zero weights cannot attain a nonzero target");
    }
    out.theta = 0.0;
    out.theta_lo = -kInf;
    out.theta_hi = kInf;
  } else if (all_nonneg && target > 0.0) {
    solve_positive(v, w, target, out);
  } else {
    solve_general(v, w, target, tol, out);
  }

  out.y.resize(v.size());
  double wy = 0.0;
  double qa = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.y[i] = std::max(v[i] - out.theta * w[i], 0.0);
    wy += w[i] * out.y[i];
    if (out.y[i] > 0.0) qa += w[i] * w[i];
  }
  // One Newton correction on the final active set absorbs the roundoff of the
  // prefix sums.
  if (qa > 0.0 && std::abs(wy - target) > 1e-13 * (1.0 + std::abs(target))) {
    const double theta = out.theta + (wy - target) / qa;
    bool same_support = true;
    std::vector<double> y2(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      y2[i] = std::max(v[i] - theta * w[i], 0.0);
      same_support &= ((y2[i] > 0.0) == (out.y[i] > 0.0));
    }
    if (same_support) {
      out.y = std::move(y2);
      out.theta = theta;
      out.theta_lo = std::min(out.theta_lo, theta);
      out.theta_hi = std::max(out.theta_hi, theta);
    }
  }
  return out;
}

}  // namespace olp
