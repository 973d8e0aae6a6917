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

#ifndef OLP_MKP_H_
#define OLP_MKP_H_

#include <cstdint>
#include <string>

#include "olp/lp_instance.h"

namespace olp {

// Random multi-dimensional knapsack LP relaxation:
//   a_ij ~ U{1..a_max}, each entry zeroed with probability 1 - density;
//   b_i = (tightness / n) sum_j a_ij;  c_j = (1/m) sum_i a_ij + U{1..delta_max};
//   u = 1.
struct MkpParams {
  int m = 5;
  int n = 100;
  double tightness = 0.25;
  double density = 1.0;
  std::uint64_t seed = 0;
  // Adds a seeded relative jitter of at most 1e-9 to c to break ties.
  bool perturb_a3 = false;
  // Take b from the row sums before zeroing entries instead of after.
  bool rhs_before_sparsify = false;
  int a_max = 1000;
  int delta_max = 500;
  // Redraws allowed when some b_i comes out as 0.
  int max_retries = 10;
  // Keep a draw with empty rows (b_i = 0) instead of redrawing; used for very
  // sparse timing instances.
  bool allow_zero_rhs = false;

  void validate() const;

  // "mkp:m=8,n=1000,tau=0.25,sigma=1,seed=3", plus ",a3=1", ",pre=1" and
  // ",zrhs=1" for the boolean options that are set and ",amax=..", ",dmax=.."
  // when not at their defaults.
  std::string label() const;
};

// Parses "m=5,n=100,tau=0.25,sigma=1,seed=7" with an optional "mkp:" prefix.
// Keys not given keep their defaults. Throws InvalidConfigError.
MkpParams parse_mkp_params(const std::string& text);

// Deterministic in the parameters. Throws AssumptionError when every retry
// leaves an empty row.
LpInstance generate_mkp(const MkpParams& params);

}  // namespace olp

#endif  // OLP_MKP_H_
