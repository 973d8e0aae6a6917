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

#ifndef OLP_MPS_H_
#define OLP_MPS_H_

#include <istream>
#include <ostream>
#include <string>

#include "olp/lp_instance.h"

namespace olp {

// Reads an MPS model (fixed or free format; names must not contain blanks)
// and converts it to max <c,x> s.t. Ax <= b, 0 <= x <= u:
//   - the first N row is the objective, other N rows are dropped;
//   - G rows are negated, E rows and ranged rows become two <= rows;
//   - a minimization objective is negated (metadata.source_minimize);
//   - finite lower bounds are shifted to 0 and fixed columns removed, the
//     constant going to metadata.objective_offset;
//   - free and negative-lower columns are rejected.
// Missing upper bounds mean +inf. Throws ParseError with the line number.
LpInstance parse_mps(std::istream& in);
LpInstance parse_mps_file(const std::string& path);

// Writes the instance as a free-format MPS model with OBJSENSE MAX and one L
// row per instance row. parse_mps of the output gives back the same data.
void write_mps(const LpInstance& instance, std::ostream& out);

// Every source row restored to its original (a, b) in <= sense with the twin
// rows of equality and ranged rows dropped, then b_i <- max{b_i, 1e-3} and
// u_j <- min{u_j, 100}. Idempotent.
LpInstance netlib_modify(const LpInstance& instance);

}  // namespace olp

#endif  // OLP_MPS_H_
