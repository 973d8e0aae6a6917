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

#ifndef OLP_RESULTS_CSV_H_
#define OLP_RESULTS_CSV_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace olp {

// One row of the results file. Optional fields are written as empty cells.
struct ResultRecord {
  std::string instance;  // e.g. an MKP label or an MPS path
  std::string method;    // e.g. "implicit+feas+lazy"
  std::int64_t k = 1;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  double objective = 0.0;
  double violation = 0.0;
  std::optional<double> rel_opt;
  std::optional<double> acc;
  std::optional<double> rdc;
  std::optional<std::int64_t> rounds;
  double wall_time_s = 0.0;
};

// "instance,method,K,gamma,seed,objective,violation,rel_opt,acc,rdc,rounds,wall_time_s"
extern const char* const kResultsHeader;

// RFC 4180 with 17 significant digits for reals, rows in the given order.
void write_results_csv(const std::vector<ResultRecord>& records,
                       std::ostream& out);
// Throws IoError naming the path.
void write_results_csv(const std::vector<ResultRecord>& records,
                       const std::string& path);

// Inverse of write_results_csv. Throws ParseError on a malformed file.
std::vector<ResultRecord> read_results_csv(std::istream& in);
std::vector<ResultRecord> read_results_csv(const std::string& path);

}  // namespace olp

#endif  // OLP_RESULTS_CSV_H_
