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

#ifndef OLP_CLI_H_
#define OLP_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "olp/lp_instance.h"
#include "olp/online.h"
#include "olp/results_csv.h"

namespace olp {

enum ExitCode : int {
  kExitOk = 0,
  kExitGeneric = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitSolve = 4,
  kExitLimit = 5,
};

// Entry point of the `olp` tool: subcommands gen, solve, sift and bench.
// Every subcommand accepts --config FILE with key=value lines (key = long
// flag name without dashes); command-line flags take precedence.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// "explicit", "implicit", followed by "+feas", "+ones", "+lazy", "+block"
// for the options that are set.
std::string method_label(const RunConfig& config);

// Inverse of method_label for the method and flag fields; the stepsize, K and
// seed are left at their defaults.
RunConfig parse_method_label(const std::string& label);

// Instance from a results-file label: an MKP generator label ("mkp:..."), an
// MPS path, or "netlib:" followed by an MPS path (parsed then netlib_modify).
LpInstance load_instance(const std::string& label);

// Runs one duplicated online pass and packages the result. The wall time
// covers the pass only.
ResultRecord run_online_record(const LpInstance& instance,
                               const std::string& label,
                               const RunConfig& config,
                               std::optional<double> opt_value);

// Re-runs a record from its own fields with a fixed stepsize equal to the
// recorded gamma.
ResultRecord replay_record(const ResultRecord& record);

}  // namespace olp

#endif  // OLP_CLI_H_
