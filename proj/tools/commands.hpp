// Copyright 2026 The tensorcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TENSORCONE_TOOLS_COMMANDS_HPP_
#define TENSORCONE_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

namespace tcone::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitConfig = 2,
  kExitBudget = 3,
  kExitConsistency = 4,
};

struct RunConfig {
  std::string cartan_type;
  int s = 2;
  int max_codim = -1;  // -1: the rank
  int box = -1;        // -1: the command's default
  int depth = 3;
  int orient_box = 2;  // box of the sample used to orient facets
  std::string format = "text";
  std::string out;
  int jobs = 0;  // 0: hardware concurrency
  std::uint64_t budget = 10'000'000;
  int max_rank = 6;
  std::string parabolic;     // 1-based complement, comma separated
  std::string point;         // weights separated by ';', coordinates by ','
  std::string inequalities;  // facets JSON file to verify instead of the computed one
  bool with_sample = false;
};

// Runs one subcommand, writing the report to `out` and diagnostics to `err`.
// Library exceptions are mapped to exit codes.
int run_command(const std::string& command, const RunConfig& config, std::ostream& out,
                std::ostream& err);

}  // namespace tcone::cli

#endif  // TENSORCONE_TOOLS_COMMANDS_HPP_
