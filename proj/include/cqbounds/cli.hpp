// Copyright 2026 The cqbounds Authors
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

#ifndef CQBOUNDS_CLI_HPP_
#define CQBOUNDS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace cqbounds {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitDimension = 3,
  kExitDomain = 4,
  kExitGuard = 5,
  kExitCommutativity = 6,
};

// Runs the command line `args` (without the program name), writing the
// report to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cqbounds

#endif  // CQBOUNDS_CLI_HPP_
