// Copyright 2026 The Authors.
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

#ifndef EQUIMAT_CLI_H_
#define EQUIMAT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace equimat {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 2,
  kExitMalformed = 3,
  kExitBudget = 4,
  kExitInternal = 5,
};

// Runs one command. `args` excludes the program name. The JSON report goes
// to `out` (or the --output file), a one-line summary and any error
// message to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace equimat

#endif  // EQUIMAT_CLI_H_
