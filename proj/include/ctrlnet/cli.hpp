// Copyright 2026 The ctrlnet Authors.
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

#ifndef CTRLNET_CLI_HPP_
#define CTRLNET_CLI_HPP_

#include <ostream>

namespace ctrlnet {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitInfeasible = 3,
  kExitOracleGuard = 4,
  kExitOracleMismatch = 5,
};

// Entry point shared by the ctrlnet binary and the tests. `out` receives the
// command output unless -o redirects it to a file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ctrlnet

#endif  // CTRLNET_CLI_HPP_
