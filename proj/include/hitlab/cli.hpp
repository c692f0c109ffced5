// Copyright 2026 The hitlab Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hitlab {

// Exit codes of the hitlab tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitPrecondition = 2,
  kExitInfeasible = 3,
  kExitVerification = 4,
};

// Runs one invocation; args[0] is the program name. Results go to `out`,
// diagnostics to `err` as "error:<kind>: message".
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hitlab
