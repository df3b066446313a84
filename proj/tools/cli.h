// Copyright 2026 The Walras Authors
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

#ifndef WALRAS_TOOLS_CLI_H_
#define WALRAS_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace walras::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // unstable, infeasible, failed check
inline constexpr int kExitInput = 2;     // malformed input or bad arguments
inline constexpr int kExitCap = 3;       // enumeration cap exceeded

// Runs one command line (args[0] is the program name). Reports go to `out`,
// diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace walras::cli

#endif  // WALRAS_TOOLS_CLI_H_
