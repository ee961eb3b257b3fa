// Copyright 2026 The Coverlife Authors
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

#ifndef COVERLIFE_TOOLS_CLI_H_
#define COVERLIFE_TOOLS_CLI_H_

#include <iosfwd>

namespace coverlife {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;

// Entry point of the `coverlife` tool. Subcommands: gen, solve, oracle, exp,
// validate. Returns 0 on success, 1 on usage or input errors, 2 when an
// instance is infeasible, generation fails, the oracle declines, or a
// schedule fails validation.
int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace coverlife

#endif  // COVERLIFE_TOOLS_CLI_H_
