// Copyright 2026 The chipfire Authors
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

#ifndef CHIPFIRE_CLI_HPP
#define CHIPFIRE_CLI_HPP

#include <iosfwd>

namespace chipfire {

// Exit codes shared by the subcommands.
enum ExitCode : int {
    kExitOk = 0,
    kExitMalformed = 1,
    kExitUnwinnable = 2,
    kExitStepLimit = 3,
    kExitSearchExhausted = 4,
    kExitBoundViolated = 5,
};

/// Entry point of the `chipfire` tool: solve, optimal, gen, serve.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace chipfire

#endif
