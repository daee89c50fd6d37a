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

#ifndef BMPART_TOOLS_CLI_H_
#define BMPART_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace bmpart::cli {

inline constexpr char kToolVersion[] = "0.1.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;   // invalid reduction, failed check
inline constexpr int kExitGuard = 2;    // input beyond an exhaustive guard
inline constexpr int kExitUsage = 64;   // bad flags, unreadable input
inline constexpr int kExitInternal = 70;

// Subcommands: verify, analyze, cover, simulate, selftest. Human-readable
// text goes to `out`; machine output is only written to --out paths.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bmpart::cli

#endif  // BMPART_TOOLS_CLI_H_
