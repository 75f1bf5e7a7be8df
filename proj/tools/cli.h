// Copyright 2026 The srgcut Authors
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

// The srgcut command-line interface, callable in-process so tests can drive
// it without spawning a shell.

#ifndef SRGCUT_TOOLS_CLI_H_
#define SRGCUT_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace srgcut::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kPropertyViolation = 1;
inline constexpr int kUsageError = 2;

// args excludes the program name.
int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace srgcut::cli

#endif  // SRGCUT_TOOLS_CLI_H_
