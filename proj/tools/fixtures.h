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

// Reference data compiled into the binary from tools/fixtures/*.json.

#ifndef SRGCUT_TOOLS_FIXTURES_H_
#define SRGCUT_TOOLS_FIXTURES_H_

#include <string_view>

namespace srgcut::cli {

// Raw JSON text of the named fixture. Throws std::out_of_range for unknown
// names.
std::string_view FixtureText(std::string_view name);

}  // namespace srgcut::cli

#endif  // SRGCUT_TOOLS_FIXTURES_H_
