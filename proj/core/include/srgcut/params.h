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

#ifndef SRGCUT_PARAMS_H_
#define SRGCUT_PARAMS_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace srgcut {

// The quadruple (v, k, λ, μ). Plain value type: arbitrary quadruples are
// representable so that feasibility filters can reject them with reasons.
struct SrgParams {
  int64_t v = 0;
  int64_t k = 0;
  int64_t lambda = 0;
  int64_t mu = 0;

  friend auto operator<=>(const SrgParams&, const SrgParams&) = default;
};

// "(v,k,l,m)"
std::string ToString(const SrgParams& p);

// Parses "v,k,l,m" (optionally wrapped in parentheses, spaces allowed).
// Throws std::invalid_argument on malformed text.
SrgParams ParseParams(std::string_view text);

// v > k >= 1, 0 <= λ <= k-1, 1 <= μ <= k and k(k-λ-1) = (v-k-1)μ.
bool IsValid(const SrgParams& p);

}  // namespace srgcut

#endif  // SRGCUT_PARAMS_H_
