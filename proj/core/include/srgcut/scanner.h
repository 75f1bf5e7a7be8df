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

// Enumeration of feasible SRG parameter sets and surveys over them.
//
// Parameter sets with integral spectrum are generated from their
// eigenvalues: writing θ₂ = r and θᵥ = -s gives k = μ + rs, λ = μ + r - s
// and v = 1 + k + k(r+1)(s-1)/μ, so μ ranges over the divisors of
// rs(r+1)(s-1). Conference parameters with irrational spectrum are added
// separately. Output order is lexicographic in (v, k, λ, μ).

#ifndef SRGCUT_SCANNER_H_
#define SRGCUT_SCANNER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srgcut/bounds.h"
#include "srgcut/params.h"
#include "srgcut/srg_params.h"

namespace srgcut {

inline constexpr int64_t kMaxScanVertices = 1'000'000;

struct Predicate {
  std::optional<int64_t> theta_v;  // smallest eigenvalue, exactly
  std::optional<int64_t> lambda;
  std::optional<int64_t> mu;
  std::optional<int64_t> k_min;
  std::optional<int64_t> k_max;
  std::optional<std::pair<int64_t, int64_t>> k_mod;  // k ≡ first (mod second)
  bool k4 = false;                                   // 4·max(λ,μ) <= k
  bool primitive = false;                            // 0 < μ < k
  // When false, rows only need an integral (or conference) spectrum; the
  // multiplicity and μ = 1 filters are reported but not applied.
  bool require_feasible = true;
  std::vector<FamilyKind> exclude_families;
};

// Comma-separated key[=value] list, e.g.
//   "theta_v=-3,mu=1,k_max=28,k_mod=1:3,spectral_only,exclude=steiner+latin"
// Keys: theta_v, lambda, mu, k_min, k_max, k_mod, k4, primitive,
// spectral_only, exclude (steiner, latin, multipartite, conference).
// Throws std::invalid_argument on malformed input.
Predicate ParsePredicate(std::string_view text);

struct ScanRow {
  SrgParams params;
  SpectralData spectral;
  std::vector<FamilyTag> families;
  FeasibilityVerdict feasibility;
  std::optional<ConjectureStatus> status;  // feasible rows only
  std::vector<BoundReport> filters;
};

ScanRow MakeScanRow(const SrgParams& p);

// Throws std::domain_error when v_max exceeds kMaxScanVertices.
std::vector<ScanRow> EnumerateFeasible(int64_t v_max, const Predicate& predicate,
                                       int threads = 0);

// Feasible sets with v < 200 and 4·max(λ,μ) <= k that are neither Steiner
// block graph nor Latin square graph parameters.
std::vector<SrgParams> ReproduceSection2List();

struct Survey {
  int64_t m = 0;
  int64_t v_max = 0;
  // Rows with θᵥ = -m failing 4(k-2λ)(k-μ) > (λ-μ)²(2k-λ-3), split by
  // whether they coincide with 2-(n,m,1) block graph parameters.
  std::vector<ScanRow> steiner_lookalike;
  std::vector<ScanRow> other;
};

// m must be 3 or 4; throws std::domain_error otherwise.
Survey ScanMinEigenvalue(int64_t m, int64_t v_max, int threads = 0);

// Table output with columns v,k,lambda,mu,theta2,thetav,f,g,families,status
// followed by one column per filter.
std::string ToCsv(const std::vector<ScanRow>& rows);

}  // namespace srgcut

#endif  // SRGCUT_SCANNER_H_
