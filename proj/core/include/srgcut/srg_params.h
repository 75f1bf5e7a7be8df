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

// Exact spectral data and feasibility filters for SRG parameter quadruples.
//
// A connected (v,k,λ,μ)-SRG has eigenvalues k > θ₂ > θᵥ with
//   θ₂, θᵥ = (λ-μ ± √Δ)/2,   Δ = (λ-μ)² + 4(k-μ),
// and multiplicities
//   f, g = ((v-1) ∓ (2k + (v-1)(λ-μ))/√Δ) / 2.
// The feasibility verdict implements necessary conditions only: the counting
// identity, integrality of the spectrum (conference graphs excepted) and the
// μ = 1 bound k >= (λ+1)(λ+2). Krein conditions and the absolute bound are
// not checked.

#ifndef SRGCUT_SRG_PARAMS_H_
#define SRGCUT_SRG_PARAMS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "srgcut/params.h"
#include "srgcut/quadratic.h"

namespace srgcut {

struct SpectralData {
  QuadraticValue theta2;
  QuadraticValue theta_v;
  QuadraticValue f;  // multiplicity of θ₂
  QuadraticValue g;  // multiplicity of θᵥ
  bool is_conference = false;
};

// Δ = (λ-μ)² + 4(k-μ).
int64_t Discriminant(const SrgParams& p);

// Requires IsValid(p).
SpectralData Eigenvalues(const SrgParams& p);

// f and g are both non-negative integers.
bool MultiplicitiesIntegral(const SrgParams& p);

struct FeasibilityVerdict {
  bool feasible = false;
  std::vector<std::string> reasons;  // every violated condition
};

// Accepts any quadruple; infeasible ones come back with all reasons.
FeasibilityVerdict BasicFeasible(const SrgParams& p);

struct DerivedQuantities {
  int64_t edge_nbhd = 0;        // 2k - λ - 2
  int64_t edge_cut_target = 0;  // 2k - 2
  bool k4_applicable = false;   // 4·max(λ,μ) <= k
};

DerivedQuantities Derive(const SrgParams& p);

enum class FamilyKind {
  kSteinerBlockGraph,     // a = n, b = K
  kLatinSquare,           // a = t, b = n
  kCompleteMultipartite,  // a = number of classes, b = class size
  kConference,            // a = t
  kOther,
};

struct FamilyTag {
  FamilyKind kind = FamilyKind::kOther;
  int64_t a = 0;
  int64_t b = 0;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

std::string ToString(const FamilyTag& tag);

// Every family whose parameter formula inverts exactly to p; {Other} when
// none do.
std::vector<FamilyTag> ClassifyFamily(const SrgParams& p);

// Forward parameter formulas. Steiner: 2-(n,K,1) block graph; Latin square:
// OA(t,n) column graph; conference: (4t+1, 2t, t-1, t); complete
// multipartite with `parts` classes of size `size`.
SrgParams SteinerBlockParams(int64_t n, int64_t block_size);
SrgParams LatinSquareParams(int64_t t, int64_t n);
SrgParams ConferenceParams(int64_t t);
SrgParams CompleteMultipartiteParams(int64_t parts, int64_t size);
// Triangular graph T(m) = Steiner block graph with K = 2.
SrgParams TriangularParams(int64_t m);

}  // namespace srgcut

#endif  // SRGCUT_SRG_PARAMS_H_
