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

// Closed-form separator bounds and sufficient conditions for
// κ₂ = 2k - λ - 2, evaluated in exact arithmetic.

#ifndef SRGCUT_BOUNDS_H_
#define SRGCUT_BOUNDS_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srgcut/params.h"
#include "srgcut/quadratic.h"

namespace srgcut {

enum class Comparison { kGreater, kGreaterEqual };

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  QuadraticValue lhs;
  QuadraticValue rhs;
  Comparison comparison = Comparison::kGreater;
  bool holds = false;
  std::string citation;
};

// Re-evaluates lhs (comparison) rhs; equals report.holds for every report
// produced by this module.
bool Recheck(const BoundReport& report);

// Parameters with rational entries, for evaluating a parameter formula at
// points where it is not integral (e.g. the 2-(n,4,1) formula at n = 108).
struct RationalParams {
  Rational v, k, lambda, mu;
};

RationalParams ToRational(const SrgParams& p);

// Block-graph parameter formula of a 2-(n,K,1) design at any rational n.
RationalParams SteinerFormalParams(const Rational& n, int64_t block_size);

// 4abμ / ((λ-μ)² + 4(k-μ)). Throws std::domain_error for a < 1, b < 1 or a
// zero denominator.
Rational HaemersLowerBound(const SrgParams& p, int64_t a, int64_t b);

// 4(c-2)[(k-μ)(k + c - 1 - λ(c-1)/(c-2)) - ck] > (λ-μ)²(2k-λ-2), c >= 3.
// When it holds, every separator whose small side has >= c vertices is
// larger than 2k-λ-2.
BoundReport PropCCondition(const SrgParams& p, int c);
BoundReport PropCCondition(const RationalParams& p, int c);

// k - 2λ - 1 > 0; then every clique C with >= 3 vertices has
// |N(C)| >= 2k-λ-2 + (k-2λ-1). rhs carries the excess k-2λ-1.
BoundReport CliqueBound(const SrgParams& p);

struct InproductResult {
  int first = 0;
  int second = 0;
  int64_t inner_product = 0;
  Rational guaranteed;  // w(aw/n - 1)/(a-1), w the average weight
};

// Among a binary vectors of length n there are two with inner product at
// least w(aw/n - 1)/(a - 1). Returns a maximising pair (lexicographically
// first). Throws std::domain_error for fewer than 2 vectors, empty or
// ragged input.
InproductResult InproductPair(std::span<const std::vector<bool>> vectors);

// 4(k-2λ)(k-μ) > (λ-μ)²(2k-λ-3). Only k, λ, μ are read.
BoundReport CkkProp24Condition(const SrgParams& p);

struct NeighborhoodBounds {
  int64_t edge = 0;              // 2k - λ - 2
  int64_t triangle = 0;          // 3k - 3λ - 3
  int64_t path2 = 0;             // 3k - 2λ - μ - 3
  int64_t nonadjacent_pair = 0;  // 2k - μ
};

NeighborhoodBounds NeighborhoodLowerBounds(const SrgParams& p);

// p(n-p)·2/(K(K-1)): the separator size forced when the small side spans p
// points of a 2-(n,K,1) design. K must be 3 or 4.
Rational SteinerSpanBound(int64_t n, int64_t block_size, int64_t p);

// (k - θ₂)·a(v - a)/v, exact; requires 1 <= a <= v-1 and valid p.
QuadraticValue SpectralEdgeBound(const SrgParams& p, int64_t a);

enum class StatusKind { kProvenOK, kCounterexampleFamily, kKnownOKByCitation, kUnknown };

std::string ToString(StatusKind kind);

struct ConjectureStatus {
  StatusKind kind = StatusKind::kUnknown;
  std::vector<std::string> reasons;
  // Steiner theorems hold for block graphs of designs, not for every graph
  // with those parameters; set when they are the only proven reasons.
  bool requires_design_structure = false;
  int64_t triangular_m = 0;  // for kCounterexampleFamily
};

// Throws std::domain_error when p fails BasicFeasible.
ConjectureStatus ClassifyConjectureStatus(const SrgParams& p);

// Every bound above that applies to p, for tabulation.
std::vector<BoundReport> AllBounds(const SrgParams& p);

}  // namespace srgcut

#endif  // SRGCUT_BOUNDS_H_
