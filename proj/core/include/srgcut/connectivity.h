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

// Restricted vertex connectivity κ₂ and restricted edge cuts.
//
// κ₂(G) is the fewest vertices whose removal leaves a disconnected graph in
// which every component has at least two vertices. Solutions are certified
// by a partition V = A ∪ S ∪ B with no A-B edges and all components of A and
// of B of size >= 2; A is a smallest component of G - S, B the rest.
//
// The exact solver combines
//   * a lower bound: the minimum, over vertex-disjoint non-adjacent edge
//     pairs (e, f), of the vertex cut separating e from f;
//   * upper bounds from edge neighbourhoods N({u,v}) and from flow cuts
//     repaired by absorbing stranded singletons into S;
//   * branch-and-bound over vertex states {free, S, A, B, not-S} that
//     branches on the first singleton component of the current cut.
// The returned certificate is the one with lexicographically smallest
// sorted S among all minimum ones. Kappa2BruteForce is the independent
// exhaustive oracle used to test the solver.

#ifndef SRGCUT_CONNECTIVITY_H_
#define SRGCUT_CONNECTIVITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srgcut/graph.h"
#include "srgcut/quadratic.h"

namespace srgcut {

struct SeparatorCertificate {
  VertexSet a;
  VertexSet s;
  VertexSet b;

  int size_a() const { return a.size(); }
  int size_s() const { return s.size(); }
  int size_b() const { return b.size(); }

  friend bool operator==(const SeparatorCertificate&,
                         const SeparatorCertificate&) = default;
};

// Builds the canonical certificate for a separator S: A is the smallest
// component of G - S (ties broken by smallest vertex), B everything else.
// Returns nullopt unless G - S has >= 2 components, all of size >= 2.
std::optional<SeparatorCertificate> CertificateFromSeparator(const Graph& g,
                                                             const VertexSet& s);

enum class CutStatus {
  kExact,                  // value is κ₂
  kNoRestrictedSeparator,  // no valid partition exists
  kBounded,                // node budget exhausted: κ₂ in [lower, upper]
};

std::string ToString(CutStatus status);

struct LowerBoundEntry {
  std::pair<int, int> e;
  std::pair<int, int> f;
  int flow = 0;  // may be a truncated value >= the running upper bound
};

struct CutResult {
  CutStatus status = CutStatus::kNoRestrictedSeparator;
  std::optional<int> value;  // present iff status == kExact
  // Exact: a minimum certificate. Bounded: the best certificate found.
  std::optional<SeparatorCertificate> certificate;
  int lower_bound = 0;
  std::optional<int> upper_bound;
  std::vector<LowerBoundEntry> lower_bound_trace;
  // Set when S = N({u, v}) for an edge uv.
  std::optional<std::pair<int, int>> matches_edge_neighborhood;
  int64_t nodes = 0;
};

struct SolverOptions {
  int64_t node_limit = 10'000'000;
  int threads = 0;  // 0: hardware concurrency
  bool lexicographic_certificate = true;
  bool keep_trace = false;
};

// Throws std::domain_error for disconnected graphs.
CutResult Kappa2Exact(const Graph& g, const SolverOptions& options = {});

// Exhaustive oracle, S enumerated by size then lexicographically. Throws
// std::domain_error beyond kBruteForceMaxVertices or on disconnected input.
inline constexpr int kBruteForceMaxVertices = 20;
CutResult Kappa2BruteForce(const Graph& g);

struct CertificateVerdict {
  bool valid = false;
  std::vector<std::string> violations;
  // Informational: vertices of S outside N(A), in particular those whose
  // whole neighbourhood lies in S.
  std::vector<std::string> notes;
};

CertificateVerdict ValidateCertificate(const Graph& g, const SeparatorCertificate& c);

struct SeparatorDiagnostics {
  Rational alpha;        // e(A,S)/a
  Rational beta;         // e(B,S)/b
  Rational haemers_rhs;  // 4abμ / ((λ-μ)² + 4(k-μ))
};

// Requires a valid certificate; throws std::domain_error otherwise.
SeparatorDiagnostics DiagnoseSeparator(const Graph& g, const SeparatorCertificate& c,
                                       const SrgParams& params);

struct EdgeCutResult {
  int value = 0;
  VertexSet side;  // 2 <= |side| <= v/2
};

// min e(A, A^c) over 2 <= |A| <= v/2 via edge max-flow between 2-subsets.
// Throws std::domain_error for v < 4 or disconnected input.
EdgeCutResult RestrictedEdgeCut(const Graph& g, int threads = 0);

// Same quantity by enumerating every subset (v <= 24).
EdgeCutResult RestrictedEdgeCutExhaustive(const Graph& g);

struct EdgeCutWitness {
  VertexSet side;
  int64_t value = 0;
};

// Every A with 2 <= |A| <= v/2 and e(A, A^c) <= max_value (v <= 24).
std::vector<EdgeCutWitness> EnumerateEdgeCuts(const Graph& g, int64_t max_value);

}  // namespace srgcut

#endif  // SRGCUT_CONNECTIVITY_H_
