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

// Steiner 2-designs, orthogonal arrays and the strongly regular graphs they
// define.

#ifndef SRGCUT_DESIGNS_H_
#define SRGCUT_DESIGNS_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "srgcut/graph.h"

namespace srgcut {

// Raised when a requested object may exist but no construction ships for it.
// Distinct from std::domain_error, which signals a violated existence
// condition or precondition.
class NoConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Point-block incidence structure of a 2-(n,K,1) design on points 0..n-1.
struct Design {
  int n_points = 0;
  int block_size = 0;
  std::vector<std::vector<int>> blocks;  // each sorted
};

// Every point pair in exactly one block, blocks of the right size, and the
// right block count. Returns an empty string when valid, else the first
// violation.
std::string CheckDesign(const Design& d);

// STS(n): Bose construction for n ≡ 3 (mod 6), Skolem for n ≡ 1 (mod 6).
// Point (x, i) of Z_m × Z_3 is numbered 3x + i; Skolem's extra point is n-1.
Design SteinerTripleSystem(int n);

// 2-(n,4,1) designs for n in SupportedSteiner4Orders().
Design Steiner2n4Design(int n);
std::vector<int> SupportedSteiner4Orders();

// Vertices are blocks, adjacent when they intersect. Labels hold the blocks.
Graph BlockGraph(const Design& d);

// Number of distinct points covered by the given blocks.
int BlockSupport(const Design& d, const VertexSet& blocks);

// t × n² array over 0..n-1; columns[c] holds the t entries of column c.
struct OrthogonalArray {
  int t = 0;
  int n = 0;
  std::vector<std::vector<int>> columns;
};

std::string CheckOrthogonalArray(const OrthogonalArray& oa);

// Column (x, y), numbered x*n + y, has rows [x, y, y + c_1 x, y + c_2 x, ...]
// over GF(n), c_i running through the non-zero field elements in order. For
// t <= 3 and n not a prime power the cyclic Latin square y + x (mod n) is
// used instead.
OrthogonalArray MakeOrthogonalArray(int t, int n);

// Columns adjacent when they agree in some row.
Graph OrthogonalArrayGraph(const OrthogonalArray& oa);

}  // namespace srgcut

#endif  // SRGCUT_DESIGNS_H_
