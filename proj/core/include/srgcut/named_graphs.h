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

#ifndef SRGCUT_NAMED_GRAPHS_H_
#define SRGCUT_NAMED_GRAPHS_H_

#include <random>
#include <string_view>

#include "srgcut/graph.h"

namespace srgcut {

// Kneser graph K(5,2); vertex i is the i-th 2-subset of {0..4} in lex order.
Graph Petersen();
Graph Shrikhande();
// Folded 5-cube: Cayley graph of Z_2^4 with generators e1..e4 and 1111.
Graph ClebschFolded5Cube();
// Robertson's pentagon/pentagram construction.
Graph HoffmanSingleton();
// Requires a prime power q ≡ 1 (mod 4), q <= 64.
Graph Paley(int q);
// Line graph of K_m: vertices are 2-subsets of {0..m-1} in lex order.
Graph Triangular(int m);
Graph TriangularComplement(int m);
// K_n □ K_n, the line graph of K_{n,n}; vertex (r, c) is r*n + c.
Graph Lattice(int n);
Graph CompleteMultipartite(int parts, int size);
Graph Complete(int n);
Graph Path(int n);
Graph Cycle(int n);

// G(n, p) conditioned on being connected (rejection sampling).
Graph RandomConnectedGraph(int n, double p, std::mt19937_64& rng);

// Parses the textual graph specs used by the CLI, e.g. "petersen",
// "paley:13", "sts:13", "design4:16", "oa:3,4", "triangular:6",
// "lattice:3", "multipartite:3,2". Throws std::invalid_argument for unknown
// names, std::domain_error / NoConstructionError from the constructors.
Graph GraphFromSpec(std::string_view spec);

}  // namespace srgcut

#endif  // SRGCUT_NAMED_GRAPHS_H_
