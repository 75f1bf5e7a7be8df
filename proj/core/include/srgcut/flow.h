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

// Unit-capacity max-flow engines used by the cut solvers.
//
// VertexCutNetwork answers "fewest vertices whose deletion separates the
// source set from the sink set" via the usual vertex splitting: every vertex
// v becomes in(v) -> out(v) with capacity 1 (or unbounded when v may not be
// cut), every edge becomes two unbounded arcs. EdgeCutNetwork is the plain
// edge-capacity analogue. Both are built once per graph and reused across
// queries; a network is not thread-safe, give each worker its own copy.

#ifndef SRGCUT_FLOW_H_
#define SRGCUT_FLOW_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "srgcut/graph.h"

namespace srgcut {

// Dinic's algorithm over a fixed arc structure with per-query capacities.
class Dinic {
 public:
  static constexpr int kInfinity = 1 << 29;

  explicit Dinic(int num_nodes);

  // Returns the index of the forward arc; its reverse is index ^ 1.
  int AddArc(int from, int to);
  void Finalize();  // builds CSR adjacency; call once after all AddArc
  void SetCapacity(int arc, int capacity) { base_[arc] = capacity; }
  int capacity(int arc) const { return base_[arc]; }

  // Max flow from s to t, stopping early once the flow reaches `limit`.
  int MaxFlow(int s, int t, int limit);

  // Nodes reachable from s in the residual graph of the last MaxFlow call.
  const std::vector<char>& SourceSide(int s);

 private:
  bool Bfs(int s, int t);
  int Dfs(int u, int t, int pushed);

  int n_;
  std::vector<int> from_, to_, base_, cap_;
  std::vector<int> start_, order_;  // CSR: arcs out of u are order_[start_[u]..start_[u+1])
  std::vector<int> level_, iter_;
  std::vector<char> seen_;
  std::vector<int> queue_;
};

class VertexCutNetwork {
 public:
  explicit VertexCutNetwork(const Graph& g);

  // Minimum vertex cut between `sources` and `sinks` in g with `removed`
  // deleted. Vertices in sources, sinks and `uncuttable` cannot be cut.
  // Returns nullopt when no finite cut exists (e.g. a source adjacent to a
  // sink). When the value reaches `limit` the search stops and `limit` is
  // returned without a witness. Otherwise *cut (if non-null) receives the
  // source-side minimum cut.
  std::optional<int> MinCut(const Bitset& sources, const Bitset& sinks,
                            const Bitset& removed, const Bitset& uncuttable,
                            int limit, Bitset* cut);

  // Convenience form with nothing removed and nothing uncuttable.
  std::optional<int> MinCut(const VertexSet& sources, const VertexSet& sinks,
                            VertexSet* cut);

 private:
  int n_;
  Dinic flow_;
  std::vector<int> internal_arc_;  // in(v) -> out(v)
  std::vector<int> source_arc_;    // S -> out(v)
  std::vector<int> sink_arc_;      // in(v) -> T
  std::vector<int> edge_arcs_;     // out(u) -> in(w), both directions
};

class EdgeCutNetwork {
 public:
  explicit EdgeCutNetwork(const Graph& g);

  // Minimum number of edges separating sources from sinks; *source_side (if
  // non-null) receives the vertices on the source side of a minimum cut.
  int MinCut(const Bitset& sources, const Bitset& sinks, int limit,
             Bitset* source_side);

 private:
  int n_;
  Dinic flow_;
  std::vector<int> edge_arcs_;
  std::vector<int> source_arc_;
  std::vector<int> sink_arc_;
};

// min_vertex_cut(g, source, sink): the minimum number of vertices outside
// source ∪ sink whose removal separates them, with a witness. nullopt means
// no finite cut (an edge joins the two sides). Throws std::domain_error when
// the sets overlap or either is empty.
struct VertexCut {
  int value = 0;
  VertexSet cut;
};
std::optional<VertexCut> MinVertexCut(const Graph& g, const VertexSet& source,
                                      const VertexSet& sink);

}  // namespace srgcut

#endif  // SRGCUT_FLOW_H_
