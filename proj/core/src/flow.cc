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

#include "srgcut/flow.h"

#include <algorithm>
#include <stdexcept>

namespace srgcut {

// ---------------------------------------------------------------------------
// Dinic
// ---------------------------------------------------------------------------

Dinic::Dinic(int num_nodes) : n_(num_nodes) {}

int Dinic::AddArc(int from, int to) {
  const int id = static_cast<int>(to_.size());
  from_.push_back(from);
  to_.push_back(to);
  base_.push_back(0);
  from_.push_back(to);
  to_.push_back(from);
  base_.push_back(0);
  return id;
}

void Dinic::Finalize() {
  start_.assign(n_ + 1, 0);
  for (int f : from_) ++start_[f + 1];
  for (int u = 0; u < n_; ++u) start_[u + 1] += start_[u];
  order_.assign(from_.size(), 0);
  std::vector<int> fill(start_.begin(), start_.end() - 1);
  for (int a = 0; a < static_cast<int>(from_.size()); ++a) order_[fill[from_[a]]++] = a;
  cap_.resize(base_.size());
  level_.resize(n_);
  iter_.resize(n_);
  seen_.resize(n_);
  queue_.reserve(n_);
}

bool Dinic::Bfs(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  queue_.clear();
  queue_.push_back(s);
  level_[s] = 0;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const int u = queue_[head];
    for (int i = start_[u]; i < start_[u + 1]; ++i) {
      const int a = order_[i];
      if (cap_[a] > 0 && level_[to_[a]] < 0) {
        level_[to_[a]] = level_[u] + 1;
        queue_.push_back(to_[a]);
      }
    }
  }
  return level_[t] >= 0;
}

int Dinic::Dfs(int u, int t, int pushed) {
  if (u == t) return pushed;
  for (int& i = iter_[u]; i < start_[u + 1]; ++i) {
    const int a = order_[i];
    const int w = to_[a];
    if (cap_[a] <= 0 || level_[w] != level_[u] + 1) continue;
    const int got = Dfs(w, t, std::min(pushed, cap_[a]));
    if (got > 0) {
      cap_[a] -= got;
      cap_[a ^ 1] += got;
      return got;
    }
  }
  return 0;
}

int Dinic::MaxFlow(int s, int t, int limit) {
  std::copy(base_.begin(), base_.end(), cap_.begin());
  int flow = 0;
  while (flow < limit && Bfs(s, t)) {
    std::copy(start_.begin(), start_.end() - 1, iter_.begin());
    while (flow < limit) {
      const int got = Dfs(s, t, limit - flow);
      if (got == 0) break;
      flow += got;
    }
  }
  return flow;
}

const std::vector<char>& Dinic::SourceSide(int s) {
  std::fill(seen_.begin(), seen_.end(), 0);
  queue_.clear();
  queue_.push_back(s);
  seen_[s] = 1;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const int u = queue_[head];
    for (int i = start_[u]; i < start_[u + 1]; ++i) {
      const int a = order_[i];
      if (cap_[a] > 0 && !seen_[to_[a]]) {
        seen_[to_[a]] = 1;
        queue_.push_back(to_[a]);
      }
    }
  }
  return seen_;
}

// ---------------------------------------------------------------------------
// Vertex cuts
// ---------------------------------------------------------------------------

namespace {
int In(int v) { return 2 * v; }
int Out(int v) { return 2 * v + 1; }
}  // namespace

VertexCutNetwork::VertexCutNetwork(const Graph& g)
    : n_(g.num_vertices()), flow_(2 * g.num_vertices() + 2) {
  const int s = 2 * n_, t = 2 * n_ + 1;
  for (int v = 0; v < n_; ++v) internal_arc_.push_back(flow_.AddArc(In(v), Out(v)));
  for (int v = 0; v < n_; ++v) source_arc_.push_back(flow_.AddArc(s, Out(v)));
  for (int v = 0; v < n_; ++v) sink_arc_.push_back(flow_.AddArc(In(v), t));
  for (const auto& [u, w] : g.edges()) {
    edge_arcs_.push_back(flow_.AddArc(Out(u), In(w)));
    edge_arcs_.push_back(flow_.AddArc(Out(w), In(u)));
  }
  for (int a : edge_arcs_) flow_.SetCapacity(a, Dinic::kInfinity);
  flow_.Finalize();
}

std::optional<int> VertexCutNetwork::MinCut(const Bitset& sources, const Bitset& sinks,
                                            const Bitset& removed,
                                            const Bitset& uncuttable, int limit,
                                            Bitset* cut) {
  // Any finite cut uses at most n vertices; a flow above that is unbounded.
  const int cap_limit = std::min(limit, n_ + 1);
  for (int v = 0; v < n_; ++v) {
    int internal = 1;
    if (removed.test(v)) internal = 0;
    else if (sources.test(v) || sinks.test(v) || uncuttable.test(v)) internal = Dinic::kInfinity;
    flow_.SetCapacity(internal_arc_[v], internal);
    flow_.SetCapacity(source_arc_[v], sources.test(v) && !removed.test(v) ? Dinic::kInfinity : 0);
    flow_.SetCapacity(sink_arc_[v], sinks.test(v) && !removed.test(v) ? Dinic::kInfinity : 0);
  }
  const int s = 2 * n_, t = 2 * n_ + 1;
  const int value = flow_.MaxFlow(s, t, cap_limit);
  if (value > n_) return std::nullopt;
  if (value >= limit) return limit;
  if (cut != nullptr) {
    const auto& side = flow_.SourceSide(s);
    *cut = Bitset(n_);
    for (int v = 0; v < n_; ++v) {
      if (side[In(v)] && !side[Out(v)]) cut->set(v);
    }
  }
  return value;
}

std::optional<int> VertexCutNetwork::MinCut(const VertexSet& sources,
                                            const VertexSet& sinks, VertexSet* cut) {
  Bitset bits;
  const Bitset none(n_);
  auto value = MinCut(sources.ToBitset(n_), sinks.ToBitset(n_), none, none,
                      Dinic::kInfinity, cut != nullptr ? &bits : nullptr);
  if (value && cut != nullptr) *cut = VertexSet::FromBitset(bits);
  return value;
}

std::optional<VertexCut> MinVertexCut(const Graph& g, const VertexSet& source,
                                      const VertexSet& sink) {
  if (source.empty() || sink.empty()) {
    throw std::domain_error("min_vertex_cut: empty source or sink");
  }
  const Bitset a = source.ToBitset(g.num_vertices());
  const Bitset b = sink.ToBitset(g.num_vertices());
  if (a.intersects(b)) throw std::domain_error("min_vertex_cut: source and sink overlap");
  VertexCutNetwork net(g);
  VertexCut out;
  auto value = net.MinCut(source, sink, &out.cut);
  if (!value) return std::nullopt;
  out.value = *value;
  return out;
}

// ---------------------------------------------------------------------------
// Edge cuts
// ---------------------------------------------------------------------------

EdgeCutNetwork::EdgeCutNetwork(const Graph& g)
    : n_(g.num_vertices()), flow_(g.num_vertices() + 2) {
  for (const auto& [u, w] : g.edges()) {
    edge_arcs_.push_back(flow_.AddArc(u, w));
    edge_arcs_.push_back(flow_.AddArc(w, u));
  }
  for (int a : edge_arcs_) flow_.SetCapacity(a, 1);
  for (int v = 0; v < n_; ++v) source_arc_.push_back(flow_.AddArc(n_, v));
  for (int v = 0; v < n_; ++v) sink_arc_.push_back(flow_.AddArc(v, n_ + 1));
  flow_.Finalize();
}

int EdgeCutNetwork::MinCut(const Bitset& sources, const Bitset& sinks, int limit,
                           Bitset* source_side) {
  for (int v = 0; v < n_; ++v) {
    flow_.SetCapacity(source_arc_[v], sources.test(v) ? Dinic::kInfinity : 0);
    flow_.SetCapacity(sink_arc_[v], sinks.test(v) ? Dinic::kInfinity : 0);
  }
  const int value = flow_.MaxFlow(n_, n_ + 1, limit);
  if (value < limit && source_side != nullptr) {
    const auto& side = flow_.SourceSide(n_);
    *source_side = Bitset(n_);
    for (int v = 0; v < n_; ++v) {
      if (side[v]) source_side->set(v);
    }
  }
  return value;
}

}  // namespace srgcut
