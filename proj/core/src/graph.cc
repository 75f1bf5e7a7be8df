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

#include "srgcut/graph.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace srgcut {

// ---------------------------------------------------------------------------
// VertexSet
// ---------------------------------------------------------------------------

VertexSet::VertexSet(std::initializer_list<int> members)
    : VertexSet(std::vector<int>(members)) {}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::FromBitset(const Bitset& bits) {
  VertexSet s;
  s.members_ = bits.to_vector();
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Bitset VertexSet::ToBitset(int n) const {
  Bitset b(n);
  for (int v : members_) {
    if (v < 0 || v >= n) {
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " outside 0.." + std::to_string(n - 1));
    }
    b.set(v);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

Graph::Graph(int num_vertices) : n_(num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  rows_.assign(n_, Bitset(n_));
}

Graph Graph::FromEdges(int num_vertices,
                       std::span<const std::pair<int, int>> edges) {
  Graph g(num_vertices);
  for (const auto& [u, v] : edges) g.AddEdge(u, v);
  return g;
}

void Graph::CheckVertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(n_ - 1));
  }
}

void Graph::AddEdge(int u, int v) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
  rows_[u].set(v);
  rows_[v].set(u);
}

int64_t Graph::num_edges() const {
  int64_t twice = 0;
  for (const Bitset& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    rows_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

void Graph::set_label(int v, std::string label) {
  CheckVertex(v);
  if (labels_.empty()) labels_.resize(n_);
  labels_[v] = std::move(label);
}

const std::string& Graph::label(int v) const {
  static const std::string kEmpty;
  CheckVertex(v);
  return labels_.empty() ? kEmpty : labels_[v];
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool IsGraph6Byte(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph LoadGraph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  // A single trailing newline (and CR) is part of the line, not the graph.
  std::size_t end = text.size();
  if (end > pos && text[end - 1] == '\n') --end;
  if (end > pos && text[end - 1] == '\r') --end;

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= end) throw Graph6Error("graph6: truncated input", i);
    const auto c = static_cast<unsigned char>(text[i]);
    if (!IsGraph6Byte(c)) throw Graph6Error("graph6: non-printable byte", i);
    return c - 63;
  };

  int64_t n = 0;
  if (pos >= end) throw Graph6Error("graph6: missing length header", pos);
  const int first = byte_at(pos);
  if (first < 63) {
    n = first;
    pos += 1;
  } else {
    // 126 prefix: either 3 more bytes (18 bits) or 126 126 + 6 bytes.
    if (pos + 1 >= end) throw Graph6Error("graph6: malformed length header", pos + 1);
    if (byte_at(pos + 1) == 63) {
      for (int i = 0; i < 6; ++i) n = (n << 6) | byte_at(pos + 2 + i);
      if (n <= 258047) throw Graph6Error("graph6: non-canonical length header", pos);
      pos += 8;
    } else {
      for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos + 1 + i);
      if (n < 63) throw Graph6Error("graph6: non-canonical length header", pos);
      pos += 4;
    }
  }
  if (n > (int64_t{1} << 20)) throw Graph6Error("graph6: graph too large", 0);

  const int64_t bits = n * (n - 1) / 2;
  const int64_t bytes = (bits + 5) / 6;
  if (static_cast<int64_t>(end - pos) < bytes) {
    throw Graph6Error("graph6: truncated adjacency data", end);
  }
  if (static_cast<int64_t>(end - pos) > bytes) {
    throw Graph6Error("graph6: trailing garbage", pos + bytes);
  }

  Graph g(static_cast<int>(n));
  int64_t bit = 0;
  int i = 0, j = 1;
  for (int64_t b = 0; b < bytes; ++b) {
    const int chunk = byte_at(pos + b);
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool set = (chunk >> shift) & 1;
      if (bit >= bits) {
        if (set) throw Graph6Error("graph6: nonzero padding bits", pos + b);
        continue;
      }
      if (set) g.AddEdge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

std::string WriteGraph6(const Graph& g) {
  const int64_t n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int chunk = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - used))));
  return out;
}

// ---------------------------------------------------------------------------
// Counting primitives
// ---------------------------------------------------------------------------

int CommonNeighbors(const Graph& g, int u, int v) {
  if (u == v) throw std::domain_error("common_neighbors: u == v");
  return g.row(u).intersection_count(g.row(v));
}

VertexSet Neighborhood(const Graph& g, const VertexSet& x) {
  if (x.empty()) throw std::domain_error("neighborhood: empty vertex set");
  const Bitset inside = x.ToBitset(g.num_vertices());
  Bitset reach(g.num_vertices());
  for (int v : x) reach |= g.row(v);
  reach.subtract(inside);
  return VertexSet::FromBitset(reach);
}

int64_t EdgeCountBetween(const Graph& g, const VertexSet& x, const VertexSet& y) {
  const Bitset ys = y.ToBitset(g.num_vertices());
  const Bitset xs = x.ToBitset(g.num_vertices());
  if (xs.intersects(ys)) throw std::domain_error("edge_count_between: sets overlap");
  int64_t count = 0;
  for (int v : x) count += g.row(v).intersection_count(ys);
  return count;
}

VertexSet Complement(const Graph& g, const VertexSet& x) {
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!x.contains(v)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

std::vector<std::vector<int>> InducedComponents(const Graph& g,
                                                const Bitset& within) {
  std::vector<std::vector<int>> comps;
  Bitset unseen = within;
  std::vector<int> stack;
  for (int start = unseen.first(); start >= 0; start = unseen.first()) {
    std::vector<int> comp;
    unseen.reset(start);
    stack.push_back(start);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      Bitset next = g.row(u);
      next &= unseen;
      next.for_each([&](int w) {
        unseen.reset(w);
        stack.push_back(w);
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<std::vector<int>> Components(const Graph& g, const Bitset& removed) {
  Bitset within(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!removed.test(v)) within.set(v);
  }
  return InducedComponents(g, within);
}

bool IsConnected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  return Components(g, Bitset(g.num_vertices())).size() == 1;
}

// ---------------------------------------------------------------------------
// SRG verification
// ---------------------------------------------------------------------------

SrgVerification VerifySrg(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2) throw std::domain_error("verify_srg: need at least 2 vertices");
  if (!IsConnected(g)) throw std::domain_error("verify_srg: graph is disconnected");

  SrgVerification out;
  const int k = g.degree(0);
  for (int u = 1; u < n; ++u) {
    if (g.degree(u) != k) {
      out.failure = "not regular: vertex " + std::to_string(u) + " has degree " +
                    std::to_string(g.degree(u)) + ", vertex 0 has degree " +
                    std::to_string(k);
      out.first = u;
      return out;
    }
  }
  if (k == n - 1) {
    out.failure = "complete graph: mu undefined";
    return out;
  }

  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int c = CommonNeighbors(g, u, v);
      int& expected = g.adjacent(u, v) ? lambda : mu;
      if (expected < 0) expected = c;
      if (c != expected) {
        std::ostringstream msg;
        msg << (g.adjacent(u, v) ? "adjacent" : "non-adjacent") << " pair (" << u
            << "," << v << ") has " << c << " common neighbours, expected "
            << expected;
        out.failure = msg.str();
        out.first = u;
        out.second = v;
        return out;
      }
    }
  }
  // A connected regular non-complete graph always has a non-adjacent pair;
  // lambda stays -1 only for edgeless graphs, which are disconnected.
  out.params = SrgParams{n, k, std::max(lambda, 0), mu};
  return out;
}

}  // namespace srgcut
