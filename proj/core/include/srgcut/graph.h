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

// Undirected simple graphs stored as word-chunked adjacency bitmasks, plus
// the counting primitives (common neighbours, external neighbourhoods, edge
// counts between sets) that the SRG verifier and the cut solvers build on.

#ifndef SRGCUT_GRAPH_H_
#define SRGCUT_GRAPH_H_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srgcut/params.h"

namespace srgcut {

// Fixed-size dynamic bitset. Rows of the adjacency matrix are Bitsets, so
// neighbourhood intersections are word-parallel for any vertex count.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  // |*this & other| without materialising the intersection.
  int intersection_count(const Bitset& other) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += std::popcount(words_[i] & other.words_[i]);
    }
    return c;
  }
  bool intersects(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  // Calls fn(i) for every set bit in increasing order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }
  // Lowest set bit, or -1.
  int first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
      }
    }
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int size_ = 0;
  std::vector<uint64_t> words_;
};

// A set of vertex indices, kept sorted and duplicate-free.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> members);
  explicit VertexSet(std::vector<int> members);
  static VertexSet FromBitset(const Bitset& bits);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  Bitset ToBitset(int n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<int> members_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  static Graph FromEdges(int num_vertices,
                         std::span<const std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  int64_t num_edges() const;

  // Adds the undirected edge {u, v}. Self-loops are rejected.
  void AddEdge(int u, int v);

  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const Bitset& row(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].count(); }
  std::vector<int> neighbors(int v) const { return rows_[v].to_vector(); }
  std::vector<std::pair<int, int>> edges() const;

  // Labels are metadata: they never take part in equality.
  bool has_labels() const { return !labels_.empty(); }
  void set_label(int v, std::string label);
  const std::string& label(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void CheckVertex(int v) const;

  int n_ = 0;
  std::vector<Bitset> rows_;
  std::vector<std::string> labels_;
};

// Raised for malformed graph6 input; offset() is the byte that was rejected.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Graph LoadGraph6(std::string_view text);
std::string WriteGraph6(const Graph& g);

// |N(u) ∩ N(v)|. Throws std::domain_error when u == v.
int CommonNeighbors(const Graph& g, int u, int v);

// N(X) = { y not in X : y adjacent to some x in X }.
VertexSet Neighborhood(const Graph& g, const VertexSet& x);

// Number of edges with one endpoint in x and the other in y (x, y disjoint).
int64_t EdgeCountBetween(const Graph& g, const VertexSet& x, const VertexSet& y);

VertexSet Complement(const Graph& g, const VertexSet& x);
bool IsConnected(const Graph& g);

// Connected components of g with the vertices in `removed` deleted. Each
// component is sorted; components are ordered by their smallest vertex.
std::vector<std::vector<int>> Components(const Graph& g, const Bitset& removed);

// Components of the subgraph induced on `within`.
std::vector<std::vector<int>> InducedComponents(const Graph& g,
                                                const Bitset& within);

// Outcome of an exact strongly-regular check. Exactly one of `params` and
// `failure` is populated.
struct SrgVerification {
  std::optional<SrgParams> params;
  std::string failure;
  // First offending vertex or pair, -1 when not applicable.
  int first = -1;
  int second = -1;

  bool ok() const { return params.has_value(); }
};

// Checks regularity and the λ/μ common-neighbour counts over every pair.
// Throws std::domain_error on disconnected input or fewer than 2 vertices.
SrgVerification VerifySrg(const Graph& g);

}  // namespace srgcut

#endif  // SRGCUT_GRAPH_H_
