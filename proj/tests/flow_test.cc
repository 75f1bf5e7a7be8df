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

#include <bit>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "oracles.h"
#include "srgcut/named_graphs.h"

namespace srgcut {
namespace {

// Smallest vertex set avoiding source and sink that separates them, by
// trying every subset. nullopt when they are adjacent.
std::optional<int> VertexCutBySubsets(const Graph& g, int s, int t) {
  if (g.adjacent(s, t)) return std::nullopt;
  const int n = g.num_vertices();
  const auto nbr = oracle::NeighborMasks(oracle::AdjacencyMatrix(g));
  int best = n;
  for (oracle::Mask cut = 0; cut < (oracle::Mask{1} << n); ++cut) {
    if ((cut >> s) & 1 || (cut >> t) & 1) continue;
    const int size = std::popcount(cut);
    if (size >= best) continue;
    oracle::Mask reach = oracle::Mask{1} << s, frontier = reach;
    while (frontier != 0) {
      oracle::Mask next = 0;
      for (oracle::Mask f = frontier; f != 0; f &= f - 1) next |= nbr[std::countr_zero(f)];
      next &= ~cut & ~reach;
      reach |= next;
      frontier = next;
    }
    if (!((reach >> t) & 1)) best = size;
  }
  return best;
}

TEST(MinVertexCutTest, PetersenNonAdjacentPair) {
  const Graph p = Petersen();
  int w = 1;
  while (p.adjacent(0, w)) ++w;
  const auto cut = MinVertexCut(p, {0}, {w});
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(cut->value, 3);
  EXPECT_EQ(cut->cut.size(), 3);
}

TEST(MinVertexCutTest, K33SameSide) {
  const auto cut = MinVertexCut(CompleteMultipartite(2, 3), {0}, {1});
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(cut->value, 3);
  EXPECT_EQ(cut->cut, (VertexSet{3, 4, 5}));
}

TEST(MinVertexCutTest, Path) {
  const auto cut = MinVertexCut(Path(3), {0}, {2});
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(cut->value, 1);
  EXPECT_EQ(cut->cut, (VertexSet{1}));
}

TEST(MinVertexCutTest, AdjacentEndpointsHaveNoFiniteCut) {
  EXPECT_FALSE(MinVertexCut(Path(3), {0}, {1}).has_value());
}

TEST(MinVertexCutTest, OverlapRejected) {
  EXPECT_THROW(MinVertexCut(Path(4), {0, 1}, {1, 3}), std::domain_error);
  EXPECT_THROW(MinVertexCut(Path(4), {}, {3}), std::domain_error);
}

TEST(MinVertexCutTest, MatchesSubsetEnumerationOnRandomGraphs) {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 10;
    const Graph g = RandomConnectedGraph(n, 0.35, rng);
    for (int s = 0; s < n; ++s) {
      for (int t = s + 1; t < n; ++t) {
        const auto expected = VertexCutBySubsets(g, s, t);
        const auto got = MinVertexCut(g, {s}, {t});
        ASSERT_EQ(got.has_value(), expected.has_value());
        if (!got) continue;
        ASSERT_EQ(got->value, *expected);
        // The witness really separates s from t.
        Bitset removed = got->cut.ToBitset(n);
        bool together = false;
        for (const auto& comp : Components(g, removed)) {
          bool hs = false, ht = false;
          for (int v : comp) {
            hs = hs || v == s;
            ht = ht || v == t;
          }
          together = together || (hs && ht);
        }
        ASSERT_FALSE(together);
      }
    }
  }
}

TEST(EdgeCutNetworkTest, CycleNeedsTwoEdges) {
  const Graph c = Cycle(8);
  EdgeCutNetwork net(c);
  Bitset s(8), t(8), side(8);
  s.set(0);
  t.set(4);
  EXPECT_EQ(net.MinCut(s, t, 100, &side), 2);
  EXPECT_TRUE(side.test(0));
  EXPECT_FALSE(side.test(4));
}

}  // namespace
}  // namespace srgcut
