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

#include "srgcut/named_graphs.h"

#include <charconv>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "srgcut/designs.h"
#include "srgcut/finite_field.h"

namespace srgcut {
namespace {

std::vector<std::pair<int, int>> Pairs(int m) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) out.emplace_back(a, b);
  }
  return out;
}

void LabelPairs(Graph& g, const std::vector<std::pair<int, int>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    g.set_label(static_cast<int>(i), "{" + std::to_string(pairs[i].first) + "," +
                                         std::to_string(pairs[i].second) + "}");
  }
}

Graph PairGraph(int m, bool disjoint) {
  const auto pairs = Pairs(m);
  const int v = static_cast<int>(pairs.size());
  Graph g(v);
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      const bool meet = a == c || a == d || b == c || b == d;
      if (meet != disjoint) g.AddEdge(i, j);
    }
  }
  LabelPairs(g, pairs);
  return g;
}

std::vector<int> ParseInts(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw std::invalid_argument("bad integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Graph Petersen() { return PairGraph(5, /*disjoint=*/true); }

Graph Triangular(int m) {
  if (m < 2) throw std::domain_error("triangular(m) needs m >= 2");
  return PairGraph(m, /*disjoint=*/false);
}

Graph TriangularComplement(int m) {
  if (m < 2) throw std::domain_error("triangular_complement(m) needs m >= 2");
  return PairGraph(m, /*disjoint=*/true);
}

Graph Shrikhande() {
  Graph g(16);
  const int gens[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (const auto& s : gens) {
        const int u = 4 * x + y;
        const int w = 4 * ((x + s[0]) % 4) + (y + s[1]) % 4;
        if (u < w) g.AddEdge(u, w);
      }
    }
  }
  return g;
}

Graph ClebschFolded5Cube() {
  Graph g(16);
  const int gens[] = {1, 2, 4, 8, 15};
  for (int u = 0; u < 16; ++u) {
    for (int s : gens) {
      if (u < (u ^ s)) g.AddEdge(u, u ^ s);
    }
  }
  return g;
}

Graph HoffmanSingleton() {
  // Pentagon P_h vertex j is 5h + j; pentagram Q_i vertex j is 25 + 5i + j.
  Graph g(50);
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      g.AddEdge(5 * h + j, 5 * h + (j + 1) % 5);
      g.AddEdge(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5);
    }
  }
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      for (int i = 0; i < 5; ++i) g.AddEdge(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
    }
  }
  return g;
}

Graph Paley(int q) {
  if (!PrimePowerDecomposition(q) || q % 4 != 1) {
    throw std::domain_error("paley(q) needs a prime power q ≡ 1 (mod 4)");
  }
  const FiniteField f(q);
  Graph g(q);
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      if (f.is_square(f.sub(a, b))) g.AddEdge(a, b);
    }
  }
  return g;
}

Graph Lattice(int n) {
  if (n < 2) throw std::domain_error("lattice(n) needs n >= 2");
  Graph g(n * n);
  for (int u = 0; u < n * n; ++u) {
    for (int w = u + 1; w < n * n; ++w) {
      if (u / n == w / n || u % n == w % n) g.AddEdge(u, w);
    }
  }
  return g;
}

Graph CompleteMultipartite(int parts, int size) {
  if (parts < 2 || size < 1) throw std::domain_error("complete_multipartite needs parts >= 2, size >= 1");
  Graph g(parts * size);
  for (int u = 0; u < parts * size; ++u) {
    for (int w = u + 1; w < parts * size; ++w) {
      if (u / size != w / size) g.AddEdge(u, w);
    }
  }
  return g;
}

Graph Complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) g.AddEdge(u, w);
  }
  return g;
}

Graph Path(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.AddEdge(u, u + 1);
  return g;
}

Graph Cycle(int n) {
  Graph g = Path(n);
  if (n >= 3) g.AddEdge(n - 1, 0);
  return g;
}

Graph RandomConnectedGraph(int n, double p, std::mt19937_64& rng) {
  if (n < 1) throw std::domain_error("random graph needs n >= 1");
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("random graph needs 0 < p <= 1");
  std::bernoulli_distribution coin(p);
  while (true) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) g.AddEdge(u, v);
      }
    }
    if (IsConnected(g)) return g;
  }
}

Graph GraphFromSpec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string name(spec.substr(0, colon));
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  auto args = [&](std::size_t count) {
    std::vector<int> v = arg.empty() ? std::vector<int>{} : ParseInts(arg);
    if (v.size() != count) {
      throw std::invalid_argument("'" + name + "' takes " + std::to_string(count) +
                                  " integer argument(s)");
    }
    return v;
  };

  if (name == "petersen") return args(0), Petersen();
  if (name == "k33") return args(0), CompleteMultipartite(2, 3);
  if (name == "k222") return args(0), CompleteMultipartite(3, 2);
  if (name == "shrikhande") return args(0), Shrikhande();
  if (name == "clebsch" || name == "clebsch_folded5cube" || name == "folded5cube") {
    return args(0), ClebschFolded5Cube();
  }
  if (name == "hoffman_singleton" || name == "hoffman-singleton") {
    return args(0), HoffmanSingleton();
  }
  if (name == "paley") return Paley(args(1)[0]);
  if (name == "triangular") return Triangular(args(1)[0]);
  if (name == "triangular_complement") return TriangularComplement(args(1)[0]);
  if (name == "lattice") return Lattice(args(1)[0]);
  if (name == "multipartite" || name == "complete_multipartite") {
    const auto a = args(2);
    return CompleteMultipartite(a[0], a[1]);
  }
  if (name == "complete") return Complete(args(1)[0]);
  if (name == "cycle") return Cycle(args(1)[0]);
  if (name == "path") return Path(args(1)[0]);
  if (name == "sts") return BlockGraph(SteinerTripleSystem(args(1)[0]));
  if (name == "design4") return BlockGraph(Steiner2n4Design(args(1)[0]));
  if (name == "oa") {
    const auto a = args(2);
    return OrthogonalArrayGraph(MakeOrthogonalArray(a[0], a[1]));
  }
  throw std::invalid_argument("unknown graph spec '" + std::string(spec) + "'");
}

}  // namespace srgcut
