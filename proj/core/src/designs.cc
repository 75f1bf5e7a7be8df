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

#include "srgcut/designs.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "srgcut/finite_field.h"

namespace srgcut {

std::string CheckDesign(const Design& d) {
  const int n = d.n_points;
  const int K = d.block_size;
  if (K < 2 || n < K) return "block size must satisfy 2 <= K <= n";
  const long expected = static_cast<long>(n) * (n - 1) / (K * (K - 1));
  if (static_cast<long>(d.blocks.size()) != expected ||
      static_cast<long>(n) * (n - 1) % (K * (K - 1)) != 0) {
    return "block count " + std::to_string(d.blocks.size()) + " != n(n-1)/(K(K-1))";
  }
  std::vector<int> cover(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto& block = d.blocks[b];
    if (static_cast<int>(block.size()) != K) {
      return "block " + std::to_string(b) + " has wrong size";
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] < 0 || block[i] >= n) return "block " + std::to_string(b) + " has bad point";
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        const int x = std::min(block[i], block[j]), y = std::max(block[i], block[j]);
        if (x == y) return "block " + std::to_string(b) + " repeats a point";
        if (++cover[x * n + y] > 1) {
          return "pair {" + std::to_string(x) + "," + std::to_string(y) +
                 "} lies in more than one block";
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (cover[x * n + y] != 1) {
        return "pair {" + std::to_string(x) + "," + std::to_string(y) + "} is uncovered";
      }
    }
  }
  return {};
}

namespace {

Design Finish(Design d) {
  for (auto& b : d.blocks) std::sort(b.begin(), b.end());
  std::sort(d.blocks.begin(), d.blocks.end());
  if (std::string err = CheckDesign(d); !err.empty()) {
    throw std::logic_error("constructed design is invalid: " + err);
  }
  return d;
}

// Commutative idempotent quasigroup on Z_m, m odd: x∘y = (x+y)(m+1)/2.
int IdempotentOp(int x, int y, int m) { return (x + y) * ((m + 1) / 2) % m; }

// Commutative half-idempotent quasigroup on Z_{2m}: x∘y = σ(x+y) with
// σ(2i) = i and σ(2i+1) = m + i, so that x∘x = (x+m)∘(x+m) = x mod m.
int HalfIdempotentOp(int x, int y, int m) {
  const int s = (x + y) % (2 * m);
  return s % 2 == 0 ? s / 2 : m + s / 2;
}

Design Bose(int n) {
  const int m = n / 3;
  auto pt = [](int x, int i) { return 3 * x + (i % 3); };
  Design d{n, 3, {}};
  for (int x = 0; x < m; ++x) d.blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      for (int i = 0; i < 3; ++i) {
        d.blocks.push_back({pt(x, i), pt(y, i), pt(IdempotentOp(x, y, m), i + 1)});
      }
    }
  }
  return d;
}

Design Skolem(int n) {
  const int m = (n - 1) / 6;  // Z_{2m} × Z_3 plus ∞
  const int inf = n - 1;
  auto pt = [](int x, int i) { return 3 * x + (i % 3); };
  Design d{n, 3, {}};
  for (int x = 0; x < m; ++x) d.blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (int x = 0; x < m; ++x) {
    for (int i = 0; i < 3; ++i) d.blocks.push_back({inf, pt(x + m, i), pt(x, i + 1)});
  }
  for (int x = 0; x < 2 * m; ++x) {
    for (int y = x + 1; y < 2 * m; ++y) {
      for (int i = 0; i < 3; ++i) {
        d.blocks.push_back({pt(x, i), pt(y, i), pt(HalfIdempotentOp(x, y, m), i + 1)});
      }
    }
  }
  return d;
}

// Base blocks developed over an abelian group Z_{m1} × ... (mixed radix,
// first modulus most significant). Point -1 stands for a fixed point ∞
// numbered after the group elements.
struct DifferenceFamily {
  int n;
  std::vector<int> moduli;
  std::vector<std::vector<std::vector<int>>> base_blocks;  // per block, per point, coords
};

const std::vector<DifferenceFamily>& DifferenceFamilies() {
  static const auto* tables = new std::vector<DifferenceFamily>{
      // PG(2,3): the planar difference set {0,1,3,9} mod 13.
      {13, {13}, {{{0}, {1}, {3}, {9}}}},
      // 2-(25,4,1) over Z_5 × Z_5.
      {25, {5, 5}, {{{0, 0}, {0, 1}, {1, 0}, {2, 2}}, {{0, 0}, {0, 2}, {1, 3}, {3, 2}}}},
      // 2-(28,4,1) over Z_3^3 ∪ {∞}; the ∞-block has a short orbit.
      {28,
       {3, 3, 3},
       {{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 1, 1}},
        {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}, {2, 2, 1}},
        {{-1}, {0, 0, 0}, {1, 0, 0}, {2, 0, 0}}}},
  };
  return *tables;
}

Design Develop(const DifferenceFamily& df) {
  int order = 1;
  for (int m : df.moduli) order *= m;
  auto decode = [&](int g) {
    std::vector<int> c(df.moduli.size());
    for (int i = static_cast<int>(df.moduli.size()) - 1; i >= 0; --i) {
      c[i] = g % df.moduli[i];
      g /= df.moduli[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int g = 0;
    for (std::size_t i = 0; i < c.size(); ++i) g = g * df.moduli[i] + c[i];
    return g;
  };
  std::set<std::vector<int>> blocks;
  for (int g = 0; g < order; ++g) {
    const std::vector<int> shift = decode(g);
    for (const auto& base : df.base_blocks) {
      std::vector<int> block;
      for (const auto& point : base) {
        if (point.size() == 1 && point[0] == -1) {
          block.push_back(order);
          continue;
        }
        std::vector<int> c(point.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
          c[i] = (point[i] + shift[i]) % df.moduli[i];
        }
        block.push_back(encode(c));
      }
      std::sort(block.begin(), block.end());
      blocks.insert(block);
    }
  }
  return Design{df.n, 4, {blocks.begin(), blocks.end()}};
}

// Lines of AG(2,4): points (x, y) numbered 4x + y.
Design AffinePlane4() {
  const FiniteField f(4);
  Design d{16, 4, {}};
  for (int slope = 0; slope < 4; ++slope) {
    for (int b = 0; b < 4; ++b) {
      std::vector<int> line;
      for (int x = 0; x < 4; ++x) line.push_back(4 * x + f.add(f.mul(slope, x), b));
      d.blocks.push_back(line);
    }
  }
  for (int c = 0; c < 4; ++c) {
    std::vector<int> line;
    for (int y = 0; y < 4; ++y) line.push_back(4 * c + y);
    d.blocks.push_back(line);
  }
  return d;
}

}  // namespace

Design SteinerTripleSystem(int n) {
  if (n < 7 || (n % 6 != 1 && n % 6 != 3)) {
    throw std::domain_error("STS(" + std::to_string(n) +
                            ") does not exist: need n >= 7 and n ≡ 1,3 (mod 6)");
  }
  return Finish(n % 6 == 3 ? Bose(n) : Skolem(n));
}

std::vector<int> SupportedSteiner4Orders() {
  std::vector<int> out{16};
  for (const auto& df : DifferenceFamilies()) out.push_back(df.n);
  std::sort(out.begin(), out.end());
  return out;
}

Design Steiner2n4Design(int n) {
  if (n < 13 || (n % 12 != 1 && n % 12 != 4)) {
    throw std::domain_error("2-(" + std::to_string(n) +
                            ",4,1) design does not exist: need n ≡ 1,4 (mod 12)");
  }
  if (n == 16) return Finish(AffinePlane4());
  for (const auto& df : DifferenceFamilies()) {
    if (df.n == n) return Finish(Develop(df));
  }
  throw NoConstructionError("no construction available for a 2-(" +
                            std::to_string(n) + ",4,1) design");
}

Graph BlockGraph(const Design& d) {
  const int b = static_cast<int>(d.blocks.size());
  Graph g(b);
  std::vector<Bitset> support;
  support.reserve(b);
  for (const auto& block : d.blocks) {
    Bitset s(d.n_points);
    for (int p : block) s.set(p);
    support.push_back(std::move(s));
  }
  for (int i = 0; i < b; ++i) {
    std::string label = "{";
    for (std::size_t j = 0; j < d.blocks[i].size(); ++j) {
      label += (j ? "," : "") + std::to_string(d.blocks[i][j]);
    }
    g.set_label(i, label + "}");
    for (int j = i + 1; j < b; ++j) {
      if (support[i].intersects(support[j])) g.AddEdge(i, j);
    }
  }
  return g;
}

int BlockSupport(const Design& d, const VertexSet& blocks) {
  Bitset covered(d.n_points);
  for (int b : blocks) {
    if (b < 0 || b >= static_cast<int>(d.blocks.size())) {
      throw std::out_of_range("block index " + std::to_string(b) + " out of range");
    }
    for (int p : d.blocks[b]) covered.set(p);
  }
  return covered.count();
}

std::string CheckOrthogonalArray(const OrthogonalArray& oa) {
  const int n = oa.n;
  if (static_cast<int>(oa.columns.size()) != n * n) return "column count != n^2";
  for (const auto& col : oa.columns) {
    if (static_cast<int>(col.size()) != oa.t) return "column of wrong length";
    for (int s : col) {
      if (s < 0 || s >= n) return "symbol out of range";
    }
  }
  for (int r1 = 0; r1 < oa.t; ++r1) {
    for (int r2 = r1 + 1; r2 < oa.t; ++r2) {
      std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
      for (const auto& col : oa.columns) {
        const int key = col[r1] * n + col[r2];
        if (seen[key]) {
          return "rows " + std::to_string(r1) + " and " + std::to_string(r2) +
                 " repeat an ordered pair";
        }
        seen[key] = true;
      }
    }
  }
  return {};
}

OrthogonalArray MakeOrthogonalArray(int t, int n) {
  if (n < 2 || t < 2) throw std::domain_error("OA(t,n) needs t >= 2 and n >= 2");
  if (t > n + 1) {
    throw std::domain_error("OA(" + std::to_string(t) + "," + std::to_string(n) +
                            ") impossible: t > n+1");
  }
  OrthogonalArray oa{t, n, {}};
  oa.columns.reserve(static_cast<std::size_t>(n) * n);
  if (PrimePowerDecomposition(n) && n <= FiniteField::kMaxOrder) {
    const FiniteField f(n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        std::vector<int> col{x, y};
        for (int c = 1; static_cast<int>(col.size()) < t; ++c) {
          col.push_back(f.add(y, f.mul(c, x)));
        }
        oa.columns.push_back(std::move(col));
      }
    }
  } else if (t <= 3) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        std::vector<int> col{x, y, (x + y) % n};
        col.resize(t);
        oa.columns.push_back(std::move(col));
      }
    }
  } else {
    throw NoConstructionError("no construction available for OA(" + std::to_string(t) +
                              "," + std::to_string(n) + ")");
  }
  if (std::string err = CheckOrthogonalArray(oa); !err.empty()) {
    throw std::logic_error("constructed orthogonal array is invalid: " + err);
  }
  return oa;
}

Graph OrthogonalArrayGraph(const OrthogonalArray& oa) {
  const int v = static_cast<int>(oa.columns.size());
  Graph g(v);
  for (int i = 0; i < v; ++i) {
    std::string label = "(";
    for (int r = 0; r < oa.t; ++r) label += (r ? "," : "") + std::to_string(oa.columns[i][r]);
    g.set_label(i, label + ")");
    for (int j = i + 1; j < v; ++j) {
      for (int r = 0; r < oa.t; ++r) {
        if (oa.columns[i][r] == oa.columns[j][r]) {
          g.AddEdge(i, j);
          break;
        }
      }
    }
  }
  return g;
}

}  // namespace srgcut
