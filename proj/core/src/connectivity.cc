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

#include "srgcut/connectivity.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "srgcut/bounds.h"
#include "srgcut/flow.h"

namespace srgcut {
namespace {

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs body(worker, index) for index in [0, count) on `threads` workers.
void ParallelFor(int threads, int64_t count,
                 const std::function<void(int, int64_t)>& body) {
  threads = static_cast<int>(std::min<int64_t>(threads, std::max<int64_t>(count, 1)));
  if (threads <= 1) {
    for (int64_t i = 0; i < count; ++i) body(0, i);
    return;
  }
  std::atomic<int64_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (int64_t i = next++; i < count; i = next++) body(w, i);
    });
  }
  for (auto& t : pool) t.join();
}

Bitset Union(const Bitset& a, const Bitset& b) {
  Bitset out = a;
  out |= b;
  return out;
}

Bitset EdgeBits(int n, std::pair<int, int> e) {
  Bitset b(n);
  b.set(e.first);
  b.set(e.second);
  return b;
}

// True when every component of g - removed has >= 2 vertices and there are
// at least two of them.
bool IsRestrictedSeparator(const Graph& g, const Bitset& removed) {
  const auto comps = Components(g, removed);
  if (comps.size() < 2) return false;
  for (const auto& c : comps) {
    if (c.size() < 2) return false;
  }
  return true;
}

void RequireConnected(const Graph& g, const char* who) {
  if (g.num_vertices() > 0 && !IsConnected(g)) {
    throw std::domain_error(std::string(who) + ": graph is disconnected");
  }
}

struct EdgePair {
  int e = 0;
  int f = 0;
  int flow = 0;
};

// Pairs of vertex-disjoint edges with no edge between them.
std::vector<EdgePair> SeparableEdgePairs(const Graph& g,
                                         const std::vector<std::pair<int, int>>& edges) {
  std::vector<EdgePair> pairs;
  const int m = static_cast<int>(edges.size());
  for (int i = 0; i < m; ++i) {
    Bitset closed = Union(g.row(edges[i].first), g.row(edges[i].second));
    closed.set(edges[i].first);
    closed.set(edges[i].second);
    for (int j = i + 1; j < m; ++j) {
      if (!closed.test(edges[j].first) && !closed.test(edges[j].second)) {
        pairs.push_back({i, j, 0});
      }
    }
  }
  return pairs;
}

std::optional<std::pair<int, int>> EdgeNeighborhoodMatch(const Graph& g, const VertexSet& s) {
  for (const auto& [u, v] : g.edges()) {
    if (Neighborhood(g, VertexSet{u, v}) == s) return std::make_pair(u, v);
  }
  return std::nullopt;
}

// Branch-and-bound over the partition V = A ∪ S ∪ B for one edge pair.
class PairSearch {
 public:
  PairSearch(const Graph& g, VertexCutNetwork& net, int64_t node_limit, int64_t* nodes)
      : g_(g), n_(g.num_vertices()), net_(net), node_limit_(node_limit), nodes_(nodes) {}

  struct State {
    Bitset forced_s, a, b, not_s;
    int forced = 0;
  };

  // Looks for a valid separator extending `root` of size < bound. In
  // minimise mode bound tightens with every hit; otherwise the first hit
  // ends the search. Returns false when the node budget ran out.
  bool Run(State root, int bound, bool minimise) {
    bound_ = bound;
    minimise_ = minimise;
    stop_ = false;
    exhausted_ = false;
    Visit(root);
    return !exhausted_;
  }

  int bound() const { return bound_; }
  const std::optional<Bitset>& found() const { return found_; }

 private:
  void Visit(State& st) {
    if (stop_) return;
    if (++*nodes_ > node_limit_) {
      exhausted_ = stop_ = true;
      return;
    }
    const int limit = bound_ - st.forced;
    if (limit <= 0) return;
    const Bitset uncut = Union(Union(st.a, st.b), st.not_s);
    Bitset cut;
    const auto flow = net_.MinCut(st.a, st.b, st.forced_s, uncut, limit, &cut);
    if (!flow || *flow >= limit) return;
    const Bitset s = Union(st.forced_s, cut);
    int x = -1;
    for (const auto& comp : Components(g_, s)) {
      if (comp.size() == 1) {
        x = comp[0];
        break;
      }
    }
    if (x < 0) {
      bound_ = st.forced + *flow;
      found_ = s;
      if (!minimise_) stop_ = true;
      return;
    }
    auto to_a = [&](int y) { State c = st; c.not_s.reset(y); c.a.set(y); Visit(c); };
    auto to_b = [&](int y) { State c = st; c.not_s.reset(y); c.b.set(y); Visit(c); };
    auto to_s = [&](int y) { State c = st; c.forced_s.set(y); ++c.forced; Visit(c); };
    if (st.a.test(x) || st.b.test(x)) {
      // x needs a partner on its own side; its only candidates are cut now.
      int y = -1;
      g_.row(x).for_each([&](int w) {
        if (y < 0 && !st.forced_s.test(w)) y = w;
      });
      if (y < 0) return;
      st.a.test(x) ? to_a(y) : to_b(y);
      to_s(y);
      return;
    }
    to_a(x);
    to_b(x);
    if (!st.not_s.test(x)) to_s(x);
  }

  const Graph& g_;
  int n_;
  VertexCutNetwork& net_;
  int64_t node_limit_;
  int64_t* nodes_;
  int bound_ = 0;
  bool minimise_ = true;
  bool stop_ = false;
  bool exhausted_ = false;
  std::optional<Bitset> found_;
};

class Kappa2Solver {
 public:
  Kappa2Solver(const Graph& g, const SolverOptions& options)
      : g_(g), n_(g.num_vertices()), options_(options), edges_(g.edges()), net_(g) {}

  CutResult Solve() {
    CutResult result;
    pairs_ = SeparableEdgePairs(g_, edges_);
    if (pairs_.empty()) {
      result.status = CutStatus::kNoRestrictedSeparator;
      return result;
    }
    best_ = n_ + 1;
    SeedFromEdgeNeighborhoods();
    SweepPairs();
    std::stable_sort(pairs_.begin(), pairs_.end(),
                     [](const EdgePair& x, const EdgePair& y) { return x.flow < y.flow; });
    if (options_.keep_trace) {
      for (const EdgePair& p : pairs_) {
        result.lower_bound_trace.push_back({edges_[p.e], edges_[p.f], p.flow});
      }
    }

    // Pairs whose flow already meets the incumbent cannot improve it.
    std::size_t open = 0;
    bool budget_ok = true;
    for (; open < pairs_.size() && pairs_[open].flow < best_; ++open) {
      PairSearch search(g_, net_, options_.node_limit, &nodes_);
      if (!search.Run(RootState(pairs_[open]), best_, /*minimise=*/true)) {
        budget_ok = false;
        if (search.found()) Offer(*search.found());
        break;
      }
      if (search.found()) Offer(*search.found());
    }
    result.nodes = nodes_;

    if (!budget_ok) {
      result.status = CutStatus::kBounded;
      int lo = best_;
      for (std::size_t i = open; i < pairs_.size(); ++i) lo = std::min(lo, pairs_[i].flow);
      result.lower_bound = lo;
      if (best_set_) {
        result.upper_bound = best_;
        result.certificate = CertificateFromSeparator(g_, VertexSet::FromBitset(best_s_));
      }
      return result;
    }
    if (!best_set_) {
      result.status = CutStatus::kNoRestrictedSeparator;
      result.lower_bound = pairs_.front().flow;
      return result;
    }

    VertexSet s = VertexSet::FromBitset(best_s_);
    if (options_.lexicographic_certificate) {
      if (auto lex = LexicographicSeparator()) s = *lex;
    }
    result.status = CutStatus::kExact;
    result.value = best_;
    result.lower_bound = best_;
    result.upper_bound = best_;
    result.certificate = CertificateFromSeparator(g_, s);
    result.matches_edge_neighborhood = EdgeNeighborhoodMatch(g_, s);
    result.nodes = nodes_;
    return result;
  }

 private:
  PairSearch::State RootState(const EdgePair& p) const {
    PairSearch::State st{Bitset(n_), EdgeBits(n_, edges_[p.e]), EdgeBits(n_, edges_[p.f]),
                         Bitset(n_), 0};
    return st;
  }

  void Offer(const Bitset& s) {
    const int size = s.count();
    if (!best_set_ || size < best_ ||
        (size == best_ && VertexSet::FromBitset(s) < VertexSet::FromBitset(best_s_))) {
      best_ = size;
      best_s_ = s;
      best_set_ = true;
    }
  }

  void SeedFromEdgeNeighborhoods() {
    for (const auto& [u, v] : edges_) {
      const Bitset s = Neighborhood(g_, VertexSet{u, v}).ToBitset(n_);
      if (IsRestrictedSeparator(g_, s)) Offer(s);
    }
  }

  // Flow lower bound for every pair plus repaired flow cuts as upper bounds.
  void SweepPairs() {
    const int threads = ResolveThreads(options_.threads);
    std::vector<VertexCutNetwork> nets(threads, net_);
    std::vector<std::optional<Bitset>> local_best(threads);
    const Bitset none(n_);
    ParallelFor(threads, static_cast<int64_t>(pairs_.size()), [&](int w, int64_t i) {
      EdgePair& p = pairs_[i];
      const Bitset a = EdgeBits(n_, edges_[p.e]);
      const Bitset b = EdgeBits(n_, edges_[p.f]);
      Bitset cut;
      const auto flow = nets[w].MinCut(a, b, none, Union(a, b), Dinic::kInfinity, &cut);
      p.flow = flow.value_or(n_ + 1);
      if (!flow) return;
      // Absorb stranded singletons into the cut.
      Bitset s = cut;
      for (const auto& comp : Components(g_, cut)) {
        if (comp.size() == 1) s.set(comp[0]);
      }
      if (!IsRestrictedSeparator(g_, s)) return;
      auto& mine = local_best[w];
      if (!mine || s.count() < mine->count() ||
          (s.count() == mine->count() &&
           VertexSet::FromBitset(s) < VertexSet::FromBitset(*mine))) {
        mine = s;
      }
    });
    for (const auto& s : local_best) {
      if (s) Offer(*s);
    }
  }

  // Is there a restricted separator of size best_ containing `in` and
  // avoiding `out`? Fills *witness on success; nullopt on budget exhaustion.
  std::optional<bool> Feasible(const Bitset& in, const Bitset& out, Bitset* witness) {
    const int forced = in.count();
    for (const EdgePair& p : pairs_) {
      if (p.flow > best_) break;
      PairSearch::State st = RootState(p);
      if (st.a.intersects(in) || st.b.intersects(in)) continue;
      st.forced_s = in;
      st.forced = forced;
      st.not_s = out;
      st.not_s.subtract(st.a);
      st.not_s.subtract(st.b);
      PairSearch search(g_, net_, options_.node_limit, &nodes_);
      const bool complete = search.Run(st, best_ + 1, /*minimise=*/false);
      if (search.found()) {
        *witness = *search.found();
        return true;
      }
      if (!complete) return std::nullopt;
    }
    return false;
  }

  // Greedy vertex-by-vertex construction of the lexicographically smallest
  // minimum separator.
  std::optional<VertexSet> LexicographicSeparator() {
    Bitset in(n_), out(n_);
    Bitset witness = best_s_;
    int chosen = 0;
    for (int x = 0; x < n_ && chosen < best_; ++x) {
      bool accept = witness.test(x);
      if (!accept) {
        Bitset trial = in;
        trial.set(x);
        Bitset w;
        const auto ok = Feasible(trial, out, &w);
        if (!ok) return std::nullopt;
        if (*ok) {
          accept = true;
          witness = w;
        }
      }
      if (accept) {
        in.set(x);
        ++chosen;
      } else {
        out.set(x);
      }
    }
    return VertexSet::FromBitset(witness);
  }

  const Graph& g_;
  int n_;
  SolverOptions options_;
  std::vector<std::pair<int, int>> edges_;
  VertexCutNetwork net_;
  std::vector<EdgePair> pairs_;
  int best_ = 0;
  bool best_set_ = false;
  Bitset best_s_;
  int64_t nodes_ = 0;
};

}  // namespace

std::optional<SeparatorCertificate> CertificateFromSeparator(const Graph& g,
                                                             const VertexSet& s) {
  const int n = g.num_vertices();
  for (int v : s) {
    if (v < 0 || v >= n) throw std::out_of_range("separator vertex out of range");
  }
  const auto comps = Components(g, s.ToBitset(n));
  if (comps.size() < 2) return std::nullopt;
  std::size_t smallest = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].size() < 2) return std::nullopt;
    if (comps[i].size() < comps[smallest].size()) smallest = i;
  }
  std::vector<int> b;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i != smallest) b.insert(b.end(), comps[i].begin(), comps[i].end());
  }
  return SeparatorCertificate{VertexSet(comps[smallest]), s, VertexSet(std::move(b))};
}

std::string ToString(CutStatus status) {
  switch (status) {
    case CutStatus::kExact:
      return "exact";
    case CutStatus::kNoRestrictedSeparator:
      return "no-restricted-separator";
    case CutStatus::kBounded:
      return "bounded";
  }
  return "bounded";
}

CutResult Kappa2Exact(const Graph& g, const SolverOptions& options) {
  RequireConnected(g, "kappa2_exact");
  if (g.num_vertices() < 4) return CutResult{};
  return Kappa2Solver(g, options).Solve();
}

CutResult Kappa2BruteForce(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kBruteForceMaxVertices) {
    throw std::domain_error("kappa2_bruteforce: more than " +
                            std::to_string(kBruteForceMaxVertices) + " vertices");
  }
  RequireConnected(g, "kappa2_bruteforce");
  CutResult result;
  std::vector<int> pick;
  // Lexicographic combinations of size `size` from [0, n).
  std::function<bool(int, int)> extend = [&](int start, int size) {
    if (static_cast<int>(pick.size()) == size) {
      return IsRestrictedSeparator(g, VertexSet(pick).ToBitset(n));
    }
    for (int v = start; v <= n - (size - static_cast<int>(pick.size())); ++v) {
      pick.push_back(v);
      if (extend(v + 1, size)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 0; size + 4 <= n; ++size) {
    pick.clear();
    if (extend(0, size)) {
      const VertexSet s(pick);
      result.status = CutStatus::kExact;
      result.value = size;
      result.lower_bound = size;
      result.upper_bound = size;
      result.certificate = CertificateFromSeparator(g, s);
      result.matches_edge_neighborhood = EdgeNeighborhoodMatch(g, s);
      return result;
    }
  }
  return result;
}

CertificateVerdict ValidateCertificate(const Graph& g, const SeparatorCertificate& c) {
  CertificateVerdict verdict;
  const int n = g.num_vertices();
  auto& bad = verdict.violations;
  std::vector<int> owner(n, -1);
  const VertexSet* parts[] = {&c.a, &c.s, &c.b};
  const char* names[] = {"A", "S", "B"};
  for (int p = 0; p < 3; ++p) {
    for (int v : *parts[p]) {
      if (v < 0 || v >= n) {
        bad.push_back(std::string("vertex ") + std::to_string(v) + " in " + names[p] +
                      " out of range");
        continue;
      }
      if (owner[v] >= 0) {
        bad.push_back("vertex " + std::to_string(v) + " in both " + names[owner[v]] +
                      " and " + names[p]);
      }
      owner[v] = p;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (owner[v] < 0) bad.push_back("vertex " + std::to_string(v) + " not covered");
  }
  if (c.a.empty()) bad.push_back("A is empty");
  if (c.b.empty()) bad.push_back("B is empty");
  if (c.size_a() > c.size_b()) bad.push_back("A is larger than B");
  if (!bad.empty()) return verdict;

  for (int u : c.a) {
    for (int w : c.b) {
      if (g.adjacent(u, w)) {
        bad.push_back("edge " + std::to_string(u) + "-" + std::to_string(w) + " joins A and B");
      }
    }
  }
  for (int p : {0, 2}) {
    for (const auto& comp : InducedComponents(g, parts[p]->ToBitset(n))) {
      if (comp.size() < 2) {
        bad.push_back(std::string("component of size 1 in ") + names[p] + ": vertex " +
                      std::to_string(comp[0]));
      }
    }
  }
  const VertexSet na = Neighborhood(g, c.a);
  for (int v : na) {
    if (!c.s.contains(v)) bad.push_back("N(A) vertex " + std::to_string(v) + " outside S");
  }
  for (int y : c.s) {
    if (na.contains(y)) continue;
    bool closed = true;
    g.row(y).for_each([&](int w) { closed = closed && c.s.contains(w); });
    verdict.notes.push_back("S vertex " + std::to_string(y) + " is not in N(A)" +
                            (closed ? "; N(y) lies in S" : ""));
  }
  verdict.valid = bad.empty();
  return verdict;
}

SeparatorDiagnostics DiagnoseSeparator(const Graph& g, const SeparatorCertificate& c,
                                       const SrgParams& params) {
  const CertificateVerdict verdict = ValidateCertificate(g, c);
  if (!verdict.valid) {
    throw std::domain_error("separator_diagnostics: invalid certificate: " +
                            verdict.violations.front());
  }
  SeparatorDiagnostics d;
  d.alpha = Rational(EdgeCountBetween(g, c.a, c.s), c.size_a());
  d.beta = Rational(EdgeCountBetween(g, c.b, c.s), c.size_b());
  d.haemers_rhs = HaemersLowerBound(params, c.size_a(), c.size_b());
  return d;
}

EdgeCutResult RestrictedEdgeCut(const Graph& g, int threads) {
  const int n = g.num_vertices();
  if (n < 4) throw std::domain_error("restricted_edge_cut: fewer than 4 vertices");
  RequireConnected(g, "restricted_edge_cut");
  // Every admissible A or its complement contains vertex 0 and some x; the
  // other side contains some disjoint pair {y, z}.
  const int workers = ResolveThreads(threads);
  const EdgeCutNetwork base(g);
  std::vector<EdgeCutNetwork> nets(workers, base);
  struct Best {
    int value = 1 << 30;
    int x = 0;
    Bitset side;
  };
  std::vector<Best> best(n);
  ParallelFor(workers, n - 1, [&](int w, int64_t i) {
    const int x = static_cast<int>(i) + 1;
    Bitset src(n);
    src.set(0);
    src.set(x);
    Best& mine = best[x];
    for (int y = 1; y < n; ++y) {
      if (y == x) continue;
      for (int z = y + 1; z < n; ++z) {
        if (z == x) continue;
        Bitset dst(n);
        dst.set(y);
        dst.set(z);
        Bitset side;
        const int value = nets[w].MinCut(src, dst, mine.value, &side);
        if (value < mine.value) {
          mine.value = value;
          mine.side = side;
        }
      }
    }
  });
  int pick = 1;
  for (int x = 2; x < n; ++x) {
    if (best[x].value < best[pick].value) pick = x;
  }
  Bitset side = best[pick].side;
  if (side.count() * 2 > n) {
    Bitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    all.subtract(side);
    side = all;
  }
  return {best[pick].value, VertexSet::FromBitset(side)};
}

namespace {

constexpr int kExhaustiveMaxVertices = 24;

// Calls fn(mask, value) for every A with 2 <= |A| <= v/2.
template <typename Fn>
void ForEachBalancedSubset(const Graph& g, Fn&& fn) {
  const int n = g.num_vertices();
  if (n < 4) throw std::domain_error("edge cut enumeration: fewer than 4 vertices");
  if (n > kExhaustiveMaxVertices) {
    throw std::domain_error("edge cut enumeration: more than " +
                            std::to_string(kExhaustiveMaxVertices) + " vertices");
  }
  std::vector<uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  const uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
  for (uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const int size = std::popcount(mask);
    if (size < 2 || 2 * size > n) continue;
    int64_t value = 0;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      value += std::popcount(adj[std::countr_zero(rest)] & ~mask);
    }
    fn(mask, value);
  }
}

VertexSet MaskToSet(uint32_t mask) {
  std::vector<int> out;
  for (uint32_t rest = mask; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return VertexSet(std::move(out));
}

}  // namespace

EdgeCutResult RestrictedEdgeCutExhaustive(const Graph& g) {
  int64_t best = INT64_MAX;
  uint32_t arg = 0;
  ForEachBalancedSubset(g, [&](uint32_t mask, int64_t value) {
    if (value < best) {
      best = value;
      arg = mask;
    }
  });
  return {static_cast<int>(best), MaskToSet(arg)};
}

std::vector<EdgeCutWitness> EnumerateEdgeCuts(const Graph& g, int64_t max_value) {
  std::vector<EdgeCutWitness> out;
  ForEachBalancedSubset(g, [&](uint32_t mask, int64_t value) {
    if (value <= max_value) out.push_back({MaskToSet(mask), value});
  });
  std::sort(out.begin(), out.end(), [](const EdgeCutWitness& x, const EdgeCutWitness& y) {
    return x.side < y.side;
  });
  return out;
}

}  // namespace srgcut
