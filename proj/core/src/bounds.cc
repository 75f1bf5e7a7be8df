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

#include "srgcut/bounds.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "boost/multiprecision/cpp_int.hpp"
#include "srgcut/srg_params.h"

namespace srgcut {
namespace {

using BigRational = boost::multiprecision::cpp_rational;

BigRational Widen(const Rational& q) {
  return BigRational(q.numerator()) / BigRational(q.denominator());
}

// Exact value back to int64 fractions; throws when it does not fit.
Rational Narrow(const BigRational& q) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  const cpp_int limit = cpp_int(INT64_MAX);
  if (abs(num) > limit || den > limit) {
    throw std::overflow_error("bound value exceeds the 64-bit rational range");
  }
  return Rational(static_cast<int64_t>(num), static_cast<int64_t>(den));
}

__extension__ typedef __int128 int128;

BoundReport MakeReport(std::string name, const SrgParams& p, QuadraticValue lhs,
                       QuadraticValue rhs, Comparison cmp, std::string citation) {
  BoundReport r;
  r.name = std::move(name);
  r.inputs = {{"params", ToString(p)}};
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.comparison = cmp;
  r.citation = std::move(citation);
  r.holds = Recheck(r);
  return r;
}

int64_t Narrow(int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("bound value overflows int64");
  return static_cast<int64_t>(x);
}

}  // namespace

bool Recheck(const BoundReport& report) {
  int s = 0;
  if (report.lhs.is_rational() && report.rhs.is_rational()) {
    // 128-bit cross products; the int64 difference could overflow.
    const auto order = Compare(report.lhs.rational_part(), report.rhs.rational_part());
    s = order > 0 ? 1 : (order < 0 ? -1 : 0);
  } else {
    s = (report.lhs - report.rhs).sign();
  }
  return report.comparison == Comparison::kGreater ? s > 0 : s >= 0;
}

RationalParams ToRational(const SrgParams& p) {
  return {Rational(p.v), Rational(p.k), Rational(p.lambda), Rational(p.mu)};
}

RationalParams SteinerFormalParams(const Rational& n, int64_t K) {
  if (K < 2) throw std::domain_error("block size must be >= 2");
  const Rational kk(K);
  return {n * (n - 1) / (kk * (kk - 1)), kk * (n - kk) / (kk - 1),
          (kk - 1) * (kk - 1) + (n - 1) / (kk - 1) - 2, kk * kk};
}

Rational HaemersLowerBound(const SrgParams& p, int64_t a, int64_t b) {
  if (a < 1 || b < 1) throw std::domain_error("haemers bound needs a, b >= 1");
  const int64_t denom = Discriminant(p);
  if (denom <= 0) throw std::domain_error("haemers bound: (λ-μ)²+4(k-μ) must be positive");
  return Rational(4 * a * b * p.mu, denom);
}

BoundReport PropCCondition(const RationalParams& p, int c) {
  if (c < 3) throw std::domain_error("prop_c_condition needs c >= 3");
  // Exact evaluation: fractional n makes int64 intermediates overflow.
  const BigRational cc(c), k = Widen(p.k), lambda = Widen(p.lambda), mu = Widen(p.mu);
  const BigRational inner = (k - mu) * (k + cc - 1 - lambda * (cc - 1) / (cc - 2)) - cc * k;
  const BigRational lhs = 4 * (cc - 2) * inner;
  const BigRational diff = lambda - mu;
  const BigRational rhs = diff * diff * (2 * k - lambda - 2);
  BoundReport r;
  r.name = "prop_c" + std::to_string(c);
  r.inputs = {{"params", "(" + ToString(p.v) + "," + ToString(p.k) + "," +
                             ToString(p.lambda) + "," + ToString(p.mu) + ")"},
              {"c", std::to_string(c)}};
  r.lhs = Narrow(lhs);
  r.rhs = Narrow(rhs);
  r.comparison = Comparison::kGreater;
  r.citation = "4(c-2)[(k-μ)(k+c-1-λ(c-1)/(c-2))-ck] > (λ-μ)²(2k-λ-2)";
  r.holds = Recheck(r);
  return r;
}

BoundReport PropCCondition(const SrgParams& p, int c) {
  BoundReport r = PropCCondition(ToRational(p), c);
  r.inputs[0].second = ToString(p);
  return r;
}

BoundReport CliqueBound(const SrgParams& p) {
  return MakeReport("clique", p, Rational(p.k - 2 * p.lambda - 1), Rational(0),
                    Comparison::kGreater, "k-2λ-1 > 0 implies |N(C)| > 2k-λ-2 for cliques of size >= 3");
}

InproductResult InproductPair(std::span<const std::vector<bool>> vectors) {
  if (vectors.size() < 2) throw std::domain_error("inproduct_pair needs at least 2 vectors");
  const std::size_t len = vectors[0].size();
  if (len == 0) throw std::domain_error("inproduct_pair needs non-empty vectors");
  int64_t total = 0;
  for (const auto& v : vectors) {
    if (v.size() != len) throw std::domain_error("inproduct_pair: vectors differ in length");
    total += std::count(v.begin(), v.end(), true);
  }
  InproductResult out;
  out.inner_product = -1;
  const int a = static_cast<int>(vectors.size());
  for (int i = 0; i < a; ++i) {
    for (int j = i + 1; j < a; ++j) {
      int64_t ip = 0;
      for (std::size_t x = 0; x < len; ++x) ip += vectors[i][x] && vectors[j][x];
      if (ip > out.inner_product) {
        out.inner_product = ip;
        out.first = i;
        out.second = j;
      }
    }
  }
  const Rational w(total, a);
  out.guaranteed = w * (Rational(a) * w / static_cast<int64_t>(len) - 1) / Rational(a - 1);
  return out;
}

BoundReport CkkProp24Condition(const SrgParams& p) {
  const int128 lhs = int128{4} * (p.k - 2 * p.lambda) * (p.k - p.mu);
  const int128 d = p.lambda - p.mu;
  const int128 rhs = d * d * (2 * p.k - p.lambda - 3);
  return MakeReport("ckk_prop24", p, Rational(Narrow(lhs)), Rational(Narrow(rhs)),
                    Comparison::kGreater, "4(k-2λ)(k-μ) > (λ-μ)²(2k-λ-3)");
}

NeighborhoodBounds NeighborhoodLowerBounds(const SrgParams& p) {
  return {2 * p.k - p.lambda - 2, 3 * p.k - 3 * p.lambda - 3,
          3 * p.k - 2 * p.lambda - p.mu - 3, 2 * p.k - p.mu};
}

Rational SteinerSpanBound(int64_t n, int64_t K, int64_t p) {
  if (K != 3 && K != 4) throw std::domain_error("steiner_span_bound supports K in {3,4}");
  if (p < 0 || p > n) throw std::domain_error("steiner_span_bound needs 0 <= p <= n");
  return Rational(2 * p * (n - p), K * (K - 1));
}

QuadraticValue SpectralEdgeBound(const SrgParams& p, int64_t a) {
  if (a < 1 || a > p.v - 1) throw std::domain_error("spectral_edge_bound needs 1 <= a <= v-1");
  const SpectralData s = Eigenvalues(p);
  return (QuadraticValue(p.k) - s.theta2) * QuadraticValue(Rational(a * (p.v - a), p.v));
}

std::string ToString(StatusKind kind) {
  switch (kind) {
    case StatusKind::kProvenOK:
      return "ProvenOK";
    case StatusKind::kCounterexampleFamily:
      return "CounterexampleFamily";
    case StatusKind::kKnownOKByCitation:
      return "KnownOK-by-citation";
    case StatusKind::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

namespace {

// Parameter sets settled only by CKK results that are cited, not recomputed.
constexpr SrgParams kCkkCitedCases[] = {
    {6, 3, 0, 3},   {15, 6, 1, 3},   {85, 14, 3, 2}, {45, 12, 3, 3},
    {25, 12, 5, 6}, {49, 24, 11, 12}, {16, 9, 4, 6}, {25, 16, 9, 12},
    {12, 9, 6, 9},  {26, 15, 8, 9},  {16, 6, 2, 2},
};

}  // namespace

ConjectureStatus ClassifyConjectureStatus(const SrgParams& p) {
  const FeasibilityVerdict verdict = BasicFeasible(p);
  if (!verdict.feasible) {
    throw std::domain_error("conjecture_status: infeasible parameters " + ToString(p));
  }
  ConjectureStatus out;
  const auto families = ClassifyFamily(p);

  for (const FamilyTag& tag : families) {
    if (tag.kind == FamilyKind::kSteinerBlockGraph && tag.b == 2 && tag.a >= 6) {
      out.kind = StatusKind::kCounterexampleFamily;
      out.triangular_m = tag.a;
      out.reasons.push_back("TriangularT(" + std::to_string(tag.a) + ")");
      return out;
    }
  }

  std::vector<std::string> proven, steiner_only, cited;
  if (Derive(p).k4_applicable) proven.push_back("K4Theorem");
  if (CkkProp24Condition(p).holds) proven.push_back("CKKProp24");
  for (const FamilyTag& tag : families) {
    switch (tag.kind) {
      case FamilyKind::kSteinerBlockGraph:
        if (tag.b == 3 && tag.a >= 9) steiner_only.push_back("SteinerK3(n=" + std::to_string(tag.a) + ")");
        if (tag.b == 4 && tag.a >= 16) steiner_only.push_back("SteinerK4(n=" + std::to_string(tag.a) + ")");
        break;
      case FamilyKind::kLatinSquare:
        if (tag.a >= 3 && tag.b >= 2 * tag.a) {
          proven.push_back("LatinSquare(t=" + std::to_string(tag.a) + ",n=" + std::to_string(tag.b) + ")");
        }
        break;
      case FamilyKind::kCompleteMultipartite:
        cited.push_back("CompleteMultipartiteCited");
        break;
      case FamilyKind::kConference:
        cited.push_back("ConferenceCited");
        break;
      case FamilyKind::kOther:
        break;
    }
  }
  const SpectralData s = Eigenvalues(p);
  if (s.theta_v == QuadraticValue(-2)) cited.push_back("ThetaMinusTwoClassification");
  for (const SrgParams& c : kCkkCitedCases) {
    if (c == p) cited.push_back("CKKCited");
  }

  if (!proven.empty() || !steiner_only.empty()) {
    out.kind = StatusKind::kProvenOK;
    out.requires_design_structure = proven.empty();
    out.reasons = proven;
    out.reasons.insert(out.reasons.end(), steiner_only.begin(), steiner_only.end());
    return out;
  }
  if (!cited.empty()) {
    out.kind = StatusKind::kKnownOKByCitation;
    out.reasons = cited;
    return out;
  }
  out.kind = StatusKind::kUnknown;
  return out;
}

std::vector<BoundReport> AllBounds(const SrgParams& p) {
  std::vector<BoundReport> out;
  const int64_t m = std::max(p.lambda, p.mu);
  out.push_back(MakeReport("k4", p, Rational(p.k), Rational(4 * m),
                           Comparison::kGreaterEqual, "k >= 4·max(λ,μ)"));
  out.push_back(CkkProp24Condition(p));
  out.push_back(CliqueBound(p));
  for (int c = 3; c <= 7; ++c) out.push_back(PropCCondition(p, c));
  if (p.mu == 1) {
    out.push_back(MakeReport("mu1_bound", p, Rational(p.k),
                             Rational((p.lambda + 1) * (p.lambda + 2)),
                             Comparison::kGreaterEqual, "μ=1 requires k >= (λ+1)(λ+2)"));
  }
  return out;
}

}  // namespace srgcut
