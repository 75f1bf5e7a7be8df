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

#include "srgcut/srg_params.h"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace srgcut {

std::string ToString(const SrgParams& p) {
  std::ostringstream out;
  out << "(" << p.v << "," << p.k << "," << p.lambda << "," << p.mu << ")";
  return out.str();
}

SrgParams ParseParams(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ' ' || c == '\t') continue;
    cleaned.push_back(c);
  }
  int64_t values[4];
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t comma = i < 3 ? cleaned.find(',', pos) : cleaned.size();
    if (comma == std::string::npos) {
      throw std::invalid_argument("expected v,k,l,m but got '" + std::string(text) + "'");
    }
    const char* first = cleaned.data() + pos;
    const char* last = cleaned.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, values[i]);
    if (ec != std::errc() || ptr != last || first == last) {
      throw std::invalid_argument("malformed parameter quadruple '" +
                                  std::string(text) + "'");
    }
    pos = comma + 1;
  }
  return {values[0], values[1], values[2], values[3]};
}

bool IsValid(const SrgParams& p) {
  if (!(p.v > p.k && p.k >= 1)) return false;
  if (!(p.lambda >= 0 && p.lambda <= p.k - 1)) return false;
  if (!(p.mu >= 1 && p.mu <= p.k)) return false;
  return p.k * (p.k - p.lambda - 1) == (p.v - p.k - 1) * p.mu;
}

int64_t Discriminant(const SrgParams& p) {
  const int64_t d = p.lambda - p.mu;
  return d * d + 4 * (p.k - p.mu);
}

namespace {

// 2k + (v-1)(λ-μ): zero exactly for conference parameters.
int64_t ConferenceExcess(const SrgParams& p) {
  return 2 * p.k + (p.v - 1) * (p.lambda - p.mu);
}

}  // namespace

SpectralData Eigenvalues(const SrgParams& p) {
  if (!IsValid(p)) {
    throw std::domain_error("eigenvalues: invalid parameters " + ToString(p));
  }
  const int64_t delta = Discriminant(p);
  SpectralData s;
  const Rational half_diff(p.lambda - p.mu, 2);
  s.theta2 = QuadraticValue(half_diff, Rational(1, 2), delta);
  s.theta_v = QuadraticValue(half_diff, Rational(-1, 2), delta);
  const int64_t excess = ConferenceExcess(p);
  // excess/√Δ = (excess/Δ)·√Δ
  const Rational half_v1(p.v - 1, 2);
  const Rational c(excess, 2 * delta);
  s.f = QuadraticValue(half_v1, -c, delta);
  s.g = QuadraticValue(half_v1, c, delta);
  s.is_conference = excess == 0;
  return s;
}

bool MultiplicitiesIntegral(const SrgParams& p) {
  if (!IsValid(p)) return false;
  const SpectralData s = Eigenvalues(p);
  return s.f.is_integer() && s.g.is_integer() && s.f.sign() >= 0 &&
         s.g.sign() >= 0;
}

FeasibilityVerdict BasicFeasible(const SrgParams& p) {
  FeasibilityVerdict out;
  auto fail = [&](std::string reason) { out.reasons.push_back(std::move(reason)); };

  if (!(p.v > p.k && p.k >= 1)) fail("range: need v > k >= 1");
  if (!(p.lambda >= 0 && p.lambda <= p.k - 1)) fail("range: need 0 <= λ <= k-1");
  if (!(p.mu >= 1 && p.mu <= p.k)) fail("range: need 1 <= μ <= k");
  if (!out.reasons.empty()) return out;

  const int64_t lhs = p.k * (p.k - p.lambda - 1);
  const int64_t rhs = (p.v - p.k - 1) * p.mu;
  if (lhs != rhs) {
    fail("counting identity: k(k-λ-1)=" + std::to_string(lhs) +
         " != (v-k-1)μ=" + std::to_string(rhs));
    return out;
  }

  const SpectralData s = Eigenvalues(p);
  if (s.is_conference && !s.theta2.is_rational()) {
    const int64_t t = (p.v - 1) / 4;
    if (p.v % 4 != 1 || p.k != 2 * t || p.lambda != t - 1 || p.mu != t) {
      fail("conference parameters not of the form (4t+1,2t,t-1,t)");
    }
  } else {
    if (!s.theta2.is_integer() || !s.theta_v.is_integer()) {
      fail("non-integer eigenvalues");
    }
    if (!s.f.is_integer() || !s.g.is_integer()) {
      fail("multiplicities not integral: f=" + s.f.ToString() + ", g=" + s.g.ToString());
    } else if (s.f.sign() < 0 || s.g.sign() < 0) {
      fail("negative multiplicity: f=" + s.f.ToString() + ", g=" + s.g.ToString());
    }
  }

  if (p.mu == 1) {
    const int64_t bound = (p.lambda + 1) * (p.lambda + 2);
    if (p.k < bound) {
      fail("μ=1 bound: k=" + std::to_string(p.k) + " < (λ+1)(λ+2)=" +
           std::to_string(bound));
    }
  }
  out.feasible = out.reasons.empty();
  return out;
}

DerivedQuantities Derive(const SrgParams& p) {
  DerivedQuantities d;
  d.edge_nbhd = 2 * p.k - p.lambda - 2;
  d.edge_cut_target = 2 * p.k - 2;
  d.k4_applicable = 4 * std::max(p.lambda, p.mu) <= p.k;
  return d;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

namespace {

std::optional<SrgParams> SteinerIfIntegral(int64_t n, int64_t K) {
  if (K < 2 || n <= K) return std::nullopt;
  if ((n * (n - 1)) % (K * (K - 1)) != 0) return std::nullopt;
  if ((K * (n - K)) % (K - 1) != 0) return std::nullopt;
  if ((n - 1) % (K - 1) != 0) return std::nullopt;
  return SrgParams{n * (n - 1) / (K * (K - 1)), K * (n - K) / (K - 1),
                   (K - 1) * (K - 1) + (n - 1) / (K - 1) - 2, K * K};
}

}  // namespace

SrgParams SteinerBlockParams(int64_t n, int64_t block_size) {
  auto p = SteinerIfIntegral(n, block_size);
  if (!p) {
    throw std::domain_error("no integral 2-(" + std::to_string(n) + "," +
                            std::to_string(block_size) + ",1) block-graph parameters");
  }
  return *p;
}

SrgParams LatinSquareParams(int64_t t, int64_t n) {
  return {n * n, t * (n - 1), n - 2 + (t - 1) * (t - 2), t * (t - 1)};
}

SrgParams ConferenceParams(int64_t t) { return {4 * t + 1, 2 * t, t - 1, t}; }

SrgParams CompleteMultipartiteParams(int64_t parts, int64_t size) {
  return {parts * size, (parts - 1) * size, (parts - 2) * size, (parts - 1) * size};
}

SrgParams TriangularParams(int64_t m) { return SteinerBlockParams(m, 2); }

std::string ToString(const FamilyTag& tag) {
  const std::string a = std::to_string(tag.a), b = std::to_string(tag.b);
  switch (tag.kind) {
    case FamilyKind::kSteinerBlockGraph:
      return "SteinerBlockGraph(n=" + a + ",K=" + b + ")";
    case FamilyKind::kLatinSquare:
      return "LatinSquare(t=" + a + ",n=" + b + ")";
    case FamilyKind::kCompleteMultipartite:
      return "CompleteMultipartite(m=" + b + ",classes=" + a + ")";
    case FamilyKind::kConference:
      return "Conference(t=" + a + ")";
    case FamilyKind::kOther:
      return "Other";
  }
  return "Other";
}

std::vector<FamilyTag> ClassifyFamily(const SrgParams& p) {
  std::vector<FamilyTag> tags;

  if (IsPerfectSquare(p.mu)) {
    const int64_t K = IntegerSqrt(p.mu);
    if (K >= 2 && (p.k * (K - 1)) % K == 0) {
      const int64_t n = p.k * (K - 1) / K + K;
      if (auto q = SteinerIfIntegral(n, K); q && *q == p) {
        tags.push_back({FamilyKind::kSteinerBlockGraph, n, K});
      }
    }
  }

  if (IsPerfectSquare(p.v) && IsPerfectSquare(1 + 4 * p.mu)) {
    const int64_t n = IntegerSqrt(p.v);
    const int64_t t = (1 + IntegerSqrt(1 + 4 * p.mu)) / 2;
    if (t * (t - 1) == p.mu && LatinSquareParams(t, n) == p) {
      tags.push_back({FamilyKind::kLatinSquare, t, n});
    }
  }

  const int64_t size = p.k - p.lambda;
  if (p.mu == p.k && size > 0 && p.v % size == 0) {
    const int64_t parts = p.v / size;
    if (parts >= 2 && CompleteMultipartiteParams(parts, size) == p) {
      tags.push_back({FamilyKind::kCompleteMultipartite, parts, size});
    }
  }

  if ((p.v - 1) % 4 == 0 && p.v > 1 && ConferenceParams((p.v - 1) / 4) == p) {
    tags.push_back({FamilyKind::kConference, (p.v - 1) / 4, 0});
  }

  if (tags.empty()) tags.push_back({FamilyKind::kOther, 0, 0});
  return tags;
}

}  // namespace srgcut
