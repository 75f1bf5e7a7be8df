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
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "srgcut/srg_params.h"

namespace srgcut {
namespace {

bool Admissible4(int n) { return n % 12 == 1 || n % 12 == 4; }

bool PropC4Holds(const Rational& n, int c) {
  return PropCCondition(SteinerFormalParams(n, 4), c).holds;
}

bool HasReason(const ConjectureStatus& s, const std::string& prefix) {
  return std::any_of(s.reasons.begin(), s.reasons.end(),
                     [&](const std::string& r) { return r.rfind(prefix, 0) == 0; });
}

TEST(HaemersLowerBoundTest, Examples) {
  const Rational x = HaemersLowerBound({50, 28, 15, 16}, 5, 6);
  EXPECT_EQ(x, Rational(1920, 49));
  EXPECT_EQ(ToDecimal(x, 4), "39.1836");
  EXPECT_THROW(HaemersLowerBound({50, 28, 15, 16}, 0, 6), std::domain_error);
  // (35,18,9,9): Δ = 36, so 4ab·9/36 = ab.
  for (int a = 1; a <= 6; ++a) {
    EXPECT_EQ(HaemersLowerBound({35, 18, 9, 9}, a, 31 - a), Rational(a * (31 - a)));
  }
}

TEST(PropCConditionTest, SteinerTripleExamples) {
  for (int n : {19, 21, 25, 27}) {
    EXPECT_TRUE(PropCCondition(SteinerBlockParams(n, 3), 4).holds) << n;
  }
  EXPECT_FALSE(PropCCondition(SteinerBlockParams(15, 3), 4).holds);
  EXPECT_EQ(SteinerBlockParams(19, 3), (SrgParams{57, 24, 11, 9}));
}

TEST(PropCConditionTest, Steiner4Examples) {
  EXPECT_TRUE(PropC4Holds(Rational(108), 7));
  EXPECT_FALSE(PropC4Holds(Rational(130), 7));
  EXPECT_THROW(PropCCondition(SrgParams{10, 3, 0, 1}, 2), std::domain_error);
}

TEST(PropCConditionTest, CSixWindow) {
  for (int n = 25; n <= 107; ++n) {
    if (Admissible4(n)) EXPECT_TRUE(PropC4Holds(Rational(n), 6)) << n;
  }
  EXPECT_FALSE(PropC4Holds(Rational(108), 6));
  // First admissible order past the window.
  EXPECT_FALSE(PropC4Holds(Rational(109), 6));
}

TEST(PropCConditionTest, CSevenWindow) {
  for (int n = 108; n <= 126; ++n) EXPECT_TRUE(PropC4Holds(Rational(n), 7)) << n;
  for (int n = 127; n <= 400; ++n) {
    // 127 and 128 are inadmissible and still lie below the root.
    if (Admissible4(n)) EXPECT_FALSE(PropC4Holds(Rational(n), 7)) << n;
  }
  EXPECT_TRUE(PropC4Holds(Rational(128), 7));
  EXPECT_FALSE(PropC4Holds(Rational(129), 7));
}

TEST(PropCConditionTest, RootsBracketedBySignChange) {
  // The c = 6 root lies in [107.3211, 107.3212], the c = 7 root in
  // [128.4291, 128.4292].
  EXPECT_TRUE(PropC4Holds(Rational(1073211, 10000), 6));
  EXPECT_FALSE(PropC4Holds(Rational(1073212, 10000), 6));
  EXPECT_TRUE(PropC4Holds(Rational(1284291, 10000), 7));
  EXPECT_FALSE(PropC4Holds(Rational(1284292, 10000), 7));
  // Both round to the same four decimals in the float reference.
  EXPECT_GT(oracle::PropCMarginSteiner4(107.32115L, 6), 0);
  EXPECT_LT(oracle::PropCMarginSteiner4(107.32125L, 6), 0);
  EXPECT_GT(oracle::PropCMarginSteiner4(128.42915L, 7), 0);
  EXPECT_LT(oracle::PropCMarginSteiner4(128.42925L, 7), 0);
}

TEST(PropCConditionTest, UnrepresentableValuesThrow) {
  // Fine fractions push the exact value past 64-bit fractions; that must be
  // an error, never a wrapped result.
  EXPECT_THROW(PropC4Holds(Rational(10732115, 100000), 6), std::overflow_error);
}

TEST(PropCConditionTest, AgreesWithFloatingPointReference) {
  for (int c = 3; c <= 7; ++c) {
    for (int n = 13; n <= 400; ++n) {
      const long double margin = oracle::PropCMarginSteiner4(n, c);
      if (std::fabs(margin) < 1e-6L) continue;
      ASSERT_EQ(PropC4Holds(Rational(n), c), margin > 0) << "n=" << n << " c=" << c;
    }
  }
}

TEST(PropCConditionTest, ReportRechecks) {
  for (int c = 3; c <= 7; ++c) {
    const BoundReport r = PropCCondition(SrgParams{57, 24, 11, 9}, c);
    EXPECT_EQ(Recheck(r), r.holds);
    EXPECT_EQ(r.name, "prop_c" + std::to_string(c));
  }
}

TEST(CliqueBoundTest, Examples) {
  const BoundReport sts19 = CliqueBound(SteinerBlockParams(19, 3));
  EXPECT_TRUE(sts19.holds);
  EXPECT_EQ(sts19.lhs, QuadraticValue(1));
  const BoundReport d37 = CliqueBound(SteinerBlockParams(37, 4));
  EXPECT_TRUE(d37.holds);
  EXPECT_EQ(d37.lhs, QuadraticValue(5));
  EXPECT_FALSE(CliqueBound(SteinerBlockParams(28, 4)).holds);
  const BoundReport ls36 = CliqueBound(LatinSquareParams(3, 6));
  EXPECT_TRUE(ls36.holds);
  EXPECT_EQ(ls36.lhs, QuadraticValue(2));
  EXPECT_FALSE(CliqueBound({15, 8, 4, 4}).holds);
}

TEST(InproductPairTest, IdenticalVectors) {
  const std::vector<std::vector<bool>> v(5, {true, false, true, true});
  const InproductResult r = InproductPair(v);
  EXPECT_EQ(r.inner_product, 3);
  EXPECT_GE(Rational(r.inner_product), r.guaranteed);
}

TEST(InproductPairTest, UnitVectors) {
  std::vector<std::vector<bool>> v(6, std::vector<bool>(6, false));
  for (int i = 0; i < 6; ++i) v[i][i] = true;
  const InproductResult r = InproductPair(v);
  EXPECT_EQ(r.inner_product, 0);
  EXPECT_EQ(r.guaranteed, Rational(0));
  EXPECT_THROW(InproductPair(std::span(v).first(1)), std::domain_error);
}

TEST(InproductPairTest, RandomVectorsMeetGuarantee) {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<bool>> v(50, std::vector<bool>(40));
    for (auto& row : v) {
      for (size_t i = 0; i < row.size(); ++i) row[i] = rng() % 3 == 0;
    }
    const InproductResult r = InproductPair(v);
    int64_t best = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      for (size_t j = i + 1; j < v.size(); ++j) {
        int64_t ip = 0;
        for (size_t x = 0; x < 40; ++x) ip += v[i][x] && v[j][x];
        best = std::max(best, ip);
      }
    }
    EXPECT_EQ(r.inner_product, best);
    EXPECT_GE(Rational(best), r.guaranteed);
  }
}

TEST(CkkProp24ConditionTest, Examples) {
  EXPECT_TRUE(CkkProp24Condition({0, 32, 0, 6}).holds);
  EXPECT_FALSE(CkkProp24Condition({0, 28, 0, 7}).holds);
  EXPECT_TRUE(CkkProp24Condition({0, 31, 0, 7}).holds);
  EXPECT_FALSE(CkkProp24Condition({0, 30, 0, 7}).holds);
}

TEST(CkkProp24ConditionTest, FeasibleTriangleFreeSmallMuHolds) {
  // Needs k >= 4μ: k = 3, μ = 2 hits equality and (28,9,0,4) fails.
  EXPECT_FALSE(CkkProp24Condition({0, 3, 0, 2}).holds);
  EXPECT_FALSE(CkkProp24Condition({28, 9, 0, 4}).holds);
  int checked = 0;
  for (const SrgParams& p : oracle::NaiveFeasible(1200)) {
    if (p.lambda != 0 || p.mu > 6 || p.k < 4 * p.mu) continue;
    EXPECT_TRUE(CkkProp24Condition(p).holds) << ToString(p);
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

TEST(NeighborhoodLowerBoundsTest, Examples) {
  const NeighborhoodBounds hs = NeighborhoodLowerBounds({50, 7, 0, 1});
  EXPECT_EQ(hs.edge, 12);
  EXPECT_EQ(hs.triangle, 18);
  EXPECT_EQ(hs.path2, 17);
  EXPECT_EQ(hs.nonadjacent_pair, 13);
  EXPECT_EQ(NeighborhoodLowerBounds({16, 5, 0, 2}).triangle, 12);
  // Raw path2 term at STS parameters: (7n-49)/2 is 4 more.
  for (int n = 15; n <= 45; n += 6) {
    EXPECT_EQ(NeighborhoodLowerBounds(SteinerBlockParams(n, 3)).path2 + 4, (7 * n - 49) / 2);
  }
}

TEST(SteinerSpanBoundTest, Examples) {
  EXPECT_EQ(SteinerSpanBound(31, 3, 9), Rational(66));
  EXPECT_EQ(SteinerSpanBound(31, 3, 0), Rational(0));
  EXPECT_THROW(SteinerSpanBound(31, 5, 3), std::domain_error);
  const int n = 127;
  const int p = static_cast<int>(std::ceil(std::sqrt(2.0 * (n - 16))));
  EXPECT_GT(SteinerSpanBound(n, 4, p), Rational(7 * n - 58, 3));
}

TEST(SpectralEdgeBoundTest, Examples) {
  EXPECT_EQ(SpectralEdgeBound({16, 6, 2, 2}, 8), QuadraticValue(16));
  EXPECT_EQ(SpectralEdgeBound({16, 5, 0, 2}, 5), QuadraticValue(Rational(55, 4)));
  for (int a = 3; a <= 8; ++a) {
    EXPECT_GT(SpectralEdgeBound({16, 5, 0, 2}, a), QuadraticValue(8)) << a;
  }
  for (int64_t t = 3; t <= 40; ++t) {
    const SrgParams p = ConferenceParams(t);
    const QuadraticValue gap = QuadraticValue(p.k) - Eigenvalues(p).theta2;
    EXPECT_GT(gap, QuadraticValue(4)) << t;
  }
  EXPECT_THROW(SpectralEdgeBound({16, 6, 2, 2}, 0), std::domain_error);
}

TEST(ConjectureStatusTest, Examples) {
  const ConjectureStatus hs = ClassifyConjectureStatus({50, 7, 0, 1});
  EXPECT_EQ(hs.kind, StatusKind::kProvenOK);
  EXPECT_TRUE(HasReason(hs, "K4Theorem"));

  const ConjectureStatus t6 = ClassifyConjectureStatus({15, 8, 4, 4});
  EXPECT_EQ(t6.kind, StatusKind::kCounterexampleFamily);
  EXPECT_EQ(t6.triangular_m, 6);

  const ConjectureStatus ls = ClassifyConjectureStatus({36, 15, 6, 6});
  EXPECT_EQ(ls.kind, StatusKind::kProvenOK);
  EXPECT_TRUE(HasReason(ls, "LatinSquare(t=3,n=6)"));

  EXPECT_EQ(ClassifyConjectureStatus({6, 3, 0, 3}).kind, StatusKind::kKnownOKByCitation);
  // Paley(13) is a conference graph, but the CKK inequality already settles it.
  const ConjectureStatus p13 = ClassifyConjectureStatus({13, 6, 2, 3});
  EXPECT_EQ(p13.kind, StatusKind::kProvenOK);
  EXPECT_TRUE(HasReason(p13, "CKKProp24"));
  EXPECT_THROW(ClassifyConjectureStatus({209, 16, 3, 1}), std::domain_error);
  EXPECT_EQ(ToString(StatusKind::kKnownOKByCitation), "KnownOK-by-citation");
}

TEST(ConjectureStatusTest, SteinerOnlyReasonNeedsDesign) {
  const ConjectureStatus s = ClassifyConjectureStatus(SteinerBlockParams(15, 3));
  EXPECT_EQ(s.kind, StatusKind::kProvenOK);
  EXPECT_TRUE(HasReason(s, "SteinerK3(n=15)"));
}

TEST(ConjectureStatusTest, NeverProvenForTriangular) {
  for (int64_t m = 6; m <= 60; ++m) {
    const ConjectureStatus s = ClassifyConjectureStatus(TriangularParams(m));
    EXPECT_EQ(s.kind, StatusKind::kCounterexampleFamily) << m;
  }
}

TEST(AllBoundsTest, EveryReportRechecks) {
  for (const SrgParams& p : oracle::NaiveFeasible(120)) {
    for (const BoundReport& r : AllBounds(p)) {
      ASSERT_EQ(Recheck(r), r.holds) << r.name << " " << ToString(p);
    }
  }
}

}  // namespace
}  // namespace srgcut
