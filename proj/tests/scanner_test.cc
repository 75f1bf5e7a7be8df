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

#include "srgcut/scanner.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "srgcut/bounds.h"
#include "srgcut/srg_params.h"

namespace srgcut {
namespace {

std::vector<SrgParams> ParamsOf(const std::vector<ScanRow>& rows) {
  std::vector<SrgParams> out;
  for (const ScanRow& r : rows) out.push_back(r.params);
  return out;
}

const std::vector<SrgParams>& ReferenceList() {
  static const std::vector<SrgParams> list = {
      {45, 12, 3, 3},   {50, 7, 0, 1},    {56, 10, 0, 2},   {77, 16, 0, 4},
      {85, 14, 3, 2},   {85, 20, 3, 5},   {96, 19, 2, 4},   {96, 20, 4, 4},
      {99, 14, 1, 2},   {115, 18, 1, 3},  {125, 28, 3, 7},  {133, 24, 5, 4},
      {133, 32, 6, 8},  {156, 30, 4, 6},  {162, 21, 0, 3},  {162, 23, 4, 3},
      {165, 36, 3, 9},  {175, 30, 5, 5},  {176, 25, 0, 4},  {189, 48, 12, 12},
      {196, 39, 2, 9}};
  return list;
}

TEST(ParsePredicateTest, AllKeys) {
  const Predicate p = ParsePredicate(
      "theta_v=-3,mu=1,k_max=28,k_mod=1:3,k4,primitive,spectral_only,exclude=steiner+latin");
  EXPECT_EQ(p.theta_v, -3);
  EXPECT_EQ(p.mu, 1);
  EXPECT_EQ(p.k_max, 28);
  ASSERT_TRUE(p.k_mod.has_value());
  EXPECT_EQ(p.k_mod->first, 1);
  EXPECT_EQ(p.k_mod->second, 3);
  EXPECT_TRUE(p.k4);
  EXPECT_TRUE(p.primitive);
  EXPECT_FALSE(p.require_feasible);
  EXPECT_EQ(p.exclude_families.size(), 2u);
}

TEST(ParsePredicateTest, Malformed) {
  EXPECT_THROW(ParsePredicate("theta_v=abc"), std::invalid_argument);
  EXPECT_THROW(ParsePredicate("frobnicate"), std::invalid_argument);
  EXPECT_THROW(ParsePredicate("k_mod=3"), std::invalid_argument);
  EXPECT_THROW(ParsePredicate("exclude=petersen"), std::invalid_argument);
  EXPECT_THROW(ParsePredicate("mu"), std::invalid_argument);
}

TEST(EnumerateFeasibleTest, MuOneOctet) {
  const auto rows = EnumerateFeasible(
      600, ParsePredicate("theta_v=-3,mu=1,k_max=28,k_mod=1:3,spectral_only"));
  const std::vector<SrgParams> expected = {
      {50, 7, 0, 1},    {91, 10, 1, 1},   {144, 13, 2, 1},  {209, 16, 3, 1},
      {286, 19, 4, 1},  {375, 22, 5, 1},  {476, 25, 6, 1},  {589, 28, 7, 1}};
  EXPECT_EQ(ParamsOf(rows), expected);
}

TEST(EnumerateFeasibleTest, MultiplicityFilterOnOctet) {
  const auto rows = EnumerateFeasible(
      600, ParsePredicate("theta_v=-3,mu=1,k_max=28,k_mod=1:3,spectral_only"));
  std::vector<SrgParams> integral;
  for (const ScanRow& r : rows) {
    if (MultiplicitiesIntegral(r.params)) integral.push_back(r.params);
  }
  EXPECT_EQ(integral, (std::vector<SrgParams>{{50, 7, 0, 1}, {209, 16, 3, 1}, {375, 22, 5, 1}}));
  std::vector<SrgParams> feasible;
  for (const SrgParams& p : integral) {
    if (BasicFeasible(p).feasible) feasible.push_back(p);
  }
  // The μ = 1 bound removes both (209,16,3,1) and (375,22,5,1).
  EXPECT_EQ(feasible, (std::vector<SrgParams>{{50, 7, 0, 1}}));
}

TEST(EnumerateFeasibleTest, MultiplicityFilterOnMuTwoSextet) {
  const auto rows =
      EnumerateFeasible(200, ParsePredicate("theta_v=-3,mu=2,k_max=20,spectral_only"));
  ASSERT_EQ(rows.size(), 6u);
  std::vector<SrgParams> integral;
  for (const ScanRow& r : rows) {
    if (MultiplicitiesIntegral(r.params)) integral.push_back(r.params);
  }
  EXPECT_EQ(integral, (std::vector<SrgParams>{{16, 5, 0, 2}, {85, 14, 3, 2}}));
}

TEST(EnumerateFeasibleTest, MuThreeSets) {
  const auto rows =
      EnumerateFeasible(200, ParsePredicate("theta_v=-3,mu=3,k_max=12,spectral_only"));
  EXPECT_EQ(ParamsOf(rows), (std::vector<SrgParams>{
                                {6, 3, 0, 3}, {15, 6, 1, 3}, {28, 9, 2, 3}, {45, 12, 3, 3}}));
  // f = 72/5 for (28,9,2,3), so the feasibility filter drops it.
  const auto feasible = EnumerateFeasible(200, ParsePredicate("theta_v=-3,mu=3,k_max=12"));
  EXPECT_EQ(ParamsOf(feasible),
            (std::vector<SrgParams>{{6, 3, 0, 3}, {15, 6, 1, 3}, {45, 12, 3, 3}}));
}

TEST(EnumerateFeasibleTest, TinyRangeIsEmpty) {
  EXPECT_TRUE(EnumerateFeasible(3, Predicate{}).empty());
  EXPECT_EQ(ParamsOf(EnumerateFeasible(4, Predicate{})),
            (std::vector<SrgParams>{{4, 2, 0, 2}}));
  EXPECT_THROW(EnumerateFeasible(kMaxScanVertices + 1, Predicate{}), std::domain_error);
}

TEST(EnumerateFeasibleTest, MatchesReferenceEnumeration) {
  const auto rows = EnumerateFeasible(250, Predicate{});
  EXPECT_EQ(ParamsOf(rows), oracle::NaiveFeasible(251));
  for (const ScanRow& r : rows) {
    ASSERT_TRUE(r.feasibility.feasible);
    ASSERT_TRUE(r.status.has_value());
  }
}

TEST(EnumerateFeasibleTest, ThetaFilterIsExact) {
  for (int64_t m : {2, 3, 4, 5}) {
    Predicate q;
    q.theta_v = -m;
    for (const ScanRow& r : EnumerateFeasible(400, q)) {
      ASSERT_EQ(r.spectral.theta_v, QuadraticValue(-m)) << ToString(r.params);
    }
  }
}

TEST(EnumerateFeasibleTest, Monotone) {
  const Predicate q = ParsePredicate("theta_v=-4,primitive");
  const auto small = ParamsOf(EnumerateFeasible(300, q));
  const auto large = ParamsOf(EnumerateFeasible(900, q));
  EXPECT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end()));
  EXPECT_LT(small.size(), large.size());
}

TEST(EnumerateFeasibleTest, IndependentOfThreadCount) {
  const Predicate q = ParsePredicate("k4");
  EXPECT_EQ(ParamsOf(EnumerateFeasible(500, q, 1)), ParamsOf(EnumerateFeasible(500, q, 6)));
}

TEST(KFourListTest, MatchesReferenceFixture) {
  EXPECT_EQ(ReproduceSection2List(), ReferenceList());
}

TEST(KFourListTest, MatchesReferenceComputation) {
  const auto steiner = oracle::SteinerFamily(200);
  const auto latin = oracle::LatinSquareFamily(200);
  const std::set<SrgParams> families(steiner.begin(), steiner.end());
  std::vector<SrgParams> expected;
  for (const SrgParams& p : oracle::NaiveFeasible(200)) {
    if (4 * std::max(p.lambda, p.mu) > p.k) continue;
    if (families.count(p)) continue;
    if (std::find(latin.begin(), latin.end(), p) != latin.end()) continue;
    expected.push_back(p);
  }
  EXPECT_EQ(ReproduceSection2List(), expected);
  const auto list = ReproduceSection2List();
  EXPECT_EQ(std::count(list.begin(), list.end(), SrgParams{36, 15, 6, 6}), 0);
}

TEST(ScanMinEigenvalueTest, StructuralInvariants) {
  for (int64_t m : {3, 4}) {
    const Survey s = ScanMinEigenvalue(m, 3000);
    std::set<SrgParams> seen;
    for (const auto* bucket : {&s.steiner_lookalike, &s.other}) {
      for (const ScanRow& r : *bucket) {
        ASSERT_EQ(r.spectral.theta_v, QuadraticValue(-m));
        ASSERT_FALSE(CkkProp24Condition(r.params).holds);
        ASSERT_TRUE(BasicFeasible(r.params).feasible);
        ASSERT_TRUE(seen.insert(r.params).second) << "row in both buckets";
      }
    }
    for (const ScanRow& r : s.other) {
      for (const FamilyTag& tag : r.families) {
        ASSERT_FALSE(tag.kind == FamilyKind::kSteinerBlockGraph && tag.b == m);
      }
    }
    // Every admissible 2-(n,m,1) parameter set in range failing the CKK
    // inequality sits in the lookalike bucket.
    for (const SrgParams& p : oracle::SteinerFamily(3001)) {
      if (p.mu != m * m || p.mu >= p.k) continue;
      if (!BasicFeasible(p).feasible || CkkProp24Condition(p).holds) continue;
      if (Eigenvalues(p).theta_v != QuadraticValue(-m)) continue;
      const bool found = std::any_of(s.steiner_lookalike.begin(), s.steiner_lookalike.end(),
                                     [&](const ScanRow& r) { return r.params == p; });
      ASSERT_TRUE(found) << ToString(p);
    }
  }
  EXPECT_THROW(ScanMinEigenvalue(5, 100), std::domain_error);
}

TEST(ScanMinEigenvalueTest, SmallRangeRowsAreDefinitional) {
  const Survey s = ScanMinEigenvalue(3, 50);
  for (const auto* bucket : {&s.steiner_lookalike, &s.other}) {
    for (const ScanRow& r : *bucket) {
      EXPECT_EQ(r.spectral.theta_v, QuadraticValue(-3));
      EXPECT_FALSE(CkkProp24Condition(r.params).holds);
    }
  }
}

TEST(ToCsvTest, HeaderAndRows) {
  const auto rows = EnumerateFeasible(20, ParsePredicate("theta_v=-2"));
  const std::string csv = ToCsv(rows);
  EXPECT_EQ(csv.rfind("v,k,lambda,mu,theta2,thetav,f,g,families,status,", 0), 0u);
  EXPECT_EQ(static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n')), rows.size() + 1);
}

}  // namespace
}  // namespace srgcut
