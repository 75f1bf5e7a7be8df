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

#include "srgcut/json_io.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace srgcut {

Json ToJson(const QuadraticValue& x) {
  const Rational& r = x.rational_part();
  const Rational& c = x.surd_coefficient();
  const int64_t den = std::lcm(r.denominator(), c.denominator());
  Json j;
  j["num"] = r.numerator() * (den / r.denominator());
  j["surd"] = c.numerator() * (den / c.denominator());
  j["den"] = den;
  j["radicand"] = x.radicand();
  j["approx"] = x.ToDouble();
  return j;
}

QuadraticValue QuadraticFromJson(const Json& j) {
  const int64_t den = j.at("den").get<int64_t>();
  if (den <= 0) throw std::invalid_argument("quadratic value: den must be positive");
  return QuadraticValue(Rational(j.at("num").get<int64_t>(), den),
                        Rational(j.at("surd").get<int64_t>(), den),
                        j.at("radicand").get<int64_t>());
}

Json ToJson(const Rational& x) {
  return Json{{"num", x.numerator()}, {"den", x.denominator()}, {"approx", ToDouble(x)}};
}

Rational RationalFromJson(const Json& j) {
  const int64_t den = j.at("den").get<int64_t>();
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(j.at("num").get<int64_t>(), den);
}

Json ToJson(const SrgParams& p) {
  return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

SrgParams ParamsFromJson(const Json& j) {
  return {j.at("v").get<int64_t>(), j.at("k").get<int64_t>(), j.at("lambda").get<int64_t>(),
          j.at("mu").get<int64_t>()};
}

namespace {

Json FamiliesJson(const std::vector<FamilyTag>& tags) {
  Json out = Json::array();
  for (const FamilyTag& t : tags) out.push_back(ToString(t));
  return out;
}

}  // namespace

Json ParamsReportJson(const SrgParams& p) {
  Json j;
  j["params"] = ToJson(p);
  const FeasibilityVerdict verdict = BasicFeasible(p);
  if (IsValid(p)) {
    const SpectralData s = Eigenvalues(p);
    j["eigenvalues"] = {{"k", p.k}, {"theta2", ToJson(s.theta2)}, {"theta_v", ToJson(s.theta_v)}};
    j["f"] = ToJson(s.f);
    j["g"] = ToJson(s.g);
    j["conference"] = s.is_conference;
    j["families"] = FamiliesJson(ClassifyFamily(p));
  } else {
    j["eigenvalues"] = nullptr;
    j["f"] = nullptr;
    j["g"] = nullptr;
    j["conference"] = false;
    j["families"] = Json::array();
  }
  j["feasible"] = verdict.feasible;
  j["reasons"] = verdict.reasons;
  if (verdict.feasible) {
    const DerivedQuantities d = Derive(p);
    j["edge_neighborhood_size"] = d.edge_nbhd;
    j["edge_cut_target"] = d.edge_cut_target;
    j["k4_applicable"] = d.k4_applicable;
    j["status"] = ToJson(ClassifyConjectureStatus(p));
  }
  return j;
}

Json ToJson(const VertexSet& s) { return Json(s.members()); }

VertexSet VertexSetFromJson(const Json& j) {
  return VertexSet(j.get<std::vector<int>>());
}

Json ToJson(const CutResult& r) {
  Json j;
  j["kappa2"] = r.value ? Json(*r.value) : Json(nullptr);
  if (r.certificate) {
    j["A"] = ToJson(r.certificate->a);
    j["S"] = ToJson(r.certificate->s);
    j["B"] = ToJson(r.certificate->b);
  } else {
    j["A"] = j["S"] = j["B"] = nullptr;
  }
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound ? Json(*r.upper_bound) : Json(nullptr);
  j["status"] = ToString(r.status);
  if (r.matches_edge_neighborhood) {
    j["edge_neighborhood_of"] = {r.matches_edge_neighborhood->first,
                                 r.matches_edge_neighborhood->second};
  } else {
    j["edge_neighborhood_of"] = nullptr;
  }
  j["nodes"] = r.nodes;
  if (!r.lower_bound_trace.empty()) {
    Json trace = Json::array();
    for (const LowerBoundEntry& e : r.lower_bound_trace) {
      trace.push_back({{"e", {e.e.first, e.e.second}}, {"f", {e.f.first, e.f.second}},
                       {"flow", e.flow}});
    }
    j["lower_bound_trace"] = trace;
  }
  return j;
}

CutResult CutResultFromJson(const Json& j) {
  CutResult r;
  const std::string status = j.at("status").get<std::string>();
  if (status == "exact") {
    r.status = CutStatus::kExact;
  } else if (status == "no-restricted-separator") {
    r.status = CutStatus::kNoRestrictedSeparator;
  } else if (status == "bounded") {
    r.status = CutStatus::kBounded;
  } else {
    throw std::invalid_argument("cut result: unknown status '" + status + "'");
  }
  if (!j.at("kappa2").is_null()) r.value = j.at("kappa2").get<int>();
  if (!j.at("S").is_null()) {
    r.certificate = SeparatorCertificate{VertexSetFromJson(j.at("A")),
                                         VertexSetFromJson(j.at("S")),
                                         VertexSetFromJson(j.at("B"))};
  }
  r.lower_bound = j.at("lower_bound").get<int>();
  if (j.contains("upper_bound") && !j.at("upper_bound").is_null()) {
    r.upper_bound = j.at("upper_bound").get<int>();
  }
  if (!j.at("edge_neighborhood_of").is_null()) {
    const auto e = j.at("edge_neighborhood_of").get<std::vector<int>>();
    if (e.size() != 2) throw std::invalid_argument("cut result: edge needs two endpoints");
    r.matches_edge_neighborhood = std::make_pair(e[0], e[1]);
  }
  if (j.contains("nodes")) r.nodes = j.at("nodes").get<int64_t>();
  if (j.contains("lower_bound_trace")) {
    for (const Json& e : j.at("lower_bound_trace")) {
      const auto a = e.at("e").get<std::vector<int>>();
      const auto b = e.at("f").get<std::vector<int>>();
      r.lower_bound_trace.push_back({{a.at(0), a.at(1)}, {b.at(0), b.at(1)}, e.at("flow").get<int>()});
    }
  }
  return r;
}

Json ToJson(const EdgeCutResult& r) {
  return Json{{"value", r.value}, {"A", ToJson(r.side)}};
}

Json ToJson(const Design& d) {
  return Json{{"n", d.n_points}, {"K", d.block_size}, {"blocks", d.blocks}};
}

Design DesignFromJson(const Json& j) {
  Design d;
  d.n_points = j.at("n").get<int>();
  d.block_size = j.at("K").get<int>();
  d.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  return d;
}

Json ToJson(const OrthogonalArray& oa) {
  return Json{{"t", oa.t}, {"n", oa.n}, {"columns", oa.columns}};
}

OrthogonalArray OrthogonalArrayFromJson(const Json& j) {
  OrthogonalArray oa;
  oa.t = j.at("t").get<int>();
  oa.n = j.at("n").get<int>();
  oa.columns = j.at("columns").get<std::vector<std::vector<int>>>();
  return oa;
}

Json ToJson(const BoundReport& r) {
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  return Json{{"name", r.name},
              {"inputs", inputs},
              {"lhs", ToJson(r.lhs)},
              {"rhs", ToJson(r.rhs)},
              {"comparison", r.comparison == Comparison::kGreater ? ">" : ">="},
              {"holds", r.holds},
              {"citation", r.citation}};
}

Json ToJson(const ConjectureStatus& s) {
  Json j{{"kind", ToString(s.kind)},
         {"reasons", s.reasons},
         {"requires_design_structure", s.requires_design_structure}};
  if (s.kind == StatusKind::kCounterexampleFamily) j["triangular_m"] = s.triangular_m;
  return j;
}

Json ToJson(const ScanRow& row) {
  Json filters = Json::object();
  for (const BoundReport& r : row.filters) filters[r.name] = r.holds;
  return Json{{"params", ToJson(row.params)},
              {"theta2", ToJson(row.spectral.theta2)},
              {"theta_v", ToJson(row.spectral.theta_v)},
              {"f", ToJson(row.spectral.f)},
              {"g", ToJson(row.spectral.g)},
              {"families", FamiliesJson(row.families)},
              {"feasible", row.feasibility.feasible},
              {"reasons", row.feasibility.reasons},
              {"status", row.status ? ToJson(*row.status) : Json(nullptr)},
              {"filters", filters}};
}

Json ToJson(const Survey& s) {
  Json lookalike = Json::array(), other = Json::array();
  for (const ScanRow& r : s.steiner_lookalike) lookalike.push_back(ToJson(r));
  for (const ScanRow& r : s.other) other.push_back(ToJson(r));
  return Json{{"m", s.m},
              {"v_max", s.v_max},
              {"steiner_lookalike_count", s.steiner_lookalike.size()},
              {"other_count", s.other.size()},
              {"steiner_lookalike", lookalike},
              {"other", other}};
}

}  // namespace srgcut
