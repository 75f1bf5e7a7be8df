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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fixtures.h"
#include "srgcut/bounds.h"
#include "srgcut/connectivity.h"
#include "srgcut/designs.h"
#include "srgcut/graph.h"
#include "srgcut/json_io.h"
#include "srgcut/named_graphs.h"
#include "srgcut/scanner.h"
#include "srgcut/srg_params.h"

namespace srgcut::cli {
namespace {

// Raised by commands for bad input; mapped to kUsageError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  int threads = 0;
  uint64_t seed = 20260101;
};

void Emit(Context& ctx, const Json& j) { ctx.out << j.dump(2) << '\n'; }

Graph ReadGraph(Context& ctx, const std::string& file) {
  std::string text;
  if (file.empty() || file == "-") {
    text.assign(std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(file);
    if (!f) throw UsageError("cannot open " + file);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  // One graph per invocation: the first non-blank line.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) break;
    line.clear();
  }
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  if (line.empty()) throw UsageError("no graph6 input");
  try {
    return LoadGraph6(line);
  } catch (const Graph6Error& e) {
    throw UsageError(std::string("graph6: ") + e.what());
  }
}

Graph BuildGraph(const std::string& spec) {
  try {
    return GraphFromSpec(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  } catch (const NoConstructionError& e) {
    throw UsageError(e.what());
  }
}

SrgParams ParseParamsArg(const std::string& text) {
  try {
    return ParseParams(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

// Parameters of g when it is a connected SRG.
std::optional<SrgParams> SrgOf(const Graph& g) {
  if (g.num_vertices() < 2 || !IsConnected(g)) return std::nullopt;
  const SrgVerification v = VerifySrg(g);
  return v.params;
}

std::string SetString(const VertexSet& s) {
  std::string out = "{";
  for (int v : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// construct / design / verify
// ---------------------------------------------------------------------------

int Construct(Context& ctx, const std::string& spec) {
  const Graph g = BuildGraph(spec);
  const std::string g6 = WriteGraph6(g);
  std::optional<SrgParams> params;
  std::string failure;
  if (g.num_vertices() >= 2 && IsConnected(g)) {
    const SrgVerification v = VerifySrg(g);
    params = v.params;
    failure = v.failure;
  } else {
    failure = "disconnected or trivial graph";
  }
  ctx.err << (params ? ToString(*params) : "not strongly regular: " + failure) << '\n';
  if (ctx.json) {
    Emit(ctx, Json{{"spec", spec},
                   {"vertices", g.num_vertices()},
                   {"graph6", g6},
                   {"params", params ? ToJson(*params) : Json(nullptr)}});
  } else {
    ctx.out << g6 << '\n';
  }
  return kOk;
}

int DesignCommand(Context& ctx, const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (kind == "sts" || kind == "design4") {
      const int n = std::stoi(arg);
      Emit(ctx, ToJson(kind == "sts" ? SteinerTripleSystem(n) : Steiner2n4Design(n)));
      return kOk;
    }
    if (kind == "oa") {
      const std::size_t comma = arg.find(',');
      if (comma == std::string::npos) throw UsageError("oa needs t,n");
      Emit(ctx, ToJson(MakeOrthogonalArray(std::stoi(arg.substr(0, comma)),
                                           std::stoi(arg.substr(comma + 1)))));
      return kOk;
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown design spec '" + spec + "' (sts:n, design4:n, oa:t,n)");
}

int Verify(Context& ctx, const std::string& file) {
  const Graph g = ReadGraph(ctx, file);
  if (g.num_vertices() < 2 || !IsConnected(g)) {
    throw UsageError("verify: graph must be connected with at least 2 vertices");
  }
  const SrgVerification v = VerifySrg(g);
  if (ctx.json) {
    Json j{{"srg", v.ok()}, {"params", v.ok() ? ToJson(*v.params) : Json(nullptr)}};
    if (!v.ok()) j["failure"] = v.failure;
    Emit(ctx, j);
  } else {
    ctx.out << (v.ok() ? ToString(*v.params) : "not strongly regular: " + v.failure) << '\n';
  }
  return v.ok() ? kOk : kPropertyViolation;
}

// ---------------------------------------------------------------------------
// kappa2 / edge-cut
// ---------------------------------------------------------------------------

struct Kappa2Flags {
  std::string file;
  bool brute = false;
  int64_t budget = SolverOptions{}.node_limit;
  bool trace = false;
};

CutResult SolveKappa2(const Context& ctx, const Graph& g, const Kappa2Flags& flags) {
  if (!IsConnected(g)) throw UsageError("kappa2: graph is disconnected");
  if (flags.brute) {
    if (g.num_vertices() > kBruteForceMaxVertices) {
      throw UsageError("kappa2 --brute: at most " + std::to_string(kBruteForceMaxVertices) +
                       " vertices");
    }
    return Kappa2BruteForce(g);
  }
  SolverOptions options;
  options.node_limit = flags.budget;
  options.threads = ctx.threads;
  options.keep_trace = flags.trace;
  return Kappa2Exact(g, options);
}

int Kappa2(Context& ctx, const Kappa2Flags& flags) {
  const Graph g = ReadGraph(ctx, flags.file);
  const CutResult r = SolveKappa2(ctx, g, flags);
  Json j = ToJson(r);
  int code = kOk;
  if (const auto p = SrgOf(g)) {
    const int target = static_cast<int>(Derive(*p).edge_nbhd);
    j["srg"] = ToJson(*p);
    j["target"] = target;
    const std::optional<int> found = r.value ? r.value : r.upper_bound;
    if (found && *found < target) code = kPropertyViolation;
    if (r.value && *r.value != target) code = kPropertyViolation;
  }
  Emit(ctx, j);
  if (code == kPropertyViolation && r.certificate) {
    ctx.err << "kappa2 differs from 2k-lambda-2; certificate S = "
            << SetString(r.certificate->s) << '\n';
  }
  return code;
}

int EdgeCut(Context& ctx, const std::string& file, bool exhaustive) {
  const Graph g = ReadGraph(ctx, file);
  if (!IsConnected(g)) throw UsageError("edge-cut: graph is disconnected");
  if (g.num_vertices() < 4) throw UsageError("edge-cut: fewer than 4 vertices");
  EdgeCutResult r;
  try {
    r = exhaustive ? RestrictedEdgeCutExhaustive(g) : RestrictedEdgeCut(g, ctx.threads);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  Json j = ToJson(r);
  int code = kOk;
  if (const auto p = SrgOf(g)) {
    j["srg"] = ToJson(*p);
    j["target"] = Derive(*p).edge_cut_target;
    if (r.value < Derive(*p).edge_cut_target) code = kPropertyViolation;
  }
  if (ctx.json) {
    Emit(ctx, j);
  } else {
    ctx.out << "restricted edge cut " << r.value << " with A = " << SetString(r.side) << '\n';
  }
  return code;
}

// ---------------------------------------------------------------------------
// params / bounds / prop-c
// ---------------------------------------------------------------------------

int Params(Context& ctx, const std::string& text) {
  const SrgParams p = ParseParamsArg(text);
  const Json j = ParamsReportJson(p);
  if (ctx.json) {
    Emit(ctx, j);
  } else {
    ctx.out << ToString(p) << (j["feasible"].get<bool>() ? " feasible" : " infeasible") << '\n';
    if (IsValid(p)) {
      const SpectralData s = Eigenvalues(p);
      ctx.out << "  theta2 = " << s.theta2.ToString() << ", theta_v = " << s.theta_v.ToString()
              << '\n'
              << "  f = " << s.f.ToString() << ", g = " << s.g.ToString() << '\n';
      for (const FamilyTag& tag : ClassifyFamily(p)) ctx.out << "  family " << ToString(tag) << '\n';
    }
    for (const auto& reason : j["reasons"]) ctx.out << "  reason: " << reason.get<std::string>() << '\n';
    if (j.contains("status")) {
      ctx.out << "  conjecture status: " << j["status"]["kind"].get<std::string>();
      for (const auto& r : j["status"]["reasons"]) ctx.out << ' ' << r.get<std::string>();
      ctx.out << '\n';
    }
  }
  return j["feasible"].get<bool>() ? kOk : kPropertyViolation;
}

void PrintReports(Context& ctx, const std::vector<BoundReport>& reports) {
  for (const BoundReport& r : reports) {
    ctx.out << std::left << std::setw(14) << r.name << ' ' << std::setw(22) << r.lhs.ToString()
            << (r.comparison == Comparison::kGreater ? " >  " : " >= ") << std::setw(22)
            << r.rhs.ToString() << (r.holds ? " holds" : " fails") << '\n';
  }
}

int Bounds(Context& ctx, const std::string& text, const std::vector<int64_t>& haemers) {
  const SrgParams p = ParseParamsArg(text);
  if (!IsValid(p)) throw UsageError("bounds: parameters violate the counting identity");
  const std::vector<BoundReport> reports = AllBounds(p);
  const NeighborhoodBounds nb = NeighborhoodLowerBounds(p);
  std::optional<Rational> h;
  if (!haemers.empty()) {
    if (haemers.size() != 2) throw UsageError("--haemers expects a,b");
    try {
      h = HaemersLowerBound(p, haemers[0], haemers[1]);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }
  if (ctx.json) {
    Json list = Json::array();
    for (const BoundReport& r : reports) list.push_back(ToJson(r));
    Json j{{"params", ToJson(p)},
           {"bounds", list},
           {"neighborhood",
            {{"edge", nb.edge},
             {"triangle", nb.triangle},
             {"path2", nb.path2},
             {"nonadjacent_pair", nb.nonadjacent_pair}}}};
    if (h) j["haemers"] = {{"a", haemers[0]}, {"b", haemers[1]}, {"value", ToJson(*h)}};
    Emit(ctx, j);
    return kOk;
  }
  ctx.out << ToString(p) << '\n';
  PrintReports(ctx, reports);
  ctx.out << "neighbourhoods: edge " << nb.edge << ", triangle " << nb.triangle << ", path "
          << nb.path2 << ", non-adjacent pair " << nb.nonadjacent_pair << '\n';
  if (h) {
    ctx.out << "haemers(a=" << haemers[0] << ",b=" << haemers[1] << ") = " << ToString(*h)
            << " ≈ " << ToDecimal(*h, 4) << '\n';
  }
  return kOk;
}

Rational ParseRational(const std::string& text) {
  const std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    const int64_t den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in " + text);
    return Rational(std::stoll(text.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw UsageError("bad rational '" + text + "'");
  }
}

int PropC(Context& ctx, int c, const std::string& n_text, int block) {
  if (c < 3) throw UsageError("prop-c: c must be >= 3");
  const Rational n = ParseRational(n_text);
  const BoundReport r = PropCCondition(SteinerFormalParams(n, block), c);
  if (ctx.json) {
    Emit(ctx, ToJson(r));
  } else {
    PrintReports(ctx, {r});
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// scan / survey
// ---------------------------------------------------------------------------

void EmitRows(Context& ctx, const std::vector<ScanRow>& rows, const std::string& format) {
  if (format == "json" || ctx.json) {
    Json list = Json::array();
    for (const ScanRow& r : rows) list.push_back(ToJson(r));
    Emit(ctx, list);
  } else {
    ctx.out << ToCsv(rows);
  }
}

int Scan(Context& ctx, int64_t v_max, const std::string& predicate, const std::string& format) {
  Predicate q;
  try {
    q = ParsePredicate(predicate);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (v_max > kMaxScanVertices) throw UsageError("scan: --vmax above 1000000");
  EmitRows(ctx, EnumerateFeasible(v_max, q, ctx.threads), format);
  return kOk;
}

int SurveyCommand(Context& ctx, int64_t m, int64_t v_max, const std::string& format) {
  if (m != 3 && m != 4) throw UsageError("survey: --m must be 3 or 4");
  if (v_max > kMaxScanVertices) throw UsageError("survey: --vmax above 1000000");
  const Survey s = ScanMinEigenvalue(m, v_max, ctx.threads);
  if (format == "json" || ctx.json) {
    Emit(ctx, ToJson(s));
    return kOk;
  }
  ctx.err << "theta_v = -" << m << ", v <= " << v_max << ": " << s.steiner_lookalike.size()
          << " Steiner-parameter rows, " << s.other.size() << " other rows\n";
  std::vector<ScanRow> rows = s.steiner_lookalike;
  rows.insert(rows.end(), s.other.begin(), s.other.end());
  std::sort(rows.begin(), rows.end(),
            [](const ScanRow& a, const ScanRow& b) { return a.params < b.params; });
  ctx.out << ToCsv(rows);
  return kOk;
}

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

struct Check {
  Json report;
  bool ok = true;
};

Check ReproduceSection2() {
  const Json fixture = Json::parse(FixtureText("section2_list"));
  std::set<SrgParams> expected;
  std::map<SrgParams, bool> unknown;
  for (const Json& row : fixture["rows"]) {
    const auto v = row["params"].get<std::vector<int64_t>>();
    const SrgParams p{v[0], v[1], v[2], v[3]};
    expected.insert(p);
    unknown[p] = row["existence_unknown"].get<bool>();
  }
  const std::vector<SrgParams> got = ReproduceSection2List();
  const std::set<SrgParams> got_set(got.begin(), got.end());
  Check c;
  Json rows = Json::array(), missing = Json::array(), extra = Json::array();
  for (const SrgParams& p : got) {
    rows.push_back({{"params", ToString(p)}, {"existence_unknown", unknown.count(p) ? unknown[p] : false}});
    if (!expected.count(p)) extra.push_back(ToString(p));
  }
  for (const SrgParams& p : expected) {
    if (!got_set.count(p)) missing.push_back(ToString(p));
  }
  c.ok = missing.empty() && extra.empty();
  c.report = {{"target", "section2-list"}, {"count", got.size()}, {"rows", rows},
              {"missing", missing}, {"unexpected", extra}};
  return c;
}

Check ReproduceKappa2(const Context& ctx, const std::string& kind, const std::string& key,
                      const Graph& g, std::optional<int> formula) {
  const Json fixture = Json::parse(FixtureText("kappa2"));
  std::optional<int> expected = formula;
  bool from_fixture = false;
  if (fixture[kind].contains(key)) {
    const Json& e = fixture[kind][key];
    expected = e.is_null() ? std::nullopt : std::optional<int>(e.get<int>());
    from_fixture = true;
  } else if (!formula) {
    throw UsageError("no reference value for " + kind + ":" + key);
  }
  SolverOptions options;
  options.threads = ctx.threads;
  const CutResult r = Kappa2Exact(g, options);
  Check c;
  c.report = ToJson(r);
  c.report["expected"] = expected ? Json(*expected) : Json(nullptr);
  c.report["reference"] = from_fixture ? "fixture" : "formula";
  if (const auto p = SrgOf(g)) c.report["srg"] = ToJson(*p);
  c.ok = r.status != CutStatus::kBounded && r.value == expected;
  return c;
}

Check ReproduceSts(const Context& ctx, const std::string& arg) {
  int n = 0;
  try {
    n = std::stoi(arg);
  } catch (const std::exception&) {
    throw UsageError("sts-kappa2 needs an integer order");
  }
  const Graph g = BuildGraph("sts:" + arg);
  std::optional<int> formula;
  if (n >= 13) formula = (5 * n - 25) / 2;
  Check c = ReproduceKappa2(ctx, "sts", std::to_string(n), g, formula);
  c.report["target"] = "sts-kappa2:" + arg;
  return c;
}

Check ReproduceOa(const Context& ctx, const std::string& arg) {
  const std::size_t comma = arg.find(',');
  if (comma == std::string::npos) throw UsageError("oa-kappa2 needs t,n");
  int t = 0, n = 0;
  try {
    t = std::stoi(arg.substr(0, comma));
    n = std::stoi(arg.substr(comma + 1));
  } catch (const std::exception&) {
    throw UsageError("oa-kappa2 needs integers t,n");
  }
  const Graph g = BuildGraph("oa:" + arg);
  std::optional<int> formula;
  if (t >= 3 && n >= 2 * t) formula = (2 * t - 1) * n - t * t + t - 2;
  Check c = ReproduceKappa2(ctx, "oa", std::to_string(t) + "," + std::to_string(n), g, formula);
  c.report["target"] = "oa-kappa2:" + arg;
  return c;
}

std::string Shape(const Graph& g, const VertexSet& a) {
  const int size = a.size();
  int64_t inner = 0;
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) inner += g.adjacent(a.members()[i], a.members()[j]);
  }
  if (size == 2 && inner == 1) return "edge";
  if (size == 3 && inner == 3) return "triangle";
  return "other(" + std::to_string(size) + ")";
}

Check ReproduceEdgeTheorem(const std::string& name) {
  const Graph g = BuildGraph(name);
  const auto p = SrgOf(g);
  if (!p) throw UsageError("edge-theorem: " + name + " is not a connected SRG");
  if (g.num_vertices() > 24) throw UsageError("edge-theorem: exhaustive check needs v <= 24");
  const int64_t target = Derive(*p).edge_cut_target;
  const auto cuts = EnumerateEdgeCuts(g, target);
  const EdgeCutResult best = RestrictedEdgeCutExhaustive(g);
  std::set<std::string> shapes;
  for (const auto& w : cuts) {
    if (w.value == best.value) shapes.insert(Shape(g, w.side));
  }
  Check c;
  c.report = {{"target", "edge-theorem:" + name}, {"srg", ToJson(*p)}, {"min_cut", best.value},
              {"bound", target}, {"minimisers", cuts.size()},
              {"equality_shapes", std::vector<std::string>(shapes.begin(), shapes.end())}};
  c.ok = best.value >= target;
  const Json fixture = Json::parse(FixtureText("edge_theorem"));
  if (fixture.contains(name)) {
    const auto want = fixture[name]["equality_shapes"].get<std::vector<std::string>>();
    c.ok = c.ok && best.value == fixture[name]["value"].get<int>() &&
           std::set<std::string>(want.begin(), want.end()) == shapes;
    c.report["reference"] = "fixture";
  } else {
    c.report["reference"] = "bound only";
  }
  return c;
}

Check ReproduceScan(const Context& ctx, const std::string& arg) {
  const std::size_t comma = arg.find(',');
  if (comma == std::string::npos) throw UsageError("scan target needs m,vmax");
  int64_t m = 0, v_max = 0;
  try {
    m = std::stoll(arg.substr(0, comma));
    v_max = std::stoll(arg.substr(comma + 1));
  } catch (const std::exception&) {
    throw UsageError("scan target needs integers m,vmax");
  }
  if (m != 3 && m != 4) throw UsageError("scan target: m must be 3 or 4");
  if (v_max > kMaxScanVertices) throw UsageError("scan target: vmax above 1000000");
  const Survey s = ScanMinEigenvalue(m, v_max, ctx.threads);
  std::vector<std::string> violations;
  auto check_row = [&](const ScanRow& row, bool lookalike) {
    const std::string id = ToString(row.params);
    if (!row.feasibility.feasible) violations.push_back(id + " infeasible");
    if (row.spectral.theta_v != QuadraticValue(-m)) violations.push_back(id + " wrong theta_v");
    if (CkkProp24Condition(row.params).holds) violations.push_back(id + " satisfies the CKK condition");
    const bool tagged = std::any_of(row.families.begin(), row.families.end(), [&](const FamilyTag& t) {
      return t.kind == FamilyKind::kSteinerBlockGraph && t.b == m;
    });
    if (tagged != lookalike) violations.push_back(id + " in the wrong bucket");
  };
  for (const ScanRow& r : s.steiner_lookalike) check_row(r, true);
  for (const ScanRow& r : s.other) check_row(r, false);
  const Json reference = Json::parse(FixtureText("survey_reference"))[std::to_string(m)];
  Check c;
  c.report = {{"target", "scan:" + arg},
              {"m", m},
              {"v_max", v_max},
              {"steiner_lookalike", s.steiner_lookalike.size()},
              {"other", s.other.size()},
              {"reference_totals", reference},
              {"violations", violations}};
  c.ok = violations.empty();
  return c;
}

Check ReproduceHaemers() {
  const Json fixture = Json::parse(FixtureText("haemers"));
  const auto v = fixture["params"].get<std::vector<int64_t>>();
  const int64_t a = fixture["a"].get<int64_t>(), b = fixture["b"].get<int64_t>();
  const Rational h = HaemersLowerBound({v[0], v[1], v[2], v[3]}, a, b);
  const std::string approx = ToDecimal(h, 4);
  Check c;
  c.report = {{"target", "haemers-example"}, {"value", ToString(h)}, {"approx", approx}};
  c.ok = h == Rational(fixture["num"].get<int64_t>(), fixture["den"].get<int64_t>()) &&
         approx == fixture["approx"].get<std::string>();
  return c;
}

int Reproduce(Context& ctx, const std::string& target) {
  const std::size_t colon = target.find(':');
  const std::string name = target.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : target.substr(colon + 1);
  Check c;
  if (name == "section2-list") {
    c = ReproduceSection2();
  } else if (name == "sts-kappa2") {
    c = ReproduceSts(ctx, arg);
  } else if (name == "oa-kappa2") {
    c = ReproduceOa(ctx, arg);
  } else if (name == "edge-theorem") {
    c = ReproduceEdgeTheorem(arg);
  } else if (name == "scan") {
    c = ReproduceScan(ctx, arg);
  } else if (name == "haemers-example") {
    c = ReproduceHaemers();
  } else {
    throw UsageError("unknown reproduce target '" + target +
                     "' (section2-list, sts-kappa2:n, oa-kappa2:t,n, edge-theorem:name, "
                     "scan:m,vmax, haemers-example)");
  }
  c.report["match"] = c.ok;
  if (ctx.json) {
    Emit(ctx, c.report);
  } else if (name == "haemers-example") {
    ctx.out << c.report["value"].get<std::string>() << " ≈ " << c.report["approx"].get<std::string>()
            << (c.ok ? "  matches fixture\n" : "  MISMATCH\n");
  } else {
    ctx.out << c.report.dump(2) << '\n' << (c.ok ? "match\n" : "MISMATCH\n");
  }
  return c.ok ? kOk : kPropertyViolation;
}

// ---------------------------------------------------------------------------
// selfcheck
// ---------------------------------------------------------------------------

int SelfCheck(Context& ctx, int count, int max_vertices) {
  if (count < 1) throw UsageError("selfcheck: --count must be positive");
  if (max_vertices < 4 || max_vertices > kBruteForceMaxVertices) {
    throw UsageError("selfcheck: --max-vertices must lie in [4, 20]");
  }
  std::mt19937_64 rng(ctx.seed);
  std::uniform_int_distribution<int> size(4, max_vertices);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  SolverOptions options;
  options.threads = ctx.threads;
  Json mismatches = Json::array();
  for (int i = 0; i < count; ++i) {
    const Graph g = RandomConnectedGraph(size(rng), density(rng), rng);
    const CutResult fast = Kappa2Exact(g, options);
    const CutResult slow = Kappa2BruteForce(g);
    const bool same = fast.value == slow.value &&
                      (!fast.certificate || !slow.certificate ||
                       fast.certificate->s == slow.certificate->s);
    if (!same) mismatches.push_back({{"graph6", WriteGraph6(g)}, {"exact", ToJson(fast)},
                                     {"bruteforce", ToJson(slow)}});
  }
  const Json j{{"seed", ctx.seed}, {"graphs", count}, {"mismatches", mismatches}};
  if (ctx.json) {
    Emit(ctx, j);
  } else {
    ctx.out << count << " random graphs (seed " << ctx.seed << "): " << mismatches.size()
            << " mismatches\n";
    for (const auto& m : mismatches) ctx.out << "  " << m["graph6"].get<std::string>() << '\n';
  }
  return mismatches.empty() ? kOk : kPropertyViolation;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Restricted connectivity of strongly regular graphs"};
  app.name("srgcut");
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "Emit a single JSON document on stdout");
  app.add_option("--threads", ctx.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", ctx.seed, "Seed for randomized checks");

  std::string spec, file, params_text, target, predicate, format = "csv", n_text;
  Kappa2Flags k2;
  bool exhaustive = false;
  std::vector<int64_t> haemers;
  int64_t v_max = 0, m = 3;
  int c = 6, block = 4, count = 200, max_vertices = 14;

  auto* construct = app.add_subcommand("construct", "Build a graph and print it as graph6");
  construct->add_option("spec", spec, "e.g. sts:13, oa:3,4, petersen, paley:13")->required();
  auto* design = app.add_subcommand("design", "Print a design or orthogonal array as JSON");
  design->add_option("spec", spec, "sts:n, design4:n or oa:t,n")->required();
  auto* verify = app.add_subcommand("verify", "Check whether a graph is strongly regular");
  verify->add_option("--file", file, "graph6 file (default: stdin)");
  auto* kappa2 = app.add_subcommand("kappa2", "Restricted vertex connectivity with certificate");
  kappa2->add_option("--file", k2.file, "graph6 file (default: stdin)");
  kappa2->add_flag("--brute", k2.brute, "Use the exhaustive oracle (v <= 20)");
  kappa2->add_option("--budget", k2.budget, "Branch-and-bound node limit")->check(CLI::PositiveNumber);
  kappa2->add_flag("--trace", k2.trace, "Include the edge-pair flow trace");
  auto* edge_cut = app.add_subcommand("edge-cut", "Minimum e(A, A^c) over 2 <= |A| <= v/2");
  edge_cut->add_option("--file", file, "graph6 file (default: stdin)");
  edge_cut->add_flag("--exhaustive", exhaustive, "Enumerate every subset (v <= 24)");
  auto* params = app.add_subcommand("params", "Spectrum, feasibility and families of (v,k,l,m)");
  params->add_option("params", params_text, "v,k,lambda,mu")->required();
  auto* bounds = app.add_subcommand("bounds", "Separator bounds for a parameter set");
  bounds->add_option("params", params_text, "v,k,lambda,mu")->required();
  bounds->add_option("--haemers", haemers, "a,b for the 4abmu bound")->delimiter(',');
  auto* prop_c = app.add_subcommand("prop-c", "Evaluate the c-condition on 2-(n,K,1) parameters");
  prop_c->add_option("--c", c, "c >= 3")->required();
  prop_c->add_option("--n", n_text, "point count, integer or p/q")->required();
  prop_c->add_option("--block", block, "block size K")->check(CLI::Range(2, 1000));
  auto* scan = app.add_subcommand("scan", "Enumerate feasible parameter sets");
  scan->add_option("--vmax", v_max, "largest v")->required()->check(CLI::NonNegativeNumber);
  scan->add_option("--predicate", predicate, "e.g. theta_v=-3,mu=1,k_max=28");
  scan->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  auto* survey = app.add_subcommand("survey", "Rows with theta_v = -m failing the CKK condition");
  survey->add_option("--m", m, "3 or 4")->required();
  survey->add_option("--vmax", v_max, "largest v")->required()->check(CLI::NonNegativeNumber);
  survey->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  auto* reproduce = app.add_subcommand("reproduce", "Recompute a reference result and diff it");
  reproduce->add_option("target", target,
                        "section2-list, sts-kappa2:n, oa-kappa2:t,n, edge-theorem:name, "
                        "scan:m,vmax, haemers-example")
      ->required();
  auto* selfcheck = app.add_subcommand("selfcheck", "Exact solver against the oracle on random graphs");
  selfcheck->add_option("--count", count, "number of graphs");
  selfcheck->add_option("--max-vertices", max_vertices, "largest vertex count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "srgcut: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*construct) return Construct(ctx, spec);
    if (*design) return DesignCommand(ctx, spec);
    if (*verify) return Verify(ctx, file);
    if (*kappa2) return Kappa2(ctx, k2);
    if (*edge_cut) return EdgeCut(ctx, file, exhaustive);
    if (*params) return Params(ctx, params_text);
    if (*bounds) return Bounds(ctx, params_text, haemers);
    if (*prop_c) return PropC(ctx, c, n_text, block);
    if (*scan) return Scan(ctx, v_max, predicate, format);
    if (*survey) return SurveyCommand(ctx, m, v_max, format);
    if (*reproduce) return Reproduce(ctx, target);
    if (*selfcheck) return SelfCheck(ctx, count, max_vertices);
  } catch (const UsageError& e) {
    err << "srgcut: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::overflow_error& e) {
    // Inputs whose exact values leave the supported numeric range.
    err << "srgcut: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace srgcut::cli
