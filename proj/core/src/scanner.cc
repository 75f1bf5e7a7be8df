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
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "srgcut/quadratic.h"

namespace srgcut {
namespace {

int64_t ParseInt(std::string_view key, std::string_view text) {
  int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("predicate: bad integer for " + std::string(key) + ": '" +
                                std::string(text) + "'");
  }
  return value;
}

FamilyKind ParseFamily(std::string_view name) {
  if (name == "steiner") return FamilyKind::kSteinerBlockGraph;
  if (name == "latin") return FamilyKind::kLatinSquare;
  if (name == "multipartite") return FamilyKind::kCompleteMultipartite;
  if (name == "conference") return FamilyKind::kConference;
  throw std::invalid_argument("predicate: unknown family '" + std::string(name) + "'");
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void AddFactors(int64_t x, std::map<int64_t, int>& factors) {
  for (int64_t p = 2; p * p <= x; ++p) {
    while (x % p == 0) {
      ++factors[p];
      x /= p;
    }
  }
  if (x > 1) ++factors[x];
}

// Divisors of a·b·c·d (all positive) not exceeding `cap`.
std::vector<int64_t> DivisorsOfProduct(std::initializer_list<int64_t> parts, int64_t cap) {
  std::map<int64_t, int> factors;
  for (int64_t x : parts) AddFactors(x, factors);
  std::vector<int64_t> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t count = divs.size();
    for (std::size_t i = 0; i < count; ++i) {
      int64_t d = divs[i];
      for (int j = 0; j < e; ++j) {
        if (d > cap / p) break;
        d *= p;
        divs.push_back(d);
      }
    }
  }
  return divs;
}

bool Matches(const SrgParams& p, const Predicate& q) {
  if (q.lambda && p.lambda != *q.lambda) return false;
  if (q.mu && p.mu != *q.mu) return false;
  if (q.k_min && p.k < *q.k_min) return false;
  if (q.k_max && p.k > *q.k_max) return false;
  if (q.k_mod) {
    const int64_t m = q.k_mod->second;
    if (((p.k - q.k_mod->first) % m + m) % m != 0) return false;
  }
  if (q.k4 && 4 * std::max(p.lambda, p.mu) > p.k) return false;
  if (q.primitive && p.mu >= p.k) return false;
  return true;
}

// Every parameter set with θ₂ = r, θᵥ = -s (s fixed) and v <= v_max.
// With `multipartite_step` only μ divisible by s is tried for r = 0, the
// only case with integral multiplicities.
void GenerateForSmallestEigenvalue(int64_t s, int64_t v_max, bool multipartite_step,
                                   std::vector<SrgParams>& out) {
  // r = 0: k = μ, v = μ + s.
  const int64_t step = multipartite_step ? s : 1;
  for (int64_t mu = s; mu + s <= v_max; mu += step) out.push_back({mu + s, mu, mu - s, mu});
  for (int64_t r = 1;; ++r) {
    const int64_t product = r * s * (r + 1) * (s - 1);
    const double floor_v = 1.0 + r * s + (r + 1) * (s - 1) +
                           2.0 * std::sqrt(static_cast<double>(product));
    if (floor_v > static_cast<double>(v_max) + 1.0) break;
    for (int64_t mu : DivisorsOfProduct({r, s, r + 1, s - 1}, v_max)) {
      if (mu < s - r) continue;
      const int64_t k = mu + r * s;
      const int64_t v = 1 + k + k * (r + 1) * (s - 1) / mu;
      if (v <= v_max) out.push_back({v, k, mu + r - s, mu});
    }
  }
}

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Predicate ParsePredicate(std::string_view text) {
  Predicate q;
  if (text.empty()) return q;
  for (std::string_view item : Split(text, ',')) {
    const std::size_t eq = item.find('=');
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = eq == std::string_view::npos ? "" : item.substr(eq + 1);
    auto need_value = [&] {
      if (eq == std::string_view::npos || value.empty()) {
        throw std::invalid_argument("predicate: " + std::string(key) + " needs a value");
      }
    };
    if (key == "theta_v") {
      need_value();
      q.theta_v = ParseInt(key, value);
    } else if (key == "lambda") {
      need_value();
      q.lambda = ParseInt(key, value);
    } else if (key == "mu") {
      need_value();
      q.mu = ParseInt(key, value);
    } else if (key == "k_min") {
      need_value();
      q.k_min = ParseInt(key, value);
    } else if (key == "k_max") {
      need_value();
      q.k_max = ParseInt(key, value);
    } else if (key == "k_mod") {
      need_value();
      const auto parts = Split(value, ':');
      if (parts.size() != 2) throw std::invalid_argument("predicate: k_mod expects r:m");
      q.k_mod = {ParseInt(key, parts[0]), ParseInt(key, parts[1])};
      if (q.k_mod->second < 1) throw std::invalid_argument("predicate: k_mod modulus < 1");
    } else if (key == "k4" && eq == std::string_view::npos) {
      q.k4 = true;
    } else if (key == "primitive" && eq == std::string_view::npos) {
      q.primitive = true;
    } else if (key == "spectral_only" && eq == std::string_view::npos) {
      q.require_feasible = false;
    } else if (key == "exclude") {
      need_value();
      for (std::string_view name : Split(value, '+')) {
        q.exclude_families.push_back(ParseFamily(name));
      }
    } else {
      throw std::invalid_argument("predicate: unknown term '" + std::string(item) + "'");
    }
  }
  return q;
}

ScanRow MakeScanRow(const SrgParams& p) {
  ScanRow row;
  row.params = p;
  row.spectral = Eigenvalues(p);
  row.families = ClassifyFamily(p);
  row.feasibility = BasicFeasible(p);
  if (row.feasibility.feasible) row.status = ClassifyConjectureStatus(p);
  row.filters = AllBounds(p);
  return row;
}

std::vector<ScanRow> EnumerateFeasible(int64_t v_max, const Predicate& predicate,
                                       int threads) {
  if (v_max > kMaxScanVertices) {
    throw std::domain_error("enumerate_feasible: v_max above " +
                            std::to_string(kMaxScanVertices));
  }
  std::vector<int64_t> smallest;
  if (predicate.theta_v) {
    if (*predicate.theta_v <= -2) smallest.push_back(-*predicate.theta_v);
  } else {
    for (int64_t s = 2; 2 * s <= v_max; ++s) smallest.push_back(s);
  }

  const int workers = ResolveThreads(threads);
  std::vector<std::vector<SrgParams>> found(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](int w) {
    std::vector<SrgParams> local;
    for (std::size_t i = next++; i < smallest.size(); i = next++) {
      local.clear();
      GenerateForSmallestEigenvalue(smallest[i], v_max, predicate.require_feasible, local);
      for (const SrgParams& p : local) {
        if (!Matches(p, predicate)) continue;
        if (predicate.require_feasible && !BasicFeasible(p).feasible) continue;
        found[w].push_back(p);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  std::vector<SrgParams> params;
  for (auto& part : found) params.insert(params.end(), part.begin(), part.end());
  // Conference parameters with an irrational spectrum.
  if (!predicate.theta_v) {
    for (int64_t t = 1; 4 * t + 1 <= v_max; ++t) {
      const SrgParams p = ConferenceParams(t);
      if (IsPerfectSquare(p.v) || !Matches(p, predicate)) continue;
      if (predicate.require_feasible && !BasicFeasible(p).feasible) continue;
      params.push_back(p);
    }
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());

  std::vector<ScanRow> rows;
  rows.reserve(params.size());
  for (const SrgParams& p : params) {
    ScanRow row = MakeScanRow(p);
    const bool excluded = std::any_of(row.families.begin(), row.families.end(),
                                      [&](const FamilyTag& tag) {
                                        return std::find(predicate.exclude_families.begin(),
                                                         predicate.exclude_families.end(),
                                                         tag.kind) !=
                                               predicate.exclude_families.end();
                                      });
    if (!excluded) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SrgParams> ReproduceSection2List() {
  Predicate q;
  q.k4 = true;
  q.exclude_families = {FamilyKind::kSteinerBlockGraph, FamilyKind::kLatinSquare};
  std::vector<SrgParams> out;
  for (const ScanRow& row : EnumerateFeasible(199, q)) out.push_back(row.params);
  return out;
}

Survey ScanMinEigenvalue(int64_t m, int64_t v_max, int threads) {
  if (m != 3 && m != 4) throw std::domain_error("scan_min_eigenvalue: m must be 3 or 4");
  Predicate q;
  q.theta_v = -m;
  q.primitive = true;
  Survey survey;
  survey.m = m;
  survey.v_max = v_max;
  for (ScanRow& row : EnumerateFeasible(v_max, q, threads)) {
    if (CkkProp24Condition(row.params).holds) continue;
    const bool lookalike = std::any_of(row.families.begin(), row.families.end(),
                                       [&](const FamilyTag& tag) {
                                         return tag.kind == FamilyKind::kSteinerBlockGraph &&
                                                tag.b == m;
                                       });
    (lookalike ? survey.steiner_lookalike : survey.other).push_back(std::move(row));
  }
  return survey;
}

std::string ToCsv(const std::vector<ScanRow>& rows) {
  std::vector<std::string> filter_names;
  for (const ScanRow& row : rows) {
    for (const BoundReport& r : row.filters) {
      if (std::find(filter_names.begin(), filter_names.end(), r.name) == filter_names.end()) {
        filter_names.push_back(r.name);
      }
    }
  }
  std::ostringstream out;
  out << "v,k,lambda,mu,theta2,thetav,f,g,families,status";
  for (const auto& name : filter_names) out << ',' << CsvField(name);
  out << '\n';
  for (const ScanRow& row : rows) {
    const SrgParams& p = row.params;
    std::string families;
    for (const FamilyTag& tag : row.families) {
      if (!families.empty()) families += ';';
      families += ToString(tag);
    }
    out << p.v << ',' << p.k << ',' << p.lambda << ',' << p.mu << ','
        << CsvField(row.spectral.theta2.ToString()) << ','
        << CsvField(row.spectral.theta_v.ToString()) << ','
        << CsvField(row.spectral.f.ToString()) << ',' << CsvField(row.spectral.g.ToString())
        << ',' << CsvField(families) << ','
        << (row.status ? ToString(row.status->kind) : std::string("Infeasible"));
    for (const auto& name : filter_names) {
      out << ',';
      for (const BoundReport& r : row.filters) {
        if (r.name == name) out << (r.holds ? "true" : "false");
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace srgcut
