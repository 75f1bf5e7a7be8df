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

// JSON encodings of the library's result types.
//
// Exact quantities a + c·√d are written as {"num", "surd", "den",
// "radicand"} meaning (num + surd·√radicand)/den, plus a floating "approx"
// for readers that only want a number. Every *FromJson function accepts the
// output of the matching ToJson and throws nlohmann::json::exception or
// std::invalid_argument on anything else.

#ifndef SRGCUT_JSON_IO_H_
#define SRGCUT_JSON_IO_H_

#include "json.hpp"
#include "srgcut/bounds.h"
#include "srgcut/connectivity.h"
#include "srgcut/designs.h"
#include "srgcut/params.h"
#include "srgcut/quadratic.h"
#include "srgcut/scanner.h"
#include "srgcut/srg_params.h"

namespace srgcut {

using Json = nlohmann::ordered_json;

Json ToJson(const QuadraticValue& x);
QuadraticValue QuadraticFromJson(const Json& j);

Json ToJson(const Rational& x);  // {"num", "den", "approx"}
Rational RationalFromJson(const Json& j);

Json ToJson(const SrgParams& p);  // {"v", "k", "lambda", "mu"}
SrgParams ParamsFromJson(const Json& j);

// Parameter report: spectrum, multiplicities, feasibility and families.
Json ParamsReportJson(const SrgParams& p);

Json ToJson(const VertexSet& s);
VertexSet VertexSetFromJson(const Json& j);

// {"kappa2", "A", "S", "B", "lower_bound", "upper_bound", "status",
//  "edge_neighborhood_of", "nodes"}
Json ToJson(const CutResult& r);
CutResult CutResultFromJson(const Json& j);

Json ToJson(const EdgeCutResult& r);

Json ToJson(const Design& d);  // {"n", "K", "blocks"}
Design DesignFromJson(const Json& j);

Json ToJson(const OrthogonalArray& oa);  // {"t", "n", "columns"}
OrthogonalArray OrthogonalArrayFromJson(const Json& j);

Json ToJson(const BoundReport& r);
Json ToJson(const ConjectureStatus& s);
Json ToJson(const ScanRow& row);
Json ToJson(const Survey& s);

}  // namespace srgcut

#endif  // SRGCUT_JSON_IO_H_
