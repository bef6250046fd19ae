// Copyright 2026 The cdim Authors.
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

#include "cdim/json_io.h"

#include <string>

namespace cdim {

Json ToJson(const KappaValue& value) {
  if (value.is_infinite()) return "inf";
  return value.value();
}

Json ToJson(const KappaMatrix& km) {
  Json rows = Json::array();
  for (int v = 0; v < km.n(); ++v) {
    Json row = Json::array();
    for (const KappaValue& k : km.row(v)) row.push_back(ToJson(k));
    rows.push_back(std::move(row));
  }
  return {{"n", km.n()}, {"kappa", std::move(rows)}};
}

Json ToJson(const Representation& r) {
  Json values = Json::array();
  for (const KappaValue& k : r.values) values.push_back(ToJson(k));
  return {{"vertex", r.vertex}, {"representation", std::move(values)}};
}

Json ToJson(const BoundsReport& bounds) {
  Json out;
  out["delta_log_bound"] = bounds.delta_log_bound
                               ? Json(*bounds.delta_log_bound)
                               : Json(nullptr);
  out["delta_exact_bound"] = bounds.delta_exact_bound;
  out["twin_matching_bound"] = bounds.twin_matching_bound;
  out["blocks_bound"] = bounds.blocks_bound;
  out["best_lower"] = bounds.best_lower;
  out["greedy_upper"] = bounds.greedy_upper;
  return out;
}

Json ToJson(const DimensionResult& result,
            const std::optional<BoundsReport>& bounds) {
  Json out;
  out["value"] = result.value;
  out["basis"] = result.basis;
  out["method"] = MethodName(result.method);
  out["bounds"] = bounds ? ToJson(*bounds) : Json::object();
  out["bounds"]["proven_lower"] = result.lower_bound;
  out["conclusive"] = result.conclusive;
  out["verified"] = result.verified;
  out["nodes"] = result.nodes;
  return out;
}

Json ToJson(const BlockCutTree& tree) {
  Json incidences = Json::array();
  for (const auto& [cut, block] : tree.incidences) {
    incidences.push_back({cut, block});
  }
  return {{"block_count", tree.block_count()},
          {"blocks", tree.blocks},
          {"cut_vertices", tree.cut_vertices},
          {"incidences", std::move(incidences)}};
}

Json ToJson(const GadgetMap& map) {
  Json variables = Json::array();
  for (int i = 0; i < map.num_variables(); ++i) {
    Json vertices = Json::array();
    for (int a = 1; a <= 5; ++a) vertices.push_back(map.var_vertex(i, a));
    variables.push_back({{"variable", i + 1},
                         {"vertices", std::move(vertices)},
                         {"alpha", map.alpha(i)},
                         {"beta", map.beta(i)}});
  }
  Json clauses = Json::array();
  for (int j = 0; j < map.num_clauses(); ++j) {
    Json vertices = Json::array();
    for (int b = 1; b <= 6; ++b) vertices.push_back(map.clause_vertex(j, b));
    clauses.push_back({{"clause", j + 1}, {"vertices", std::move(vertices)}});
  }
  return {{"num_vertices", map.num_vertices()},
          {"variables", std::move(variables)},
          {"clauses", std::move(clauses)}};
}

Json ToJson(const SatDecision& decision) {
  Json out;
  out["status"] = decision.satisfiable ? "sat" : "unsat";
  if (decision.satisfiable) {
    Json assignment = Json::object();
    for (std::size_t i = 0; i < decision.assignment.size(); ++i) {
      assignment[std::to_string(i + 1)] = static_cast<bool>(decision.assignment[i]);
    }
    out["assignment"] = std::move(assignment);
    out["basis"] = decision.basis;
  }
  out["graph_vertices"] = decision.graph_vertices;
  out["candidates_checked"] = decision.candidates_checked;
  out["criterion"] = "cdim == 2(m+n)";
  out["normalization_assumed"] = true;
  return out;
}

}  // namespace cdim
