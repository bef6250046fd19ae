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

#ifndef CDIM_SOLVER_H_
#define CDIM_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdim/graph.h"
#include "cdim/resolver.h"

namespace cdim {

struct SolveOptions {
  std::int64_t node_budget = 100'000'000;
  // Worker threads for the kappa matrix; <= 0 means hardware concurrency.
  int threads = 1;
  // Largest part on which forcing is decided by enumerating all bases.
  int forcing_gate = 16;
};

enum class Method { kExact, kGreedyUpper, kDecomposition };

const char* MethodName(Method method);

struct DimensionResult {
  // The dimension when `conclusive`, otherwise the best upper bound found.
  int value = 0;
  std::vector<int> basis;  // sorted, |basis| == value
  Method method = Method::kExact;
  bool verified = false;
  bool conclusive = false;
  // Proven lower bound; equals `value` when conclusive.
  int lower_bound = 0;
  std::int64_t nodes = 0;
};

struct BoundsReport {
  // Smallest k with 2 * Delta^k >= n + 1; absent when Delta < 2.
  std::optional<int> delta_log_bound;
  // Smallest k >= 1 with n <= k + Delta^k.
  int delta_exact_bound = 0;
  int twin_matching_bound = 0;
  // ceil((blocks + 1) / 2).
  int blocks_bound = 0;
  int best_lower = 0;
  int greedy_upper = 0;
};

// Minimum resolving set by branch-and-bound set cover. Disconnected graphs
// are solved directly. Throws Error(kEmptyGraph) for n == 0. A budget
// overrun returns conclusive == false rather than throwing.
DimensionResult CdimExact(const Graph& g, const SolveOptions& options = {});

DimensionResult CdimGreedy(const Graph& g, const SolveOptions& options = {});

// Requires a connected graph with n >= 2.
BoundsReport LowerBounds(const Graph& g, const SolveOptions& options = {});

// All minimum resolving sets, sorted. Throws Error(kInconclusive) when the
// budget runs out.
std::vector<std::vector<int>> EnumerateBases(const Graph& g,
                                             const SolveOptions& options = {});

// Whether every basis leaves a vertex outside it whose representation is all
// ones. The single vertex graph forces vacuously. Requires a connected graph;
// throws Error(kInconclusive) above the forcing gate or budget.
bool ForcesOneRepresentation(const Graph& g, const SolveOptions& options = {});

// Splits recursively at bridges and across components.
DimensionResult CdimDecompose(const Graph& g, const SolveOptions& options = {});

// Breadth-first distances, row-major; -1 between components.
std::vector<int> DistanceMatrix(const Graph& g);

// Metric dimension. Requires a connected graph.
DimensionResult MdimExact(const Graph& g, const SolveOptions& options = {});

}  // namespace cdim

#endif  // CDIM_SOLVER_H_
