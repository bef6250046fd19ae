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

#include "cdim/solver.h"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "cdim/connectivity.h"
#include "cdim/error.h"
#include "set_cover.h"

namespace cdim {
namespace {

void RequireNonEmpty(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");
}

void RequireConnected(const Graph& g) {
  RequireNonEmpty(g);
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kDisconnected,
                "graph is disconnected; split it into components first");
  }
}

// Lower member of every twin pair. Some optimal solution contains all of
// them, since exchanging twins is an automorphism.
std::vector<int> TwinRepresentatives(const TwinClasses& twins) {
  std::vector<int> forced;
  for (const auto& [u, v] : twins.twin_pairs) forced.push_back(u);
  std::sort(forced.begin(), forced.end());
  forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
  return forced;
}

DimensionResult TrivialResult(Method method) {
  DimensionResult result;
  result.method = method;
  result.verified = true;
  result.conclusive = true;
  return result;
}

DimensionResult SolveCover(const PairCoverage& coverage,
                           const std::vector<int>& forced, int lower_bound,
                           std::int64_t budget) {
  lower_bound = std::max(lower_bound, static_cast<int>(forced.size()));
  internal::CoverSearchResult search = internal::MinimumCover(
      coverage, forced, internal::GreedyCover(coverage, forced), lower_bound,
      budget);
  DimensionResult result;
  result.value = static_cast<int>(search.best.size());
  result.basis = std::move(search.best);
  result.conclusive = search.conclusive;
  result.lower_bound = search.conclusive ? result.value : lower_bound;
  result.nodes = search.nodes;
  return result;
}

// Bounds other than the greedy upper bound.
BoundsReport StructuralBounds(const Graph& g, const TwinClasses& twins) {
  const std::int64_t n = g.num_vertices();
  const std::int64_t delta = g.max_degree();
  BoundsReport report;
  if (delta >= 2) {
    int k = 0;
    for (std::int64_t power = 1; 2 * power < n + 1; power *= delta) ++k;
    report.delta_log_bound = k;
  }
  int k = 1;
  for (std::int64_t power = delta; n > k + power;) {
    ++k;
    power = std::min(power * delta, n + 1);
  }
  report.delta_exact_bound = k;
  report.twin_matching_bound = twins.matching_bound;
  report.blocks_bound = (ComputeBlockCutTree(g).block_count() + 2) / 2;
  report.best_lower = std::max({report.delta_log_bound.value_or(0),
                                report.delta_exact_bound,
                                report.twin_matching_bound,
                                report.blocks_bound});
  return report;
}

int OneVertex(const KappaMatrix& km, const std::vector<int>& basis) {
  for (int v = 0; v < km.n(); ++v) {
    if (std::binary_search(basis.begin(), basis.end(), v)) continue;
    const bool all_ones =
        std::all_of(basis.begin(), basis.end(), [&](int b) {
          return km.at(v, b) == KappaValue::Finite(1);
        });
    if (all_ones) return v;
  }
  return -1;
}

std::vector<int> MapVertices(const std::vector<int>& local,
                             const std::vector<int>& global) {
  std::vector<int> mapped;
  for (int v : local) mapped.push_back(global[v]);
  return mapped;
}

// A basis of a bridge part chosen to suit the composition: one with an
// all-ones vertex when the part forces, one without otherwise.
struct PartCertificate {
  bool forces = true;
  std::vector<int> basis;
  int one_vertex = -1;
};

PartCertificate CertifyPart(const Graph& part, const SolveOptions& options) {
  if (part.num_vertices() == 1) return {true, {}, 0};
  const KappaMatrix km = ComputeKappaMatrix(part, options.threads);
  const auto bases = EnumerateBases(part, options);
  PartCertificate certificate;
  for (const auto& basis : bases) {
    if (OneVertex(km, basis) < 0) {
      certificate.forces = false;
      certificate.basis = basis;
      return certificate;
    }
  }
  certificate.basis = bases.front();
  certificate.one_vertex = OneVertex(km, bases.front());
  return certificate;
}

void Finalize(const Graph& g, const SolveOptions& options,
              DimensionResult& result) {
  std::sort(result.basis.begin(), result.basis.end());
  result.basis.erase(std::unique(result.basis.begin(), result.basis.end()),
                     result.basis.end());
  const KappaMatrix km = ComputeKappaMatrix(g, options.threads);
  result.verified = IsResolving(km, result.basis).resolving &&
                    static_cast<int>(result.basis.size()) == result.value;
  if (result.conclusive) result.lower_bound = result.value;
}

DimensionResult ExactFallback(const Graph& g, const SolveOptions& options) {
  DimensionResult result = CdimExact(g, options);
  result.method = Method::kDecomposition;
  return result;
}

DimensionResult DecomposeComponents(
    const Graph& g, const std::vector<std::vector<int>>& components,
    const SolveOptions& options) {
  DimensionResult result = TrivialResult(Method::kDecomposition);
  std::vector<int> isolated;
  for (const auto& component : components) {
    if (component.size() == 1) {
      isolated.push_back(component.front());
      continue;
    }
    DimensionResult part = CdimDecompose(InducedSubgraph(g, component), options);
    result.value += part.value;
    result.conclusive = result.conclusive && part.conclusive;
    result.nodes += part.nodes;
    for (int v : MapVertices(part.basis, component)) result.basis.push_back(v);
  }
  if (isolated.size() > 1) {
    result.value += static_cast<int>(isolated.size()) - 1;
    result.basis.insert(result.basis.end(), isolated.begin(),
                        isolated.end() - 1);
  }
  Finalize(g, options, result);
  return result;
}

DimensionResult DecomposeAtBridge(const Graph& g, const Edge& bridge,
                                  const SolveOptions& options) {
  std::vector<char> in_a(g.num_vertices(), 0);
  std::deque<int> queue = {bridge.u};
  in_a[bridge.u] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : g.neighbors(x)) {
      if (in_a[y] || (x == bridge.u && y == bridge.v)) continue;
      in_a[y] = 1;
      queue.push_back(y);
    }
  }
  std::vector<int> side_a;
  std::vector<int> side_b;
  for (int v = 0; v < g.num_vertices(); ++v) {
    (in_a[v] ? side_a : side_b).push_back(v);
  }
  const int gate = options.forcing_gate;
  if (static_cast<int>(side_a.size()) > gate ||
      static_cast<int>(side_b.size()) > gate) {
    return ExactFallback(g, options);
  }
  const Graph part_a = InducedSubgraph(g, side_a);
  const Graph part_b = InducedSubgraph(g, side_b);
  const DimensionResult value_a = CdimDecompose(part_a, options);
  const DimensionResult value_b = CdimDecompose(part_b, options);
  if (!value_a.conclusive || !value_b.conclusive) {
    return ExactFallback(g, options);
  }
  PartCertificate cert_a;
  PartCertificate cert_b;
  try {
    cert_a = CertifyPart(part_a, options);
    cert_b = CertifyPart(part_b, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInconclusive) throw;
    return ExactFallback(g, options);
  }

  DimensionResult result = TrivialResult(Method::kDecomposition);
  const bool both_force = cert_a.forces && cert_b.forces;
  result.value = value_a.value + value_b.value + (both_force ? 1 : 0);
  result.nodes = value_a.nodes + value_b.nodes;
  result.basis = MapVertices(cert_a.basis, side_a);
  for (int v : MapVertices(cert_b.basis, side_b)) result.basis.push_back(v);
  if (both_force) result.basis.push_back(side_a[cert_a.one_vertex]);
  Finalize(g, options, result);
  return result;
}

}  // namespace

const char* MethodName(Method method) {
  switch (method) {
    case Method::kExact:
      return "exact";
    case Method::kGreedyUpper:
      return "greedy-upper";
    case Method::kDecomposition:
      return "decomposition";
  }
  return "unknown";
}

DimensionResult CdimExact(const Graph& g, const SolveOptions& options) {
  RequireNonEmpty(g);
  if (g.num_vertices() == 1) return TrivialResult(Method::kExact);
  const KappaMatrix km = ComputeKappaMatrix(g, options.threads);
  const PairCoverage coverage(km);
  const TwinClasses twins = ComputeTwinClasses(g);
  int lower = twins.matching_bound;
  if (IsConnected(g)) lower = StructuralBounds(g, twins).best_lower;
  DimensionResult result =
      SolveCover(coverage, TwinRepresentatives(twins), lower,
                 options.node_budget);
  result.method = Method::kExact;
  result.verified = IsResolving(km, result.basis).resolving;
  return result;
}

DimensionResult CdimGreedy(const Graph& g, const SolveOptions& options) {
  RequireNonEmpty(g);
  if (g.num_vertices() == 1) return TrivialResult(Method::kGreedyUpper);
  const KappaMatrix km = ComputeKappaMatrix(g, options.threads);
  DimensionResult result;
  result.method = Method::kGreedyUpper;
  result.basis = internal::GreedyCover(PairCoverage(km), {});
  result.value = static_cast<int>(result.basis.size());
  result.verified = IsResolving(km, result.basis).resolving;
  result.lower_bound = ComputeTwinClasses(g).matching_bound;
  return result;
}

BoundsReport LowerBounds(const Graph& g, const SolveOptions& options) {
  RequireConnected(g);
  if (g.num_vertices() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "bounds need at least 2 vertices");
  }
  BoundsReport report = StructuralBounds(g, ComputeTwinClasses(g));
  report.greedy_upper = CdimGreedy(g, options).value;
  return report;
}

std::vector<std::vector<int>> EnumerateBases(const Graph& g,
                                             const SolveOptions& options) {
  RequireNonEmpty(g);
  if (g.num_vertices() == 1) return {{}};
  const DimensionResult exact = CdimExact(g, options);
  if (!exact.conclusive) {
    throw Error(ErrorCode::kInconclusive, "node budget exceeded");
  }
  const KappaMatrix km = ComputeKappaMatrix(g, options.threads);
  const PairCoverage coverage(km);
  const TwinClasses twins = ComputeTwinClasses(g);
  std::vector<std::vector<int>> normalized;
  if (!internal::EnumerateCovers(coverage, TwinRepresentatives(twins),
                                 exact.value, options.node_budget,
                                 &normalized)) {
    throw Error(ErrorCode::kInconclusive, "node budget exceeded");
  }

  std::set<std::vector<int>> seen(normalized.begin(), normalized.end());
  std::deque<std::vector<int>> pending(normalized.begin(), normalized.end());
  while (!pending.empty()) {
    const std::vector<int> basis = std::move(pending.front());
    pending.pop_front();
    for (const auto& [u, v] : twins.twin_pairs) {
      const bool has_u = std::binary_search(basis.begin(), basis.end(), u);
      const bool has_v = std::binary_search(basis.begin(), basis.end(), v);
      if (has_u == has_v) continue;
      std::vector<int> swapped = basis;
      std::replace(swapped.begin(), swapped.end(), has_u ? u : v,
                   has_u ? v : u);
      std::sort(swapped.begin(), swapped.end());
      if (seen.insert(swapped).second) pending.push_back(std::move(swapped));
    }
  }
  return {seen.begin(), seen.end()};
}

bool ForcesOneRepresentation(const Graph& g, const SolveOptions& options) {
  RequireConnected(g);
  if (g.num_vertices() == 1) return true;
  if (g.num_vertices() > options.forcing_gate) {
    throw Error(ErrorCode::kInconclusive,
                "graph exceeds the forcing gate of " +
                    std::to_string(options.forcing_gate) + " vertices");
  }
  const KappaMatrix km = ComputeKappaMatrix(g, options.threads);
  const auto bases = EnumerateBases(g, options);
  return std::all_of(bases.begin(), bases.end(), [&](const auto& basis) {
    return OneVertex(km, basis) >= 0;
  });
}

DimensionResult CdimDecompose(const Graph& g, const SolveOptions& options) {
  RequireNonEmpty(g);
  if (g.num_vertices() == 1) return TrivialResult(Method::kDecomposition);
  const auto components = ConnectedComponents(g);
  if (components.size() > 1) return DecomposeComponents(g, components, options);
  const std::vector<Edge> bridges = Bridges(g);
  if (bridges.empty()) return ExactFallback(g, options);
  return DecomposeAtBridge(g, bridges.front(), options);
}

std::vector<int> DistanceMatrix(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    int* row = dist.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    int head = 0;
    int tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int x = queue[head++];
      for (int y : g.neighbors(x)) {
        if (row[y] < 0) {
          row[y] = row[x] + 1;
          queue[tail++] = y;
        }
      }
    }
  }
  return dist;
}

DimensionResult MdimExact(const Graph& g, const SolveOptions& options) {
  RequireConnected(g);
  if (g.num_vertices() == 1) return TrivialResult(Method::kExact);
  const std::vector<int> dist = DistanceMatrix(g);
  const DistinguishTable table(
      g.num_vertices(), std::vector<std::int64_t>(dist.begin(), dist.end()));
  const TwinClasses twins = ComputeTwinClasses(g);
  DimensionResult result =
      SolveCover(PairCoverage(table), TwinRepresentatives(twins),
                 twins.matching_bound, options.node_budget);
  result.method = Method::kExact;
  result.verified = IsResolving(table, result.basis).resolving;
  return result;
}

}  // namespace cdim
