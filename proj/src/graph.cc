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

#include "cdim/graph.h"

#include <algorithm>
#include <queue>
#include <string>

#include "cdim/error.h"

namespace cdim {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFormat:
      return "format";
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kEmptyGraph:
      return "empty_graph";
    case ErrorCode::kDisconnected:
      return "disconnected";
    case ErrorCode::kInconclusive:
      return "inconclusive";
    case ErrorCode::kUnsatisfied:
      return "unsatisfied";
    case ErrorCode::kLemmaViolation:
      return "lemma_violation";
  }
  return "unknown";
}

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
  adjacency_.resize(num_vertices);
}

Graph Graph::FromEdges(int num_vertices, std::span<const Edge> edges) {
  Graph g(num_vertices);
  for (const Edge& e : edges) {
    if (!g.IsValidVertex(e.u) || !g.IsValidVertex(e.v)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} has an endpoint outside [0, " +
                      std::to_string(num_vertices) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  int twice_edges = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice_edges += static_cast<int>(nbrs.size());
  }
  g.num_edges_ = twice_edges / 2;
  return g;
}

Graph Graph::FromEdges(int num_vertices,
                       std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [u, v] : edges) list.push_back({u, v});
  return FromEdges(num_vertices, list);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_) {
    best = std::max(best, static_cast<int>(nbrs.size()));
  }
  return best;
}

bool Graph::HasEdge(int u, int v) const {
  if (!IsValidVertex(u) || !IsValidVertex(v)) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(num_edges_);
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) result.push_back({u, v});
    }
  }
  return result;
}

Graph InducedSubgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> position(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (!g.IsValidVertex(vertices[i])) {
      throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
    }
    position[vertices[i]] = i;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      if (position[w] > i) edges.push_back({i, position[w]});
    }
  }
  return Graph::FromEdges(static_cast<int>(vertices.size()), edges);
}

Graph JoinByBridge(const Graph& a, int a_vertex, const Graph& b,
                   int b_vertex) {
  if (!a.IsValidVertex(a_vertex) || !b.IsValidVertex(b_vertex)) {
    throw Error(ErrorCode::kInvalidArgument, "bridge endpoint out of range");
  }
  const int offset = a.num_vertices();
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + offset, e.v + offset});
  edges.push_back({a_vertex, b_vertex + offset});
  return Graph::FromEdges(offset + b.num_vertices(), edges);
}

Graph DisjointUnion(std::span<const Graph> parts) {
  std::vector<Edge> edges;
  int offset = 0;
  for (const Graph& part : parts) {
    for (const Edge& e : part.edges()) {
      edges.push_back({e.u + offset, e.v + offset});
    }
    offset += part.num_vertices();
  }
  return Graph::FromEdges(offset, edges);
}

Graph Relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph::FromEdges(g.num_vertices(), edges);
}

std::vector<std::vector<int>> ConnectedComponents(const Graph& g) {
  std::vector<std::vector<int>> components;
  std::vector<bool> seen(g.num_vertices(), false);
  for (int root = 0; root < g.num_vertices(); ++root) {
    if (seen[root]) continue;
    std::vector<int> component;
    std::queue<int> frontier;
    frontier.push(root);
    seen[root] = true;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      component.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool IsConnected(const Graph& g) {
  return g.num_vertices() > 0 && ConnectedComponents(g).size() == 1;
}

}  // namespace cdim
