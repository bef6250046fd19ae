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

#ifndef CDIM_GRAPH_H_
#define CDIM_GRAPH_H_

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdim {

// Unordered vertex pair, stored with first < second.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; every
// neighbor list is sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on `num_vertices` vertices.
  explicit Graph(int num_vertices);

  // Builds a graph from an edge list. Duplicate edges (in either
  // orientation) collapse into one. Throws Error(kInvalidArgument) on a
  // self-loop or an endpoint outside [0, num_vertices).
  static Graph FromEdges(int num_vertices, std::span<const Edge> edges);
  static Graph FromEdges(int num_vertices,
                         std::initializer_list<std::pair<int, int>> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return num_edges_; }
  bool empty() const { return adjacency_.empty(); }

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  bool HasEdge(int u, int v) const;
  bool IsValidVertex(int v) const { return v >= 0 && v < num_vertices(); }

  // All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adjacency_;
  int num_edges_ = 0;
};

// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
Graph InducedSubgraph(const Graph& g, std::span<const int> vertices);

// Places `b` after `a` (b's vertex v becomes a.num_vertices() + v) and adds
// the edge {a_vertex, a.num_vertices() + b_vertex}.
Graph JoinByBridge(const Graph& a, int a_vertex, const Graph& b, int b_vertex);

// Vertex-disjoint union, later graphs shifted past earlier ones.
Graph DisjointUnion(std::span<const Graph> parts);

// Image of g under the vertex permutation v -> perm[v].
Graph Relabel(const Graph& g, std::span<const int> perm);

// --- Interchange formats -------------------------------------------------

// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
// whitespace are accepted. Throws FormatError with the offending byte offset.
Graph ParseGraph6(std::string_view text);
std::string ToGraph6(const Graph& g);

// Parses "n <count>" followed by one "u v" pair per line (0-indexed). Blank
// lines and lines starting with '#' are skipped. Throws FormatError with the
// 1-based line number.
Graph ParseEdgeList(std::string_view text);
std::string ToEdgeList(const Graph& g);

// --- Structure -----------------------------------------------------------

// Vertex sets of the connected components, each sorted, ordered by their
// smallest vertex.
std::vector<std::vector<int>> ConnectedComponents(const Graph& g);
bool IsConnected(const Graph& g);

struct BlockCutTree {
  // Vertex set of each block, sorted; blocks ordered lexicographically.
  std::vector<std::vector<int>> blocks;
  // Edges of each block, parallel to `blocks`.
  std::vector<std::vector<Edge>> block_edges;
  std::vector<int> cut_vertices;
  // (cut vertex, block index) for every cut vertex contained in a block.
  std::vector<std::pair<int, int>> incidences;

  int block_count() const { return static_cast<int>(blocks.size()); }
};

// Biconnected decomposition of a connected graph. A single-vertex graph has
// one block with no edges. Throws Error(kDisconnected) for disconnected
// input and Error(kEmptyGraph) for n = 0.
BlockCutTree ComputeBlockCutTree(const Graph& g);

// Edges whose removal disconnects their component.
std::vector<Edge> Bridges(const Graph& g);

struct TwinClasses {
  // Pairs (u, v), u < v, with N(u) \ {v} == N(v) \ {u}; lexicographic order.
  std::vector<std::pair<int, int>> twin_pairs;
  // Maximum matching size in the graph formed by `twin_pairs`.
  int matching_bound = 0;
};

TwinClasses ComputeTwinClasses(const Graph& g);
bool AreTwins(const Graph& g, int u, int v);

// Size of a maximum matching (Edmonds' blossom algorithm).
int MaximumMatchingSize(const Graph& g);

}  // namespace cdim

#endif  // CDIM_GRAPH_H_
