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

// Biconnected components by one depth-first traversal with low-point values.

#include <algorithm>
#include <vector>

#include "cdim/error.h"
#include "cdim/graph.h"

namespace cdim {
namespace {

struct Frame {
  int vertex;
  int parent;
  int next;  // Index into neighbors(vertex).
};

// Edge groups of all biconnected blocks with at least one edge, over every
// component.
std::vector<std::vector<Edge>> EdgeBlocks(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> discovery(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> blocks;
  int time = 0;

  for (int root = 0; root < n; ++root) {
    if (discovery[root] != -1) continue;
    discovery[root] = low[root] = time++;
    std::vector<Frame> frames = {{root, -1, 0}};
    while (!frames.empty()) {
      Frame& top = frames.back();
      const int v = top.vertex;
      const auto nbrs = g.neighbors(v);
      if (top.next < static_cast<int>(nbrs.size())) {
        const int w = nbrs[top.next++];
        if (w == top.parent) continue;
        if (discovery[w] == -1) {
          edge_stack.push_back({v, w});
          discovery[w] = low[w] = time++;
          frames.push_back({w, v, 0});
        } else if (discovery[w] < discovery[v]) {
          edge_stack.push_back({v, w});
          low[v] = std::min(low[v], discovery[w]);
        }
        continue;
      }
      const int parent = top.parent;
      frames.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= discovery[parent]) {
        std::vector<Edge> block;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
          if (e.u == parent && e.v == v) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

std::vector<int> BlockVertices(const std::vector<Edge>& edges) {
  std::vector<int> vertices;
  for (const Edge& e : edges) {
    vertices.push_back(e.u);
    vertices.push_back(e.v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  return vertices;
}

}  // namespace

BlockCutTree ComputeBlockCutTree(const Graph& g) {
  if (g.empty()) {
    throw Error(ErrorCode::kEmptyGraph, "block decomposition of empty graph");
  }
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kDisconnected,
                "block decomposition needs a connected graph; split it into "
                "connected components first");
  }
  BlockCutTree tree;
  if (g.num_vertices() == 1) {
    tree.blocks = {{0}};
    tree.block_edges = {{}};
    return tree;
  }

  std::vector<std::pair<std::vector<int>, std::vector<Edge>>> blocks;
  for (auto& edges : EdgeBlocks(g)) {
    std::vector<int> vertices = BlockVertices(edges);
    blocks.emplace_back(std::move(vertices), std::move(edges));
  }
  std::sort(blocks.begin(), blocks.end());

  std::vector<int> membership(g.num_vertices(), 0);
  for (auto& [vertices, edges] : blocks) {
    for (int v : vertices) ++membership[v];
    tree.blocks.push_back(std::move(vertices));
    tree.block_edges.push_back(std::move(edges));
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (membership[v] >= 2) tree.cut_vertices.push_back(v);
  }
  for (int b = 0; b < tree.block_count(); ++b) {
    for (int v : tree.blocks[b]) {
      if (membership[v] >= 2) tree.incidences.emplace_back(v, b);
    }
  }
  std::sort(tree.incidences.begin(), tree.incidences.end());
  return tree;
}

std::vector<Edge> Bridges(const Graph& g) {
  std::vector<Edge> bridges;
  for (const auto& block : EdgeBlocks(g)) {
    if (block.size() == 1) bridges.push_back(block.front());
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace cdim
