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

#include <algorithm>
#include <queue>
#include <vector>

#include "cdim/graph.h"

namespace cdim {
namespace {

std::vector<int> NeighborsWithout(const Graph& g, int v, int excluded) {
  std::vector<int> result;
  for (int w : g.neighbors(v)) {
    if (w != excluded) result.push_back(w);
  }
  return result;
}

// Edmonds' blossom algorithm, one BFS per free root.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.num_vertices()),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_) {}

  int Solve() {
    int size = 0;
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = FindAugmentingPath(root);
      if (v == -1) continue;
      ++size;
      while (v != -1) {
        const int pv = parent_[v];
        const int ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return size;
  }

 private:
  int LowestCommonAncestor(int a, int b) {
    std::vector<bool> on_path(n_, false);
    while (true) {
      a = base_[a];
      on_path[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (on_path[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void MarkPath(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int FindAugmentingPath(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int current_base = LowestCommonAncestor(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          MarkPath(v, current_base, to);
          MarkPath(to, current_base, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = current_base;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
};

}  // namespace

bool AreTwins(const Graph& g, int u, int v) {
  if (u == v) return false;
  return NeighborsWithout(g, u, v) == NeighborsWithout(g, v, u);
}

TwinClasses ComputeTwinClasses(const Graph& g) {
  TwinClasses result;
  std::vector<Edge> twin_edges;
  for (int u = 0; u < g.num_vertices(); ++u) {
    for (int v = u + 1; v < g.num_vertices(); ++v) {
      // Twins have equal degree.
      if (g.degree(u) != g.degree(v)) continue;
      if (AreTwins(g, u, v)) {
        result.twin_pairs.emplace_back(u, v);
        twin_edges.push_back({u, v});
      }
    }
  }
  result.matching_bound = MaximumMatchingSize(
      Graph::FromEdges(g.num_vertices(), twin_edges));
  return result;
}

int MaximumMatchingSize(const Graph& g) { return BlossomMatcher(g).Solve(); }

}  // namespace cdim
