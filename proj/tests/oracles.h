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

#ifndef CDIM_TESTS_ORACLES_H_
#define CDIM_TESTS_ORACLES_H_

// Slow reference implementations. None of them share code with the library
// algorithms they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cdim/graph.h"
#include "cdim/reduction.h"

namespace cdim::oracle {

// 1-based figure labels to 0-based vertices.
constexpr int V(int label) { return label - 1; }

inline std::vector<std::vector<bool>> Adjacency(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  return adj;
}

// Largest family of u-v paths that share no vertex other than u and v,
// found by listing every simple path and searching all compatible families.
// Returns -1 for u == v.
inline int DisjointPathCount(const Graph& g, int u, int v) {
  if (u == v) return -1;
  const int n = g.num_vertices();
  const auto adj = Adjacency(g);
  std::vector<std::uint32_t> interiors;  // interior vertex masks
  std::vector<int> path = {u};
  std::uint32_t seen = 1u << u;
  std::function<void(int)> walk = [&](int x) {
    for (int y = 0; y < n; ++y) {
      if (!adj[x][y] || (seen >> y & 1)) continue;
      if (y == v) {
        std::uint32_t mask = 0;
        for (std::size_t i = 1; i < path.size(); ++i) mask |= 1u << path[i];
        interiors.push_back(mask);
        continue;
      }
      seen |= 1u << y;
      path.push_back(y);
      walk(y);
      path.pop_back();
      seen &= ~(1u << y);
    }
  };
  walk(u);
  // The direct edge has an empty interior and is compatible with everything.
  std::sort(interiors.begin(), interiors.end(),
            [](std::uint32_t a, std::uint32_t b) {
              return __builtin_popcount(a) < __builtin_popcount(b);
            });
  int best = 0;
  const int cap = static_cast<int>(std::min(g.degree(u), g.degree(v)));
  std::function<void(std::size_t, std::uint32_t, int)> pick =
      [&](std::size_t start, std::uint32_t used, int count) {
        best = std::max(best, count);
        if (best == cap) return;
        for (std::size_t i = start; i < interiors.size(); ++i) {
          if (interiors[i] & used) continue;
          pick(i + 1, used | interiors[i], count + 1);
          if (best == cap) return;
        }
      };
  pick(0, 0, 0);
  return best;
}

// Distinguishing table from the path oracle: -1 stands for infinity.
inline std::vector<std::vector<int>> KappaTable(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) t[a][b] = t[b][a] = DisjointPathCount(g, a, b);
  }
  return t;
}

inline bool Resolves(const std::vector<std::vector<int>>& table,
                     const std::vector<int>& set) {
  std::set<std::vector<int>> seen;
  for (std::size_t v = 0; v < table.size(); ++v) {
    std::vector<int> r;
    for (int w : set) r.push_back(table[v][w]);
    if (!seen.insert(r).second) return false;
  }
  return true;
}

// Every subset of the given size, in lexicographic order.
inline void ForEachSubset(int n, int k,
                          const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> set(k);
  std::function<bool(int, int)> rec = [&](int pos, int from) {
    if (pos == k) return f(set);
    for (int x = from; x < n; ++x) {
      set[pos] = x;
      if (!rec(pos + 1, x + 1)) return false;
    }
    return true;
  };
  rec(0, 0);
}

// Minimum resolving sets by increasing subset size over a table.
inline std::vector<std::vector<int>> AllBases(
    const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<int>> found;
    ForEachSubset(n, k, [&](const std::vector<int>& s) {
      if (Resolves(table, s)) found.push_back(s);
      return true;
    });
    if (!found.empty()) return found;
  }
  return {};
}

inline int Cdim(const Graph& g) {
  return static_cast<int>(AllBases(KappaTable(g)).front().size());
}

inline bool TruthTableSat(const CnfFormula& f) {
  const int n = f.num_variables;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool all = true;
    for (const Clause& c : f.clauses) {
      bool any = false;
      for (const Literal& lit : c) any = any || (((mask >> lit.variable) & 1) == lit.positive);
      all = all && any;
    }
    if (all) return true;
  }
  return false;
}

inline bool TruthTableSatisfies(const CnfFormula& f, const std::vector<bool>& a) {
  for (const Clause& c : f.clauses) {
    bool any = false;
    for (const Literal& lit : c) any = any || (a[lit.variable] == lit.positive);
    if (!any) return false;
  }
  return true;
}

// Graph on n vertices whose edges are the set bits of `mask` over the pairs
// (i, j), i < j, in lexicographic order.
inline Graph FromMask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1) edges.push_back({i, j});
    }
  }
  return Graph::FromEdges(n, edges);
}

inline bool ConnectedByBfs(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

inline Graph RandomGraph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph::FromEdges(n, edges);
}

inline Graph RandomConnectedGraph(int n, double p, std::mt19937& rng) {
  while (true) {
    Graph g = RandomGraph(n, p, rng);
    if (ConnectedByBfs(g)) return g;
  }
}

inline CnfFormula RandomFormula(int n, int m, std::mt19937& rng) {
  std::uniform_int_distribution<int> var(0, n - 1);
  std::bernoulli_distribution sign(0.5);
  while (true) {
    CnfFormula f;
    f.num_variables = n;
    std::vector<bool> used(n, false);
    for (int j = 0; j < m; ++j) {
      std::set<int> vars;
      while (vars.size() < 3) vars.insert(var(rng));
      Clause c;
      int k = 0;
      for (int x : vars) {
        c[k++] = {x, sign(rng)};
        used[x] = true;
      }
      f.clauses.push_back(c);
    }
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return f;
  }
}

}  // namespace cdim::oracle

#endif  // CDIM_TESTS_ORACLES_H_
