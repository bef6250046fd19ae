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
#include <random>
#include <vector>

#include "cdim/connectivity.h"
#include "cdim/error.h"
#include "cdim/families.h"
#include "cdim/resolver.h"
#include "cdim/solver.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace cdim {
namespace {

using oracle::V;

TEST(CdimExactTest, Examples) {
  const DimensionResult fig1 = CdimExact(StandardGraph("figure1"));
  EXPECT_EQ(fig1.value, 2);
  EXPECT_TRUE(fig1.conclusive);
  EXPECT_TRUE(fig1.verified);
  EXPECT_EQ(fig1.method, Method::kExact);
  EXPECT_EQ(fig1.basis.size(), 2u);

  EXPECT_EQ(CdimExact(StandardGraph("complete", 2)).value, 1);
  EXPECT_EQ(CdimExact(StandardGraph("figure5")).value, 7);
  EXPECT_EQ(CdimExact(StandardGraph("cycle", 6)).value, 5);
  EXPECT_EQ(CdimExact(Graph(1)).value, 0);
  EXPECT_THROW(CdimExact(Graph(0)), Error);
}

TEST(CdimExactTest, MatchesSubsetOracle) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = oracle::RandomGraph(n, 0.5, rng);
    const DimensionResult r = CdimExact(g);
    ASSERT_TRUE(r.conclusive);
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.value, oracle::Cdim(g)) << ToGraph6(g);
    EXPECT_EQ(static_cast<int>(r.basis.size()), r.value);
  }
}

TEST(CdimExactTest, BudgetExhaustionIsInconclusive) {
  SolveOptions options;
  options.node_budget = 1;
  const DimensionResult r = CdimExact(StandardGraph("cycle", 12), options);
  EXPECT_FALSE(r.conclusive);
  EXPECT_TRUE(r.verified);
  EXPECT_GE(r.value, 11);
  EXPECT_LE(r.lower_bound, 11);
}

TEST(CdimGreedyTest, UpperBoundsAndUniformCase) {
  const DimensionResult fig1 = CdimGreedy(StandardGraph("figure1"));
  EXPECT_TRUE(fig1.verified);
  EXPECT_GE(fig1.value, 2);
  EXPECT_LE(fig1.value, 3);
  EXPECT_EQ(fig1.method, Method::kGreedyUpper);
  EXPECT_EQ(CdimGreedy(StandardGraph("cycle", 8)).value, 7);
}

TEST(LowerBoundsTest, Examples) {
  const BoundsReport fig1 = LowerBounds(StandardGraph("figure1"));
  EXPECT_EQ(fig1.blocks_bound, 2);
  EXPECT_EQ(fig1.delta_log_bound, 1);
  EXPECT_EQ(fig1.best_lower, 2);
  EXPECT_EQ(LowerBounds(StandardGraph("house")).twin_matching_bound, 2);
  const BoundsReport k2 = LowerBounds(StandardGraph("complete", 2));
  EXPECT_FALSE(k2.delta_log_bound.has_value());
  EXPECT_EQ(k2.delta_exact_bound, 1);
  EXPECT_THROW(LowerBounds(Graph(2)), Error);
}

// best_lower <= cdim <= greedy on connected graphs.
TEST(LowerBoundsTest, Sandwich) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::RandomConnectedGraph(2 + trial % 6, 0.4, rng);
    const BoundsReport b = LowerBounds(g);
    const int exact = CdimExact(g).value;
    EXPECT_LE(b.best_lower, exact);
    EXPECT_LE(exact, b.greedy_upper);
  }
}

TEST(ForcingTest, Examples) {
  EXPECT_TRUE(ForcesOneRepresentation(StandardGraph("complete", 2)));
  EXPECT_FALSE(ForcesOneRepresentation(StandardGraph("cycle", 5)));
  EXPECT_FALSE(ForcesOneRepresentation(StandardGraph("complete", 3)));
  EXPECT_TRUE(ForcesOneRepresentation(Graph(1)));
  SolveOptions small_gate;
  small_gate.forcing_gate = 4;
  EXPECT_THROW(ForcesOneRepresentation(StandardGraph("cycle", 5), small_gate), Error);
}

TEST(ForcingTest, TreesForce) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 8;
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
      edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
    }
    EXPECT_TRUE(ForcesOneRepresentation(Graph::FromEdges(n, edges)));
  }
}

TEST(EnumerateBasesTest, Examples) {
  const std::vector<std::vector<int>> fig1 = {
      {V(3), V(7)}, {V(3), V(8)}, {V(5), V(7)}, {V(5), V(8)}};
  EXPECT_EQ(EnumerateBases(StandardGraph("figure1")), fig1);
  EXPECT_EQ(EnumerateBases(StandardGraph("complete", 2)),
            (std::vector<std::vector<int>>{{0}, {1}}));
  EXPECT_EQ(EnumerateBases(StandardGraph("complete", 3)),
            (std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(EnumerateBasesTest, MatchesSubsetOracle) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = oracle::RandomGraph(2 + trial % 6, 0.5, rng);
    EXPECT_EQ(EnumerateBases(g), oracle::AllBases(oracle::KappaTable(g)))
        << ToGraph6(g);
  }
}

TEST(CdimDecomposeTest, Examples) {
  const DimensionResult fig5 = CdimDecompose(StandardGraph("figure5"));
  EXPECT_EQ(fig5.value, 7);
  EXPECT_EQ(fig5.method, Method::kDecomposition);
  EXPECT_TRUE(fig5.verified);
  EXPECT_EQ(CdimDecompose(StandardGraph("path", 4)).value, 3);
  const Graph triangle_leaf = Graph::FromEdges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_EQ(CdimDecompose(triangle_leaf).value, 2);
}

TEST(CdimDecomposeTest, HandlesComponentsAndIsolatedVertices) {
  const Graph g = Graph::FromEdges(7, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
  const DimensionResult r = CdimDecompose(g);
  EXPECT_EQ(r.value, CdimExact(g).value);
  EXPECT_TRUE(r.verified);
}

TEST(CdimDecomposeTest, AgreesWithExactOnBridgedGraphs) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph a = oracle::RandomConnectedGraph(1 + trial % 5, 0.5, rng);
    const Graph b = oracle::RandomConnectedGraph(1 + (trial / 5) % 5, 0.5, rng);
    const Graph g = JoinByBridge(
        a, std::uniform_int_distribution<int>(0, a.num_vertices() - 1)(rng), b,
        std::uniform_int_distribution<int>(0, b.num_vertices() - 1)(rng));
    const DimensionResult r = CdimDecompose(g);
    EXPECT_EQ(r.value, CdimExact(g).value) << ToGraph6(g);
    EXPECT_TRUE(r.verified) << ToGraph6(g);
  }
}

TEST(MdimExactTest, Examples) {
  EXPECT_EQ(MdimExact(StandardGraph("path", 10)).value, 1);
  EXPECT_EQ(MdimExact(StandardGraph("complete", 4)).value, 3);
  const ThresholdSequence alternating({0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
  const int m = MdimExact(ThresholdGraph(alternating)).value;
  EXPECT_GE(m, 4);
  EXPECT_GE(m + (1 << m), 12);
  EXPECT_THROW(MdimExact(Graph(2)), Error);
}

TEST(MdimExactTest, MatchesSubsetOracleOnDistances) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::RandomConnectedGraph(2 + trial % 6, 0.4, rng);
    const std::vector<int> d = DistanceMatrix(g);
    const int n = g.num_vertices();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) table[u][v] = d[u * n + v];
    }
    EXPECT_EQ(MdimExact(g).value,
              static_cast<int>(oracle::AllBases(table).front().size()));
  }
}

}  // namespace
}  // namespace cdim
