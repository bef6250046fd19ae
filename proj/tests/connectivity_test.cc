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
#include "cdim/graph.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace cdim {
namespace {

using oracle::V;

const KappaValue kInf = KappaValue::Infinity();
KappaValue K(int k) { return KappaValue::Finite(k); }

TEST(KappaValueTest, OrderingAndText) {
  EXPECT_LT(K(3), K(4));
  EXPECT_LT(K(1000), kInf);
  EXPECT_EQ(kInf, KappaValue::Infinity());
  EXPECT_EQ(kInf.ToString(), "inf");
  EXPECT_EQ(K(2).ToString(), "2");
  EXPECT_THROW(kInf.value(), Error);
}

TEST(LocalConnectivityTest, Examples) {
  const Graph fig1 = StandardGraph("figure1");
  EXPECT_EQ(LocalConnectivity(fig1, V(5), V(3)), K(4));
  EXPECT_EQ(LocalConnectivity(fig1, V(4), V(4)), kInf);
  const Graph k4 = StandardGraph("complete", 4);
  EXPECT_EQ(LocalConnectivity(k4, 0, 1), K(3));
  EXPECT_EQ(LocalConnectivity(Graph::FromEdges(4, {{0, 1}, {2, 3}}), 0, 3), K(0));
  EXPECT_THROW(LocalConnectivity(k4, 0, 4), Error);
}

TEST(KappaMatrixTest, PathAndCycle) {
  const KappaMatrix p3 = ComputeKappaMatrix(StandardGraph("path", 3));
  const KappaMatrix c5 = ComputeKappaMatrix(StandardGraph("cycle", 5));
  for (int u = 0; u < 5; ++u) {
    for (int v = 0; v < 5; ++v) {
      if (u < 3 && v < 3) {
        EXPECT_EQ(p3.at(u, v), u == v ? kInf : K(1));
      }
      EXPECT_EQ(c5.at(u, v), u == v ? kInf : K(2));
    }
  }
}

// The eight representations against Z = (v3, v8) listed for Figure 1.
TEST(KappaMatrixTest, FigureOneRepresentations) {
  const KappaMatrix km = ComputeKappaMatrix(StandardGraph("figure1"));
  const std::vector<std::pair<KappaValue, KappaValue>> expected = {
      {K(1), K(1)}, {K(3), K(1)}, {kInf, K(1)}, {K(2), K(1)},
      {K(4), K(1)}, {K(3), K(2)}, {K(1), K(2)}, {K(1), kInf}};
  for (int v = 0; v < 8; ++v) {
    EXPECT_EQ(km.at(v, V(3)), expected[v].first) << "v" << v + 1;
    EXPECT_EQ(km.at(v, V(8)), expected[v].second) << "v" << v + 1;
  }
}

TEST(KappaMatrixTest, ThreadCountDoesNotChangeResult) {
  std::mt19937 rng(3);
  const Graph g = oracle::RandomConnectedGraph(14, 0.3, rng);
  EXPECT_EQ(ComputeKappaMatrix(g, 1), ComputeKappaMatrix(g, 4));
  EXPECT_EQ(ComputeKappaMatrix(g, 1), ComputeKappaMatrix(g, 0));
}

TEST(UniformConnectivityTest, Examples) {
  EXPECT_EQ(UniformConnectivity(ComputeKappaMatrix(StandardGraph("cycle", 6))), 2);
  EXPECT_EQ(UniformConnectivity(ComputeKappaMatrix(StandardGraph("path", 5))), 1);
  EXPECT_EQ(UniformConnectivity(ComputeKappaMatrix(StandardGraph("figure1"))),
            std::nullopt);
  EXPECT_THROW(UniformConnectivity(ComputeKappaMatrix(Graph(1))), Error);
}

TEST(UniformConnectivityTest, PerVertex) {
  const auto fig1 = UniformlyConnectedVertices(ComputeKappaMatrix(StandardGraph("figure1")));
  EXPECT_EQ(fig1[V(1)], 1);
  EXPECT_EQ(fig1[V(3)], std::nullopt);
  for (const auto& k : UniformlyConnectedVertices(ComputeKappaMatrix(StandardGraph("cycle", 7)))) {
    EXPECT_EQ(k, 2);
  }
  EXPECT_EQ(UniformlyConnectedVertices(ComputeKappaMatrix(StandardGraph("star", 4)))[0], 1);
}

// Symmetry, the degree bound, zero exactly across components, and agreement
// with the disjoint-path oracle.
TEST(KappaPropertiesTest, RandomGraphs) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 8;
    const Graph g = oracle::RandomGraph(n, 0.45, rng);
    const KappaMatrix km = ComputeKappaMatrix(g);
    const auto components = ConnectedComponents(g);
    std::vector<int> comp(n);
    for (std::size_t c = 0; c < components.size(); ++c) {
      for (int v : components[c]) comp[v] = static_cast<int>(c);
    }
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        ASSERT_EQ(km.at(u, v), km.at(v, u));
        EXPECT_LE(km.at(u, v), K(std::min(g.degree(u), g.degree(v))));
        EXPECT_EQ(km.at(u, v) == K(0), comp[u] != comp[v]);
        EXPECT_EQ(km.at(u, v), K(oracle::DisjointPathCount(g, u, v)));
      }
    }
  }
}

TEST(KappaPropertiesTest, CutVertexSeparatesToOne) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::RandomConnectedGraph(3 + trial % 7, 0.3, rng);
    const KappaMatrix km = ComputeKappaMatrix(g);
    for (int w : ComputeBlockCutTree(g).cut_vertices) {
      std::vector<int> rest;
      for (int v = 0; v < g.num_vertices(); ++v) {
        if (v != w) rest.push_back(v);
      }
      const auto parts = ConnectedComponents(InducedSubgraph(g, rest));
      ASSERT_GE(parts.size(), 2u);
      EXPECT_EQ(km.at(rest[parts[0][0]], rest[parts[1][0]]), K(1));
    }
  }
}

// Within a block, connectivity is the same in the block as in the graph.
TEST(KappaPropertiesTest, BlockRestrictionOnAllSmallGraphs) {
  for (int n = 2; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      if (n == 6 && mask % 7 != 0) continue;
      const Graph g = oracle::FromMask(n, mask);
      if (!oracle::ConnectedByBfs(g)) continue;
      const KappaMatrix km = ComputeKappaMatrix(g);
      for (const auto& block : ComputeBlockCutTree(g).blocks) {
        const KappaMatrix local = ComputeKappaMatrix(InducedSubgraph(g, block));
        for (std::size_t a = 0; a < block.size(); ++a) {
          for (std::size_t b = 0; b < block.size(); ++b) {
            ASSERT_EQ(local.at(a, b), km.at(block[a], block[b]));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace cdim
