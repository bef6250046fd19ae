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

#ifndef CDIM_FAMILIES_H_
#define CDIM_FAMILIES_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdim/graph.h"

namespace cdim {

// Creation sequence of a threshold graph: bit i = 0 adds an isolated vertex,
// 1 a dominating one. For n >= 2 the first bit is rewritten to equal the
// second, as the first vertex is the same either way.
class ThresholdSequence {
 public:
  struct Run {
    int bit = 0;
    int length = 0;
  };

  // Throws Error(kInvalidArgument) on an empty sequence or a non-binary
  // entry.
  explicit ThresholdSequence(std::vector<int> bits);

  // Comma separated bits, e.g. "1,1,0,1,1".
  static ThresholdSequence Parse(std::string_view text);

  int size() const { return static_cast<int>(bits_.size()); }
  const std::vector<int>& bits() const { return bits_; }
  const std::vector<Run>& runs() const { return runs_; }

 private:
  std::vector<int> bits_;
  std::vector<Run> runs_;
};

Graph ThresholdGraph(const ThresholdSequence& seq);

// n - m if the last run is longer than one, n - m + 1 otherwise (m runs).
// A single vertex gives 0. Throws Error(kDisconnected) when the sequence
// ends in 0 and n >= 2.
int ThresholdCdim(const ThresholdSequence& seq);

// Like ThresholdCdim but accepts sequences ending in 0 by splitting off the
// trailing isolated vertices.
int ThresholdCdimRouted(const ThresholdSequence& seq);

// Chain of b - 1 triangles glued at single vertices with a pendant leaf:
// vertex 0 is the leaf, 1..b the glue row (1 adjacent to the leaf), and
// b + i the apex joined to i and i + 1. Throws for b < 2.
Graph TriangleChain(int b);
int TriangleChainCdim(int b);

struct ComponentDimension {
  int order = 1;
  int cdim = 0;
};

// Dimension of a disjoint union from its components' dimensions; components
// of order 1 are isolated vertices.
int DisjointUnionCdim(std::span<const ComponentDimension> components);

// "path", "cycle", "complete" and "star" take the vertex count n (star:
// centre 0 plus n - 1 leaves); "house", "figure1" and "figure5" ignore it.
Graph StandardGraph(std::string_view kind, int n = 0);

}  // namespace cdim

#endif  // CDIM_FAMILIES_H_
