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

#ifndef CDIM_SRC_SET_COVER_H_
#define CDIM_SRC_SET_COVER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cdim/resolver.h"

namespace cdim::internal {

struct CoverSearchResult {
  bool conclusive = false;
  std::vector<int> best;  // sorted
  std::int64_t nodes = 0;
};

// Minimum cover containing every vertex of `forced`. `incumbent` must be a
// cover containing `forced`; the search stops early once it matches
// `lower_bound`.
CoverSearchResult MinimumCover(const PairCoverage& coverage,
                               std::span<const int> forced,
                               std::vector<int> incumbent, int lower_bound,
                               std::int64_t budget);

// Every cover of exactly `size` vertices that contains `forced`, assuming no
// smaller cover exists. Each set is reported once, sorted. Returns false when
// the budget ran out.
bool EnumerateCovers(const PairCoverage& coverage, std::span<const int> forced,
                     int size, std::int64_t budget,
                     std::vector<std::vector<int>>* out);

// Extends `start` by the vertex covering the most uncovered pairs (lowest
// index on ties) until everything is covered.
std::vector<int> GreedyCover(const PairCoverage& coverage,
                             std::span<const int> start);

}  // namespace cdim::internal

#endif  // CDIM_SRC_SET_COVER_H_
