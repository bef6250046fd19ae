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

#ifndef CDIM_RESOLVER_H_
#define CDIM_RESOLVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cdim/connectivity.h"

namespace cdim {

// r(v, W): the local connectivities of `vertex` against the ordered landmark
// list.
struct Representation {
  int vertex = 0;
  std::vector<int> landmarks;
  std::vector<KappaValue> values;
};

Representation RepresentationOf(const KappaMatrix& km, int v,
                                std::span<const int> landmarks);

struct ResolveVerdict {
  bool resolving = false;
  // Lexicographically smallest undistinguished pair when not resolving.
  std::optional<std::pair<int, int>> witness;
};

// Integer table whose entry (v, w) is the value landmark w reports for v.
// Equal entries mean "not distinguished". Connectivity and metric
// resolvability both reduce to this.
class DistinguishTable {
 public:
  DistinguishTable() = default;
  DistinguishTable(int n, std::vector<std::int64_t> entries);

  static DistinguishTable FromKappa(const KappaMatrix& km);

  int n() const { return n_; }
  std::int64_t at(int v, int w) const { return entries_[v * n_ + w]; }

 private:
  int n_ = 0;
  std::vector<std::int64_t> entries_;
};

// Landmarks may be given in any order; duplicates are ignored. Throws
// Error(kInvalidArgument) on an out-of-range landmark.
ResolveVerdict IsResolving(const KappaMatrix& km,
                           std::span<const int> landmarks);
ResolveVerdict IsResolving(const DistinguishTable& table,
                           std::span<const int> landmarks);

// Set-cover view of resolvability. The universe is every unordered pair
// (u, v), u < v, indexed lexicographically; vertex w covers the pairs it
// distinguishes, which always includes the pairs containing w.
class PairCoverage {
 public:
  explicit PairCoverage(const DistinguishTable& table);
  explicit PairCoverage(const KappaMatrix& km)
      : PairCoverage(DistinguishTable::FromKappa(km)) {}

  int n() const { return n_; }
  int num_pairs() const { return num_pairs_; }
  int words() const { return words_; }

  int PairIndex(int u, int v) const;
  std::pair<int, int> PairAt(int index) const { return pairs_[index]; }

  // Bit array over pair indices, `words()` 64-bit words long.
  std::span<const std::uint64_t> cover(int w) const {
    return {bits_.data() + static_cast<std::size_t>(w) * words_,
            static_cast<std::size_t>(words_)};
  }
  bool Covers(int w, int pair) const {
    return (cover(w)[pair >> 6] >> (pair & 63)) & 1;
  }
  int CoverCount(int w) const;

  // Vertices covering `pair`, ascending.
  const std::vector<int>& coverers(int pair) const { return coverers_[pair]; }

  // True iff the union of the landmarks' covers is every pair.
  bool IsCover(std::span<const int> landmarks) const;

 private:
  int n_ = 0;
  int num_pairs_ = 0;
  int words_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<int>> coverers_;
};

}  // namespace cdim

#endif  // CDIM_RESOLVER_H_
