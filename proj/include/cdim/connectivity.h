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

#ifndef CDIM_CONNECTIVITY_H_
#define CDIM_CONNECTIVITY_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdim/graph.h"

namespace cdim {

// Local connectivity value: a finite count of internally disjoint paths, or
// infinity (used for a vertex against itself). Infinity orders above every
// finite value.
class KappaValue {
 public:
  constexpr KappaValue() = default;

  static constexpr KappaValue Finite(int k) { return KappaValue(false, k); }
  static constexpr KappaValue Infinity() { return KappaValue(true, 0); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  // Finite count; throws Error(kInvalidArgument) on infinity.
  int value() const;

  // "inf" or the decimal count.
  std::string ToString() const;

  friend constexpr bool operator==(const KappaValue&,
                                   const KappaValue&) = default;
  friend constexpr std::strong_ordering operator<=>(const KappaValue& a,
                                                    const KappaValue& b) {
    if (a.infinite_ != b.infinite_) {
      return a.infinite_ ? std::strong_ordering::greater
                         : std::strong_ordering::less;
    }
    return a.count_ <=> b.count_;
  }

 private:
  constexpr KappaValue(bool infinite, int count)
      : infinite_(infinite), count_(count) {}

  bool infinite_ = false;
  int count_ = 0;
};

// Maximum number of u-v paths that are pairwise disjoint except at u and v,
// computed as a unit-capacity max-flow on the vertex-split network. Returns
// infinity for u == v and 0 across components.
KappaValue LocalConnectivity(const Graph& g, int u, int v);

// Dense symmetric table of local connectivities, infinity on the diagonal.
class KappaMatrix {
 public:
  KappaMatrix() = default;
  KappaMatrix(int n, std::vector<KappaValue> values);

  int n() const { return n_; }
  const KappaValue& at(int u, int v) const { return values_[u * n_ + v]; }
  std::span<const KappaValue> row(int v) const {
    return {values_.data() + static_cast<std::size_t>(v) * n_,
            static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const KappaMatrix&, const KappaMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<KappaValue> values_;
};

// All C(n,2) local connectivities. `threads` <= 0 selects the hardware
// concurrency; the result does not depend on the thread count.
KappaMatrix ComputeKappaMatrix(const Graph& g, int threads = 1);

// k if every off-diagonal entry equals k (so the graph is uniformly
// k-connected); nullopt otherwise. Requires n >= 2.
std::optional<int> UniformConnectivity(const KappaMatrix& km);

// For each vertex v, k if kappa(v, w) = k for every w != v. Requires n >= 2.
std::vector<std::optional<int>> UniformlyConnectedVertices(
    const KappaMatrix& km);

}  // namespace cdim

#endif  // CDIM_CONNECTIVITY_H_
