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

#include "cdim/resolver.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "cdim/error.h"

namespace cdim {
namespace {

constexpr std::int64_t kInfiniteEntry = std::numeric_limits<std::int64_t>::max();

void CheckLandmarks(int n, std::span<const int> landmarks) {
  for (int w : landmarks) {
    if (w < 0 || w >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "landmark " + std::to_string(w) + " outside [0, " +
                      std::to_string(n) + ")");
    }
  }
}

}  // namespace

Representation RepresentationOf(const KappaMatrix& km, int v,
                                std::span<const int> landmarks) {
  CheckLandmarks(km.n(), landmarks);
  CheckLandmarks(km.n(), std::span<const int>(&v, 1));
  Representation r;
  r.vertex = v;
  r.landmarks.assign(landmarks.begin(), landmarks.end());
  for (int w : landmarks) r.values.push_back(km.at(v, w));
  return r;
}

DistinguishTable::DistinguishTable(int n, std::vector<std::int64_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 0 || entries_.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::kInvalidArgument, "table size mismatch");
  }
}

DistinguishTable DistinguishTable::FromKappa(const KappaMatrix& km) {
  std::vector<std::int64_t> entries(static_cast<std::size_t>(km.n()) * km.n());
  for (int v = 0; v < km.n(); ++v) {
    for (int w = 0; w < km.n(); ++w) {
      const KappaValue k = km.at(v, w);
      entries[v * km.n() + w] = k.is_infinite() ? kInfiniteEntry : k.value();
    }
  }
  return DistinguishTable(km.n(), std::move(entries));
}

ResolveVerdict IsResolving(const KappaMatrix& km,
                           std::span<const int> landmarks) {
  return IsResolving(DistinguishTable::FromKappa(km), landmarks);
}

// Groups the non-landmark vertices by representation; any group of two or
// more holds undistinguished pairs. Landmarks are distinguished by their own
// diagonal entry, provided the table's diagonal is unique in each column
// (true for infinity in the kappa table and 0 in a distance table).
ResolveVerdict IsResolving(const DistinguishTable& table,
                           std::span<const int> landmarks) {
  CheckLandmarks(table.n(), landmarks);
  std::vector<int> order(landmarks.begin(), landmarks.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  std::vector<bool> is_landmark(table.n(), false);
  for (int w : order) is_landmark[w] = true;
  std::vector<int> rest;
  for (int v = 0; v < table.n(); ++v) {
    if (!is_landmark[v]) rest.push_back(v);
  }
  auto less = [&](int a, int b) {
    for (int w : order) {
      if (table.at(a, w) != table.at(b, w)) return table.at(a, w) < table.at(b, w);
    }
    return a < b;
  };
  auto same = [&](int a, int b) {
    for (int w : order) {
      if (table.at(a, w) != table.at(b, w)) return false;
    }
    return true;
  };
  std::sort(rest.begin(), rest.end(), less);

  ResolveVerdict verdict;
  verdict.resolving = true;
  for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
    // Within a group the vertices are ascending, so the first two form the
    // group's smallest pair.
    if (same(rest[i], rest[i + 1]) &&
        (i == 0 || !same(rest[i - 1], rest[i]))) {
      const std::pair<int, int> candidate(rest[i], rest[i + 1]);
      if (!verdict.witness || candidate < *verdict.witness) {
        verdict.witness = candidate;
      }
      verdict.resolving = false;
    }
  }
  return verdict;
}

PairCoverage::PairCoverage(const DistinguishTable& table)
    : n_(table.n()),
      num_pairs_(table.n() * (table.n() - 1) / 2),
      words_((num_pairs_ + 63) / 64) {
  pairs_.reserve(num_pairs_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) pairs_.emplace_back(u, v);
  }
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  coverers_.resize(num_pairs_);
  for (int p = 0; p < num_pairs_; ++p) {
    const auto [u, v] = pairs_[p];
    for (int w = 0; w < n_; ++w) {
      if (w == u || w == v || table.at(u, w) != table.at(v, w)) {
        bits_[static_cast<std::size_t>(w) * words_ + (p >> 6)] |=
            std::uint64_t{1} << (p & 63);
        coverers_[p].push_back(w);
      }
    }
  }
}

int PairCoverage::PairIndex(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_ || u == v) {
    throw Error(ErrorCode::kInvalidArgument, "invalid vertex pair");
  }
  return u * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

int PairCoverage::CoverCount(int w) const {
  int count = 0;
  for (std::uint64_t word : cover(w)) count += std::popcount(word);
  return count;
}

bool PairCoverage::IsCover(std::span<const int> landmarks) const {
  CheckLandmarks(n_, landmarks);
  std::vector<std::uint64_t> covered(words_, 0);
  for (int w : landmarks) {
    const auto bits = cover(w);
    for (int i = 0; i < words_; ++i) covered[i] |= bits[i];
  }
  for (int i = 0; i < words_; ++i) {
    std::uint64_t expected = ~std::uint64_t{0};
    if (i == words_ - 1 && num_pairs_ % 64 != 0) {
      expected = (std::uint64_t{1} << (num_pairs_ % 64)) - 1;
    }
    if (covered[i] != expected) return false;
  }
  return true;
}

}  // namespace cdim
