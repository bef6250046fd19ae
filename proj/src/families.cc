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

#include "cdim/families.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "cdim/error.h"

namespace cdim {
namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

}  // namespace

ThresholdSequence::ThresholdSequence(std::vector<int> bits)
    : bits_(std::move(bits)) {
  Require(!bits_.empty(), "threshold sequence is empty");
  for (int b : bits_) Require(b == 0 || b == 1, "threshold bits must be 0 or 1");
  if (bits_.size() >= 2) bits_[0] = bits_[1];
  for (int b : bits_) {
    if (runs_.empty() || runs_.back().bit != b) runs_.push_back({b, 0});
    ++runs_.back().length;
  }
}

ThresholdSequence ThresholdSequence::Parse(std::string_view text) {
  std::vector<int> bits;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = text.substr(pos, end - pos);
    int bit = -1;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), bit);
    Require(ec == std::errc() && ptr == token.data() + token.size(),
            "bad threshold entry '" + std::string(token) + "'");
    bits.push_back(bit);
    pos = end + 1;
  }
  return ThresholdSequence(std::move(bits));
}

Graph ThresholdGraph(const ThresholdSequence& seq) {
  std::vector<Edge> edges;
  for (int i = 0; i < seq.size(); ++i) {
    if (seq.bits()[i] == 0) continue;
    for (int j = 0; j < i; ++j) edges.push_back({j, i});
  }
  return Graph::FromEdges(seq.size(), edges);
}

int ThresholdCdim(const ThresholdSequence& seq) {
  const int n = seq.size();
  if (n == 1) return 0;
  const auto& runs = seq.runs();
  if (runs.back().bit == 0) {
    throw Error(ErrorCode::kDisconnected,
                "sequence ends in 0; split off the isolated vertices first");
  }
  const int m = static_cast<int>(runs.size());
  return runs.back().length > 1 ? n - m : n - m + 1;
}

int ThresholdCdimRouted(const ThresholdSequence& seq) {
  const auto& bits = seq.bits();
  const auto last_one = std::find(bits.rbegin(), bits.rend(), 1);
  if (last_one == bits.rend()) {
    return std::max(seq.size() - 1, 0);
  }
  const int prefix = static_cast<int>(bits.rend() - last_one);
  std::vector<ComponentDimension> parts;
  parts.push_back(
      {prefix, ThresholdCdim(ThresholdSequence(std::vector<int>(
                   bits.begin(), bits.begin() + prefix)))});
  for (int i = prefix; i < seq.size(); ++i) parts.push_back({1, 0});
  return DisjointUnionCdim(parts);
}

Graph TriangleChain(int b) {
  Require(b >= 2, "triangle chain needs b >= 2");
  std::vector<Edge> edges = {{0, 1}};
  for (int i = 1; i < b; ++i) {
    const int apex = b + i;
    edges.push_back({i, i + 1});
    edges.push_back({i, apex});
    edges.push_back({i + 1, apex});
  }
  return Graph::FromEdges(2 * b, edges);
}

int TriangleChainCdim(int b) {
  Require(b >= 2, "triangle chain needs b >= 2");
  return (2 * b + b % 3) / 3;
}

int DisjointUnionCdim(std::span<const ComponentDimension> components) {
  int isolated = 0;
  int total = 0;
  for (const auto& c : components) {
    if (c.order == 1) {
      ++isolated;
    } else {
      total += c.cdim;
    }
  }
  return std::max(isolated - 1, 0) + total;
}

Graph StandardGraph(std::string_view kind, int n) {
  std::vector<Edge> edges;
  if (kind == "path") {
    Require(n >= 1, "path needs n >= 1");
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::FromEdges(n, edges);
  }
  if (kind == "cycle") {
    Require(n >= 3, "cycle needs n >= 3");
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph::FromEdges(n, edges);
  }
  if (kind == "complete") {
    Require(n >= 1, "complete graph needs n >= 1");
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    return Graph::FromEdges(n, edges);
  }
  if (kind == "star") {
    Require(n >= 2, "star needs n >= 2");
    for (int i = 1; i < n; ++i) edges.push_back({0, i});
    return Graph::FromEdges(n, edges);
  }
  if (kind == "house") {
    return ThresholdGraph(ThresholdSequence({1, 1, 0, 1, 1}));
  }
  if (kind == "figure1") {
    return Graph::FromEdges(8, {{0, 1}, {1, 2}, {1, 4}, {1, 5}, {2, 3},
                                {2, 4}, {2, 5}, {3, 4}, {4, 5}, {5, 6},
                                {5, 7}, {6, 7}});
  }
  if (kind == "figure5") {
    return Graph::FromEdges(9, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3},
                                {1, 4}, {2, 4}, {3, 4}, {4, 5}, {5, 6},
                                {5, 7}, {6, 8}, {7, 8}});
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown graph kind '" + std::string(kind) + "'");
}

}  // namespace cdim
