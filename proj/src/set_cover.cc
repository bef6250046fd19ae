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

#include "set_cover.h"

#include <algorithm>
#include <bit>
#include <limits>

namespace cdim::internal {
namespace {

using Bits = std::vector<std::uint64_t>;

Bits AllPairs(const PairCoverage& coverage) {
  Bits bits(coverage.words(), ~std::uint64_t{0});
  if (coverage.num_pairs() % 64 != 0) {
    bits.back() = (std::uint64_t{1} << (coverage.num_pairs() % 64)) - 1;
  }
  if (coverage.num_pairs() == 0) bits.clear();
  return bits;
}

void Subtract(Bits& bits, std::span<const std::uint64_t> cover) {
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] &= ~cover[i];
}

int Count(const Bits& bits) {
  int count = 0;
  for (std::uint64_t word : bits) count += std::popcount(word);
  return count;
}

int Overlap(const Bits& bits, std::span<const std::uint64_t> cover) {
  int count = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    count += std::popcount(bits[i] & cover[i]);
  }
  return count;
}

class Search {
 public:
  enum class Mode { kMinimize, kEnumerate };

  Search(const PairCoverage& coverage, Mode mode, std::int64_t budget)
      : coverage_(coverage),
        mode_(mode),
        budget_(budget),
        excluded_(coverage.n(), 0) {}

  void set_best(std::vector<int> best) {
    best_size_ = static_cast<int>(best.size());
    best_ = std::move(best);
  }
  void set_lower_bound(int bound) { lower_bound_ = bound; }
  void set_target(int target) { target_ = target; }

  void Run(std::span<const int> forced) {
    chosen_.assign(forced.begin(), forced.end());
    Bits uncovered = AllPairs(coverage_);
    for (int w : forced) Subtract(uncovered, coverage_.cover(w));
    if (mode_ == Mode::kMinimize && best_size_ <= lower_bound_) return;
    Visit(uncovered);
  }

  bool exhausted() const { return exhausted_; }
  std::int64_t nodes() const { return nodes_; }
  const std::vector<int>& best() const { return best_; }
  std::vector<std::vector<int>>& found() { return found_; }

 private:
  void Visit(const Bits& uncovered) {
    if (stop_) return;
    if (++nodes_ > budget_) {
      stop_ = exhausted_ = true;
      return;
    }
    const int chosen = static_cast<int>(chosen_.size());
    const int remaining = Count(uncovered);
    if (remaining == 0) {
      Record();
      return;
    }
    int max_cover = 0;
    for (int w = 0; w < coverage_.n(); ++w) {
      if (!excluded_[w]) {
        max_cover = std::max(max_cover, Overlap(uncovered, coverage_.cover(w)));
      }
    }
    if (max_cover == 0) return;
    const int needed = (remaining + max_cover - 1) / max_cover;
    const int limit = mode_ == Mode::kMinimize ? best_size_ - 1 : target_;
    if (chosen + needed > limit) return;

    int branch_pair = -1;
    int fewest = std::numeric_limits<int>::max();
    for (std::size_t word = 0; word < uncovered.size(); ++word) {
      for (std::uint64_t rest = uncovered[word]; rest != 0; rest &= rest - 1) {
        const int pair = static_cast<int>(word * 64) + std::countr_zero(rest);
        int available = 0;
        for (int w : coverage_.coverers(pair)) available += !excluded_[w];
        if (available < fewest) {
          fewest = available;
          branch_pair = pair;
        }
      }
    }
    if (fewest == 0) return;

    std::vector<int> branched;
    for (int w : coverage_.coverers(branch_pair)) {
      if (excluded_[w]) continue;
      Bits next = uncovered;
      Subtract(next, coverage_.cover(w));
      chosen_.push_back(w);
      Visit(next);
      chosen_.pop_back();
      excluded_[w] = 1;
      branched.push_back(w);
      if (stop_) break;
    }
    for (int w : branched) excluded_[w] = 0;
  }

  void Record() {
    std::vector<int> set = chosen_;
    std::sort(set.begin(), set.end());
    if (mode_ == Mode::kEnumerate) {
      if (static_cast<int>(set.size()) == target_) found_.push_back(set);
      return;
    }
    if (static_cast<int>(set.size()) < best_size_) {
      best_size_ = static_cast<int>(set.size());
      best_ = std::move(set);
      if (best_size_ <= lower_bound_) stop_ = true;
    }
  }

  const PairCoverage& coverage_;
  Mode mode_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool stop_ = false;
  bool exhausted_ = false;
  std::vector<char> excluded_;
  std::vector<int> chosen_;
  std::vector<int> best_;
  int best_size_ = std::numeric_limits<int>::max();
  int lower_bound_ = 0;
  int target_ = 0;
  std::vector<std::vector<int>> found_;
};

}  // namespace

CoverSearchResult MinimumCover(const PairCoverage& coverage,
                               std::span<const int> forced,
                               std::vector<int> incumbent, int lower_bound,
                               std::int64_t budget) {
  std::sort(incumbent.begin(), incumbent.end());
  Search search(coverage, Search::Mode::kMinimize, budget);
  search.set_best(std::move(incumbent));
  search.set_lower_bound(lower_bound);
  search.Run(forced);
  return {!search.exhausted(), search.best(), search.nodes()};
}

bool EnumerateCovers(const PairCoverage& coverage, std::span<const int> forced,
                     int size, std::int64_t budget,
                     std::vector<std::vector<int>>* out) {
  Search search(coverage, Search::Mode::kEnumerate, budget);
  search.set_target(size);
  search.Run(forced);
  *out = std::move(search.found());
  std::sort(out->begin(), out->end());
  return !search.exhausted();
}

std::vector<int> GreedyCover(const PairCoverage& coverage,
                             std::span<const int> start) {
  std::vector<int> chosen(start.begin(), start.end());
  Bits uncovered = AllPairs(coverage);
  for (int w : chosen) Subtract(uncovered, coverage.cover(w));
  while (Count(uncovered) > 0) {
    int best = -1;
    int best_gain = 0;
    for (int w = 0; w < coverage.n(); ++w) {
      const int gain = Overlap(uncovered, coverage.cover(w));
      if (gain > best_gain) {
        best_gain = gain;
        best = w;
      }
    }
    chosen.push_back(best);
    Subtract(uncovered, coverage.cover(best));
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  return chosen;
}

}  // namespace cdim::internal
