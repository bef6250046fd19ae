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

#include "cdim/connectivity.h"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "cdim/error.h"

namespace cdim {

int KappaValue::value() const {
  if (infinite_) {
    throw Error(ErrorCode::kInvalidArgument, "kappa value is infinite");
  }
  return count_;
}

std::string KappaValue::ToString() const {
  return infinite_ ? "inf" : std::to_string(count_);
}

namespace {

// Split network: vertex x has an in-node 2x and an out-node 2x+1 joined by a
// unit arc; every undirected edge {a,b} becomes out(a)->in(b) and
// out(b)->in(a). The network is built once per graph and re-armed for each
// source/sink pair by lifting the split arcs of the two terminals.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : n_(g.num_vertices()) {
    const int nodes = 2 * n_;
    head_.assign(nodes, -1);
    split_arc_.resize(n_);
    for (int x = 0; x < n_; ++x) split_arc_[x] = AddArc(In(x), Out(x));
    for (const Edge& e : g.edges()) {
      AddArc(Out(e.u), In(e.v));
      AddArc(Out(e.v), In(e.u));
    }
    flow_.assign(to_.size(), 0);
    base_capacity_ = capacity_;
    parent_arc_.resize(nodes);
  }

  int MaxFlow(int s, int t) {
    std::copy(base_capacity_.begin(), base_capacity_.end(), capacity_.begin());
    std::fill(flow_.begin(), flow_.end(), 0);
    const int unbounded = n_;
    capacity_[split_arc_[s]] = unbounded;
    capacity_[split_arc_[t]] = unbounded;
    const int source = Out(s);
    const int sink = In(t);
    int total = 0;
    while (Augment(source, sink)) ++total;
    return total;
  }

 private:
  static int In(int x) { return 2 * x; }
  static int Out(int x) { return 2 * x + 1; }

  // Adds a forward arc and its residual twin; returns the forward arc id.
  int AddArc(int from, int to) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    capacity_.push_back(1);
    next_.push_back(head_[from]);
    head_[from] = id;
    to_.push_back(from);
    capacity_.push_back(0);
    next_.push_back(head_[to]);
    head_[to] = id + 1;
    return id;
  }

  // One BFS augmenting path of unit value.
  bool Augment(int source, int sink) {
    std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
    queue_.clear();
    queue_.push_back(source);
    parent_arc_[source] = -2;
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const int x = queue_[i];
      for (int a = head_[x]; a != -1; a = next_[a]) {
        const int y = to_[a];
        if (parent_arc_[y] != -1 || capacity_[a] - flow_[a] <= 0) continue;
        parent_arc_[y] = a;
        if (y == sink) {
          for (int node = sink; node != source;) {
            const int arc = parent_arc_[node];
            flow_[arc] += 1;
            flow_[arc ^ 1] -= 1;
            node = to_[arc ^ 1];
          }
          return true;
        }
        queue_.push_back(y);
      }
    }
    return false;
  }

  int n_;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<int> capacity_;
  std::vector<int> base_capacity_;
  std::vector<int> flow_;
  std::vector<int> split_arc_;
  std::vector<int> parent_arc_;
  std::vector<int> queue_;
};

void CheckVertex(const Graph& g, int v) {
  if (!g.IsValidVertex(v)) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(v) + " outside [0, " +
                    std::to_string(g.num_vertices()) + ")");
  }
}

}  // namespace

KappaValue LocalConnectivity(const Graph& g, int u, int v) {
  CheckVertex(g, u);
  CheckVertex(g, v);
  if (u == v) return KappaValue::Infinity();
  SplitNetwork network(g);
  return KappaValue::Finite(network.MaxFlow(u, v));
}

KappaMatrix::KappaMatrix(int n, std::vector<KappaValue> values)
    : n_(n), values_(std::move(values)) {
  if (n < 0 || values_.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::kInvalidArgument, "kappa matrix size mismatch");
  }
}

KappaMatrix ComputeKappaMatrix(const Graph& g, int threads) {
  const int n = g.num_vertices();
  std::vector<KappaValue> values(static_cast<std::size_t>(n) * n);
  for (int v = 0; v < n; ++v) values[v * n + v] = KappaValue::Infinity();

  if (threads <= 0) {
    threads = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  }
  threads = std::max(1, std::min(threads, n));

  // Row u owns the entries (u, v) for v > u; rows are dealt round-robin so
  // the write sets of different workers are disjoint.
  auto work = [&](int worker) {
    SplitNetwork network(g);
    for (int u = worker; u < n; u += threads) {
      for (int v = u + 1; v < n; ++v) {
        const KappaValue k = KappaValue::Finite(network.MaxFlow(u, v));
        values[u * n + v] = k;
        values[v * n + u] = k;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return KappaMatrix(n, std::move(values));
}

std::optional<int> UniformConnectivity(const KappaMatrix& km) {
  if (km.n() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "uniform connectivity needs at least two vertices");
  }
  const KappaValue k = km.at(0, 1);
  for (int u = 0; u < km.n(); ++u) {
    for (int v = u + 1; v < km.n(); ++v) {
      if (km.at(u, v) != k) return std::nullopt;
    }
  }
  if (km.n() < k.value() + 1) return std::nullopt;
  return k.value();
}

std::vector<std::optional<int>> UniformlyConnectedVertices(
    const KappaMatrix& km) {
  if (km.n() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "uniform connectivity needs at least two vertices");
  }
  std::vector<std::optional<int>> result(km.n());
  for (int v = 0; v < km.n(); ++v) {
    const KappaValue first = km.at(v, v == 0 ? 1 : 0);
    bool constant = true;
    for (int w = 0; w < km.n() && constant; ++w) {
      if (w != v && km.at(v, w) != first) constant = false;
    }
    if (constant) result[v] = first.value();
  }
  return result;
}

}  // namespace cdim
