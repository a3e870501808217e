// Copyright 2026 The hiercent Authors
//
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

#include "hiercent/hierarchy.hpp"

#include <algorithm>

#include "hiercent/error.hpp"

namespace hiercent {

std::string_view to_string(HierarchyKind kind) {
  switch (kind) {
    case HierarchyKind::kCore:
      return "core";
    case HierarchyKind::kTruss:
      return "truss";
    case HierarchyKind::kLrc:
      return "lrc";
    case HierarchyKind::kTriangleParticipation:
      return "tp";
  }
  return "unknown";
}

EdgeTrussMap::EdgeTrussMap(std::vector<Edge> edges,
                           std::vector<std::int32_t> trussness)
    : edges_(std::move(edges)), trussness_(std::move(trussness)) {
  if (!trussness_.empty()) {
    k_min_ = *std::min_element(trussness_.begin(), trussness_.end());
    k_max_ = *std::max_element(trussness_.begin(), trussness_.end());
  }
}

namespace {

// Bucket queue over integer keys in [0, max_key] with O(1) decrement, after
// Batagelj & Zaversnik. Items are popped in non-decreasing key order.
class BucketOrder {
 public:
  explicit BucketOrder(std::vector<std::int64_t> keys) : key_(std::move(keys)) {
    const std::size_t n = key_.size();
    const std::int64_t max_key =
        n == 0 ? 0 : *std::max_element(key_.begin(), key_.end());
    start_.assign(static_cast<std::size_t>(max_key) + 2, 0);
    for (auto k : key_) ++start_[k + 1];
    for (std::size_t k = 1; k < start_.size(); ++k) start_[k] += start_[k - 1];
    order_.resize(n);
    pos_.resize(n);
    auto fill = start_;
    for (std::size_t i = 0; i < n; ++i) {
      pos_[i] = fill[key_[i]]++;
      order_[pos_[i]] = i;
    }
  }

  std::size_t size() const { return order_.size(); }
  std::size_t at(std::size_t rank) const { return order_[rank]; }
  std::int64_t key(std::size_t item) const { return key_[item]; }

  // Moves `item` one bucket down. Only valid for items not yet popped and
  // whose key exceeds that of the item currently being processed.
  void decrement(std::size_t item) {
    const std::int64_t k = key_[item];
    const std::size_t first = start_[k];
    const std::size_t other = order_[first];
    if (other != item) {
      std::swap(order_[pos_[item]], order_[first]);
      pos_[other] = pos_[item];
      pos_[item] = first;
    }
    ++start_[k];
    --key_[item];
  }

 private:
  std::vector<std::int64_t> key_;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> pos_;
};

}  // namespace

HierarchyScores core_decompose(const Graph& g) {
  const NodeIndex n = g.num_nodes();
  std::vector<std::int64_t> degree(n);
  for (NodeIndex v = 0; v < n; ++v) degree[v] = g.degree(v);
  BucketOrder buckets(std::move(degree));

  std::vector<char> done(n, 0);
  Eigen::VectorXd core(n);
  for (std::size_t rank = 0; rank < buckets.size(); ++rank) {
    const auto v = static_cast<NodeIndex>(buckets.at(rank));
    const std::int64_t k = buckets.key(v);
    core[v] = static_cast<double>(k);
    done[v] = 1;
    for (NodeIndex w : g.neighbors(v)) {
      if (!done[w] && buckets.key(w) > k) buckets.decrement(w);
    }
  }

  HierarchyScores s;
  s.kind = HierarchyKind::kCore;
  s.raw = core;
  if (n > 0) {
    s.k_min = core.minCoeff();
    s.k_max = core.maxCoeff();
  }
  s.level = (s.k_max + 1.0) - core.array();
  return s;
}

TrussDecomposition truss_decompose(const Graph& g) {
  const NodeIndex n = g.num_nodes();
  const std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();

  // Edge id for every adjacency slot, both orientations.
  std::vector<std::int64_t> slot_edge(2 * m);
  {
    std::size_t next = 0;
    for (NodeIndex u = 0; u < n; ++u) {
      const auto row = g.neighbors(u);
      for (std::size_t i = 0; i < row.size(); ++i) {
        const NodeIndex v = row[i];
        const std::int64_t slot = g.row_offset(u) + static_cast<std::int64_t>(i);
        if (u < v) {
          slot_edge[slot] = static_cast<std::int64_t>(next++);
        } else {
          const auto back = g.neighbors(v);
          const auto at = std::lower_bound(back.begin(), back.end(), u);
          slot_edge[slot] = slot_edge[g.row_offset(v) + (at - back.begin())];
        }
      }
    }
  }

  // Calls fn(edge_uw, edge_vw) for every common neighbour w of edge (u, v).
  auto for_each_triangle = [&](NodeIndex u, NodeIndex v, auto&& fn) {
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    std::size_t a = 0, b = 0;
    while (a < nu.size() && b < nv.size()) {
      if (nu[a] < nv[b]) {
        ++a;
      } else if (nv[b] < nu[a]) {
        ++b;
      } else {
        fn(slot_edge[g.row_offset(u) + static_cast<std::int64_t>(a)],
           slot_edge[g.row_offset(v) + static_cast<std::int64_t>(b)]);
        ++a;
        ++b;
      }
    }
  };

  std::vector<std::int64_t> support(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    for_each_triangle(edges[e].first, edges[e].second,
                      [&](std::int64_t, std::int64_t) { ++support[e]; });
  }

  BucketOrder buckets(std::move(support));
  std::vector<char> removed(m, 0);
  std::vector<std::int32_t> trussness(m, 2);
  for (std::size_t rank = 0; rank < buckets.size(); ++rank) {
    const std::size_t e = buckets.at(rank);
    const std::int64_t s = buckets.key(e);
    trussness[e] = static_cast<std::int32_t>(s + 2);
    removed[e] = 1;
    for_each_triangle(edges[e].first, edges[e].second,
                      [&](std::int64_t uw, std::int64_t vw) {
                        if (removed[uw] || removed[vw]) return;
                        if (buckets.key(uw) > s) buckets.decrement(uw);
                        if (buckets.key(vw) > s) buckets.decrement(vw);
                      });
  }

  TrussDecomposition out;
  out.edges = EdgeTrussMap(edges, std::move(trussness));
  const auto& map = out.edges;

  Eigen::VectorXd node = Eigen::VectorXd::Zero(n);
  for (std::size_t e = 0; e < m; ++e) {
    const double t = map.shifted(e);
    node[edges[e].first] = std::max(node[edges[e].first], t);
    node[edges[e].second] = std::max(node[edges[e].second], t);
  }
  HierarchyScores& s = out.nodes;
  s.kind = HierarchyKind::kTruss;
  s.raw = node;
  s.k_min = map.k_min();
  s.k_max = map.max_trussness();
  s.level = (s.k_max - s.k_min + 1.0) - node.array();
  return out;
}

HierarchyScores local_reaching_centrality(const Graph& g) {
  const NodeIndex n = g.num_nodes();
  if (n < 2) {
    throw ParameterError("local reaching centrality needs at least two nodes");
  }
  Eigen::VectorXd lrc(n);
  for (NodeIndex v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    double sum = 0.0;
    for (NodeIndex j = 0; j < n; ++j) {
      if (j != v && dist[j] != kUnreachable) sum += 1.0 / dist[j];
    }
    lrc[v] = sum / (n - 1);
  }
  HierarchyScores s;
  s.kind = HierarchyKind::kLrc;
  s.raw = lrc;
  s.level = lrc;
  s.k_min = lrc.minCoeff();
  s.k_max = lrc.maxCoeff();
  return s;
}

HierarchyScores triangle_participation(const Graph& g) {
  const auto counts = triangle_count_per_node(g);
  Eigen::VectorXd tp(static_cast<Eigen::Index>(counts.size()));
  for (std::size_t v = 0; v < counts.size(); ++v) {
    tp[static_cast<Eigen::Index>(v)] = static_cast<double>(counts[v]);
  }
  HierarchyScores s;
  s.kind = HierarchyKind::kTriangleParticipation;
  s.raw = tp;
  if (tp.size() > 0) {
    s.k_min = tp.minCoeff();
    s.k_max = tp.maxCoeff();
  }
  s.level = (s.k_max + 1.0) - tp.array();
  return s;
}

HierarchyScores compute_hierarchy(const Graph& g, HierarchyKind kind) {
  switch (kind) {
    case HierarchyKind::kCore:
      return core_decompose(g);
    case HierarchyKind::kTruss:
      return truss_decompose(g).nodes;
    case HierarchyKind::kLrc:
      return local_reaching_centrality(g);
    case HierarchyKind::kTriangleParticipation:
      return triangle_participation(g);
  }
  throw ParameterError("unknown hierarchy kind");
}

}  // namespace hiercent
