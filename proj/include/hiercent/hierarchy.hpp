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

#ifndef HIERCENT_HIERARCHY_HPP_
#define HIERCENT_HIERARCHY_HPP_

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hiercent/graph.hpp"

namespace hiercent {

enum class HierarchyKind { kCore, kTruss, kLrc, kTriangleParticipation };

inline constexpr std::array<HierarchyKind, 4> kHierarchyKinds = {
    HierarchyKind::kCore, HierarchyKind::kTruss, HierarchyKind::kLrc,
    HierarchyKind::kTriangleParticipation};

// Short identifiers used in file names and tables: core, truss, lrc, tp.
std::string_view to_string(HierarchyKind kind);

// Per-node hierarchy of one kind.
//
// `raw` is oriented by importance (larger = more important) and is what the
// evaluation stage compares against centralities. `level` is the hierarchy
// level, where 1 is the top level for the integer measures; for LRC the
// level is the raw value itself.
struct HierarchyScores {
  HierarchyKind kind = HierarchyKind::kCore;
  Eigen::VectorXd raw;
  Eigen::VectorXd level;
  // Smallest and largest value of the underlying decomposition (core
  // number, edge trussness, triangle count, or LRC value).
  double k_min = 0.0;
  double k_max = 0.0;
};

// Standard edge trussness: the largest k such that the edge survives in the
// k-truss. Edges closing no triangle have trussness 2.
class EdgeTrussMap {
 public:
  EdgeTrussMap() = default;
  EdgeTrussMap(std::vector<Edge> edges, std::vector<std::int32_t> trussness);

  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::int32_t>& trussness() const { return trussness_; }

  // 2 when a triangle-free edge exists, otherwise the smallest trussness.
  std::int32_t k_min() const { return k_min_; }
  std::int32_t max_trussness() const { return k_max_; }
  // Peeling-stage label t(e) = trussness(e) - k_min.
  std::int32_t shifted(std::size_t edge) const {
    return trussness_[edge] - k_min_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::int32_t> trussness_;
  std::int32_t k_min_ = 2;
  std::int32_t k_max_ = 2;
};

struct TrussDecomposition {
  EdgeTrussMap edges;
  HierarchyScores nodes;
};

// Core numbers by bucket peeling; level = k_max - (c(v) - 1).
HierarchyScores core_decompose(const Graph& g);

// Edge trussness by support peeling. A node's raw score is the largest
// shifted label among its incident edges, i.e. the stage at which peeling
// isolates it; level = k_max - k_min - (t(v) - 1).
TrussDecomposition truss_decompose(const Graph& g);

// Mean reciprocal hop distance to every reachable node, normalised by
// N - 1. Throws ParameterError for graphs with fewer than two nodes.
HierarchyScores local_reaching_centrality(const Graph& g);

// Triangle count per node; level = k_max + 1 - Tp(v) with k_max the
// largest count.
HierarchyScores triangle_participation(const Graph& g);

HierarchyScores compute_hierarchy(const Graph& g, HierarchyKind kind);

}  // namespace hiercent

#endif  // HIERCENT_HIERARCHY_HPP_
