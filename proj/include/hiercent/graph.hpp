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

#ifndef HIERCENT_GRAPH_HPP_
#define HIERCENT_GRAPH_HPP_

#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace hiercent {

using NodeIndex = std::int32_t;
using Edge = std::pair<NodeIndex, NodeIndex>;

// Immutable simple undirected graph stored as compressed adjacency rows.
// Every neighbour row is sorted ascending; self-loops and parallel edges are
// removed on construction.
class Graph {
 public:
  Graph() = default;

  // Builds a graph over `labels.size()` nodes. Edge endpoints must be valid
  // indices; orientation, duplicates and self-loops are normalised away.
  static Graph FromEdges(std::vector<std::string> labels,
                         std::span<const Edge> edges);

  // Convenience for tests and generators: nodes are labelled "0".."n-1".
  static Graph FromEdges(NodeIndex n, std::span<const Edge> edges);

  NodeIndex num_nodes() const { return static_cast<NodeIndex>(labels_.size()); }
  std::int64_t num_edges() const {
    return static_cast<std::int64_t>(targets_.size()) / 2;
  }

  std::span<const NodeIndex> neighbors(NodeIndex v) const {
    return {targets_.data() + offsets_[v],
            targets_.data() + offsets_[v + 1]};
  }
  NodeIndex degree(NodeIndex v) const {
    return static_cast<NodeIndex>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(NodeIndex u, NodeIndex v) const;

  const std::string& label(NodeIndex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Edges with u < v, in row-major order.
  std::vector<Edge> edges() const;

  // Position of v's row inside the flat adjacency array; slot
  // `row_offset(v) + i` holds `neighbors(v)[i]`.
  std::int64_t row_offset(NodeIndex v) const { return offsets_[v]; }

  // Dense 0/1 adjacency matrix.
  Eigen::MatrixXd adjacency_matrix() const;

 private:
  std::vector<std::int64_t> offsets_{0};
  std::vector<NodeIndex> targets_;
  std::vector<std::string> labels_;
};

struct ParseOptions {
  // Lines whose first non-blank character is one of these are skipped.
  std::string comment_chars = "#%";
  // Accept rows with more than two columns (weights, timestamps) and keep
  // only the first two. Off by default: such rows are a parse error.
  bool ignore_extra_columns = false;
};

// Reads a whitespace- or comma-separated edge list. Nodes are indexed in
// order of first appearance. Throws ParseError on a malformed line or when
// no edge survives normalisation.
Graph load_edge_list(std::istream& in, const ParseOptions& options = {});

// Induced subgraph on the largest connected component. Ties go to the
// component holding the smallest node index; relative node order is kept.
Graph largest_connected_component(const Graph& g);

// Connected-component id per node, numbered in order of smallest member.
std::vector<NodeIndex> connected_components(const Graph& g);

inline constexpr std::int32_t kUnreachable =
    std::numeric_limits<std::int32_t>::max();

// Hop distances from `source`; unreachable nodes hold kUnreachable.
std::vector<std::int32_t> bfs_distances(const Graph& g, NodeIndex source);

// Number of distinct triangles through each node.
std::vector<std::int64_t> triangle_count_per_node(const Graph& g);

struct GraphStats {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t k_min = 0;
  std::int64_t k_max = 0;
  double avg_degree = 0.0;
  double avg_shortest_path = 0.0;
  double density = 0.0;
  double transitivity = 0.0;
  // Undefined when every edge joins nodes of equal degree (regular graphs).
  std::optional<double> assortativity;
  std::int64_t max_coreness = 0;
  std::int64_t max_trussness = 0;
};

// Topological summary of a connected graph. Throws ParameterError when the
// graph has fewer than two nodes.
GraphStats graph_stats(const Graph& g);

}  // namespace hiercent

#endif  // HIERCENT_GRAPH_HPP_
