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

#include "hiercent/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <string_view>
#include <unordered_map>

#include "hiercent/error.hpp"
#include "hiercent/hierarchy.hpp"

namespace hiercent {

Graph Graph::FromEdges(std::vector<std::string> labels,
                       std::span<const Edge> edges) {
  const auto n = static_cast<NodeIndex>(labels.size());
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParameterError("edge endpoint out of range");
    }
    if (u == v) continue;
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()),
                 directed.end());

  Graph g;
  g.labels_ = std::move(labels);
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.targets_.reserve(directed.size());
  for (const auto& [u, v] : directed) {
    ++g.offsets_[u + 1];
    g.targets_.push_back(v);
  }
  for (NodeIndex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  return g;
}

Graph Graph::FromEdges(NodeIndex n, std::span<const Edge> edges) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (NodeIndex v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  return FromEdges(std::move(labels), edges);
}

bool Graph::has_edge(NodeIndex u, NodeIndex v) const {
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges()));
  for (NodeIndex u = 0; u < num_nodes(); ++u) {
    for (NodeIndex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
  const NodeIndex n = num_nodes();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v : neighbors(u)) a(u, v) = 1.0;
  }
  return a;
}

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Splits on whitespace runs or a single comma. Returns false when two commas
// meet without a token between them or a comma dangles at either end.
bool tokenize(std::string_view line, std::vector<std::string_view>& tokens) {
  tokens.clear();
  bool after_comma = false;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (is_space(c)) {
      ++i;
    } else if (c == ',') {
      if (tokens.empty() || after_comma) return false;
      after_comma = true;
      ++i;
    } else {
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j]) && line[j] != ',') ++j;
      tokens.push_back(line.substr(i, j - i));
      after_comma = false;
      i = j;
    }
  }
  return !after_comma;
}

}  // namespace

Graph load_edge_list(std::istream& in, const ParseOptions& options) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeIndex> index;
  std::vector<Edge> edges;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] =
        index.try_emplace(std::string(token),
                          static_cast<NodeIndex>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::vector<std::string_view> tokens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t\v\f");
    if (first == std::string::npos) continue;
    if (options.comment_chars.find(line[first]) != std::string::npos) continue;

    if (!tokenize(line, tokens)) {
      throw ParseError("stray separator in '" + line + "'", line_no);
    }
    if (tokens.size() < 2 ||
        (tokens.size() > 2 && !options.ignore_extra_columns)) {
      throw ParseError("expected two node tokens, got " +
                           std::to_string(tokens.size()) + " in '" + line + "'",
                       line_no);
    }
    if (tokens[0] == tokens[1]) continue;  // self-loop
    const NodeIndex u = intern(tokens[0]);
    const NodeIndex v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw Error("read failure on edge-list stream");
  if (edges.empty()) throw ParseError("edge list contains no edges", 0);
  return Graph::FromEdges(std::move(labels), edges);
}

std::vector<NodeIndex> connected_components(const Graph& g) {
  const NodeIndex n = g.num_nodes();
  std::vector<NodeIndex> component(n, -1);
  std::vector<NodeIndex> stack;
  NodeIndex next = 0;
  for (NodeIndex root = 0; root < n; ++root) {
    if (component[root] != -1) continue;
    component[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeIndex u = stack.back();
      stack.pop_back();
      for (NodeIndex v : g.neighbors(u)) {
        if (component[v] == -1) {
          component[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return component;
}

Graph largest_connected_component(const Graph& g) {
  const NodeIndex n = g.num_nodes();
  if (n == 0) return g;
  const auto component = connected_components(g);
  const NodeIndex count =
      *std::max_element(component.begin(), component.end()) + 1;
  std::vector<NodeIndex> sizes(count, 0);
  for (NodeIndex c : component) ++sizes[c];
  // Components are numbered by smallest member, so the first maximum wins.
  const auto keep = static_cast<NodeIndex>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  if (sizes[keep] == n) return g;

  std::vector<NodeIndex> remap(n, -1);
  std::vector<std::string> labels;
  for (NodeIndex v = 0; v < n; ++v) {
    if (component[v] == keep) {
      remap[v] = static_cast<NodeIndex>(labels.size());
      labels.push_back(g.label(v));
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (remap[u] >= 0) edges.emplace_back(remap[u], remap[v]);
  }
  return Graph::FromEdges(std::move(labels), edges);
}

std::vector<std::int32_t> bfs_distances(const Graph& g, NodeIndex source) {
  if (source < 0 || source >= g.num_nodes()) {
    throw ParameterError("BFS source out of range");
  }
  std::vector<std::int32_t> dist(g.num_nodes(), kUnreachable);
  std::vector<NodeIndex> frontier{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeIndex u = frontier[head];
    for (NodeIndex v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::int64_t> triangle_count_per_node(const Graph& g) {
  std::vector<std::int64_t> count(g.num_nodes(), 0);
  // Each triangle u < v < w is found once, from its lowest edge (u, v).
  for (NodeIndex u = 0; u < g.num_nodes(); ++u) {
    const auto nu = g.neighbors(u);
    for (NodeIndex v : nu) {
      if (v <= u) continue;
      const auto nv = g.neighbors(v);
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++count[u];
          ++count[v];
          ++count[*a];
          ++a;
          ++b;
        }
      }
    }
  }
  return count;
}

GraphStats graph_stats(const Graph& g) {
  const NodeIndex n = g.num_nodes();
  if (n < 2) throw ParameterError("graph statistics need at least two nodes");

  GraphStats s;
  s.n = n;
  s.m = g.num_edges();
  s.k_min = g.degree(0);
  s.k_max = g.degree(0);
  for (NodeIndex v = 1; v < n; ++v) {
    s.k_min = std::min<std::int64_t>(s.k_min, g.degree(v));
    s.k_max = std::max<std::int64_t>(s.k_max, g.degree(v));
  }
  s.avg_degree = 2.0 * static_cast<double>(s.m) / n;
  s.density = 2.0 * static_cast<double>(s.m) /
              (static_cast<double>(n) * (n - 1));

  double distance_sum = 0.0;
  std::int64_t reachable_pairs = 0;
  for (NodeIndex src = 0; src < n; ++src) {
    const auto dist = bfs_distances(g, src);
    for (NodeIndex t = src + 1; t < n; ++t) {
      if (dist[t] != kUnreachable) {
        distance_sum += dist[t];
        ++reachable_pairs;
      }
    }
  }
  s.avg_shortest_path =
      reachable_pairs > 0 ? distance_sum / static_cast<double>(reachable_pairs)
                          : 0.0;

  const auto triangles = triangle_count_per_node(g);
  double closed = 0.0;
  double triples = 0.0;
  for (NodeIndex v = 0; v < n; ++v) {
    const double k = g.degree(v);
    closed += static_cast<double>(triangles[v]);
    triples += k * (k - 1.0) / 2.0;
  }
  // `closed` already counts each triangle three times.
  s.transitivity = triples > 0.0 ? closed / triples : 0.0;

  // Newman degree correlation: Pearson over both orientations of every edge.
  double sx = 0.0, sxx = 0.0, sxy = 0.0;
  const double directed_edges = 2.0 * static_cast<double>(s.m);
  for (NodeIndex u = 0; u < n; ++u) {
    const double ku = g.degree(u);
    for (NodeIndex v : g.neighbors(u)) {
      const double kv = g.degree(v);
      sx += ku;
      sxx += ku * ku;
      sxy += ku * kv;
    }
  }
  if (directed_edges > 0.0) {
    const double mean = sx / directed_edges;
    const double var = sxx / directed_edges - mean * mean;
    const double cov = sxy / directed_edges - mean * mean;
    if (var > 1e-12 * std::max(1.0, mean * mean)) s.assortativity = cov / var;
  }

  s.max_coreness = static_cast<std::int64_t>(core_decompose(g).k_max);
  s.max_trussness = truss_decompose(g).edges.max_trussness();
  return s;
}

}  // namespace hiercent
