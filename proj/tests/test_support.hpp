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

// Graph generators and brute-force oracles shared by the unit tests and the
// acceptance binary. The oracles deliberately avoid the library's own
// algorithms.

#ifndef HIERCENT_TESTS_TEST_SUPPORT_HPP_
#define HIERCENT_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hiercent/graph.hpp"

namespace hiercent::testing {

inline std::string data_path(const std::string& name) {
  return std::string(HIERCENT_DATA_DIR) + "/" + name;
}

inline Graph load_file(const std::string& path) {
  std::ifstream in(path);
  return load_edge_list(in);
}

inline Graph zachary() { return load_file(data_path("zachary_karate.edges")); }
inline Graph les_miserables() {
  return load_file(data_path("les_miserables.edges"));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::FromEdges(n, e);
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::FromEdges(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::FromEdges(n, e);
}

// Node 0 is the centre.
inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::FromEdges(leaves + 1, e);
}

inline Graph gnp(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::FromEdges(n, e);
}

// Random spanning tree plus independent extra edges with probability p.
inline Graph connected_gnp(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    e.emplace_back(parent(rng), v);
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::FromEdges(n, e);
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
  return connected_gnp(n, 0.0, rng);
}

// Node v of `g` becomes node perm[v].
inline Graph relabel(const Graph& g, const std::vector<NodeIndex>& perm) {
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::FromEdges(g.num_nodes(), e);
}

inline std::vector<NodeIndex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<NodeIndex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Eigen::MatrixXi dense_adjacency(const Graph& g) {
  const int n = g.num_nodes();
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

inline bool is_connected_mask(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  int components = n;
  for (const auto& [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

// Every connected labelled graph on n nodes (n <= 6 keeps this small).
inline void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> e;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) e.push_back(pairs[b]);
    if (is_connected_mask(n, e)) fn(Graph::FromEdges(n, e));
  }
}

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline Eigen::MatrixXi floyd_warshall(const Graph& g) {
  const int n = g.num_nodes();
  Eigen::MatrixXi d = Eigen::MatrixXi::Constant(n, n, kInf);
  for (int v = 0; v < n; ++v) d(v, v) = 0;
  for (const auto& [u, v] : g.edges()) d(u, v) = d(v, u) = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
  return d;
}

// Normalised betweenness by listing every shortest path explicitly.
inline Eigen::VectorXd brute_force_betweenness(const Graph& g) {
  const int n = g.num_nodes();
  const Eigen::MatrixXi a = dense_adjacency(g);
  const Eigen::MatrixXi d = floyd_warshall(g);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (d(s, t) >= kInf) continue;
      std::vector<std::vector<int>> paths;
      std::vector<int> current = {s};
      std::function<void(int)> walk = [&](int v) {
        if (v == t) {
          paths.push_back(current);
          return;
        }
        for (int w = 0; w < n; ++w) {
          if (!a(v, w)) continue;
          const int used = static_cast<int>(current.size());
          if (used + d(w, t) != d(s, t)) continue;
          current.push_back(w);
          walk(w);
          current.pop_back();
        }
      };
      walk(s);
      for (const auto& p : paths)
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
          b[p[i]] += 1.0 / static_cast<double>(paths.size());
    }
  }
  return b * (2.0 / ((n - 1.0) * (n - 2.0)));
}

// Effective resistance from the Laplacian grounded at node 0.
inline Eigen::MatrixXd effective_resistance(const Graph& g) {
  const int n = g.num_nodes();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    lap(u, u) += 1;
    lap(v, v) += 1;
    lap(u, v) -= 1;
    lap(v, u) -= 1;
  }
  Eigen::MatrixXd inv = Eigen::MatrixXd::Zero(n, n);
  if (n > 1) {
    inv.bottomRightCorner(n - 1, n - 1) =
        lap.bottomRightCorner(n - 1, n - 1).inverse();
  }
  Eigen::MatrixXd r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = inv(i, i) + inv(j, j) - 2 * inv(i, j);
  return r;
}

inline Eigen::VectorXd resistance_closeness(const Graph& g) {
  const Eigen::MatrixXd r = effective_resistance(g);
  return Eigen::VectorXd::Constant(g.num_nodes(), g.num_nodes()).cwiseQuotient(
      r.rowwise().sum());
}

// Row sums of A^2 by an explicit triple loop, divided by N - 1.
inline Eigen::VectorXd square_row_sum_oracle(const Graph& g) {
  const int n = g.num_nodes();
  const Eigen::MatrixXi a = dense_adjacency(g);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long s = 0;
      for (int k = 0; k < n; ++k) s += a(i, k) * a(k, j);
      out[i] += static_cast<double>(s);
    }
  return out / (n - 1.0);
}

// sum_{p=1}^{terms} s^p A^p 1.
inline Eigen::VectorXd katz_series(const Graph& g, double s, int terms) {
  const Eigen::MatrixXd a = dense_adjacency(g).cast<double>();
  Eigen::VectorXd walk = Eigen::VectorXd::Ones(g.num_nodes());
  Eigen::VectorXd total = Eigen::VectorXd::Zero(g.num_nodes());
  for (int p = 1; p <= terms; ++p) {
    walk = s * (a * walk);
    total += walk;
  }
  return total;
}

// Stationary PageRank from (I - d A D^-1) x = (1 - d) / N.
inline Eigen::VectorXd pagerank_solve(const Graph& g, double damping) {
  const int n = g.num_nodes();
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (const auto& [u, v] : g.edges()) {
    m(v, u) -= damping / g.degree(u);
    m(u, v) -= damping / g.degree(v);
  }
  const Eigen::VectorXd rhs = Eigen::VectorXd::Constant(n, (1.0 - damping) / n);
  return m.fullPivLu().solve(rhs);
}

inline std::vector<long> triangles_brute_force(const Graph& g) {
  const int n = g.num_nodes();
  const Eigen::MatrixXi a = dense_adjacency(g);
  std::vector<long> t(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (a(i, j) && a(j, k) && a(i, k)) {
          ++t[i];
          ++t[j];
          ++t[k];
        }
  return t;
}

struct PairCounts {
  long concordant = 0;
  long discordant = 0;
  long tied_x_only = 0;
  long tied_y_only = 0;
};

inline PairCounts classify_pairs(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  PairCounts c;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0 && dy == 0) continue;
      if (dx == 0) {
        ++c.tied_x_only;
      } else if (dy == 0) {
        ++c.tied_y_only;
      } else if ((dx > 0) == (dy > 0)) {
        ++c.concordant;
      } else {
        ++c.discordant;
      }
    }
  return c;
}

inline double tau_b_oracle(const std::vector<double>& x,
                           const std::vector<double>& y) {
  const PairCounts c = classify_pairs(x, y);
  const double nc = static_cast<double>(c.concordant);
  const double nd = static_cast<double>(c.discordant);
  return (nc - nd) / std::sqrt((nc + nd + c.tied_x_only) *
                               (nc + nd + c.tied_y_only));
}

// Candidate beating every other candidate by strict pairwise majority of
// ballot scores, or -1. Ballots: rows are voters, columns candidates.
inline int condorcet_winner(const Eigen::MatrixXd& ballots) {
  const int c = static_cast<int>(ballots.cols());
  for (int i = 0; i < c; ++i) {
    bool beats_all = true;
    for (int j = 0; j < c && beats_all; ++j) {
      if (i == j) continue;
      int for_i = 0, for_j = 0;
      for (int v = 0; v < ballots.rows(); ++v) {
        if (ballots(v, i) > ballots(v, j)) ++for_i;
        if (ballots(v, j) > ballots(v, i)) ++for_j;
      }
      beats_all = for_i > for_j;
    }
    if (beats_all) return i;
  }
  return -1;
}

inline Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(),
                                           static_cast<Eigen::Index>(v.size()));
}

}  // namespace hiercent::testing

#endif  // HIERCENT_TESTS_TEST_SUPPORT_HPP_
