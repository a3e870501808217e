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

#include "hiercent/centrality.hpp"

#include <cmath>
#include <string>

#include "hiercent/error.hpp"

namespace hiercent {

std::string_view to_string(CentralityKind kind) {
  switch (kind) {
    case CentralityKind::kDegree:
      return "degree";
    case CentralityKind::kLocal:
      return "local";
    case CentralityKind::kBetweenness:
      return "betweenness";
    case CentralityKind::kCurrentFlowCloseness:
      return "cf_closeness";
    case CentralityKind::kKatz:
      return "katz";
    case CentralityKind::kPageRank:
      return "pagerank";
  }
  return "unknown";
}

namespace {

void require_nodes(const Graph& g, NodeIndex at_least, const char* what) {
  if (g.num_nodes() < at_least) {
    throw ParameterError(std::string(what) + " needs at least " +
                         std::to_string(at_least) + " nodes");
  }
}

// y = A x without materialising A.
Eigen::VectorXd adjacency_times(const Graph& g, const Eigen::VectorXd& x) {
  Eigen::VectorXd y(g.num_nodes());
  for (NodeIndex v = 0; v < g.num_nodes(); ++v) {
    double sum = 0.0;
    for (NodeIndex u : g.neighbors(v)) sum += x[u];
    y[v] = sum;
  }
  return y;
}

}  // namespace

CentralityScores degree_centrality(const Graph& g) {
  require_nodes(g, 2, "degree centrality");
  const NodeIndex n = g.num_nodes();
  CentralityScores s;
  s.kind = CentralityKind::kDegree;
  s.values.resize(n);
  for (NodeIndex v = 0; v < n; ++v) {
    s.values[v] = static_cast<double>(g.degree(v)) / (n - 1);
  }
  return s;
}

CentralityScores local_centrality(const Graph& g, LocalCentralityMode mode) {
  require_nodes(g, 2, "local centrality");
  const NodeIndex n = g.num_nodes();
  CentralityScores s;
  s.kind = CentralityKind::kLocal;
  s.params.local_mode = mode;
  s.values.resize(n);
  if (mode == LocalCentralityMode::kSquareRowSum) {
    // sum_j (A^2)_vj = sum over neighbours u of deg(u).
    for (NodeIndex v = 0; v < n; ++v) {
      double sum = 0.0;
      for (NodeIndex u : g.neighbors(v)) sum += g.degree(u);
      s.values[v] = sum / (n - 1);
    }
  } else {
    std::vector<NodeIndex> seen(n, -1);
    for (NodeIndex v = 0; v < n; ++v) {
      seen[v] = v;
      std::int64_t count = 0;
      for (NodeIndex u : g.neighbors(v)) {
        if (seen[u] != v) {
          seen[u] = v;
          ++count;
        }
        for (NodeIndex w : g.neighbors(u)) {
          if (seen[w] != v) {
            seen[w] = v;
            ++count;
          }
        }
      }
      s.values[v] = static_cast<double>(count) / (n - 1);
    }
  }
  return s;
}

CentralityScores betweenness_centrality(const Graph& g) {
  require_nodes(g, 3, "betweenness centrality");
  const NodeIndex n = g.num_nodes();
  Eigen::VectorXd total = Eigen::VectorXd::Zero(n);

  std::vector<NodeIndex> order;
  std::vector<std::int32_t> dist(n);
  std::vector<double> paths(n);
  std::vector<double> delta(n);
  order.reserve(n);
  for (NodeIndex source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(paths.begin(), paths.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[source] = 0;
    paths[source] = 1.0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeIndex u = order[head];
      for (NodeIndex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[u] + 1) paths[w] += paths[u];
      }
    }
    // Dependencies flow back from the farthest nodes; predecessors of w are
    // the neighbours one hop closer to the source.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeIndex w = *it;
      for (NodeIndex u : g.neighbors(w)) {
        if (dist[u] == dist[w] - 1) {
          delta[u] += paths[u] / paths[w] * (1.0 + delta[w]);
        }
      }
      if (w != source) total[w] += delta[w];
    }
  }
  // Ordered (s, t) pairs count each unordered pair twice.
  const double scale = 1.0 / (static_cast<double>(n - 1) * (n - 2));
  CentralityScores s;
  s.kind = CentralityKind::kBetweenness;
  s.values = total * scale;
  return s;
}

CentralityScores current_flow_closeness(const Graph& g) {
  require_nodes(g, 2, "current-flow closeness");
  const NodeIndex n = g.num_nodes();
  Eigen::MatrixXd m = Eigen::MatrixXd::Ones(n, n);
  for (NodeIndex v = 0; v < n; ++v) {
    m(v, v) += g.degree(v);
    for (NodeIndex u : g.neighbors(v)) m(v, u) -= 1.0;
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  if (!(lu.rcond() > 1e-13)) {
    throw NumericalError(
        "current-flow closeness: D - A + J is singular (disconnected graph?)");
  }
  const Eigen::MatrixXd r = lu.inverse();
  const Eigen::VectorXd diag = r.diagonal();
  CentralityScores s;
  s.kind = CentralityKind::kCurrentFlowCloseness;
  s.values.resize(n);
  const double trace = diag.sum();
  for (NodeIndex v = 0; v < n; ++v) {
    // sum_j (r_vv + r_jj - 2 r_vj)
    const double resistance = n * diag[v] + trace - 2.0 * r.row(v).sum();
    s.values[v] = n / resistance;
  }
  return s;
}

double spectral_radius(const Graph& g, double tolerance, int max_iterations) {
  const NodeIndex n = g.num_nodes();
  if (n == 0 || g.num_edges() == 0) return 0.0;
  // The shift keeps bipartite graphs from oscillating between +-lambda.
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n).normalized();
  double lambda = x.dot(adjacency_times(g, x));
  for (int it = 0; it < max_iterations; ++it) {
    Eigen::VectorXd y = adjacency_times(g, x) + x;
    x = y.normalized();
    const double next = x.dot(adjacency_times(g, x));
    if (std::abs(next - lambda) <= tolerance * std::max(1.0, next)) {
      return next;
    }
    lambda = next;
  }
  throw NumericalError("spectral radius: power iteration did not converge");
}

CentralityScores katz_centrality(const Graph& g,
                                 const CentralityOptions& options) {
  const NodeIndex n = g.num_nodes();
  CentralityScores s;
  s.kind = CentralityKind::kKatz;
  const double lambda =
      spectral_radius(g, options.eigen_tolerance, options.eigen_max_iterations);
  s.params.lambda_max = lambda;
  if (lambda == 0.0) {
    // No walks at all.
    s.params.katz_attenuation = options.katz_attenuation.value_or(0.0);
    s.values = Eigen::VectorXd::Zero(n);
    return s;
  }
  const double atten =
      options.katz_attenuation.value_or(options.katz_fraction / lambda);
  if (!(atten >= 0.0) || atten >= 1.0 / lambda) {
    throw ParameterError("Katz attenuation " + std::to_string(atten) +
                         " must lie in [0, 1/lambda_max) with lambda_max = " +
                         std::to_string(lambda));
  }
  s.params.katz_attenuation = atten;
  const Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(n, n) - atten * g.adjacency_matrix();
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  s.values = lu.solve(Eigen::VectorXd::Ones(n)).array() - 1.0;
  return s;
}

CentralityScores pagerank_centrality(const Graph& g,
                                     const CentralityOptions& options) {
  require_nodes(g, 1, "PageRank");
  const NodeIndex n = g.num_nodes();
  const double d = options.pagerank_damping;
  if (!(d >= 0.0 && d <= 1.0)) {
    throw ParameterError("PageRank damping must lie in [0, 1]");
  }
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / n);
  Eigen::VectorXd next(n);
  CentralityScores s;
  s.kind = CentralityKind::kPageRank;
  s.params.damping = d;
  s.params.tolerance = options.pagerank_tolerance;
  s.params.max_iterations = options.pagerank_max_iterations;
  for (int it = 1; it <= options.pagerank_max_iterations; ++it) {
    // Mass held by isolated nodes is spread uniformly.
    double dangling = 0.0;
    for (NodeIndex v = 0; v < n; ++v) {
      if (g.degree(v) == 0) dangling += x[v];
    }
    const double base = (1.0 - d) / n + d * dangling / n;
    for (NodeIndex v = 0; v < n; ++v) {
      double sum = 0.0;
      for (NodeIndex u : g.neighbors(v)) sum += x[u] / g.degree(u);
      next[v] = base + d * sum;
    }
    const double change = (next - x).lpNorm<1>();
    x.swap(next);
    if (change < options.pagerank_tolerance) {
      s.params.iterations = it;
      s.values = x / x.sum();
      return s;
    }
  }
  throw NumericalError("PageRank did not converge within " +
                       std::to_string(options.pagerank_max_iterations) +
                       " iterations");
}

CentralityScores compute_centrality(const Graph& g, CentralityKind kind,
                                    const CentralityOptions& options) {
  switch (kind) {
    case CentralityKind::kDegree:
      return degree_centrality(g);
    case CentralityKind::kLocal:
      return local_centrality(g, options.local_mode);
    case CentralityKind::kBetweenness:
      return betweenness_centrality(g);
    case CentralityKind::kCurrentFlowCloseness:
      return current_flow_closeness(g);
    case CentralityKind::kKatz:
      return katz_centrality(g, options);
    case CentralityKind::kPageRank:
      return pagerank_centrality(g, options);
  }
  throw ParameterError("unknown centrality kind");
}

}  // namespace hiercent
