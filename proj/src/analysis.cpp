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

#include "hiercent/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hiercent/error.hpp"

namespace hiercent {

MeasureSet compute_measures(std::string network, Graph g,
                            const CentralityOptions& options) {
  MeasureSet m;
  m.network = std::move(network);
  m.graph = std::move(g);
  const Graph& graph = m.graph;

  m.hierarchy[0] = core_decompose(graph);
  TrussDecomposition truss = truss_decompose(graph);
  m.truss_edges = std::move(truss.edges);
  m.hierarchy[1] = std::move(truss.nodes);
  m.hierarchy[2] = local_reaching_centrality(graph);
  m.hierarchy[3] = triangle_participation(graph);
  for (int c = 0; c < kNumCentralities; ++c) {
    m.centrality[c] = compute_centrality(graph, kCentralityKinds[c], options);
  }
  return m;
}

std::string combination_id(int hierarchy, int centrality) {
  return std::string(to_string(kHierarchyKinds[hierarchy])) + ":" +
         std::string(to_string(kCentralityKinds[centrality]));
}

Eigen::Matrix<double, kNumCombinations, 1> CombinationMatrix::profile() const {
  Eigen::Matrix<double, kNumCombinations, 1> out;
  for (int h = 0; h < kNumHierarchies; ++h) {
    for (int c = 0; c < kNumCentralities; ++c) {
      out[h * kNumCentralities + c] = values(h, c);
    }
  }
  return out;
}

CombinationMatrix combination_matrix(const MeasureSet& measures,
                                     const EvalParams& params) {
  CombinationMatrix out;
  out.network = measures.network;
  out.eval = eval_id(params);
  for (int h = 0; h < kNumHierarchies; ++h) {
    for (int c = 0; c < kNumCentralities; ++c) {
      try {
        out.values(h, c) = evaluate(measures.hierarchy[h].raw,
                                    measures.centrality[c].values, params);
      } catch (const UndefinedCorrelation& e) {
        out.notes.push_back(combination_id(h, c) + ": " + e.what());
      }
    }
  }
  return out;
}

NetworkCorrelation network_correlation_matrix(
    std::span<const CombinationMatrix> matrices) {
  if (matrices.size() < 2) {
    throw ParameterError("network comparison needs at least two networks");
  }
  NetworkCorrelation out;
  out.eval = matrices.front().eval;
  const auto n = static_cast<Eigen::Index>(matrices.size());
  out.values = Eigen::MatrixXd::Constant(
      n, n, std::numeric_limits<double>::quiet_NaN());
  for (const auto& m : matrices) {
    if (m.eval != out.eval) {
      throw ParameterError("cannot compare networks across evaluation measures");
    }
    out.networks.push_back(m.network);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i, i) = 1.0;
    const auto pi = matrices[i].profile();
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto pj = matrices[j].profile();
      std::vector<double> a, b;
      for (int c = 0; c < kNumCombinations; ++c) {
        if (!std::isnan(pi[c]) && !std::isnan(pj[c])) {
          a.push_back(pi[c]);
          b.push_back(pj[c]);
        }
      }
      if (a.size() < 3) continue;
      try {
        const double r =
            pearson(Eigen::Map<const Eigen::VectorXd>(a.data(), a.size()),
                    Eigen::Map<const Eigen::VectorXd>(b.data(), b.size()));
        out.values(i, j) = r;
        out.values(j, i) = r;
      } catch (const UndefinedCorrelation&) {
      }
    }
  }
  return out;
}

NetworkRanking binarize_and_rank(
    const std::vector<std::vector<CombinationMatrix>>& per_network,
    double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ParameterError("threshold must lie in (0, 1]");
  }
  NetworkRanking out;
  out.threshold = threshold;
  if (!per_network.empty()) {
    for (const auto& m : per_network.front()) out.evals.push_back(m.eval);
  }
  for (const auto& matrices : per_network) {
    if (matrices.size() != out.evals.size()) {
      throw ParameterError("networks were evaluated with different measures");
    }
    NetworkRankEntry entry;
    entry.network = matrices.empty() ? std::string() : matrices.front().network;
    for (std::size_t e = 0; e < matrices.size(); ++e) {
      if (matrices[e].eval != out.evals[e]) {
        throw ParameterError("networks were evaluated with different measures");
      }
      const auto mask = (matrices[e].values.array().abs() >= threshold).eval();
      entry.meaningful += static_cast<int>(mask.count());
      entry.denominator += kNumCombinations;
      entry.masks.emplace_back(mask.matrix());
    }
    out.entries.push_back(std::move(entry));
  }
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const NetworkRankEntry& a, const NetworkRankEntry& b) {
                     if (a.meaningful != b.meaningful) {
                       return a.meaningful > b.meaningful;
                     }
                     return a.network < b.network;
                   });
  return out;
}

namespace {

int nearest_centroid(const Eigen::MatrixXd& centroids,
                     const Eigen::VectorXd& point, double* distance) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int j = 0; j < centroids.rows(); ++j) {
    const double d = (centroids.row(j).transpose() - point).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  if (distance) *distance = best_d;
  return best;
}

}  // namespace

double kmeans_objective(const Eigen::MatrixXd& features,
                        const Eigen::MatrixXd& centroids) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    double d = 0.0;
    nearest_centroid(centroids, features.row(i).transpose(), &d);
    total += d;
  }
  return total;
}

ClusterAssignment kmeans(const Eigen::MatrixXd& features, int k,
                         std::uint64_t seed) {
  const auto m = static_cast<int>(features.rows());
  if (k < 1 || k > m) {
    throw ParameterError("k-means needs 1 <= k <= " + std::to_string(m));
  }
  ClusterAssignment out;
  out.k = k;
  out.seed = seed;
  out.labels.assign(m, 0);

  // Farthest-point initialisation from a seeded first pick.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, m - 1);
  Eigen::MatrixXd centroids(k, features.cols());
  centroids.row(0) = features.row(pick(rng));
  Eigen::VectorXd nearest = Eigen::VectorXd::Constant(
      m, std::numeric_limits<double>::infinity());
  for (int j = 1; j < k; ++j) {
    int far = 0;
    for (int i = 0; i < m; ++i) {
      nearest[i] = std::min(
          nearest[i], (features.row(i) - centroids.row(j - 1)).squaredNorm());
      if (nearest[i] > nearest[far]) far = i;
    }
    centroids.row(j) = features.row(far);
  }

  auto assign = [&]() {
    double sse = 0.0;
    for (int i = 0; i < m; ++i) {
      double d = 0.0;
      out.labels[i] = nearest_centroid(centroids, features.row(i).transpose(), &d);
      sse += d;
    }
    out.sse_history.push_back(sse);
    return sse;
  };

  out.sse = assign();
  for (int it = 1; it <= 100; ++it) {
    out.iterations = it;
    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(k, features.cols());
    std::vector<int> size(k, 0);
    for (int i = 0; i < m; ++i) {
      next.row(out.labels[i]) += features.row(i);
      ++size[out.labels[i]];
    }
    for (int j = 0; j < k; ++j) {
      if (size[j] > 0) {
        next.row(j) /= size[j];
        continue;
      }
      // Re-seed an empty cluster at the point farthest from its centroid.
      int far = 0;
      double far_d = -1.0;
      for (int i = 0; i < m; ++i) {
        const double d =
            (features.row(i) - centroids.row(out.labels[i])).squaredNorm();
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      next.row(j) = features.row(far);
      out.notes.push_back("iteration " + std::to_string(it) + ": cluster " +
                          std::to_string(j) + " empty, re-seeded at row " +
                          std::to_string(far));
    }
    const double shift = (next - centroids).rowwise().norm().maxCoeff();
    centroids = std::move(next);
    out.sse = assign();
    if (shift < 1e-9) break;
  }
  out.centroids = std::move(centroids);
  return out;
}

Eigen::MatrixXd profile_features(std::span<const CombinationMatrix> matrices,
                                 std::vector<std::string>* notes) {
  Eigen::MatrixXd features(static_cast<Eigen::Index>(matrices.size()),
                           kNumCombinations);
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto p = matrices[i].profile();
    for (int c = 0; c < kNumCombinations; ++c) {
      if (std::isnan(p[c])) {
        features(static_cast<Eigen::Index>(i), c) = 0.0;
        if (notes) {
          notes->push_back(matrices[i].network + ": " +
                           combination_id(c / kNumCentralities,
                                          c % kNumCentralities) +
                           " undefined, imputed as 0");
        }
      } else {
        features(static_cast<Eigen::Index>(i), c) = p[c];
      }
    }
  }
  return features;
}

SchulzeTally schulze(const Eigen::MatrixXd& ballot_scores,
                     std::vector<std::string> candidates,
                     std::vector<std::string> voters,
                     const SchulzeOptions& options) {
  const auto c = static_cast<int>(ballot_scores.cols());
  const auto b = static_cast<int>(ballot_scores.rows());
  if (static_cast<int>(candidates.size()) != c) {
    throw ParameterError("candidate names do not match ballot width");
  }
  if (b < 1) throw ParameterError("Schulze count needs at least one ballot");

  SchulzeTally t;
  t.candidates = std::move(candidates);
  t.voters = std::move(voters);
  t.ballots = ballot_scores;
  t.omega = Eigen::MatrixXi::Zero(c, c);
  for (int v = 0; v < b; ++v) {
    Eigen::VectorXd s = ballot_scores.row(v).transpose();
    if (options.absolute) s = s.cwiseAbs();
    s = snapped(s);
    int missing = 0;
    for (int i = 0; i < c; ++i) missing += std::isnan(s[i]) ? 1 : 0;
    if (missing > 0) {
      t.notes.push_back(
          (v < static_cast<int>(t.voters.size()) ? t.voters[v]
                                                 : "ballot " + std::to_string(v)) +
          ": " + std::to_string(missing) + " missing candidates ranked last");
    }
    for (int i = 0; i < c; ++i) {
      for (int j = 0; j < c; ++j) {
        if (i == j) continue;
        const bool i_ok = !std::isnan(s[i]);
        const bool j_ok = !std::isnan(s[j]);
        if ((i_ok && !j_ok) || (i_ok && j_ok && s[i] > s[j])) ++t.omega(i, j);
      }
    }
  }

  // Step 1: keep only winning pairwise margins.
  t.upsilon = Eigen::MatrixXi::Zero(c, c);
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      if (i != j && t.omega(i, j) > t.omega(j, i)) t.upsilon(i, j) = t.omega(i, j);
    }
  }
  // Step 2: widest paths, i as the intermediate candidate.
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      if (j == i) continue;
      for (int k = 0; k < c; ++k) {
        if (k == i || k == j) continue;
        t.upsilon(j, k) =
            std::max(t.upsilon(j, k), std::min(t.upsilon(j, i), t.upsilon(i, k)));
      }
    }
  }
  // Step 3: count pairwise wins on path strength.
  t.wins.assign(c, 0);
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      if (i != j && t.upsilon(i, j) > t.upsilon(j, i)) ++t.wins[i];
    }
  }
  t.ranking.resize(c);
  std::iota(t.ranking.begin(), t.ranking.end(), 0);
  std::stable_sort(t.ranking.begin(), t.ranking.end(),
                   [&](int x, int y) { return t.wins[x] > t.wins[y]; });
  t.tied_with_next.assign(c, false);
  for (int r = 0; r + 1 < c; ++r) {
    t.tied_with_next[r] = t.wins[t.ranking[r]] == t.wins[t.ranking[r + 1]];
  }
  return t;
}

SchulzeTally schulze_rank(std::span<const CombinationMatrix> matrices,
                          const SchulzeOptions& options) {
  Eigen::MatrixXd scores(static_cast<Eigen::Index>(matrices.size()),
                         kNumCombinations);
  std::vector<std::string> voters;
  for (std::size_t v = 0; v < matrices.size(); ++v) {
    scores.row(static_cast<Eigen::Index>(v)) = matrices[v].profile().transpose();
    voters.push_back(matrices[v].network);
  }
  std::vector<std::string> candidates;
  for (int c = 0; c < kNumCombinations; ++c) {
    candidates.push_back(
        combination_id(c / kNumCentralities, c % kNumCentralities));
  }
  return schulze(scores, std::move(candidates), std::move(voters), options);
}

}  // namespace hiercent
