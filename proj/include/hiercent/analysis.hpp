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

#ifndef HIERCENT_ANALYSIS_HPP_
#define HIERCENT_ANALYSIS_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hiercent/centrality.hpp"
#include "hiercent/evaluation.hpp"
#include "hiercent/graph.hpp"
#include "hiercent/hierarchy.hpp"

namespace hiercent {

inline constexpr int kNumHierarchies = 4;
inline constexpr int kNumCentralities = 6;
inline constexpr int kNumCombinations = kNumHierarchies * kNumCentralities;

// The ten per-node vectors of one network, computed once and shared by every
// evaluation measure.
struct MeasureSet {
  std::string network;
  Graph graph;
  EdgeTrussMap truss_edges;
  std::array<HierarchyScores, kNumHierarchies> hierarchy;
  std::array<CentralityScores, kNumCentralities> centrality;
};

// `g` should already be connected (see largest_connected_component).
MeasureSet compute_measures(std::string network, Graph g,
                            const CentralityOptions& options = {});

// Candidate id of combination (h, c), e.g. "lrc:cf_closeness".
std::string combination_id(int hierarchy, int centrality);

// gamma(alpha_i, beta_j) for the 4 x 6 hierarchy x centrality grid. Rows
// follow kHierarchyKinds and columns kCentralityKinds. Undefined cells are
// NaN.
struct CombinationMatrix {
  using Grid = Eigen::Matrix<double, kNumHierarchies, kNumCentralities>;

  std::string network;
  std::string eval;
  Grid values = Grid::Constant(std::numeric_limits<double>::quiet_NaN());
  std::vector<std::string> notes;

  bool defined(int h, int c) const { return !std::isnan(values(h, c)); }
  // Row-major flattening: index h * 6 + c.
  Eigen::Matrix<double, kNumCombinations, 1> profile() const;
};

// Compares hierarchy raw scores against centrality values.
CombinationMatrix combination_matrix(const MeasureSet& measures,
                                     const EvalParams& params);

// Pearson correlation between the 24-cell profiles of every network pair,
// over the cells both define. Entries with fewer than three shared cells or
// a constant side are NaN; the diagonal is 1.
struct NetworkCorrelation {
  std::string eval;
  std::vector<std::string> networks;
  Eigen::MatrixXd values;
};

NetworkCorrelation network_correlation_matrix(
    std::span<const CombinationMatrix> matrices);

struct NetworkRankEntry {
  std::string network;
  int meaningful = 0;   // lambda
  int denominator = 0;  // 24 per evaluation measure
  std::vector<Eigen::Matrix<bool, kNumHierarchies, kNumCentralities>> masks;
};

struct NetworkRanking {
  double threshold = 0.7;
  std::vector<std::string> evals;
  // Sorted by descending lambda, then network name.
  std::vector<NetworkRankEntry> entries;
};

// A cell is meaningful when it is defined and |gamma| >= threshold.
// `per_network[i]` holds network i's matrices, one per evaluation measure,
// in the same evaluation order for every network.
NetworkRanking binarize_and_rank(
    const std::vector<std::vector<CombinationMatrix>>& per_network,
    double threshold = 0.7);

struct ClusterAssignment {
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<int> labels;
  Eigen::MatrixXd centroids;  // k x d
  double sse = 0.0;
  int iterations = 0;
  std::vector<double> sse_history;  // objective after each assignment step
  std::vector<std::string> notes;
};

// Lloyd's algorithm over the rows of `features`, seeded farthest-point
// initialisation. Stops when no centroid moves more than 1e-9 or after 100
// iterations.
ClusterAssignment kmeans(const Eigen::MatrixXd& features, int k,
                         std::uint64_t seed);

// k-means objective: sum over rows of the squared distance to the nearest
// centroid.
double kmeans_objective(const Eigen::MatrixXd& features,
                        const Eigen::MatrixXd& centroids);

// One row per network; undefined cells become 0 and are reported in `notes`.
Eigen::MatrixXd profile_features(std::span<const CombinationMatrix> matrices,
                                 std::vector<std::string>* notes = nullptr);

struct SchulzeTally {
  std::vector<std::string> candidates;
  std::vector<std::string> voters;
  Eigen::MatrixXd ballots;  // voter x candidate scores, NaN = missing
  Eigen::MatrixXi omega;    // omega(i, j): voters preferring i over j
  Eigen::MatrixXi upsilon;  // strongest-path strengths
  std::vector<int> wins;
  // Candidate indices, most wins first; equal wins ordered by index.
  std::vector<int> ranking;
  // tied_with_next[r]: ranking[r] and ranking[r + 1] have equal wins.
  std::vector<bool> tied_with_next;
  std::vector<std::string> notes;
};

struct SchulzeOptions {
  // Rank candidates by |gamma| instead of signed gamma.
  bool absolute = false;
};

// Generic Schulze count. Higher score = more preferred; equal scores express
// no preference; NaN ranks below every defined score.
SchulzeTally schulze(const Eigen::MatrixXd& ballot_scores,
                     std::vector<std::string> candidates,
                     std::vector<std::string> voters = {},
                     const SchulzeOptions& options = {});

// Networks vote over the 24 combinations.
SchulzeTally schulze_rank(std::span<const CombinationMatrix> matrices,
                          const SchulzeOptions& options = {});

}  // namespace hiercent

#endif  // HIERCENT_ANALYSIS_HPP_
