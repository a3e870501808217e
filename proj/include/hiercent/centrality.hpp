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

#ifndef HIERCENT_CENTRALITY_HPP_
#define HIERCENT_CENTRALITY_HPP_

#include <array>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "hiercent/graph.hpp"

namespace hiercent {

enum class CentralityKind {
  kDegree,
  kLocal,
  kBetweenness,
  kCurrentFlowCloseness,
  kKatz,
  kPageRank
};

inline constexpr std::array<CentralityKind, 6> kCentralityKinds = {
    CentralityKind::kDegree,      CentralityKind::kLocal,
    CentralityKind::kBetweenness, CentralityKind::kCurrentFlowCloseness,
    CentralityKind::kKatz,        CentralityKind::kPageRank};

// degree, local, betweenness, cf_closeness, katz, pagerank.
std::string_view to_string(CentralityKind kind);

enum class LocalCentralityMode {
  // Row sums of A^2 over every column, diagonal included.
  kSquareRowSum,
  // Distinct nodes other than v within two hops.
  kDistinctTwoHop,
};

struct CentralityOptions {
  LocalCentralityMode local_mode = LocalCentralityMode::kSquareRowSum;
  // Katz attenuation; when unset, katz_fraction / lambda_max is used.
  std::optional<double> katz_attenuation;
  double katz_fraction = 0.9;
  double eigen_tolerance = 1e-10;
  int eigen_max_iterations = 100000;
  double pagerank_damping = 0.85;
  double pagerank_tolerance = 1e-10;
  int pagerank_max_iterations = 1000;
};

// Parameters actually used for one score vector.
struct CentralityParams {
  std::optional<LocalCentralityMode> local_mode;
  std::optional<double> katz_attenuation;
  std::optional<double> lambda_max;
  std::optional<double> damping;
  std::optional<double> tolerance;
  std::optional<int> max_iterations;
  std::optional<int> iterations;
};

struct CentralityScores {
  CentralityKind kind = CentralityKind::kDegree;
  Eigen::VectorXd values;
  CentralityParams params;
};

// deg(v) / (N - 1).
CentralityScores degree_centrality(const Graph& g);

CentralityScores local_centrality(
    const Graph& g,
    LocalCentralityMode mode = LocalCentralityMode::kSquareRowSum);

// Brandes accumulation, normalised by 2 / ((N - 1)(N - 2)).
CentralityScores betweenness_centrality(const Graph& g);

// N / sum_j (r_vv + r_jj - 2 r_vj) with R = (D - A + J)^-1.
CentralityScores current_flow_closeness(const Graph& g);

// Largest adjacency eigenvalue by power iteration on A + I.
double spectral_radius(const Graph& g, double tolerance = 1e-10,
                       int max_iterations = 100000);

// sum_{p >= 1} s^p A^p 1, solved as (I - sA)^-1 1 - 1. Throws
// ParameterError unless 0 <= s < 1 / lambda_max.
CentralityScores katz_centrality(const Graph& g,
                                 const CentralityOptions& options = {});

// Power iteration until the L1 change drops below the tolerance; throws
// NumericalError when the iteration cap is reached first.
CentralityScores pagerank_centrality(const Graph& g,
                                     const CentralityOptions& options = {});

CentralityScores compute_centrality(const Graph& g, CentralityKind kind,
                                    const CentralityOptions& options = {});

}  // namespace hiercent

#endif  // HIERCENT_CENTRALITY_HPP_
