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

#ifndef HIERCENT_EXPORT_HPP_
#define HIERCENT_EXPORT_HPP_

#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "hiercent/analysis.hpp"
#include "hiercent/centrality.hpp"
#include "hiercent/graph.hpp"
#include "hiercent/hierarchy.hpp"

namespace hiercent {

// "%.10g"; NaN and infinities become "NA".
std::string format_number(double v);

// JSON number, or null when not finite.
nlohmann::ordered_json json_number(double v);

// Header: network,n,m,k_min,k_max,avg_k,avg_d,density,transitivity,
// assortativity,gamma_max,phi_max. Pass an empty network to drop that column.
void write_stats_header(std::ostream& out, bool with_network);
void write_stats_row(std::ostream& out, const GraphStats& s,
                     const std::string& network = {});

// node_label,raw,level
void write_hierarchy_csv(std::ostream& out, const Graph& g,
                         const HierarchyScores& h);
// node_label,value
void write_centrality_csv(std::ostream& out, const Graph& g,
                          const CentralityScores& c);
nlohmann::ordered_json measure_params_json(const MeasureSet& m);

void write_combination_csv(std::ostream& out, const CombinationMatrix& m);
nlohmann::ordered_json combination_json(const CombinationMatrix& m);

void write_network_correlation_csv(std::ostream& out,
                                   const NetworkCorrelation& c);
// network,lambda,denominator
void write_ranking_csv(std::ostream& out, const NetworkRanking& r);

nlohmann::ordered_json cluster_json(const ClusterAssignment& a,
                                    std::span<const std::string> networks);
nlohmann::ordered_json schulze_json(const SchulzeTally& t);

}  // namespace hiercent

#endif  // HIERCENT_EXPORT_HPP_
