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

#include "hiercent/export.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace hiercent {

using Json = nlohmann::ordered_json;

std::string format_number(double v) {
  if (!std::isfinite(v)) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

Json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  // Round through the CSV text so both formats carry the same value.
  return std::strtod(format_number(v).c_str(), nullptr);
}

namespace {

Json json_vector(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(json_number(v[i]));
  return out;
}

template <typename Matrix>
Json json_matrix(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_floating_point_v<typename Matrix::Scalar>) {
        row.push_back(json_number(m(i, j)));
      } else {
        row.push_back(m(i, j));
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

void write_stats_header(std::ostream& out, bool with_network) {
  if (with_network) out << "network,";
  out << "n,m,k_min,k_max,avg_k,avg_d,density,transitivity,assortativity,"
         "gamma_max,phi_max\n";
}

void write_stats_row(std::ostream& out, const GraphStats& s,
                     const std::string& network) {
  if (!network.empty()) out << network << ',';
  out << s.n << ',' << s.m << ',' << s.k_min << ',' << s.k_max << ','
      << format_number(s.avg_degree) << ','
      << format_number(s.avg_shortest_path) << ','
      << format_number(s.density) << ',' << format_number(s.transitivity)
      << ','
      << (s.assortativity ? format_number(*s.assortativity) : "NA") << ','
      << s.max_coreness << ',' << s.max_trussness << '\n';
}

void write_hierarchy_csv(std::ostream& out, const Graph& g,
                         const HierarchyScores& h) {
  out << "node_label,raw,level\n";
  for (NodeIndex v = 0; v < g.num_nodes(); ++v) {
    out << g.label(v) << ',' << format_number(h.raw[v]) << ','
        << format_number(h.level[v]) << '\n';
  }
}

void write_centrality_csv(std::ostream& out, const Graph& g,
                          const CentralityScores& c) {
  out << "node_label,value\n";
  for (NodeIndex v = 0; v < g.num_nodes(); ++v) {
    out << g.label(v) << ',' << format_number(c.values[v]) << '\n';
  }
}

Json measure_params_json(const MeasureSet& m) {
  Json out;
  out["network"] = m.network;
  out["nodes"] = m.graph.num_nodes();
  out["edges"] = m.graph.num_edges();
  Json hier = Json::object();
  for (const auto& h : m.hierarchy) {
    hier[std::string(to_string(h.kind))] = {{"k_min", json_number(h.k_min)},
                                            {"k_max", json_number(h.k_max)}};
  }
  hier["truss"]["edge_k_min"] = m.truss_edges.k_min();
  out["hierarchy"] = std::move(hier);
  Json cent = Json::object();
  for (const auto& c : m.centrality) {
    Json p = Json::object();
    const auto& q = c.params;
    if (q.local_mode) {
      p["local_mode"] = *q.local_mode == LocalCentralityMode::kSquareRowSum
                            ? "square_row_sum"
                            : "distinct_two_hop";
    }
    if (q.katz_attenuation) p["attenuation"] = json_number(*q.katz_attenuation);
    if (q.lambda_max) p["lambda_max"] = json_number(*q.lambda_max);
    if (q.damping) p["damping"] = json_number(*q.damping);
    if (q.tolerance) p["tolerance"] = json_number(*q.tolerance);
    if (q.max_iterations) p["max_iterations"] = *q.max_iterations;
    if (q.iterations) p["iterations"] = *q.iterations;
    cent[std::string(to_string(c.kind))] = std::move(p);
  }
  out["centrality"] = std::move(cent);
  return out;
}

void write_combination_csv(std::ostream& out, const CombinationMatrix& m) {
  out << "hierarchy";
  for (auto c : kCentralityKinds) out << ',' << to_string(c);
  out << '\n';
  for (int h = 0; h < kNumHierarchies; ++h) {
    out << to_string(kHierarchyKinds[h]);
    for (int c = 0; c < kNumCentralities; ++c) {
      out << ',' << format_number(m.values(h, c));
    }
    out << '\n';
  }
}

Json combination_json(const CombinationMatrix& m) {
  Json out;
  out["network"] = m.network;
  out["eval"] = m.eval;
  Json cells = Json::object();
  for (int h = 0; h < kNumHierarchies; ++h) {
    Json row = Json::object();
    for (int c = 0; c < kNumCentralities; ++c) {
      row[std::string(to_string(kCentralityKinds[c]))] =
          json_number(m.values(h, c));
    }
    cells[std::string(to_string(kHierarchyKinds[h]))] = std::move(row);
  }
  out["values"] = std::move(cells);
  out["notes"] = m.notes;
  return out;
}

void write_network_correlation_csv(std::ostream& out,
                                   const NetworkCorrelation& c) {
  out << "network";
  for (const auto& n : c.networks) out << ',' << n;
  out << '\n';
  for (std::size_t i = 0; i < c.networks.size(); ++i) {
    out << c.networks[i];
    for (std::size_t j = 0; j < c.networks.size(); ++j) {
      out << ','
          << format_number(c.values(static_cast<Eigen::Index>(i),
                                    static_cast<Eigen::Index>(j)));
    }
    out << '\n';
  }
}

void write_ranking_csv(std::ostream& out, const NetworkRanking& r) {
  out << "rank,network,lambda,denominator\n";
  int rank = 0;
  for (const auto& e : r.entries) {
    out << ++rank << ',' << e.network << ',' << e.meaningful << ','
        << e.denominator << '\n';
  }
}

Json cluster_json(const ClusterAssignment& a,
                  std::span<const std::string> networks) {
  Json out;
  out["k"] = a.k;
  out["seed"] = a.seed;
  out["iterations"] = a.iterations;
  out["sse"] = json_number(a.sse);
  Json history = Json::array();
  for (double s : a.sse_history) history.push_back(json_number(s));
  out["sse_history"] = std::move(history);
  Json members = Json::array();
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    members.push_back({{"network", i < networks.size() ? networks[i] : ""},
                       {"cluster", a.labels[i]}});
  }
  out["assignments"] = std::move(members);
  Json centroids = Json::array();
  for (Eigen::Index j = 0; j < a.centroids.rows(); ++j) {
    Json row = Json::object();
    for (int c = 0; c < a.centroids.cols() && c < kNumCombinations; ++c) {
      row[combination_id(c / kNumCentralities, c % kNumCentralities)] =
          json_number(a.centroids(j, c));
    }
    centroids.push_back(std::move(row));
  }
  out["centroids"] = std::move(centroids);
  out["notes"] = a.notes;
  return out;
}

Json schulze_json(const SchulzeTally& t) {
  Json out;
  out["candidates"] = t.candidates;
  out["voters"] = t.voters;
  Json ranking = Json::array();
  for (std::size_t r = 0; r < t.ranking.size(); ++r) {
    const int c = t.ranking[r];
    ranking.push_back({{"rank", r + 1},
                       {"candidate", t.candidates[c]},
                       {"wins", t.wins[c]},
                       {"tied_with_next", static_cast<bool>(t.tied_with_next[r])}});
  }
  out["ranking"] = std::move(ranking);
  out["ballots"] = json_matrix(t.ballots);
  out["omega"] = json_matrix(t.omega);
  out["upsilon"] = json_matrix(t.upsilon);
  out["notes"] = t.notes;
  return out;
}

}  // namespace hiercent
