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

#include "hiercent/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <Eigen/Core>

#include "hiercent/analysis.hpp"
#include "hiercent/error.hpp"
#include "hiercent/export.hpp"

#ifndef HIERCENT_VERSION
#define HIERCENT_VERSION "0.0.0"
#endif

namespace hiercent {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kCurrentFlowWarnNodes = 5000;

const std::vector<std::string>& all_measure_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (auto h : kHierarchyKinds) out.emplace_back(to_string(h));
    for (auto c : kCentralityKinds) out.emplace_back(to_string(c));
    return out;
  }();
  return names;
}

bool is_edge_list_file(const fs::path& p) {
  static const std::set<std::string> kExtensions = {".edges", ".txt", ".csv",
                                                    ".tsv", ".el"};
  return fs::is_regular_file(p) && kExtensions.count(p.extension().string()) &&
         p.filename().string().front() != '.';
}

struct NetworkInput {
  std::string name;
  fs::path path;
};

std::vector<NetworkInput> discover_inputs(const RunConfig& config) {
  std::vector<NetworkInput> out;
  std::set<std::string> seen;
  auto add = [&](const fs::path& p) {
    const std::string name = p.stem().string();
    if (!seen.insert(name).second) {
      throw ParameterError("two inputs share the network name '" + name + "'");
    }
    out.push_back({name, p});
  };
  for (const auto& in : config.inputs) {
    if (fs::is_directory(in)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(in)) {
        if (is_edge_list_file(entry.path())) files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      if (files.empty()) {
        throw ParameterError("no edge-list files in " + in.string());
      }
      for (const auto& f : files) add(f);
    } else if (fs::exists(in)) {
      add(in);
    } else {
      throw ParameterError("input not found: " + in.string());
    }
  }
  return out;
}

// Everything one worker produces for one network. Workers only touch their
// own slot and their own output directory.
struct NetworkResult {
  NetworkInput input;
  bool ok = false;
  std::string error;
  std::vector<std::string> info;
  std::vector<std::string> warnings;
  std::optional<GraphStats> stats;
  std::vector<CombinationMatrix> combos;
  std::vector<std::string> files;
};

class OutputTree {
 public:
  explicit OutputTree(fs::path root) : root_(std::move(root)) {}

  // Writes `content` to root/relative and returns the relative path.
  std::string write(const fs::path& relative, const std::string& content) const {
    const fs::path full = root_ / relative;
    fs::create_directories(full.parent_path());
    std::ofstream f(full, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + full.string());
    f << content;
    if (!f) throw Error("write failed for " + full.string());
    return relative.generic_string();
  }

  const fs::path& root() const { return root_; }

 private:
  fs::path root_;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Graph load_network(NetworkResult& r) {
  std::ifstream in(r.input.path);
  if (!in) throw Error("cannot open file");
  Graph raw = load_edge_list(in);
  Graph g = largest_connected_component(raw);
  std::ostringstream msg;
  msg << raw.num_nodes() << " nodes, " << raw.num_edges()
      << " edges; largest connected component keeps " << g.num_nodes()
      << " nodes, " << g.num_edges() << " edges";
  r.info.push_back(msg.str());
  return g;
}

CentralityOptions centrality_options(const RunConfig& config) {
  CentralityOptions o;
  o.katz_attenuation = config.katz_s;
  o.pagerank_damping = config.pagerank_damping;
  return o;
}

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn fn) {
  const auto workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

enum Stage { kStageStats = 1, kStageMeasures = 2, kStageCombos = 4 };

void process_network(const RunConfig& config,
                     const std::vector<EvalParams>& evals, int stages,
                     bool write_files, NetworkResult& r) {
  const OutputTree tree(config.output);
  const fs::path dir = r.input.name;
  Graph g = load_network(r);

  r.stats = graph_stats(g);
  if (write_files && (stages & kStageStats)) {
    std::ostringstream s;
    write_stats_header(s, false);
    write_stats_row(s, *r.stats);
    r.files.push_back(tree.write(dir / "stats.csv", s.str()));
  }
  if (!(stages & (kStageMeasures | kStageCombos))) return;

  if (static_cast<std::size_t>(g.num_nodes()) > kCurrentFlowWarnNodes) {
    r.warnings.push_back("current-flow closeness on " +
                         std::to_string(g.num_nodes()) +
                         " nodes uses a dense O(n^3) solve");
  }
  const MeasureSet m =
      compute_measures(r.input.name, std::move(g), centrality_options(config));

  if (write_files && (stages & kStageMeasures)) {
    const auto& wanted =
        config.measures.empty() ? all_measure_names() : config.measures;
    auto selected = [&](std::string_view name) {
      return std::find(wanted.begin(), wanted.end(), name) != wanted.end();
    };
    for (const auto& h : m.hierarchy) {
      const std::string name(to_string(h.kind));
      if (!selected(name)) continue;
      std::ostringstream s;
      write_hierarchy_csv(s, m.graph, h);
      r.files.push_back(
          tree.write(dir / "measures" / ("hierarchy_" + name + ".csv"), s.str()));
    }
    for (const auto& c : m.centrality) {
      const std::string name(to_string(c.kind));
      if (!selected(name)) continue;
      std::ostringstream s;
      write_centrality_csv(s, m.graph, c);
      r.files.push_back(tree.write(dir / "measures" / (name + ".csv"), s.str()));
    }
    r.files.push_back(tree.write(dir / "measures" / "params.json",
                                 dump(measure_params_json(m))));
  }

  if (!(stages & kStageCombos)) return;
  for (const auto& e : evals) {
    CombinationMatrix cm = combination_matrix(m, e);
    for (const auto& note : cm.notes) r.warnings.push_back(cm.eval + " " + note);
    if (write_files) {
      const std::string base = "combos_" + cm.eval;
      if (config.format != OutputFormat::kJson) {
        std::ostringstream s;
        write_combination_csv(s, cm);
        r.files.push_back(tree.write(dir / (base + ".csv"), s.str()));
      }
      if (config.format != OutputFormat::kCsv) {
        r.files.push_back(
            tree.write(dir / (base + ".json"), dump(combination_json(cm))));
      }
    }
    r.combos.push_back(std::move(cm));
  }
}

std::vector<NetworkResult> run_networks(const RunConfig& config,
                                        const std::vector<EvalParams>& evals,
                                        int stages, bool write_files,
                                        std::ostream& log) {
  const auto inputs = discover_inputs(config);
  std::vector<NetworkResult> results(inputs.size());
  std::atomic<bool> abort{false};
  parallel_for(inputs.size(), config.jobs, [&](std::size_t i) {
    NetworkResult& r = results[i];
    r.input = inputs[i];
    if (abort) {
      r.error = "skipped after an earlier error (--strict)";
      return;
    }
    try {
      process_network(config, evals, stages, write_files, r);
      r.ok = true;
    } catch (const std::exception& e) {
      r.error = e.what();
      if (config.strict) abort = true;
    }
  });
  // Logs are emitted in input order so they do not depend on scheduling.
  for (const auto& r : results) {
    const std::string where = r.input.name + " (" + r.input.path.string() + ")";
    for (const auto& s : r.info) log << "info: " << where << ": " << s << '\n';
    for (const auto& s : r.warnings) {
      log << "warning: " << where << ": " << s << '\n';
    }
    if (!r.ok) log << "error: " << where << ": " << r.error << '\n';
  }
  return results;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::string command_name(Command c) {
  switch (c) {
    case Command::kStats:
      return "stats";
    case Command::kMeasures:
      return "measures";
    case Command::kPipeline:
      return "pipeline";
  }
  return "unknown";
}

Json config_json(const RunConfig& config,
                 const std::vector<EvalParams>& evals) {
  Json j;
  Json inputs = Json::array();
  for (const auto& p : config.inputs) inputs.push_back(p.generic_string());
  j["inputs"] = std::move(inputs);
  j["measures"] = config.measures.empty() ? all_measure_names() : config.measures;
  Json ids = Json::array();
  for (const auto& e : evals) ids.push_back(eval_id(e));
  j["evals"] = std::move(ids);
  j["rbo_p"] = config.rbo_p;
  j["rbo_scope"] = config.rbo_scope == RboScope::kTopK ? "topk" : "all";
  j["top_k"] = config.top_k ? Json(*config.top_k) : Json("auto");
  j["threshold"] = config.threshold;
  j["k"] = config.clusters ? Json(*config.clusters) : Json("auto");
  j["seed"] = config.seed;
  j["katz_s"] = config.katz_s ? Json(*config.katz_s) : Json("auto");
  j["pagerank_damping"] = config.pagerank_damping;
  j["format"] = config.format == OutputFormat::kCsv
                    ? "csv"
                    : (config.format == OutputFormat::kJson ? "json" : "both");
  j["jobs"] = config.jobs;
  j["strict"] = config.strict;
  return j;
}

struct Manifest {
  Json stages = Json::object();
  std::vector<std::string> files;
  std::vector<std::string> warnings;
};

// Writes aggregate/manifest.json and returns the overall exit status.
int finish(const RunConfig& config, const std::vector<EvalParams>& evals,
           const std::vector<NetworkResult>& results, Manifest manifest) {
  const OutputTree tree(config.output);
  Json j;
  j["tool"] = "hiercent";
  j["version"] = HIERCENT_VERSION;
  j["libraries"] = {
      {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                    std::to_string(EIGEN_MAJOR_VERSION) + "." +
                    std::to_string(EIGEN_MINOR_VERSION)},
      {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                            std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                            std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
      {"cli11", CLI11_VERSION}};
  j["timestamp"] = utc_timestamp();
  j["command"] = command_name(config.command);
  j["config"] = config_json(config, evals);

  bool partial = false;
  Json networks = Json::array();
  for (const auto& r : results) {
    Json n;
    n["name"] = r.input.name;
    n["input"] = r.input.path.generic_string();
    n["status"] = r.ok ? "ok" : "failed";
    if (!r.ok) n["error"] = r.error;
    if (r.stats) {
      n["nodes"] = r.stats->n;
      n["edges"] = r.stats->m;
    }
    networks.push_back(std::move(n));
    partial = partial || !r.ok;
    manifest.files.insert(manifest.files.end(), r.files.begin(), r.files.end());
    for (const auto& w : r.warnings) {
      manifest.warnings.push_back(r.input.name + ": " + w);
    }
  }
  for (const auto& [stage, status] : manifest.stages.items()) {
    partial = partial || status == "failed";
  }
  j["networks"] = std::move(networks);
  j["stages"] = manifest.stages;
  j["status"] = partial ? "partial" : "complete";
  j["warnings"] = manifest.warnings;
  manifest.files.push_back("aggregate/manifest.json");
  std::sort(manifest.files.begin(), manifest.files.end());
  j["files"] = manifest.files;
  tree.write("aggregate/manifest.json", dump(j));
  return partial ? kExitPartial : kExitOk;
}

// Runs one aggregate stage, recording its status; failures stay local.
template <typename Fn>
void run_stage(Manifest& manifest, const std::string& name, std::ostream& log,
               Fn fn) {
  try {
    fn();
    if (!manifest.stages.contains(name)) manifest.stages[name] = "ok";
  } catch (const std::exception& e) {
    manifest.stages[name] = "failed";
    manifest.warnings.push_back(name + ": " + e.what());
    log << "error: stage " << name << ": " << e.what() << '\n';
  }
}

void skip_stage(Manifest& manifest, const std::string& name,
                const std::string& why, std::ostream& log) {
  manifest.stages[name] = "skipped";
  manifest.warnings.push_back(name + " skipped: " + why);
  log << "warning: " << name << " skipped: " << why << '\n';
}

template <typename Body>
int guarded(std::ostream& log, Body body) {
  try {
    return body();
  } catch (const ParameterError& e) {
    log << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitPartial;
  }
}

}  // namespace

std::vector<EvalParams> expand_evals(const RunConfig& config) {
  std::vector<EvalParams> out;
  for (const auto& name : config.evals) {
    EvalParams p;
    p.top_k = config.top_k;
    if (name == "rbo") {
      if (config.rbo_p.empty()) throw ParameterError("--rbo-p is empty");
      for (double rp : config.rbo_p) {
        p.measure = EvalMeasure::kRbo;
        p.rbo_p = rp;
        p.rbo_scope = config.rbo_scope;
        out.push_back(p);
      }
      continue;
    }
    if (name == "pearson") {
      p.measure = EvalMeasure::kPearson;
    } else if (name == "spearman") {
      p.measure = EvalMeasure::kSpearman;
    } else if (name == "kendall_b") {
      p.measure = EvalMeasure::kKendallB;
    } else if (name == "jaccard") {
      p.measure = EvalMeasure::kJaccard;
    } else {
      // Full identifiers such as rbo_all_p0.8 are accepted as well.
      p = parse_eval_id(name);
      if (!p.top_k) p.top_k = config.top_k;
    }
    out.push_back(p);
  }
  std::set<std::string> ids;
  for (const auto& e : out) {
    if (!ids.insert(eval_id(e)).second) {
      throw ParameterError("evaluation measure listed twice: " + eval_id(e));
    }
  }
  return out;
}

void validate(const RunConfig& config) {
  if (config.inputs.empty()) throw ParameterError("at least one --input is required");
  if (!(config.threshold > 0.0 && config.threshold <= 1.0)) {
    throw ParameterError("--threshold must lie in (0, 1]");
  }
  if (config.jobs < 1) throw ParameterError("--jobs must be at least 1");
  if (config.clusters && *config.clusters < 1) {
    throw ParameterError("--k must be at least 1");
  }
  if (config.top_k && *config.top_k < 1) {
    throw ParameterError("--topk must be at least 1");
  }
  for (double p : config.rbo_p) {
    if (!(p > 0.0 && p < 1.0)) throw ParameterError("--rbo-p values must lie in (0, 1)");
  }
  if (config.katz_s && *config.katz_s < 0.0) {
    throw ParameterError("--katz-s must be non-negative");
  }
  if (!(config.pagerank_damping > 0.0 && config.pagerank_damping < 1.0)) {
    throw ParameterError("--damping must lie in (0, 1)");
  }
  const auto& names = all_measure_names();
  for (const auto& m : config.measures) {
    if (std::find(names.begin(), names.end(), m) == names.end()) {
      throw ParameterError("unknown measure: " + m);
    }
  }
  expand_evals(config);
  discover_inputs(config);
}

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& log) {
  return guarded(log, [&] {
    validate(config);
    const auto results =
        run_networks(config, {}, kStageStats, config.output_given, log);
    write_stats_header(out, true);
    for (const auto& r : results) {
      if (r.ok) write_stats_row(out, *r.stats, r.input.name);
    }
    if (config.output_given) return finish(config, {}, results, {});
    for (const auto& r : results) {
      if (!r.ok) return kExitPartial;
    }
    return kExitOk;
  });
}

int cmd_measures(const RunConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    validate(config);
    const auto results =
        run_networks(config, {}, kStageStats | kStageMeasures, true, log);
    return finish(config, {}, results, {});
  });
}

int cmd_pipeline(const RunConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    validate(config);
    const auto evals = expand_evals(config);
    const auto results = run_networks(
        config, evals, kStageStats | kStageMeasures | kStageCombos, true, log);

    Manifest manifest;
    std::vector<const NetworkResult*> done;
    for (const auto& r : results) {
      if (r.ok) done.push_back(&r);
    }
    if (config.strict && done.size() != results.size()) {
      skip_stage(manifest, "aggregate", "aborted after a network failed", log);
      return finish(config, evals, results, std::move(manifest));
    }
    if (done.empty()) {
      skip_stage(manifest, "aggregate", "no network was processed", log);
      return finish(config, evals, results, std::move(manifest));
    }

    const OutputTree tree(config.output);
    const fs::path agg = "aggregate";
    std::vector<std::string> names;
    for (const auto* r : done) names.push_back(r->input.name);

    auto column = [&](std::size_t e) {
      std::vector<CombinationMatrix> out;
      for (const auto* r : done) out.push_back(r->combos[e]);
      return out;
    };
    auto rank_over = [&](const std::string& file,
                         const std::vector<std::size_t>& subset) {
      std::vector<std::vector<CombinationMatrix>> per_network;
      for (const auto* r : done) {
        std::vector<CombinationMatrix> row;
        for (std::size_t e : subset) row.push_back(r->combos[e]);
        per_network.push_back(std::move(row));
      }
      std::ostringstream s;
      write_ranking_csv(s, binarize_and_rank(per_network, config.threshold));
      manifest.files.push_back(tree.write(agg / file, s.str()));
    };

    run_stage(manifest, "ranking", log, [&] {
      std::vector<std::size_t> correlations, rbos;
      for (std::size_t e = 0; e < evals.size(); ++e) {
        rank_over("ranking_" + eval_id(evals[e]) + ".csv", {e});
        if (is_correlation(evals[e].measure)) correlations.push_back(e);
        if (evals[e].measure == EvalMeasure::kRbo) rbos.push_back(e);
      }
      if (correlations.size() > 1) rank_over("ranking_correlation.csv", correlations);
      if (rbos.size() > 1) rank_over("ranking_rbo.csv", rbos);
    });

    if (done.size() < 2) {
      skip_stage(manifest, "netcorr", "needs at least two networks", log);
      skip_stage(manifest, "clusters", "needs at least two networks", log);
    } else {
      run_stage(manifest, "netcorr", log, [&] {
        for (std::size_t e = 0; e < evals.size(); ++e) {
          const auto matrices = column(e);
          std::ostringstream s;
          write_network_correlation_csv(s, network_correlation_matrix(matrices));
          manifest.files.push_back(
              tree.write(agg / ("netcorr_" + eval_id(evals[e]) + ".csv"), s.str()));
        }
      });
      run_stage(manifest, "clusters", log, [&] {
        for (std::size_t e = 0; e < evals.size(); ++e) {
          const auto matrices = column(e);
          std::vector<std::string> notes;
          const Eigen::MatrixXd features = profile_features(matrices, &notes);
          int k = is_correlation(evals[e].measure) ? 3 : 2;
          if (config.clusters) {
            k = *config.clusters;
          } else if (k > static_cast<int>(done.size())) {
            k = static_cast<int>(done.size());
            notes.push_back("default k reduced to the number of networks (" +
                            std::to_string(k) + ")");
          }
          ClusterAssignment a = kmeans(features, k, config.seed);
          for (const auto& n : notes) a.notes.push_back(n);
          for (const auto& n : a.notes) {
            manifest.warnings.push_back("clusters " + eval_id(evals[e]) + ": " + n);
          }
          Json j = {{"eval", eval_id(evals[e])}};
          j.update(cluster_json(a, names));
          manifest.files.push_back(tree.write(
              agg / ("clusters_" + eval_id(evals[e]) + ".json"), dump(j)));
        }
      });
    }

    run_stage(manifest, "schulze", log, [&] {
      for (std::size_t e = 0; e < evals.size(); ++e) {
        const SchulzeTally t = schulze_rank(column(e));
        Json j = {{"eval", eval_id(evals[e])}};
        j.update(schulze_json(t));
        manifest.files.push_back(tree.write(
            agg / ("schulze_" + eval_id(evals[e]) + ".json"), dump(j)));
      }
    });

    return finish(config, evals, results, std::move(manifest));
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& log) {
  RunConfig config;
  std::string top_k = "auto";
  std::string format = "csv";
  std::string rbo_scope = "topk";
  std::string output;

  CLI::App app{"Hierarchy and centrality measures for undirected networks",
               "hiercent"};
  app.set_version_flag("--version", HIERCENT_VERSION);
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", config.inputs,
                    "Edge-list files or directories")
        ->required();
    sub->add_option("-o,--output", output, "Output directory");
    sub->add_option("--jobs", config.jobs, "Worker threads");
    sub->add_option("--katz-s", config.katz_s,
                    "Katz attenuation (default 0.9 / lambda_max)");
    sub->add_option("--damping", config.pagerank_damping, "PageRank damping");
    sub->add_flag("--strict", config.strict, "Stop at the first failing input");
  };
  auto add_measures = [&](CLI::App* sub) {
    sub->add_option("--measures", config.measures,
                    "Score files to write (core,truss,lrc,tp,degree,...)")
        ->delimiter(',');
  };
  auto add_eval = [&](CLI::App* sub) {
    sub->add_option("--eval", config.evals,
                    "pearson,spearman,kendall_b,jaccard,rbo")
        ->delimiter(',');
    sub->add_option("--rbo-p", config.rbo_p, "RBO persistence values")
        ->delimiter(',');
    sub->add_option("--rbo-scope", rbo_scope, "RBO over the top-k or all nodes")
        ->check(CLI::IsMember({"topk", "all"}));
    sub->add_option("--topk", top_k, "Top-k size, or auto");
    sub->add_option("--threshold", config.threshold, "Meaningful |gamma| threshold");
    sub->add_option("--k", config.clusters, "k-means cluster count");
    sub->add_option("--seed", config.seed, "k-means seed");
    sub->add_option("--format", format, "Combination matrix format")
        ->check(CLI::IsMember({"csv", "json", "both"}));
  };

  CLI::App* stats = app.add_subcommand("stats", "Topological summary per network");
  add_common(stats);
  CLI::App* measures =
      app.add_subcommand("measures", "Per-node hierarchy and centrality scores");
  add_common(measures);
  add_measures(measures);
  CLI::App* pipeline = app.add_subcommand("pipeline", "Full evaluation pipeline");
  add_common(pipeline);
  add_measures(pipeline);
  add_eval(pipeline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, log);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (!output.empty()) {
    config.output = output;
    config.output_given = true;
  }
  config.rbo_scope = rbo_scope == "all" ? RboScope::kEntireSet : RboScope::kTopK;
  config.format = format == "json"   ? OutputFormat::kJson
                  : format == "both" ? OutputFormat::kBoth
                                     : OutputFormat::kCsv;
  if (top_k != "auto") {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(top_k, &pos);
      if (pos != top_k.size() || v < 1) throw std::invalid_argument(top_k);
      config.top_k = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      log << "error: --topk must be a positive integer or auto\n";
      return kExitConfig;
    }
  }

  if (*stats) {
    config.command = Command::kStats;
    return cmd_stats(config, out, log);
  }
  if (*measures) {
    config.command = Command::kMeasures;
    return cmd_measures(config, log);
  }
  config.command = Command::kPipeline;
  return cmd_pipeline(config, log);
}

}  // namespace hiercent
