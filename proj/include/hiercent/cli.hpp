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

#ifndef HIERCENT_CLI_HPP_
#define HIERCENT_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hiercent/evaluation.hpp"

namespace hiercent {

enum class Command { kStats, kMeasures, kPipeline };

enum class OutputFormat { kCsv, kJson, kBoth };

// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPartial = 1;
inline constexpr int kExitConfig = 2;

struct RunConfig {
  Command command = Command::kPipeline;
  // Edge-list files, or directories scanned for *.edges, *.txt, *.csv,
  // *.tsv and *.el files in name order.
  std::vector<std::filesystem::path> inputs;
  // Per-node score files to emit; empty means all ten.
  std::vector<std::string> measures;
  // Evaluation measures: pearson, spearman, kendall_b, jaccard, rbo.
  std::vector<std::string> evals = {"pearson", "spearman", "kendall_b",
                                    "jaccard", "rbo"};
  std::vector<double> rbo_p = {0.5, 0.9};
  RboScope rbo_scope = RboScope::kTopK;
  // Unset selects the default top-k rule.
  std::optional<std::size_t> top_k;
  double threshold = 0.7;
  // Unset: 3 clusters for correlation profiles, 2 for similarity profiles.
  std::optional<int> clusters;
  std::uint64_t seed = 42;
  std::optional<double> katz_s;
  double pagerank_damping = 0.85;
  std::filesystem::path output = "hiercent_out";
  bool output_given = false;
  OutputFormat format = OutputFormat::kCsv;
  int jobs = 1;
  bool strict = false;
};

// Expands `evals` and `rbo_p` into the concrete evaluation settings, in
// output order. Throws ParameterError on unknown names.
std::vector<EvalParams> expand_evals(const RunConfig& config);

// Checks ranges and input existence. Throws ParameterError.
void validate(const RunConfig& config);

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_measures(const RunConfig& config, std::ostream& log);
int cmd_pipeline(const RunConfig& config, std::ostream& log);

// Parses argv and dispatches to a command. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& log);

}  // namespace hiercent

#endif  // HIERCENT_CLI_HPP_
