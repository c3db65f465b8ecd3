// Copyright 2026 The Authors.
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

#ifndef SUBMOD_EXPERIMENT_HPP_
#define SUBMOD_EXPERIMENT_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "submod/io.hpp"
#include "submod/problem.hpp"
#include "submod/run_report.hpp"

namespace submod {

// Raised for malformed configs, specs and flag combinations (CLI exit 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "uniform:m=15" and "partition:file=parts.csv,limits=6", composed with '+'.
// The partition file holds one block id per line (line i = element i).
std::vector<std::shared_ptr<const MatroidOracle>> parse_matroid_spec(
    const std::string& spec, int n);

struct ExperimentConfig {
  // Exactly one instance source: "file:path", "gen:family,n=..,k=..,ell=..",
  // "graph:path" or "features:path".
  std::string instance;

  // graph/features options
  std::string matroid_spec;
  std::string knapsack_file;  // raw costs, one knapsack per line
  std::string objective_kind = "facility";  // features: facility | logdet
  double alpha = 1.0;
  double sim_lambda = 1.0;
  int degree_q = 6;
  double mean_cost = 0.05;
  std::vector<double> base_budgets = {1.0};

  std::vector<std::string> algorithms;
  double epsilon = 0.2;
  double lambda = 0.0;  // 0 = default (number of knapsacks, clamped to [1,k])
  std::string sweep_var = "budget";  // budget | uniform_m | partition_m
  std::vector<double> sweep_values = {1.0};
  std::vector<std::uint64_t> seeds = {0};
  std::string output;  // empty = stdout
  int threads = 1;
};

// Flat key-value text ("key = value", '#' comments).
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& origin);

// Dispatch by algorithm name: barrier_greedy, barrier_greedy_pp,
// barrier_heuristic, greedy, density_greedy, fast.
RunReport run_algorithm(const std::string& name,
                        const ProblemInstance& instance, double epsilon,
                        double lambda, int threads = 1);

// Resolves the heuristic's default lambda for an instance: the number of
// knapsacks, clamped into [1, k].
double default_lambda(const ProblemInstance& instance);

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  bool any_failed = false;
};

// Runs sweep × seed × algorithm, streaming one CSV row per run to `sink`
// (header first) as soon as all earlier rows are written. Failed runs are
// recorded as rows with objective NaN and the sweep continues.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                std::ostream* sink);

}  // namespace submod

#endif  // SUBMOD_EXPERIMENT_HPP_
