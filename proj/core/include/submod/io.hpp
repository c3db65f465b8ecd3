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

#ifndef SUBMOD_IO_HPP_
#define SUBMOD_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "submod/problem.hpp"
#include "submod/run_report.hpp"

namespace submod {

// ---- Dataset loaders -------------------------------------------------------

struct GraphData {
  std::vector<std::vector<int>> adjacency;  // dense ids, out-neighbors
  std::vector<double> weights;              // unit
  // Knapsack costs scale*(1 + max(0, out_degree - q)), rescaled so the mean
  // cost equals mean_cost_target.
  std::vector<double> raw_costs;
};

// Edge-list text file: one "u v" arc per line, '#' comment lines ignored,
// node ids remapped densely in order of first appearance. Malformed lines
// are reported with their line number.
GraphData load_graph(const std::string& path, int degree_q = 6,
                     double mean_cost_target = 0.05);

struct FeatureMatrix {
  int n = 0;
  std::vector<double> similarity;  // row-major n×n, M_ii = 1
};

// CSV of n rows × d numeric columns; M_ij = exp(-lambda * dist(x_i, x_j)).
// Ragged rows are rejected.
FeatureMatrix load_features(const std::string& path, double lambda);

// ---- Instance files --------------------------------------------------------

// Text format documented in the README ("submod-instance v1"): objective
// payload, matroid lines, one normalized-cost line per knapsack. Doubles are
// emitted with enough digits to round-trip bit-exactly.
void save_instance(const ProblemInstance& instance, const std::string& path);
ProblemInstance load_instance(const std::string& path);
std::string instance_to_string(const ProblemInstance& instance);
ProblemInstance instance_from_string(const std::string& text,
                                     const std::string& origin = "<string>");

// ---- Experiment CSV --------------------------------------------------------

struct ExperimentRow {
  std::string algorithm;
  std::string sweep_var;
  double sweep_value = 0.0;
  std::uint64_t seed = 0;
  double objective = 0.0;  // NaN marks a failed run
  bool feasible = false;
  std::int64_t oracle_calls = 0;
  double wall_ms = 0.0;
  ElementSet set;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&);
};

std::string csv_header();
std::string emit_row(const ExperimentRow& row);
ExperimentRow parse_row(const std::string& line);
// Replaces every wall_ms field with 0 so byte comparisons ignore timing.
std::string csv_without_wall_ms(const std::string& csv_text);

}  // namespace submod

#endif  // SUBMOD_IO_HPP_
