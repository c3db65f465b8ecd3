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

#include "submod/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "submod/knapsack.hpp"
#include "submod/oracle.hpp"

namespace submod {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Candidate ranking for density greedy: zero-cost elements first (by raw
// marginal, then index), then finite ratios (by ratio, marginal, index).
struct DensityKey {
  bool zero_cost = false;
  double ratio = -std::numeric_limits<double>::infinity();
  double marginal = -std::numeric_limits<double>::infinity();

  bool better_than(const DensityKey& other) const {
    if (zero_cost != other.zero_cost) return zero_cost;
    if (ratio != other.ratio) return ratio > other.ratio;
    return marginal > other.marginal;
  }
};

}  // namespace

RunReport greedy(const ProblemInstance& instance) {
  const auto start = Clock::now();
  CountingOracle oracle(instance.objective_ptr());

  RunReport report;
  report.algorithm = "greedy";

  ElementSet solution;
  double fval = oracle.value(solution);
  for (;;) {
    int best = -1;
    double best_gain = 0.0;
    for (int b : instance.active()) {
      if (solution.contains(b)) continue;
      ElementSet candidate = solution.with(b);
      if (!instance.feasible(candidate)) continue;
      const double gain = oracle.value(candidate) - fval;
      if (best < 0 || gain > best_gain) {
        best = b;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    solution.insert(best);
    fval += best_gain;
  }

  report.set = solution;
  report.objective = fval;
  report.feasible = instance.feasible(solution);
  report.oracle_calls = oracle.calls();
  report.wall_ms = elapsed_ms(start);
  return report;
}

RunReport density_greedy(const ProblemInstance& instance) {
  const auto start = Clock::now();
  CountingOracle oracle(instance.objective_ptr());
  const KnapsackSet& ks = instance.knapsacks();

  RunReport report;
  report.algorithm = "density_greedy";

  ElementSet solution;
  double fval = oracle.value(solution);
  for (;;) {
    int best = -1;
    DensityKey best_key;
    double best_gain = 0.0;
    for (int b : instance.active()) {
      if (solution.contains(b)) continue;
      ElementSet candidate = solution.with(b);
      if (!instance.feasible(candidate)) continue;
      const double gain = oracle.value(candidate) - fval;
      DensityKey key;
      key.marginal = gain;
      const double gamma_b = ks.count() > 0 ? ks.gamma(b) : 0.0;
      if (gamma_b <= kFeasibilityTol) {
        key.zero_cost = true;
      } else {
        key.ratio = gain / gamma_b;
      }
      if (best < 0 || key.better_than(best_key)) {
        best = b;
        best_key = key;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    solution.insert(best);
    fval += best_gain;
  }

  report.set = solution;
  report.objective = fval;
  report.feasible = instance.feasible(solution);
  report.oracle_calls = oracle.calls();
  report.wall_ms = elapsed_ms(start);
  return report;
}

RunReport fast_threshold(const ProblemInstance& instance, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  const auto start = Clock::now();
  CountingOracle oracle(instance.objective_ptr());
  const KnapsackSet& ks = instance.knapsacks();
  const int ell = ks.count();

  RunReport report;
  report.algorithm = "fast";
  report.epsilon = epsilon;

  ElementSet best_set;
  double best_value = oracle.value(ElementSet{});
  double max_singleton = 0.0;
  for (int a : instance.active()) {
    const double v = oracle.value(ElementSet{a});
    max_singleton = std::max(max_singleton, v);
    ElementSet single{a};
    if (instance.feasible(single) && v > best_value) {
      best_set = std::move(single);
      best_value = v;
    }
  }

  if (max_singleton > 0.0) {
    const int r = std::max(max_feasible_cardinality(instance), 1);
    // Density cutoffs from M down to roughly eps*M/(4(ell+1)r), plus an
    // unfiltered run.
    const int density_guesses = static_cast<int>(std::ceil(
        std::log(4.0 * (ell + 1) * r / epsilon) / std::log1p(epsilon)));
    std::vector<double> cutoffs;
    for (int j = 0; j <= density_guesses; ++j) {
      cutoffs.push_back(max_singleton / std::pow(1.0 + epsilon, j));
    }
    cutoffs.push_back(0.0);

    const double tau_floor = epsilon * max_singleton / instance.n();
    for (double rho : cutoffs) {
      ElementSet solution;
      double fval = oracle.value(solution);
      for (double tau = max_singleton; tau >= tau_floor;
           tau /= (1.0 + epsilon)) {
        for (int e : instance.active()) {
          if (solution.contains(e)) continue;
          ElementSet candidate = solution.with(e);
          if (!instance.feasible(candidate)) continue;
          const double gain = oracle.value(candidate) - fval;
          if (gain < tau) continue;
          const double gamma_e = ell > 0 ? ks.gamma(e) : 0.0;
          if (gamma_e > kFeasibilityTol && gain < rho * gamma_e) continue;
          solution = std::move(candidate);
          fval += gain;
        }
      }
      if (fval > best_value) {
        best_value = fval;
        best_set = solution;
      }
    }
  }

  report.set = best_set;
  report.objective = best_value;
  report.feasible = instance.feasible(best_set);
  report.oracle_calls = oracle.calls();
  report.wall_ms = elapsed_ms(start);
  return report;
}

}  // namespace submod
