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

#include "submod/knapsack.hpp"

#include <stdexcept>
#include <string>

namespace submod {

KnapsackSet KnapsackSet::from_normalized(
    std::vector<std::vector<double>> costs) {
  KnapsackSet ks;
  ks.costs_ = std::move(costs);
  ks.n_ = ks.costs_.empty() ? 0 : static_cast<int>(ks.costs_[0].size());
  for (const auto& c : ks.costs_) {
    if (static_cast<int>(c.size()) != ks.n_) {
      throw std::invalid_argument("knapsack cost vectors differ in length");
    }
    for (double v : c) {
      if (v < 0.0) {
        throw std::invalid_argument("negative knapsack cost " +
                                    std::to_string(v));
      }
    }
  }
  ks.recompute_gamma();
  return ks;
}

void KnapsackSet::recompute_gamma() {
  gamma_.assign(n_, 0.0);
  for (const auto& c : costs_) {
    for (int a = 0; a < n_; ++a) gamma_[a] += c[a];
  }
}

double KnapsackSet::cost(int i, const ElementSet& s) const {
  double total = 0.0;
  for (int a : s) total += costs_[i][a];
  return total;
}

bool KnapsackSet::feasible(const ElementSet& s) const {
  for (int i = 0; i < count(); ++i) {
    if (cost(i, s) > 1.0 + kFeasibilityTol) return false;
  }
  return true;
}

double KnapsackSet::gamma_of(const ElementSet& s) const {
  double total = 0.0;
  for (int a : s) total += gamma_[a];
  return total;
}

bool KnapsackSet::singleton_fits(int a) const {
  for (const auto& c : costs_) {
    if (c[a] > 1.0 + kFeasibilityTol) return false;
  }
  return true;
}

void KnapsackSet::append_zero_knapsacks(int extra) {
  for (int i = 0; i < extra; ++i) {
    costs_.emplace_back(n_, 0.0);
  }
}

KnapsackSet normalize(const std::vector<std::vector<double>>& raw_costs,
                      const std::vector<double>& budgets) {
  if (raw_costs.size() != budgets.size()) {
    throw std::invalid_argument("normalize: need one budget per cost vector");
  }
  std::vector<std::vector<double>> normalized;
  normalized.reserve(raw_costs.size());
  for (std::size_t i = 0; i < raw_costs.size(); ++i) {
    if (budgets[i] <= 0.0) {
      throw std::invalid_argument("normalize: budget " + std::to_string(i) +
                                  " is not positive");
    }
    std::vector<double> c = raw_costs[i];
    for (double& v : c) {
      if (v < 0.0) {
        throw std::invalid_argument("normalize: negative cost in knapsack " +
                                    std::to_string(i));
      }
      v /= budgets[i];
    }
    normalized.push_back(std::move(c));
  }
  return KnapsackSet::from_normalized(std::move(normalized));
}

}  // namespace submod
