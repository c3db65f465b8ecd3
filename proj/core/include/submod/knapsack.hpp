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

#ifndef SUBMOD_KNAPSACK_HPP_
#define SUBMOD_KNAPSACK_HPP_

#include <vector>

#include "submod/element_set.hpp"

namespace submod {

inline constexpr double kFeasibilityTol = 1e-12;

// ℓ knapsack cost vectors with all capacities normalized to 1, plus the
// per-element aggregate cost gamma_a = Σ_i c_{i,a}.
class KnapsackSet {
 public:
  KnapsackSet() = default;
  // `costs` are already normalized (capacity 1 each). Rejects negatives.
  static KnapsackSet from_normalized(std::vector<std::vector<double>> costs);

  int count() const { return static_cast<int>(costs_.size()); }
  int ground_size() const { return n_; }
  const std::vector<double>& costs(int i) const { return costs_[i]; }

  double cost(int i, const ElementSet& s) const;
  // All c_i(S) ≤ 1 + tolerance.
  bool feasible(const ElementSet& s) const;

  double gamma(int a) const { return gamma_[a]; }
  const std::vector<double>& gamma_vector() const { return gamma_; }
  // γ(S) = Σ_{a∈S} gamma_a, summed in element order.
  double gamma_of(const ElementSet& s) const;

  // True if the singleton {a} fits in every knapsack.
  bool singleton_fits(int a) const;

  // Appends `extra` all-zero cost vectors (used for constraint padding).
  void append_zero_knapsacks(int extra);

 private:
  int n_ = 0;
  std::vector<std::vector<double>> costs_;
  std::vector<double> gamma_;

  void recompute_gamma();
};

// Divides each raw cost vector componentwise by its budget and builds the
// normalized KnapsackSet. Rejects negative costs and non-positive budgets.
KnapsackSet normalize(const std::vector<std::vector<double>>& raw_costs,
                      const std::vector<double>& budgets);

}  // namespace submod

#endif  // SUBMOD_KNAPSACK_HPP_
