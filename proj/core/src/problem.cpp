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

#include "submod/problem.hpp"

#include <stdexcept>

namespace submod {

GroundSet::GroundSet(int size) : n(size) {
  if (n < 0) throw std::invalid_argument("ground set size must be >= 0");
}

PaddedConstraints pad_constraints(const MatchoidConstraint& matchoid,
                                  const KnapsackSet& knapsacks, int n) {
  const int k0 = MatchoidConstraint::max_overlap(matchoid.matroids());
  const int l0 = knapsacks.count();
  const int k = std::max(k0, l0);

  PaddedConstraints out;
  out.k = k;
  out.knapsacks = knapsacks;
  if (l0 < k) out.knapsacks.append_zero_knapsacks(k - l0);

  auto matroids = matchoid.matroids();
  for (int i = k0; i < k; ++i) {
    matroids.push_back(std::make_shared<FreeMatroid>(n));
  }
  out.matchoid = MatchoidConstraint(std::move(matroids), k);
  return out;
}

ProblemInstance::ProblemInstance(
    GroundSet ground, std::shared_ptr<const SubmodularOracle> objective,
    MatchoidConstraint matchoid, KnapsackSet knapsacks)
    : ProblemInstance(ground, std::move(objective), std::move(matchoid),
                      std::move(knapsacks), ElementSet{}) {}

ProblemInstance::ProblemInstance(
    GroundSet ground, std::shared_ptr<const SubmodularOracle> objective,
    MatchoidConstraint matchoid, KnapsackSet knapsacks,
    const ElementSet& excluded)
    : n_(ground.n),
      objective_(std::move(objective)),
      matchoid_(std::move(matchoid)),
      knapsacks_(std::move(knapsacks)) {
  if (!objective_) throw std::invalid_argument("instance: null objective");
  if (knapsacks_.count() == 0) {
    // Keep one all-zero knapsack so gamma lookups are always defined.
    knapsacks_ = KnapsackSet::from_normalized({std::vector<double>(n_, 0.0)});
  }
  if (knapsacks_.ground_size() != n_) {
    throw std::invalid_argument("instance: knapsack length != ground size");
  }
  for (int a = 0; a < n_; ++a) {
    if (excluded.contains(a)) continue;
    if (knapsacks_.singleton_fits(a)) active_.insert(a);
  }
}

int max_feasible_cardinality(const MatchoidConstraint& matchoid,
                             const KnapsackSet& knapsacks, int n) {
  ElementSet s;
  for (int e = 0; e < n; ++e) {
    ElementSet candidate = s.with(e);
    if (matchoid.feasible(candidate) && knapsacks.feasible(candidate)) {
      s = std::move(candidate);
    }
  }
  return s.size();
}

int max_feasible_cardinality(const ProblemInstance& instance) {
  return max_feasible_cardinality(instance.matchoid(), instance.knapsacks(),
                                  instance.n());
}

}  // namespace submod
