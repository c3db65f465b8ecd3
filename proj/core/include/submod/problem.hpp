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

#ifndef SUBMOD_PROBLEM_HPP_
#define SUBMOD_PROBLEM_HPP_

#include <memory>
#include <utility>

#include "submod/element_set.hpp"
#include "submod/knapsack.hpp"
#include "submod/matchoid.hpp"
#include "submod/oracle.hpp"

namespace submod {

// Dense, stable element indices 0..n-1 carrying the global ordering.
struct GroundSet {
  int n = 0;
  explicit GroundSet(int size);
};

struct PaddedConstraints {
  MatchoidConstraint matchoid;
  KnapsackSet knapsacks;
  int k = 0;
};

// Balances a matchoid/knapsack pair so the matchoid parameter equals the
// knapsack count: k = max(k0, ℓ0), padding with all-zero knapsacks or free
// matroids. The feasible family is unchanged.
PaddedConstraints pad_constraints(const MatchoidConstraint& matchoid,
                                  const KnapsackSet& knapsacks, int n);

// Ground set + objective oracle + matchoid + normalized knapsacks. Elements
// whose singleton exceeds some knapsack capacity can never be part of a
// feasible solution and are dropped into an inactive pool at construction.
class ProblemInstance {
 public:
  ProblemInstance(GroundSet ground,
                  std::shared_ptr<const SubmodularOracle> objective,
                  MatchoidConstraint matchoid, KnapsackSet knapsacks);
  // Additionally removes `excluded` from the active pool (used by instance
  // reductions that delete elements outright).
  ProblemInstance(GroundSet ground,
                  std::shared_ptr<const SubmodularOracle> objective,
                  MatchoidConstraint matchoid, KnapsackSet knapsacks,
                  const ElementSet& excluded);

  int n() const { return n_; }
  const SubmodularOracle& objective() const { return *objective_; }
  const std::shared_ptr<const SubmodularOracle>& objective_ptr() const {
    return objective_;
  }
  const MatchoidConstraint& matchoid() const { return matchoid_; }
  const KnapsackSet& knapsacks() const { return knapsacks_; }
  // Elements whose singleton fits every knapsack, in index order.
  const ElementSet& active() const { return active_; }

  // Feasibility against the original (un-padded) constraints.
  bool feasible(const ElementSet& s) const {
    return matchoid_.feasible(s) && knapsacks_.feasible(s);
  }

 private:
  int n_;
  std::shared_ptr<const SubmodularOracle> objective_;
  MatchoidConstraint matchoid_;
  KnapsackSet knapsacks_;
  ElementSet active_;
};

// Size of the maximal feasible set built by a single scan in index order,
// adding every element that keeps both constraint families feasible. An
// estimate of the maximum feasible cardinality, used to size the guess grid
// and the iteration cap.
int max_feasible_cardinality(const MatchoidConstraint& matchoid,
                             const KnapsackSet& knapsacks, int n);
int max_feasible_cardinality(const ProblemInstance& instance);

}  // namespace submod

#endif  // SUBMOD_PROBLEM_HPP_
