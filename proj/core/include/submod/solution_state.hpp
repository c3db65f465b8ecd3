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

#ifndef SUBMOD_SOLUTION_STATE_HPP_
#define SUBMOD_SOLUTION_STATE_HPP_

#include <vector>

#include "submod/element_set.hpp"
#include "submod/oracle.hpp"

namespace submod {

// Bookkeeping for the current solution of a local-search run.
//
// weight[a] holds w_a = f(S ∩ [a]) - f(S ∩ [a-1]) for a ∈ S (undefined for
// other slots); fval is the full prefix telescoping, so fval = f(S) exactly
// (including any f(∅) offset); gamma is the aggregate knapsack cost of S.
struct SolutionState {
  ElementSet set;
  std::vector<double> weight;  // indexed by element, valid for members only
  double fval = 0.0;
  double gamma = 0.0;
};

// Recomputes weight[a] for every a ∈ S by scanning S in the global element
// order, and sets fval to the final prefix value. Costs exactly |S| + 1
// value queries. gamma is untouched (it does not depend on the oracle).
void rebuild_weights(SolutionState& state, const SubmodularOracle& oracle);

// f(S+b) - f(S) using the cached fval: one value query. Rejects b ∈ S.
double marginal_gain(int b, const SolutionState& state,
                     const SubmodularOracle& oracle);

}  // namespace submod

#endif  // SUBMOD_SOLUTION_STATE_HPP_
