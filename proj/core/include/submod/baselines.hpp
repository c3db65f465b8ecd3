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

#ifndef SUBMOD_BASELINES_HPP_
#define SUBMOD_BASELINES_HPP_

#include "submod/problem.hpp"
#include "submod/run_report.hpp"

namespace submod {

// Vanilla greedy: repeatedly add the feasible element with the largest
// marginal gain until nothing can be added.
RunReport greedy(const ProblemInstance& instance);

// Greedy by marginal gain divided by aggregate knapsack cost. Zero-cost
// elements rank above every finite ratio, tie-broken by raw marginal and
// then element index.
RunReport density_greedy(const ProblemInstance& instance);

// Descending-threshold greedy with an outer sweep over density cutoffs
// rho ∈ {M(1+eps)^-j} (plus a final unfiltered pass): an element is added
// when it is feasible, its marginal clears the current threshold, and its
// marginal-per-aggregate-cost clears rho. The best solution across the
// sweep and the best feasible singleton is returned.
RunReport fast_threshold(const ProblemInstance& instance, double epsilon);

}  // namespace submod

#endif  // SUBMOD_BASELINES_HPP_
