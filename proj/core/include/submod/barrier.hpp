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

#ifndef SUBMOD_BARRIER_HPP_
#define SUBMOD_BARRIER_HPP_

#include <limits>
#include <vector>

#include "submod/knapsack.hpp"
#include "submod/problem.hpp"
#include "submod/run_report.hpp"
#include "submod/solution_state.hpp"

namespace submod {

// Absolute tolerance for all sign/threshold predicates inside the
// algorithms (delta <= 0 removals, gamma < 1 barrier checks, swap scores).
inline constexpr double kPredicateTol = 1e-12;

// Geometric sequence of OPT guesses spaced by (1+epsilon), covering
// [M/(1+epsilon), k*r*M] where M is the largest singleton value and r the
// cardinality estimate. The upper end is widened from the textbook r*M by
// the factor k because r comes from a greedy maximal scan, which can
// undershoot a maximum feasible set by up to that factor.
struct GuessGrid {
  double epsilon = 0.0;
  double max_singleton = 0.0;
  int cardinality_estimate = 0;
  std::vector<double> values;
};

GuessGrid make_guess_grid(double epsilon, double max_singleton,
                          int cardinality_estimate, int k);

// Parameters of the element-energy formula. lambda = 1 gives the plain
// barrier energy; the heuristic runs with 1 <= lambda <= k to tolerate
// aggregate costs past the single-knapsack barrier.
struct EnergyParams {
  int k = 0;
  double omega = 0.0;
  double lambda = 1.0;
};

// (Omega - (k+1) f(S)) / (1 - gamma(S)). Undefined for gamma(S) >= 1 and
// reported as an error; the search keeps gamma(S) < 1 on its own.
double potential(double f_s, double gamma_s, const EnergyParams& p);
double potential(const SolutionState& state, const EnergyParams& p);

// delta_a = (k+1)(lambda - gamma(S)) w_a - (Omega - (k+1) f(S)) gamma_a.
// Positive delta means removing a would raise the potential.
double element_energy(double w_a, double gamma_a, double f_s, double gamma_s,
                      const EnergyParams& p);
// Looks up w_a from the state for members; computes the marginal gain (one
// value query) for non-members.
double element_energy(int a, const SolutionState& state,
                      const KnapsackSet& knapsacks, const EnergyParams& p,
                      const SubmodularOracle& oracle);

// ---- Instrumentation ------------------------------------------------------

// One potential evaluation pair around a state change; recorded only when
// both sides have gamma < 1 (where the potential is defined).
struct PhiStep {
  double before = 0.0;
  double after = 0.0;
  bool removal = false;  // cleanup removal as opposed to an applied swap
};

// Snapshot taken each iteration at the moment the best swap is selected.
struct SwapDecision {
  double f_before = 0.0;
  double gamma_before = 0.0;
  // Smallest member energy before the swap (+inf for the empty solution).
  double min_member_energy = std::numeric_limits<double>::infinity();
  bool has_candidate = false;
  double best_score = -std::numeric_limits<double>::infinity();
};

struct GuessRunTrace {
  double omega = 0.0;
  int iteration_cap = 0;
  int swap_iterations = 0;
  bool infeasible_exit = false;  // the chosen swap pushed gamma(S') >= 1
  bool no_swap_break = false;
  double final_f = 0.0;   // f(S) when the guess loop ended, before fallback
  double result_objective = 0.0;  // value of the set this guess emitted
  // True if some considered candidate swap would have pushed gamma >= 1
  // (whether or not it was chosen).
  bool candidate_gamma_overflow_seen = false;
  std::vector<SwapDecision> decisions;
  std::vector<PhiStep> phi_steps;
};

struct BarrierTrace {
  double epsilon = 0.0;
  double lambda = 1.0;
  int k = 0;
  double max_singleton = 0.0;
  int cardinality_estimate = 0;
  std::vector<GuessRunTrace> guesses;
};

struct BarrierPPStats {
  int pairs_total = 0;
  int feasible_pairs = 0;
  int reduced_runs = 0;
};

struct BarrierOptions {
  int threads = 1;  // guess runs are independent; >1 runs them in parallel
  BarrierTrace* trace = nullptr;
  BarrierPPStats* pp_stats = nullptr;
};

// ---- Algorithms ------------------------------------------------------------

// Barrier local search over the guess grid. Feasible output, approximation
// factor 2(k+1+epsilon).
RunReport barrier_greedy(const ProblemInstance& instance, double epsilon,
                         const BarrierOptions& options = {});

// Enumeration wrapper: re-runs the barrier search on the instance reduced by
// every feasible pair, improving the factor to (k+1+epsilon) at O(n^2) times
// the cost.
RunReport barrier_greedy_pp(const ProblemInstance& instance, double epsilon,
                            const BarrierOptions& options = {});

// Same loop with the (lambda - gamma(S)) energy and a per-iteration
// candidate filter that keeps every individual knapsack satisfied, which
// lets solutions fill more than one knapsack's worth of aggregate cost.
RunReport barrier_heuristic(const ProblemInstance& instance, double epsilon,
                            double lambda, const BarrierOptions& options = {});

}  // namespace submod

#endif  // SUBMOD_BARRIER_HPP_
