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

#include "submod/barrier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <thread>
#include <utility>

#include "submod/matchoid.hpp"
#include "submod/oracle.hpp"

namespace submod {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
}

void run_indexed(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

// Everything one guess run needs, shared across the grid.
struct SearchContext {
  const ProblemInstance* instance = nullptr;
  const CountingOracle* oracle = nullptr;
  const MatchoidConstraint* matchoid = nullptr;  // padded
  const KnapsackSet* knapsacks = nullptr;        // padded
  int k = 0;
  double epsilon = 0.0;
  double lambda = 1.0;
  bool heuristic = false;
  double f_empty = 0.0;
  const std::vector<double>* singleton_value = nullptr;  // per element
  int cardinality_estimate = 0;
  int iteration_cap = 0;
};

struct GuessResult {
  ElementSet set;
  double objective = 0.0;
};

GuessResult run_guess(const SearchContext& ctx, double omega,
                      GuessRunTrace* trace) {
  const ProblemInstance& inst = *ctx.instance;
  const CountingOracle& f = *ctx.oracle;
  const KnapsackSet& ks = *ctx.knapsacks;
  const EnergyParams params{ctx.k, omega, ctx.lambda};
  const int n = inst.n();

  if (trace) {
    trace->omega = omega;
    trace->iteration_cap = ctx.iteration_cap;
  }

  SolutionState state;
  state.weight.assign(n, 0.0);
  state.fval = ctx.f_empty;
  state.gamma = 0.0;

  std::vector<double> energy(n, 0.0);
  auto refresh_member_energies = [&] {
    for (int a : state.set) {
      energy[a] = element_energy(state.weight[a], ks.gamma(a), state.fval,
                                 state.gamma, params);
    }
  };
  auto record_phi = [&](double f_before, double gamma_before, double f_after,
                        double gamma_after, bool removal) {
    if (!trace) return;
    if (gamma_before >= 1.0 - kPredicateTol) return;
    if (gamma_after >= 1.0 - kPredicateTol) return;
    trace->phi_steps.push_back({potential(f_before, gamma_before, params),
                                potential(f_after, gamma_after, params),
                                removal});
  };

  // Remove members whose energy dropped to zero or below, most negative
  // first; weights are rebuilt from scratch after every removal since they
  // depend on the whole solution.
  auto cleanup = [&] {
    for (;;) {
      refresh_member_energies();
      int worst = -1;
      double worst_energy = 0.0;
      for (int a : state.set) {
        if (worst < 0 || energy[a] < worst_energy) {
          worst = a;
          worst_energy = energy[a];
        }
      }
      if (worst < 0 || worst_energy > kPredicateTol) return;
      const double f_before = state.fval;
      const double gamma_before = state.gamma;
      state.set.erase(worst);
      state.gamma = ks.gamma_of(state.set);
      rebuild_weights(state, f);
      record_phi(f_before, gamma_before, state.fval, state.gamma, true);
    }
  };

  int iterations = 0;
  int last_added = -1;
  bool infeasible_exit = false;
  ElementSet overflow_set;  // (S \ U_b) + b when the swap breached the barrier

  // Best feasible state seen along the run; every loop state has gamma < 1
  // in greedy mode and satisfies all knapsacks in heuristic mode, so each
  // one is a valid solution candidate.
  ElementSet best_set;
  double best_f = ctx.f_empty;

  std::vector<double> candidate_weight(n, 0.0);
  while (iterations < ctx.iteration_cap) {
    refresh_member_energies();

    double min_member_energy = std::numeric_limits<double>::infinity();
    for (int a : state.set) {
      min_member_energy = std::min(min_member_energy, energy[a]);
    }

    // Fresh marginals for every candidate, cached for this iteration.
    for (int b : inst.active()) {
      if (!state.set.contains(b)) {
        candidate_weight[b] = f.value(state.set.with(b)) - state.fval;
      }
    }

    int best_b = -1;
    double best_score = -std::numeric_limits<double>::infinity();
    ElementSet best_removals;
    for (int b : inst.active()) {
      if (state.set.contains(b)) continue;
      auto removals = exchange_candidate(state.set, b, *ctx.matchoid, energy);
      if (!removals) continue;
      ElementSet swapped = state.set.set_minus(*removals).with(b);
      if (trace && ks.gamma_of(swapped) >= 1.0 - kPredicateTol) {
        trace->candidate_gamma_overflow_seen = true;
      }
      if (ctx.heuristic && !ks.feasible(swapped)) continue;
      double score =
          element_energy(candidate_weight[b], ks.gamma(b), state.fval,
                         state.gamma, params);
      for (int a : *removals) score -= energy[a];
      if (best_b < 0 || score > best_score) {
        best_b = b;
        best_score = score;
        best_removals = std::move(*removals);
      }
    }

    if (trace) {
      SwapDecision d;
      d.f_before = state.fval;
      d.gamma_before = state.gamma;
      d.min_member_energy = min_member_energy;
      d.has_candidate = best_b >= 0;
      d.best_score = best_score;
      trace->decisions.push_back(d);
    }

    if (best_b < 0 || best_score <= kPredicateTol) {
      // No candidate pool left (heuristic) or no swap that lowers the
      // potential; this guess is done.
      if (trace) trace->no_swap_break = true;
      break;
    }

    ElementSet new_set = state.set.set_minus(best_removals).with(best_b);
    const double new_gamma = ks.gamma_of(new_set);
    if (!ctx.heuristic && new_gamma >= 1.0 - kPredicateTol) {
      // The swap would cross the barrier; keep the overflowing set around
      // for the fallback selection and stop this guess.
      infeasible_exit = true;
      overflow_set = std::move(new_set);
      last_added = best_b;
      break;
    }

    const double f_before = state.fval;
    const double gamma_before = state.gamma;
    state.set = std::move(new_set);
    state.gamma = new_gamma;
    rebuild_weights(state, f);
    ++iterations;
    last_added = best_b;
    record_phi(f_before, gamma_before, state.fval, state.gamma, false);

    cleanup();

    if (state.fval > best_f) {
      best_f = state.fval;
      best_set = state.set;
    }
  }

  if (trace) {
    trace->swap_iterations = iterations;
    trace->infeasible_exit = infeasible_exit;
    trace->final_f = state.fval;
  }

  GuessResult result;
  result.set = best_set;
  result.objective = best_f;
  if (infeasible_exit) {
    // Keep the overflowing set if it happens to satisfy
    // every individual knapsack, otherwise fall back to the better of {b}
    // and S-b (both feasible by the exchange construction).
    if (ks.feasible(overflow_set)) {
      const double v = f.value(overflow_set);
      if (v > result.objective) {
        result.set = overflow_set;
        result.objective = v;
      }
    } else {
      const ElementSet without_b = overflow_set.without(last_added);
      const double f_without = f.value(without_b);
      const double f_single = (*ctx.singleton_value)[last_added];
      if (f_single > result.objective && f_single > f_without) {
        result.set = ElementSet{last_added};
        result.objective = f_single;
      } else if (f_without > result.objective) {
        result.set = without_b;
        result.objective = f_without;
      }
    }
  }
  if (trace) trace->result_objective = result.objective;
  return result;
}

RunReport run_barrier_search(const ProblemInstance& inst, double epsilon,
                             double lambda, bool heuristic,
                             const BarrierOptions& options, const char* name) {
  check_epsilon(epsilon);
  const auto start = Clock::now();
  CountingOracle oracle(inst.objective_ptr());

  PaddedConstraints padded =
      pad_constraints(inst.matchoid(), inst.knapsacks(), inst.n());
  if (heuristic &&
      (lambda < 1.0 - kPredicateTol ||
       lambda > std::max(padded.k, 1) + kPredicateTol)) {
    throw std::invalid_argument("heuristic lambda must lie in [1, k]");
  }

  RunReport report;
  report.algorithm = name;
  report.epsilon = epsilon;
  report.lambda = heuristic ? lambda : 1.0;

  const double f_empty = oracle.value(ElementSet{});
  std::vector<double> singleton_value(inst.n(), 0.0);
  double max_singleton = 0.0;
  for (int a : inst.active()) {
    singleton_value[a] = oracle.value(ElementSet{a});
    max_singleton = std::max(max_singleton, singleton_value[a]);
  }
  const int r = max_feasible_cardinality(inst);
  GuessGrid grid = make_guess_grid(epsilon, max_singleton, r, padded.k);

  SearchContext ctx;
  ctx.instance = &inst;
  ctx.oracle = &oracle;
  ctx.matchoid = &padded.matchoid;
  ctx.knapsacks = &padded.knapsacks;
  ctx.k = padded.k;
  ctx.epsilon = epsilon;
  ctx.lambda = heuristic ? lambda : 1.0;
  ctx.heuristic = heuristic;
  ctx.f_empty = f_empty;
  ctx.singleton_value = &singleton_value;
  ctx.cardinality_estimate = r;
  ctx.iteration_cap =
      r > 0 ? static_cast<int>(std::ceil(r * std::log(1.0 / epsilon))) : 0;

  if (options.trace) {
    options.trace->epsilon = epsilon;
    options.trace->lambda = ctx.lambda;
    options.trace->k = padded.k;
    options.trace->max_singleton = max_singleton;
    options.trace->cardinality_estimate = r;
    options.trace->guesses.assign(grid.values.size(), {});
  }

  std::vector<GuessResult> outcomes(grid.values.size());
  run_indexed(static_cast<int>(grid.values.size()), options.threads,
              [&](int i) {
                GuessRunTrace* tr =
                    options.trace ? &options.trace->guesses[i] : nullptr;
                outcomes[i] = run_guess(ctx, grid.values[i], tr);
              });

  int best = -1;
  for (int i = 0; i < static_cast<int>(outcomes.size()); ++i) {
    if (best < 0 || outcomes[i].objective > outcomes[best].objective) {
      best = i;
    }
  }
  if (best >= 0) {
    report.set = outcomes[best].set;
    report.objective = outcomes[best].objective;
    report.omega = grid.values[best];
  } else {
    report.objective = f_empty;
  }
  report.feasible = inst.feasible(report.set);
  report.oracle_calls = oracle.calls();
  report.wall_ms = elapsed_ms(start);
  return report;
}

// g(S) = f(S ∪ pair) - f(pair), shifted to g(∅) = 0. Every query costs one
// query on the wrapped oracle.
class PairReducedOracle final : public SubmodularOracle {
 public:
  PairReducedOracle(const SubmodularOracle* base, ElementSet pair,
                    double pair_value)
      : base_(base), pair_(std::move(pair)), pair_value_(pair_value) {}

  double value(const ElementSet& s) const override {
    const double v = base_->value(s.set_union(pair_)) - pair_value_;
    return v > 0.0 ? v : 0.0;  // guard tiny negative float noise
  }

 private:
  const SubmodularOracle* base_;
  ElementSet pair_;
  double pair_value_;
};

}  // namespace

GuessGrid make_guess_grid(double epsilon, double max_singleton,
                          int cardinality_estimate, int k) {
  check_epsilon(epsilon);
  GuessGrid grid;
  grid.epsilon = epsilon;
  grid.max_singleton = max_singleton;
  grid.cardinality_estimate = cardinality_estimate;
  if (max_singleton <= 0.0 || cardinality_estimate <= 0) return grid;

  const double lo = max_singleton / (1.0 + epsilon);
  const double hi = std::max(k, 1) * static_cast<double>(cardinality_estimate) *
                    max_singleton;
  const double step = std::log1p(epsilon);
  const int i_min = static_cast<int>(std::ceil(std::log(lo) / step - 1e-9));
  const int i_max = static_cast<int>(std::floor(std::log(hi) / step + 1e-9));
  for (int i = i_min; i <= i_max; ++i) {
    grid.values.push_back(std::pow(1.0 + epsilon, i));
  }
  return grid;
}

double potential(double f_s, double gamma_s, const EnergyParams& p) {
  if (gamma_s >= 1.0 - kPredicateTol) {
    throw std::domain_error("potential undefined: gamma(S) >= 1");
  }
  return (p.omega - (p.k + 1) * f_s) / (1.0 - gamma_s);
}

double potential(const SolutionState& state, const EnergyParams& p) {
  return potential(state.fval, state.gamma, p);
}

double element_energy(double w_a, double gamma_a, double f_s, double gamma_s,
                      const EnergyParams& p) {
  return (p.k + 1) * (p.lambda - gamma_s) * w_a -
         (p.omega - (p.k + 1) * f_s) * gamma_a;
}

double element_energy(int a, const SolutionState& state,
                      const KnapsackSet& knapsacks, const EnergyParams& p,
                      const SubmodularOracle& oracle) {
  const double w = state.set.contains(a) ? state.weight[a]
                                         : marginal_gain(a, state, oracle);
  return element_energy(w, knapsacks.gamma(a), state.fval, state.gamma, p);
}

RunReport barrier_greedy(const ProblemInstance& instance, double epsilon,
                         const BarrierOptions& options) {
  return run_barrier_search(instance, epsilon, 1.0, false, options,
                            "barrier_greedy");
}

RunReport barrier_heuristic(const ProblemInstance& instance, double epsilon,
                            double lambda, const BarrierOptions& options) {
  return run_barrier_search(instance, epsilon, lambda, true, options,
                            "barrier_heuristic");
}

RunReport barrier_greedy_pp(const ProblemInstance& instance, double epsilon,
                            const BarrierOptions& options) {
  check_epsilon(epsilon);
  const auto start = Clock::now();
  auto oracle = std::make_shared<CountingOracle>(instance.objective_ptr());

  RunReport report;
  report.algorithm = "barrier_greedy_pp";
  report.epsilon = epsilon;
  report.lambda = 1.0;

  // The best feasible singleton is always a candidate; it also covers the
  // case where no feasible pair exists.
  report.objective = oracle->value(ElementSet{});
  std::vector<double> singleton_value(instance.n(), 0.0);
  for (int a : instance.active()) {
    singleton_value[a] = oracle->value(ElementSet{a});
    ElementSet single{a};
    if (instance.matchoid().feasible(single) &&
        singleton_value[a] > report.objective) {
      report.set = std::move(single);
      report.objective = singleton_value[a];
    }
  }

  BarrierPPStats stats;
  const auto& actives = instance.active().elements();
  for (std::size_t i = 0; i < actives.size(); ++i) {
    for (std::size_t j = i + 1; j < actives.size(); ++j) {
      ++stats.pairs_total;
      const int a1 = actives[i];
      const int a2 = actives[j];
      ElementSet pair{a1, a2};
      if (!instance.feasible(pair)) continue;
      ++stats.feasible_pairs;

      const double pair_value = oracle->value(pair);
      auto reduced_objective = std::make_shared<PairReducedOracle>(
          oracle.get(), pair, pair_value);

      // Knapsack headroom left by the pair, renormalized back to capacity 1.
      std::vector<std::vector<double>> reduced_costs;
      reduced_costs.reserve(instance.knapsacks().count());
      for (int q = 0; q < instance.knapsacks().count(); ++q) {
        const auto& c = instance.knapsacks().costs(q);
        const double remaining = 1.0 - c[a1] - c[a2];
        std::vector<double> row(instance.n(), 0.0);
        for (int e = 0; e < instance.n(); ++e) {
          if (c[e] == 0.0) {
            row[e] = 0.0;
          } else if (remaining > kPredicateTol) {
            row[e] = c[e] / remaining;
          } else {
            row[e] = 2.0;  // no headroom: positive-cost elements are out
          }
        }
        reduced_costs.push_back(std::move(row));
      }
      KnapsackSet reduced_knapsacks =
          KnapsackSet::from_normalized(std::move(reduced_costs));

      std::vector<std::shared_ptr<const MatroidOracle>> contracted;
      contracted.reserve(instance.matchoid().matroid_count());
      for (const auto& m : instance.matchoid().matroids()) {
        contracted.push_back(std::make_shared<ContractedMatroid>(m, pair));
      }
      MatchoidConstraint reduced_matchoid(std::move(contracted),
                                          instance.matchoid().k());

      // Drop the pair itself and everything whose reduced marginal exceeds
      // half the pair value.
      ElementSet excluded = pair;
      for (int e = 0; e < instance.n(); ++e) {
        if (e == a1 || e == a2) continue;
        if (!reduced_knapsacks.singleton_fits(e)) continue;
        if (reduced_objective->value(ElementSet{e}) > 0.5 * pair_value) {
          excluded.insert(e);
        }
      }

      ProblemInstance reduced(GroundSet(instance.n()), reduced_objective,
                              std::move(reduced_matchoid),
                              std::move(reduced_knapsacks), excluded);
      BarrierOptions inner;
      inner.threads = options.threads;
      RunReport inner_report = barrier_greedy(reduced, epsilon, inner);
      ++stats.reduced_runs;

      const ElementSet candidate = inner_report.set.set_union(pair);
      const double candidate_value = pair_value + inner_report.objective;
      if (candidate_value > report.objective) {
        report.set = candidate;
        report.objective = candidate_value;
        report.omega = inner_report.omega;
      }
    }
  }

  report.feasible = instance.feasible(report.set);
  report.oracle_calls = oracle->calls();
  report.wall_ms = elapsed_ms(start);
  if (options.pp_stats) *options.pp_stats = stats;
  return report;
}

}  // namespace submod
