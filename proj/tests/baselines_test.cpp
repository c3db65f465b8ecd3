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

#include <cmath>
#include <memory>

#include "doctest.h"
#include "submod/baselines.hpp"
#include "submod/verify.hpp"
#include "test_support.hpp"

using namespace submod;
using submod::testing::ModularObjective;

TEST_SUITE_BEGIN("baselines");

namespace {

ProblemInstance modular_instance(std::vector<double> values,
                                 MatchoidConstraint matchoid, KnapsackSet ks) {
  const int n = static_cast<int>(values.size());
  return ProblemInstance(GroundSet(n),
                         std::make_shared<ModularObjective>(std::move(values)),
                         std::move(matchoid), std::move(ks));
}

}  // namespace

TEST_CASE("greedy picks the exact top-m set on modular objectives") {
  MatchoidConstraint matchoid({std::make_shared<UniformMatroid>(5, 3)}, 1);
  KnapsackSet free_ks =
      KnapsackSet::from_normalized({std::vector<double>(5, 0.0)});
  auto inst = modular_instance({7.0, 3.0, 9.0, 1.0, 5.0}, std::move(matchoid),
                               std::move(free_ks));
  RunReport report = greedy(inst);
  CHECK(report.set.elements() == std::vector<int>{0, 2, 4});
  CHECK(report.objective == doctest::Approx(21.0));
  CHECK(report.feasible);
}

TEST_CASE("greedy trace on INST-A: adds 0 then 3") {
  auto inst = submod::testing::inst_a();
  RunReport report = greedy(inst);
  CHECK(report.set.elements() == std::vector<int>{0, 3});
  CHECK(report.objective == doctest::Approx(4.0));
}

TEST_CASE("greedy returns the empty set when every element is infeasible") {
  MatchoidConstraint matchoid({std::make_shared<UniformMatroid>(3, 2)}, 1);
  KnapsackSet ks = KnapsackSet::from_normalized({{2.0, 2.0, 2.0}});
  auto inst = modular_instance({1.0, 2.0, 3.0}, std::move(matchoid),
                               std::move(ks));
  RunReport report = greedy(inst);
  CHECK(report.set.empty());
  CHECK(report.feasible);
  CHECK(report.oracle_calls > 0);
}

TEST_CASE("density greedy ranks by gain over aggregate cost") {
  // Equal gains, costs 0.2 vs 0.4: index 0 must come first.
  MatchoidConstraint matchoid({std::make_shared<UniformMatroid>(2, 1)}, 1);
  KnapsackSet ks = KnapsackSet::from_normalized({{0.2, 0.4}});
  auto inst =
      modular_instance({1.0, 1.0}, std::move(matchoid), std::move(ks));
  RunReport report = density_greedy(inst);
  CHECK(report.set.elements() == std::vector<int>{0});
}

TEST_CASE("density greedy prefers zero-cost elements at equal gain") {
  MatchoidConstraint matchoid({std::make_shared<UniformMatroid>(2, 1)}, 1);
  KnapsackSet ks = KnapsackSet::from_normalized({{0.1, 0.0}});
  auto inst =
      modular_instance({1.0, 1.0}, std::move(matchoid), std::move(ks));
  RunReport report = density_greedy(inst);
  CHECK(report.set.elements() == std::vector<int>{1});
}

TEST_CASE("density greedy trace on INST-A: adds 1 then 0") {
  auto inst = submod::testing::inst_a();
  RunReport report = density_greedy(inst);
  CHECK(report.set.elements() == std::vector<int>{0, 1});
  CHECK(report.objective == doctest::Approx(3.0));
}

TEST_CASE("fast equals a plain threshold greedy when nothing is filtered") {
  // Uniform values and a free knapsack: the density cutoff never bites.
  MatchoidConstraint matchoid({std::make_shared<UniformMatroid>(4, 2)}, 1);
  KnapsackSet free_ks =
      KnapsackSet::from_normalized({std::vector<double>(4, 0.0)});
  auto inst = modular_instance({2.0, 2.0, 2.0, 2.0}, MatchoidConstraint(matchoid),
                               KnapsackSet(free_ks));
  RunReport fast_report = fast_threshold(inst, 0.2);
  RunReport greedy_report = greedy(inst);
  CHECK(fast_report.objective == doctest::Approx(greedy_report.objective));
  CHECK(fast_report.set.size() == 2);
}

TEST_CASE("fast lands in the guaranteed interval on INST-A") {
  auto inst = submod::testing::inst_a();
  auto opt = brute_force_opt(inst);
  const double eps = 0.2;
  RunReport report = fast_threshold(inst, eps);
  CHECK(report.feasible);
  const int k = 1;
  const int ell = 1;
  CHECK(report.objective >=
        opt.opt_value / ((k + 2 * ell + 1) * (1 + eps)) - 1e-9);
  CHECK(report.objective <= opt.opt_value + 1e-9);
}

TEST_CASE("fast stays within its oracle-call budget") {
  // Fitted on this synthetic family: calls <= c * (n/eps^2) * log(n/eps)
  // with c = 8 (measured ratios 0.6..6.9, shrinking in n).
  const double eps = 0.2;
  const double c = 8.0;
  for (int n : {50, 100, 200}) {
    for (std::uint64_t seed : {1, 2, 3}) {
      auto inst = submod::testing::synthetic_coverage_instance(
          seed * 77 + n, n, 8.0, 8, 0, 0, 1.0);
      RunReport report = fast_threshold(inst, eps);
      const double budget = c * (n / (eps * eps)) * std::log(n / eps);
      CHECK(static_cast<double>(report.oracle_calls) <= budget);
    }
  }
}

TEST_CASE("classical sanity: greedy is a 2-approximation on one matroid") {
  for (std::uint64_t seed = 10; seed < 40; ++seed) {
    auto inst = random_instance(seed, 9, 1, 0, InstanceFamily::kCoverage);
    auto opt = brute_force_opt(inst);
    RunReport report = greedy(inst);
    CHECK(report.feasible);
    CHECK(report.objective >= opt.opt_value / 2.0 - 1e-9);
  }
}

TEST_CASE("all baseline outputs are feasible on random instances") {
  for (std::uint64_t seed = 50; seed < 80; ++seed) {
    auto inst = random_instance(seed, 10, 2, 2, InstanceFamily::kFacility);
    for (const auto& report :
         {greedy(inst), density_greedy(inst), fast_threshold(inst, 0.2)}) {
      CHECK(report.feasible);
      CHECK(inst.feasible(report.set));
    }
  }
}

TEST_SUITE_END();
