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

#ifndef SUBMOD_VERIFY_HPP_
#define SUBMOD_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "submod/problem.hpp"
#include "submod/run_report.hpp"

namespace submod {

struct ExhaustiveResult {
  double opt_value = 0.0;
  std::vector<ElementSet> opt_sets;  // every feasible argmax within 1e-12
  std::int64_t feasible_count = 0;
};

// Enumerates all 2^n subsets, filters by matchoid + knapsack feasibility,
// and returns the maximum objective with its argmax sets. Guarded to n <= 20.
ExhaustiveResult brute_force_opt(const ProblemInstance& instance);

// report.objective >= opt_value / bound - 1e-9.
bool check_ratio(const RunReport& report, const ExhaustiveResult& oracle,
                 double bound);

enum class InstanceFamily { kCoverage, kFacility, kLogDet, kConcaveModular };

// Parses "coverage" | "facility" | "logdet" | "concave-modular".
InstanceFamily parse_family(const std::string& name);
std::string family_name(InstanceFamily family);

// Deterministic pseudo-random instance: one objective of the requested
// family, k full-ground partition matroids (overlap exactly k), and ell
// knapsacks with uniform costs rescaled to mean 4/n so feasible sets stay
// non-trivial. All draws come from SplitMix64(seed) in a fixed order (see
// the implementation), so equal seeds give bitwise-equal instances.
ProblemInstance random_instance(std::uint64_t seed, int n, int k, int ell,
                                InstanceFamily family);

// The random digraph used by the coverage family: every ordered pair (u,v),
// u != v, becomes an arc with probability arc_prob, drawn row by row.
// Exposed for building scaled synthetic coverage instances.
std::vector<std::vector<int>> random_digraph(class SplitMix64& rng, int n,
                                             double arc_prob);

}  // namespace submod

#endif  // SUBMOD_VERIFY_HPP_
