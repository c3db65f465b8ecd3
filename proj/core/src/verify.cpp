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

#include "submod/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>

#include "submod/objectives.hpp"
#include "submod/rng.hpp"

namespace submod {

ExhaustiveResult brute_force_opt(const ProblemInstance& instance) {
  const int n = instance.n();
  if (n > 20) {
    throw std::invalid_argument("brute_force_opt: n > 20 is not supported");
  }
  const SubmodularOracle& f = instance.objective();

  ExhaustiveResult result;
  result.opt_value = -std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, ElementSet>> near_best;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    ElementSet s = ElementSet::from_mask(mask, n);
    if (!instance.feasible(s)) continue;
    ++result.feasible_count;
    const double v = f.value(s);
    if (v > result.opt_value) {
      result.opt_value = v;
      std::erase_if(near_best, [&](const auto& entry) {
        return entry.first < result.opt_value - 1e-12;
      });
    }
    if (v >= result.opt_value - 1e-12) near_best.emplace_back(v, std::move(s));
  }
  for (auto& [v, s] : near_best) {
    if (v >= result.opt_value - 1e-12) result.opt_sets.push_back(std::move(s));
  }
  if (result.feasible_count == 0) {
    // No feasible subset at all cannot happen: the empty set is feasible.
    result.opt_value = 0.0;
  }
  return result;
}

bool check_ratio(const RunReport& report, const ExhaustiveResult& oracle,
                 double bound) {
  if (!(bound > 0.0)) throw std::invalid_argument("check_ratio: bound <= 0");
  return report.objective >= oracle.opt_value / bound - 1e-9;
}

InstanceFamily parse_family(const std::string& name) {
  if (name == "coverage") return InstanceFamily::kCoverage;
  if (name == "facility") return InstanceFamily::kFacility;
  if (name == "logdet") return InstanceFamily::kLogDet;
  if (name == "concave-modular") return InstanceFamily::kConcaveModular;
  throw std::invalid_argument("unknown instance family: " + name);
}

std::string family_name(InstanceFamily family) {
  switch (family) {
    case InstanceFamily::kCoverage:
      return "coverage";
    case InstanceFamily::kFacility:
      return "facility";
    case InstanceFamily::kLogDet:
      return "logdet";
    case InstanceFamily::kConcaveModular:
      return "concave-modular";
  }
  throw std::invalid_argument("unknown instance family enum");
}

std::vector<std::vector<int>> random_digraph(SplitMix64& rng, int n,
                                             double arc_prob) {
  std::vector<std::vector<int>> adjacency(std::max(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      if (rng.next_double() < arc_prob) adjacency[u].push_back(v);
    }
  }
  return adjacency;
}

// Draw order, frozen for fixture reproducibility:
//   1. objective payload
//      coverage:        arcs row by row (prob 3/n), then weights 0.5+U
//      facility/logdet: 3 coordinates per element, in element order
//      concave-modular: per element: value 0.25+U, word count 1+U%3, words
//   2. k partition matroids: block count 2+U%2, per-element blocks,
//      per-block limits 1+U%2
//   3. ell knapsack vectors: uniform costs, rescaled to mean 4/n
ProblemInstance random_instance(std::uint64_t seed, int n, int k, int ell,
                                InstanceFamily family) {
  if (n < 0 || k < 0 || ell < 0) {
    throw std::invalid_argument("random_instance: negative dimensions");
  }
  SplitMix64 rng(seed);

  std::shared_ptr<const SubmodularOracle> objective;
  switch (family) {
    case InstanceFamily::kCoverage: {
      auto adjacency = random_digraph(rng, n, n > 0 ? 3.0 / n : 0.0);
      std::vector<double> weights(n);
      for (int u = 0; u < n; ++u) weights[u] = 0.5 + rng.next_double();
      objective = std::make_shared<VertexCoverObjective>(std::move(adjacency),
                                                         std::move(weights));
      break;
    }
    case InstanceFamily::kFacility:
    case InstanceFamily::kLogDet: {
      std::vector<std::array<double, 3>> points(n);
      for (int i = 0; i < n; ++i) {
        for (int d = 0; d < 3; ++d) points[i][d] = rng.next_double();
      }
      std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
      for (int i = 0; i < n; ++i) {
        m[i * n + i] = 1.0;
        for (int j = i + 1; j < n; ++j) {
          double dist2 = 0.0;
          for (int d = 0; d < 3; ++d) {
            const double diff = points[i][d] - points[j][d];
            dist2 += diff * diff;
          }
          const double sim = std::exp(-2.0 * std::sqrt(dist2));
          m[i * n + j] = sim;
          m[j * n + i] = sim;
        }
      }
      if (family == InstanceFamily::kFacility) {
        objective = std::make_shared<FacilityLocationObjective>(n, std::move(m));
      } else {
        objective = std::make_shared<LogDetObjective>(n, std::move(m), 1.0);
      }
      break;
    }
    case InstanceFamily::kConcaveModular: {
      const int word_count = 2 * n;
      std::vector<ConcaveOverModularObjective::Entry> entries;
      for (int e = 0; e < n; ++e) {
        const double val = 0.25 + rng.next_double();
        const int count = 1 + static_cast<int>(rng.next_below(3));
        ElementSet words;
        for (int j = 0; j < count; ++j) {
          words.insert(static_cast<int>(rng.next_below(word_count)));
        }
        for (int w : words) entries.push_back({e, w, val});
      }
      objective = std::make_shared<ConcaveOverModularObjective>(n, word_count,
                                                                entries);
      break;
    }
  }

  std::vector<std::shared_ptr<const MatroidOracle>> matroids;
  for (int i = 0; i < k; ++i) {
    const int block_count = 2 + static_cast<int>(rng.next_below(2));
    std::vector<int> blocks(n);
    for (int e = 0; e < n; ++e) {
      blocks[e] = static_cast<int>(rng.next_below(block_count));
    }
    std::vector<int> limits(block_count);
    for (int b = 0; b < block_count; ++b) {
      limits[b] = 1 + static_cast<int>(rng.next_below(2));
    }
    matroids.push_back(std::make_shared<PartitionMatroid>(std::move(blocks),
                                                          std::move(limits)));
  }
  MatchoidConstraint matchoid(std::move(matroids), k);

  std::vector<std::vector<double>> costs(ell);
  for (int i = 0; i < ell; ++i) {
    costs[i].resize(n);
    double total = 0.0;
    for (int e = 0; e < n; ++e) {
      costs[i][e] = rng.next_double();
      total += costs[i][e];
    }
    if (n > 0 && total > 0.0) {
      const double scale = (4.0 / n) * n / total;  // mean becomes 4/n
      for (double& c : costs[i]) c *= scale;
    }
  }
  KnapsackSet knapsacks = KnapsackSet::from_normalized(std::move(costs));

  return ProblemInstance(GroundSet(n), std::move(objective),
                         std::move(matchoid), std::move(knapsacks));
}

}  // namespace submod
