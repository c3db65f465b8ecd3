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

#include "submod/matchoid.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace submod {

MatchoidConstraint::MatchoidConstraint(
    std::vector<std::shared_ptr<const MatroidOracle>> matroids, int k)
    : matroids_(std::move(matroids)), k_(k) {
  if (k_ < 0) throw std::invalid_argument("matchoid k must be non-negative");
  for (const auto& m : matroids_) {
    if (!m) throw std::invalid_argument("matchoid: null matroid oracle");
  }
  const int overlap = max_overlap(matroids_);
  if (overlap > k_) {
    throw std::invalid_argument(
        "matchoid: an element appears in " + std::to_string(overlap) +
        " ground sets, more than k=" + std::to_string(k_));
  }
}

int MatchoidConstraint::max_overlap(
    const std::vector<std::shared_ptr<const MatroidOracle>>& matroids) {
  std::unordered_map<int, int> count;
  int overlap = 0;
  for (const auto& m : matroids) {
    for (int e : m->ground()) {
      overlap = std::max(overlap, ++count[e]);
    }
  }
  return overlap;
}

bool MatchoidConstraint::feasible(const ElementSet& s) const {
  for (const auto& m : matroids_) {
    if (!m->is_independent(s.set_intersect(m->ground()))) return false;
  }
  return true;
}

std::optional<ElementSet> exchange_candidate(
    const ElementSet& s, int b, const MatchoidConstraint& matchoid,
    const std::vector<double>& delta) {
  ElementSet removals;
  for (const auto& m : matchoid.matroids()) {
    if (!m->ground().contains(b)) continue;
    ElementSet restricted = s.set_intersect(m->ground());
    restricted.insert(b);
    if (m->is_independent(restricted)) continue;

    // Smallest-delta member whose removal restores independence. Only
    // members of this matroid's ground can help.
    int best = -1;
    double best_delta = 0.0;
    for (int a : s) {
      if (!m->ground().contains(a)) continue;
      ElementSet swapped = restricted.without(a);
      if (!m->is_independent(swapped)) continue;
      if (best < 0 || delta[a] < best_delta) {
        best = a;
        best_delta = delta[a];
      }
    }
    if (best < 0) return std::nullopt;  // b cannot be exchanged into matroid i
    removals.insert(best);
  }
  return removals;
}

}  // namespace submod
