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

#ifndef SUBMOD_MATCHOID_HPP_
#define SUBMOD_MATCHOID_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "submod/element_set.hpp"
#include "submod/matroid.hpp"

namespace submod {

// A k-matchoid: a list of matroids on possibly overlapping ground sets,
// where every element appears in at most k of the ground sets. A set is
// feasible iff its restriction to each N_i is independent in matroid i.
//
// An intersection of k matroids over a common ground set is the special
// case where every ground set is all of 0..n-1.
class MatchoidConstraint {
 public:
  MatchoidConstraint() = default;
  // Validates that no element appears in more than k ground sets.
  MatchoidConstraint(std::vector<std::shared_ptr<const MatroidOracle>> matroids,
                     int k);

  static int max_overlap(
      const std::vector<std::shared_ptr<const MatroidOracle>>& matroids);

  bool feasible(const ElementSet& s) const;
  int k() const { return k_; }
  int matroid_count() const { return static_cast<int>(matroids_.size()); }
  const std::vector<std::shared_ptr<const MatroidOracle>>& matroids() const {
    return matroids_;
  }

 private:
  std::vector<std::shared_ptr<const MatroidOracle>> matroids_;
  int k_ = 0;
};

// Minimum-energy removal set U_b that makes (S \ U_b) + b feasible: for each
// matroid violated by S + b, the member with the smallest delta whose swap
// restores independence (ties toward the smallest element index).
//
// Preconditions: b ∉ S, S feasible, delta[a] valid for all a ∈ S. Returns
// nullopt when some violated matroid admits no single-element swap, in which
// case b is unusable for a swap.
std::optional<ElementSet> exchange_candidate(const ElementSet& s, int b,
                                             const MatchoidConstraint& matchoid,
                                             const std::vector<double>& delta);

}  // namespace submod

#endif  // SUBMOD_MATCHOID_HPP_
