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

#include "submod/matroid.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace submod {

namespace {
ElementSet full_ground(int n) {
  if (n < 0) throw std::invalid_argument("ground size must be non-negative");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return ElementSet::from_sorted(std::move(all));
}
}  // namespace

UniformMatroid::UniformMatroid(int n, int limit)
    : UniformMatroid(full_ground(n), limit) {}

UniformMatroid::UniformMatroid(ElementSet ground, int limit)
    : ground_(std::move(ground)), limit_(limit) {
  if (limit_ < 0) {
    throw std::invalid_argument("uniform matroid limit must be non-negative");
  }
}

bool UniformMatroid::is_independent(const ElementSet& s) const {
  int in_ground = 0;
  for (int e : s) {
    if (ground_.contains(e)) ++in_ground;
  }
  return in_ground <= limit_;
}

PartitionMatroid::PartitionMatroid(std::vector<int> block,
                                   std::vector<int> limits)
    : block_(std::move(block)), limits_(std::move(limits)) {
  std::vector<int> members;
  for (int e = 0; e < static_cast<int>(block_.size()); ++e) {
    const int b = block_[e];
    if (b < 0) continue;
    if (b >= static_cast<int>(limits_.size())) {
      throw std::invalid_argument("partition matroid: element " +
                                  std::to_string(e) +
                                  " assigned to unknown block " +
                                  std::to_string(b));
    }
    members.push_back(e);
  }
  for (int l : limits_) {
    if (l < 0) {
      throw std::invalid_argument("partition matroid limits must be >= 0");
    }
  }
  ground_ = ElementSet::from_sorted(std::move(members));
}

bool PartitionMatroid::is_independent(const ElementSet& s) const {
  std::vector<int> used(limits_.size(), 0);
  for (int e : s) {
    if (e < 0 || e >= static_cast<int>(block_.size())) continue;
    const int b = block_[e];
    if (b < 0) continue;
    if (++used[b] > limits_[b]) return false;
  }
  return true;
}

FreeMatroid::FreeMatroid(int n) : ground_(full_ground(n)) {}

ContractedMatroid::ContractedMatroid(
    std::shared_ptr<const MatroidOracle> base, const ElementSet& contract_by)
    : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("ContractedMatroid: null base");
  contracted_ = contract_by.set_intersect(base_->ground());
  if (!base_->is_independent(contracted_)) {
    throw std::invalid_argument(
        "ContractedMatroid: contraction set is dependent in the base");
  }
  ground_ = base_->ground().set_minus(contracted_);
}

bool ContractedMatroid::is_independent(const ElementSet& s) const {
  return base_->is_independent(s.set_union(contracted_));
}

}  // namespace submod
