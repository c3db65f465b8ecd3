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

#ifndef SUBMOD_ELEMENT_SET_HPP_
#define SUBMOD_ELEMENT_SET_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace submod {

// A set of ground-set elements, stored as a sorted vector of indices.
// Iteration order is ascending, which is the global element ordering the
// prefix weights w_a are defined against.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<int> elems)
      : elems_(elems) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }
  static ElementSet from_sorted(std::vector<int> sorted_unique) {
    ElementSet s;
    s.elems_ = std::move(sorted_unique);
    return s;
  }
  // Elements of `mask` interpreted as a bitmask over indices 0..n-1.
  static ElementSet from_mask(std::uint64_t mask, int n) {
    ElementSet s;
    for (int e = 0; e < n; ++e) {
      if (mask & (std::uint64_t{1} << e)) s.elems_.push_back(e);
    }
    return s;
  }

  bool contains(int e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e);
  }
  // No-op if already present.
  void insert(int e) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    if (it == elems_.end() || *it != e) elems_.insert(it, e);
  }
  // No-op if absent.
  void erase(int e) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    if (it != elems_.end() && *it == e) elems_.erase(it);
  }
  ElementSet with(int e) const {
    ElementSet s = *this;
    s.insert(e);
    return s;
  }
  ElementSet without(int e) const {
    ElementSet s = *this;
    s.erase(e);
    return s;
  }
  ElementSet set_minus(const ElementSet& other) const {
    ElementSet s;
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(s.elems_));
    return s;
  }
  ElementSet set_union(const ElementSet& other) const {
    ElementSet s;
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                   other.elems_.end(), std::back_inserter(s.elems_));
    return s;
  }
  ElementSet set_intersect(const ElementSet& other) const {
    ElementSet s;
    std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                          other.elems_.end(), std::back_inserter(s.elems_));
    return s;
  }
  bool is_subset_of(const ElementSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(),
                         elems_.begin(), elems_.end());
  }

  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  void clear() { elems_.clear(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<int>& elements() const { return elems_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<int> elems_;
};

}  // namespace submod

#endif  // SUBMOD_ELEMENT_SET_HPP_
