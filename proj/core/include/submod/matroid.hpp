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

#ifndef SUBMOD_MATROID_HPP_
#define SUBMOD_MATROID_HPP_

#include <memory>
#include <vector>

#include "submod/element_set.hpp"

namespace submod {

// Independence oracle for one matroid over its own ground set N_i.
// Implementations are immutable after construction and safe for concurrent
// queries.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;
  virtual bool is_independent(const ElementSet& s) const = 0;
  virtual const ElementSet& ground() const = 0;
};

// |S ∩ ground| ≤ limit.
class UniformMatroid final : public MatroidOracle {
 public:
  // Ground set = all of 0..n-1.
  UniformMatroid(int n, int limit);
  UniformMatroid(ElementSet ground, int limit);

  bool is_independent(const ElementSet& s) const override;
  const ElementSet& ground() const override { return ground_; }
  int limit() const { return limit_; }

 private:
  ElementSet ground_;
  int limit_;
};

// Per-block cardinality caps. block[e] = -1 leaves e outside the ground set.
class PartitionMatroid final : public MatroidOracle {
 public:
  PartitionMatroid(std::vector<int> block, std::vector<int> limits);

  bool is_independent(const ElementSet& s) const override;
  const ElementSet& ground() const override { return ground_; }
  const std::vector<int>& blocks() const { return block_; }
  const std::vector<int>& limits() const { return limits_; }

 private:
  std::vector<int> block_;
  std::vector<int> limits_;
  ElementSet ground_;
};

// Everything is independent; used to pad a matchoid up to k matroids.
class FreeMatroid final : public MatroidOracle {
 public:
  explicit FreeMatroid(int n);
  bool is_independent(const ElementSet&) const override { return true; }
  const ElementSet& ground() const override { return ground_; }

 private:
  ElementSet ground_;
};

// Contraction of a base matroid by an independent set A: ground shrinks to
// N_i \ A and S is independent iff S ∪ A is independent in the base.
class ContractedMatroid final : public MatroidOracle {
 public:
  ContractedMatroid(std::shared_ptr<const MatroidOracle> base,
                    const ElementSet& contract_by);

  bool is_independent(const ElementSet& s) const override;
  const ElementSet& ground() const override { return ground_; }

 private:
  std::shared_ptr<const MatroidOracle> base_;
  ElementSet contracted_;  // contract_by restricted to the base ground
  ElementSet ground_;
};

}  // namespace submod

#endif  // SUBMOD_MATROID_HPP_
