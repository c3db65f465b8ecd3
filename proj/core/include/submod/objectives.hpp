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

#ifndef SUBMOD_OBJECTIVES_HPP_
#define SUBMOD_OBJECTIVES_HPP_

#include <utility>
#include <vector>

#include "submod/element_set.hpp"
#include "submod/oracle.hpp"

namespace submod {

// f(S) = Σ_{u ∈ N(S) ∪ S} w_u over a directed graph, where N(S) is the set
// of vertices pointed to by S. Monotone submodular (weighted coverage).
class VertexCoverObjective final : public SubmodularOracle {
 public:
  // adjacency[u] lists the out-neighbors of u. Unit weights by default.
  explicit VertexCoverObjective(std::vector<std::vector<int>> adjacency);
  VertexCoverObjective(std::vector<std::vector<int>> adjacency,
                       std::vector<double> weights);

  double value(const ElementSet& s) const override;
  int n() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<double> weights_;
};

// f(S) = (1/n) Σ_i max_{j∈S} M_{i,j} for a non-negative similarity matrix;
// the max over an empty S is 0 so that f(∅) = 0.
class FacilityLocationObjective final : public SubmodularOracle {
 public:
  // `similarity` is row-major n×n, entries >= 0.
  FacilityLocationObjective(int n, std::vector<double> similarity);

  double value(const ElementSet& s) const override;
  int n() const { return n_; }
  const std::vector<double>& similarity() const { return m_; }

 private:
  int n_;
  std::vector<double> m_;
};

// f(S) = log det(I + α·M_S) for a symmetric PSD similarity matrix M, where
// M_S is the principal submatrix indexed by S. Evaluated with a Cholesky
// factorization of I + α·M_S; a failed pivot reports the offending index
// set instead of returning garbage.
class LogDetObjective final : public SubmodularOracle {
 public:
  LogDetObjective(int n, std::vector<double> similarity, double alpha);

  double value(const ElementSet& s) const override;
  int n() const { return n_; }
  double alpha() const { return alpha_; }
  const std::vector<double>& similarity() const { return m_; }

 private:
  int n_;
  std::vector<double> m_;
  double alpha_;
};

// f(S) = Σ_{w∈W} sqrt(Σ_{e∈S} score(w,e)): a concave function of a modular
// one, per-word. Each (element, word) pair may appear at most once.
class ConcaveOverModularObjective final : public SubmodularOracle {
 public:
  struct Entry {
    int element;
    int word;
    double score;  // >= 0
  };
  ConcaveOverModularObjective(int n, int word_count,
                              const std::vector<Entry>& entries);

  double value(const ElementSet& s) const override;
  int n() const { return n_; }
  int word_count() const { return word_count_; }
  const std::vector<std::vector<std::pair<int, double>>>& entries_by_element()
      const {
    return by_element_;
  }

 private:
  int n_;
  int word_count_;
  // Per element: (word, score) pairs sorted by word.
  std::vector<std::vector<std::pair<int, double>>> by_element_;
};

}  // namespace submod

#endif  // SUBMOD_OBJECTIVES_HPP_
