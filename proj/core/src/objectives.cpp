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

#include "submod/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace submod {

VertexCoverObjective::VertexCoverObjective(
    std::vector<std::vector<int>> adjacency)
    : VertexCoverObjective(std::move(adjacency), {}) {}

VertexCoverObjective::VertexCoverObjective(
    std::vector<std::vector<int>> adjacency, std::vector<double> weights)
    : adjacency_(std::move(adjacency)), weights_(std::move(weights)) {
  const int n = static_cast<int>(adjacency_.size());
  if (weights_.empty()) weights_.assign(n, 1.0);
  if (static_cast<int>(weights_.size()) != n) {
    throw std::invalid_argument("vertex cover: weight count != vertex count");
  }
  for (double w : weights_) {
    if (w < 0.0) throw std::invalid_argument("vertex cover: negative weight");
  }
  for (const auto& neighbors : adjacency_) {
    for (int v : neighbors) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("vertex cover: arc target " +
                                    std::to_string(v) + " out of range");
      }
    }
  }
}

double VertexCoverObjective::value(const ElementSet& s) const {
  std::vector<char> covered(adjacency_.size(), 0);
  for (int u : s) {
    covered[u] = 1;
    for (int v : adjacency_[u]) covered[v] = 1;
  }
  double total = 0.0;
  for (std::size_t v = 0; v < covered.size(); ++v) {
    if (covered[v]) total += weights_[v];
  }
  return total;
}

FacilityLocationObjective::FacilityLocationObjective(
    int n, std::vector<double> similarity)
    : n_(n), m_(std::move(similarity)) {
  if (n_ < 0 || static_cast<int>(m_.size()) != n_ * n_) {
    throw std::invalid_argument("facility location: matrix is not n x n");
  }
  for (double v : m_) {
    if (v < 0.0) {
      throw std::invalid_argument("facility location: negative similarity");
    }
  }
}

double FacilityLocationObjective::value(const ElementSet& s) const {
  if (n_ == 0 || s.empty()) return 0.0;
  double total = 0.0;
  for (int i = 0; i < n_; ++i) {
    double best = 0.0;  // empty max is 0
    for (int j : s) best = std::max(best, m_[i * n_ + j]);
    total += best;
  }
  return total / n_;
}

LogDetObjective::LogDetObjective(int n, std::vector<double> similarity,
                                 double alpha)
    : n_(n), m_(std::move(similarity)), alpha_(alpha) {
  if (n_ < 0 || static_cast<int>(m_.size()) != n_ * n_) {
    throw std::invalid_argument("log-det: matrix is not n x n");
  }
  if (!(alpha_ > 0.0)) {
    throw std::invalid_argument("log-det: alpha must be positive");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (std::abs(m_[i * n_ + j] - m_[j * n_ + i]) > 1e-9) {
        throw std::invalid_argument("log-det: similarity matrix not symmetric");
      }
    }
  }
}

double LogDetObjective::value(const ElementSet& s) const {
  const int m = s.size();
  if (m == 0) return 0.0;
  const auto& idx = s.elements();

  // In-place Cholesky of B = I + alpha * M_S (lower triangle).
  std::vector<double> b(static_cast<std::size_t>(m) * m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c <= r; ++c) {
      double v = alpha_ * m_[idx[r] * n_ + idx[c]];
      if (r == c) v += 1.0;
      b[r * m + c] = v;
    }
  }
  double logdet = 0.0;
  for (int j = 0; j < m; ++j) {
    double pivot = b[j * m + j];
    for (int t = 0; t < j; ++t) pivot -= b[j * m + t] * b[j * m + t];
    if (pivot <= 1e-12) {
      std::ostringstream msg;
      msg << "log-det: I + alpha*M_S is not positive definite for S={";
      for (int t = 0; t < m; ++t) msg << (t ? "," : "") << idx[t];
      msg << "} (pivot " << pivot << " at position " << j << ")";
      throw std::domain_error(msg.str());
    }
    const double root = std::sqrt(pivot);
    b[j * m + j] = root;
    logdet += 2.0 * std::log(root);
    for (int r = j + 1; r < m; ++r) {
      double v = b[r * m + j];
      for (int t = 0; t < j; ++t) v -= b[r * m + t] * b[j * m + t];
      b[r * m + j] = v / root;
    }
  }
  return logdet;
}

ConcaveOverModularObjective::ConcaveOverModularObjective(
    int n, int word_count, const std::vector<Entry>& entries)
    : n_(n), word_count_(word_count), by_element_(std::max(n, 0)) {
  if (n_ < 0 || word_count_ < 0) {
    throw std::invalid_argument("concave-modular: negative dimensions");
  }
  for (const Entry& e : entries) {
    if (e.element < 0 || e.element >= n_) {
      throw std::invalid_argument("concave-modular: element out of range");
    }
    if (e.word < 0 || e.word >= word_count_) {
      throw std::invalid_argument("concave-modular: word out of range");
    }
    if (e.score < 0.0) {
      throw std::invalid_argument("concave-modular: negative score");
    }
    by_element_[e.element].emplace_back(e.word, e.score);
  }
  for (auto& list : by_element_) {
    std::sort(list.begin(), list.end());
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].first == list[i - 1].first) {
        throw std::invalid_argument(
            "concave-modular: duplicate (element, word) pair for word " +
            std::to_string(list[i].first));
      }
    }
  }
}

double ConcaveOverModularObjective::value(const ElementSet& s) const {
  std::vector<double> word_sum(word_count_, 0.0);
  for (int e : s) {
    for (const auto& [word, score] : by_element_[e]) word_sum[word] += score;
  }
  double total = 0.0;
  for (double v : word_sum) {
    if (v > 0.0) total += std::sqrt(v);
  }
  return total;
}

}  // namespace submod
