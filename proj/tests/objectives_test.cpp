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

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "submod/objectives.hpp"
#include "submod/verify.hpp"
#include "test_support.hpp"

using namespace submod;

TEST_SUITE_BEGIN("objectives");

namespace {

// Determinant by cofactor expansion: the independent oracle for log-det.
double cofactor_det(const std::vector<double>& m, std::vector<int> idx) {
  const int k = static_cast<int>(idx.size());
  if (k == 0) return 1.0;
  const int n = static_cast<int>(std::lround(std::sqrt(m.size())));
  if (k == 1) return m[idx[0] * n + idx[0]];
  double det = 0.0;
  double sign = 1.0;
  for (int c = 0; c < k; ++c) {
    std::vector<int> rows(idx.begin() + 1, idx.end());
    std::vector<int> cols;
    for (int t = 0; t < k; ++t) {
      if (t != c) cols.push_back(idx[t]);
    }
    // Build the minor as an explicit matrix in the original index space is
    // awkward; recurse on a dense copy instead.
    std::vector<double> minor(static_cast<std::size_t>(k - 1) * (k - 1));
    for (int r = 0; r < k - 1; ++r) {
      for (int s = 0; s < k - 1; ++s) {
        minor[r * (k - 1) + s] = m[rows[r] * n + cols[s]];
      }
    }
    std::vector<int> dense_idx(k - 1);
    for (int t = 0; t < k - 1; ++t) dense_idx[t] = t;
    // Recurse with the dense minor.
    det += sign * m[idx[0] * n + idx[c]] * cofactor_det(minor, dense_idx);
    sign = -sign;
  }
  return det;
}

std::vector<double> rbf_matrix(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::array<double, 2>> pts(n);
  for (auto& p : pts) p = {rng.next_double(), rng.next_double()};
  std::vector<double> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double dx = pts[i][0] - pts[j][0];
      const double dy = pts[i][1] - pts[j][1];
      m[i * n + j] = std::exp(-(dx * dx + dy * dy));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("vertex cover basics") {
  VertexCoverObjective star({{1, 2, 3}, {}, {}, {}});
  CHECK(star.value(ElementSet{}) == 0.0);
  CHECK(star.value(ElementSet{0}) == doctest::Approx(4.0));
  CHECK(star.value(ElementSet{1}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(VertexCoverObjective(std::vector<std::vector<int>>{{5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(VertexCoverObjective({{0}}, {-1.0}),
                  std::invalid_argument);
}

TEST_CASE("vertex cover equals direct union enumeration on a random digraph") {
  SplitMix64 rng(5);
  auto adjacency = random_digraph(rng, 8, 0.4);
  std::vector<double> weights(8);
  for (double& w : weights) w = 0.5 + rng.next_double();
  VertexCoverObjective f(std::vector<std::vector<int>>(adjacency), weights);

  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    ElementSet s = ElementSet::from_mask(mask, 8);
    std::set<int> covered;
    for (int u : s) {
      covered.insert(u);
      for (int v : adjacency[u]) covered.insert(v);
    }
    double expected = 0.0;
    for (int v : covered) expected += weights[v];
    CHECK(f.value(s) == doctest::Approx(expected));
  }
}

TEST_CASE("log-det basics") {
  SUBCASE("empty set") {
    LogDetObjective f(2, {1, 0, 0, 2}, 1.0);
    CHECK(f.value(ElementSet{}) == 0.0);
  }
  SUBCASE("diagonal matrix") {
    LogDetObjective f(2, {1, 0, 0, 2}, 1.0);
    CHECK(f.value(ElementSet{0, 1}) ==
          doctest::Approx(std::log(2.0) + std::log(3.0)));
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(LogDetObjective(2, {1, 0, 0, 2}, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(LogDetObjective(2, {1, 0.5, 0.1, 2}, 1.0),
                    std::invalid_argument);
  }
}

TEST_CASE("log-det matches cofactor-expansion determinants on 5x5 RBF") {
  const int n = 5;
  auto m = rbf_matrix(n, 99);
  LogDetObjective f(n, m, 1.3);
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    ElementSet s = ElementSet::from_mask(mask, n);
    std::vector<double> b(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        b[i * n + j] = (i == j ? 1.0 : 0.0) + 1.3 * m[i * n + j];
      }
    }
    const double det = cofactor_det(b, s.elements());
    CHECK(f.value(s) ==
          doctest::Approx(std::log(det)).epsilon(1e-8));
  }
}

TEST_CASE("log-det marginal gains are non-negative and match det ratios") {
  const int n = 5;
  auto m = rbf_matrix(n, 123);
  LogDetObjective f(n, m, 1.0);
  std::vector<double> b(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b[i * n + j] = (i == j ? 1.0 : 0.0) + m[i * n + j];
    }
  }
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    ElementSet s = ElementSet::from_mask(mask, n);
    for (int a = 0; a < n; ++a) {
      if (s.contains(a)) continue;
      const double gain = f.marginal(a, s);
      CHECK(gain >= -1e-9);
      const double ratio = cofactor_det(b, s.with(a).elements()) /
                           cofactor_det(b, s.elements());
      CHECK(gain == doctest::Approx(std::log(ratio)).epsilon(1e-8));
    }
  }
}

TEST_CASE("log-det reports the offending index set for non-PSD input") {
  // Symmetric but strongly negative off-diagonal: I + alpha*M_S loses
  // positive definiteness for the pair {0,1}.
  LogDetObjective f(2, {0.0, -3.0, -3.0, 0.0}, 1.0);
  CHECK_NOTHROW(f.value(ElementSet{0}));
  try {
    f.value(ElementSet{0, 1});
    FAIL("expected domain_error");
  } catch (const std::domain_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("{0,1}") != std::string::npos);
  }
}

TEST_CASE("facility location basics") {
  SUBCASE("empty set is 0") {
    FacilityLocationObjective f(2, {1, 0, 0, 1});
    CHECK(f.value(ElementSet{}) == 0.0);
  }
  SUBCASE("constant row contributes its constant") {
    FacilityLocationObjective f(2, {0.7, 0.7, 0.2, 0.9});
    CHECK(f.value(ElementSet{0}) == doctest::Approx((0.7 + 0.2) / 2));
    CHECK(f.value(ElementSet{1}) == doctest::Approx((0.7 + 0.9) / 2));
    CHECK(f.value(ElementSet{0, 1}) == doctest::Approx((0.7 + 0.9) / 2));
  }
  SUBCASE("negative similarity rejected") {
    CHECK_THROWS_AS(FacilityLocationObjective(1, {-0.1}),
                    std::invalid_argument);
  }
}

TEST_CASE("facility location equals row-wise max average on a random matrix") {
  SplitMix64 rng(77);
  const int n = 6;
  std::vector<double> m(static_cast<std::size_t>(n) * n);
  for (double& v : m) v = rng.next_double();
  FacilityLocationObjective f(n, m);
  ElementSet s{1, 4};
  double expected = 0.0;
  for (int i = 0; i < n; ++i) {
    expected += std::max(m[i * n + 1], m[i * n + 4]);
  }
  CHECK(f.value(s) == doctest::Approx(expected / n));
}

TEST_CASE("concave-over-modular basics") {
  using Entry = ConcaveOverModularObjective::Entry;
  ConcaveOverModularObjective f(
      3, 4, std::vector<Entry>{{0, 0, 4.0}, {1, 0, 5.0}, {1, 2, 9.0}});
  CHECK(f.value(ElementSet{}) == 0.0);
  CHECK(f.value(ElementSet{0}) == doctest::Approx(2.0));
  CHECK(f.value(ElementSet{1}) == doctest::Approx(std::sqrt(5.0) + 3.0));
  CHECK(f.value(ElementSet{0, 1}) == doctest::Approx(3.0 + 3.0));
  CHECK_THROWS_AS(ConcaveOverModularObjective(
                      2, 2, std::vector<Entry>{{0, 0, 1.0}, {0, 0, 2.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ConcaveOverModularObjective(
                      2, 2, std::vector<Entry>{{0, 0, -1.0}}),
                  std::invalid_argument);
}

TEST_CASE(
    "all four objective families pass the monotonicity and submodularity "
    "suites (n <= 12, 1000 trials)") {
  const InstanceFamily families[] = {
      InstanceFamily::kCoverage, InstanceFamily::kFacility,
      InstanceFamily::kLogDet, InstanceFamily::kConcaveModular};
  std::uint64_t seed = 1000;
  for (InstanceFamily family : families) {
    for (int rep = 0; rep < 2; ++rep) {
      const int n = rep == 0 ? 9 : 12;
      auto inst = random_instance(++seed, n, 1, 1, family);
      const auto mono = submod::testing::check_monotonicity(
          inst.objective(), n, 500, seed * 3 + 1);
      const auto sub = submod::testing::check_submodularity(
          inst.objective(), n, 500, seed * 3 + 2);
      CHECK(mono.trials == 500);
      CHECK(mono.violations == 0);
      CHECK(sub.trials == 500);
      CHECK(sub.violations == 0);
    }
  }
}

TEST_SUITE_END();
