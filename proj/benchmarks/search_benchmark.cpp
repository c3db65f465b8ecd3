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

#include <benchmark/benchmark.h>

#include "submod/barrier.hpp"
#include "submod/baselines.hpp"
#include "submod/rng.hpp"
#include "submod/verify.hpp"

namespace {

using namespace submod;

ProblemInstance coverage_instance(int n) {
  return random_instance(/*seed=*/17, n, /*k=*/2, /*ell=*/1,
                         InstanceFamily::kCoverage);
}

void BM_CoverageValue(benchmark::State& state) {
  auto inst = coverage_instance(static_cast<int>(state.range(0)));
  SplitMix64 rng(3);
  ElementSet s;
  for (int e = 0; e < inst.n(); e += 3) s.insert(e);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inst.objective().value(s));
  }
}
BENCHMARK(BM_CoverageValue)->Arg(64)->Arg(256)->Arg(1024);

void BM_LogDetValue(benchmark::State& state) {
  auto inst = random_instance(21, 64, 1, 1, InstanceFamily::kLogDet);
  ElementSet s;
  for (int e = 0; e < static_cast<int>(state.range(0)); ++e) s.insert(e * 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inst.objective().value(s));
  }
}
BENCHMARK(BM_LogDetValue)->Arg(4)->Arg(16)->Arg(32);

void BM_ExchangeCandidate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto inst = coverage_instance(n);
  std::vector<double> delta(n, 0.0);
  SplitMix64 rng(5);
  for (double& d : delta) d = rng.next_double();
  ElementSet s;
  for (int e = 0; e < n && s.size() < 6; ++e) {
    if (inst.matchoid().feasible(s.with(e))) s.insert(e);
  }
  int b = 0;
  while (s.contains(b)) ++b;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exchange_candidate(s, b, inst.matchoid(), delta));
  }
}
BENCHMARK(BM_ExchangeCandidate)->Arg(64)->Arg(256);

void BM_BarrierGreedy(benchmark::State& state) {
  auto inst = coverage_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(barrier_greedy(inst, 0.2));
  }
}
BENCHMARK(BM_BarrierGreedy)->Arg(32)->Arg(64)->Arg(128)
    ->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state) {
  auto inst = coverage_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy(inst));
  }
}
BENCHMARK(BM_Greedy)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
