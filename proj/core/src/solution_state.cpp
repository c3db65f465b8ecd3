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

#include "submod/solution_state.hpp"

#include <stdexcept>
#include <string>

namespace submod {

void rebuild_weights(SolutionState& state, const SubmodularOracle& oracle) {
  if (!state.set.empty()) {
    const int max_elem = state.set.elements().back();
    if (static_cast<int>(state.weight.size()) <= max_elem) {
      state.weight.resize(max_elem + 1, 0.0);
    }
  }
  ElementSet prefix;
  double prev = oracle.value(prefix);
  state.fval = prev;
  for (int a : state.set) {
    prefix.insert(a);
    const double cur = oracle.value(prefix);
    state.weight[a] = cur - prev;
    prev = cur;
  }
  state.fval = prev;
}

double marginal_gain(int b, const SolutionState& state,
                     const SubmodularOracle& oracle) {
  if (state.set.contains(b)) {
    throw std::invalid_argument("marginal_gain: element " + std::to_string(b) +
                                " already in solution");
  }
  return oracle.value(state.set.with(b)) - state.fval;
}

}  // namespace submod
