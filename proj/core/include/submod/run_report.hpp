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

#ifndef SUBMOD_RUN_REPORT_HPP_
#define SUBMOD_RUN_REPORT_HPP_

#include <cstdint>
#include <string>

#include "submod/element_set.hpp"

namespace submod {

// Outcome of one algorithm run on one instance.
struct RunReport {
  std::string algorithm;
  double epsilon = 0.0;
  double lambda = 0.0;
  double omega = 0.0;  // winning guess, 0 when the algorithm uses no grid
  ElementSet set;
  double objective = 0.0;
  bool feasible = false;
  std::int64_t oracle_calls = 0;
  double wall_ms = 0.0;
};

}  // namespace submod

#endif  // SUBMOD_RUN_REPORT_HPP_
