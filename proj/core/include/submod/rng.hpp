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

#ifndef SUBMOD_RNG_HPP_
#define SUBMOD_RNG_HPP_

#include <cstdint>

namespace submod {

// SplitMix64: 64-bit state advanced by the golden-gamma constant, output
// mixed with two xor-shift-multiply rounds. Fully specified here so that
// fixtures generated from a seed are reproducible in any language:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// next_double() takes the top 53 bits: (next_u64() >> 11) * 2^-53, uniform
// in [0, 1). next_below(m) is next_u64() % m (the modulo bias is irrelevant
// at the moduli used here).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  std::uint64_t next_below(std::uint64_t m) { return next_u64() % m; }

 private:
  std::uint64_t state_;
};

}  // namespace submod

#endif  // SUBMOD_RNG_HPP_
