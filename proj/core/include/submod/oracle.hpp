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

#ifndef SUBMOD_ORACLE_HPP_
#define SUBMOD_ORACLE_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include "submod/element_set.hpp"

namespace submod {

// Value oracle for a non-negative set function. Implementations must be
// immutable after construction so concurrent value queries are safe.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;
  virtual double value(const ElementSet& s) const = 0;
  // f(S+a) - f(S). Implementations may override with something cheaper.
  virtual double marginal(int a, const ElementSet& s) const {
    return value(s.with(a)) - value(s);
  }
};

// Wraps an oracle and counts value queries; the count is the benchmark
// currency. Negative oracle values violate the input contract and are
// reported as an error rather than clamped.
class CountingOracle final : public SubmodularOracle {
 public:
  explicit CountingOracle(std::shared_ptr<const SubmodularOracle> inner)
      : inner_(std::move(inner)) {
    if (!inner_) throw std::invalid_argument("CountingOracle: null oracle");
  }

  double value(const ElementSet& s) const override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    const double v = inner_->value(s);
    if (v < 0.0) {
      throw std::domain_error("oracle returned negative value " +
                              std::to_string(v));
    }
    return v;
  }

  std::int64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  std::shared_ptr<const SubmodularOracle> inner_;
  mutable std::atomic<std::int64_t> calls_{0};
};

}  // namespace submod

#endif  // SUBMOD_ORACLE_HPP_
