// Copyright 2026 The Baskets Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arith.hpp"

namespace baskets::solver {

// Strictly increasing non-negative pear counts, one per basket. The
// constructor validates strict increase; the sum is the caller's N.
class PearDistribution {
 public:
  PearDistribution() = default;
  explicit PearDistribution(std::vector<std::uint64_t> counts);

  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::size_t size() const noexcept { return counts_.size(); }
  std::uint64_t total() const noexcept;

  friend bool operator==(const PearDistribution&, const PearDistribution&) = default;
  friend auto operator<=>(const PearDistribution&, const PearDistribution&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

struct Solution {
  std::uint64_t n_input = 0;
  std::uint64_t n_max = 0;
  std::uint64_t apples_per_basket = 0;
  double pear_bound = 0.0;
  double efficiency = 0.0;
  std::uint64_t surplus = 0;
  PearDistribution canonical;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// (1 + sqrt(1 + 8N)) / 2. Display and efficiency only; feasibility never
// consults it.
double pear_bound(std::uint64_t n_input);

// n distinct non-negative pear counts can sum to N iff T(n) <= N.
bool feasible(std::uint64_t baskets, std::uint64_t n_input);

// Largest feasible divisor of N, scanning the divisor list downwards.
std::uint64_t max_baskets(std::uint64_t n_input, const arith::DivisorSieve* sieve = nullptr);

// Largest divisor of N that is feasible, with its canonical distribution.
// Throws InvalidArgument for N = 0.
Solution solve(std::uint64_t n_input, const arith::DivisorSieve* sieve = nullptr);

// {0, 1, ..., n-2, (n-1) + S} with S = N - T(n). Throws DomainError when
// (baskets, N) is infeasible.
PearDistribution canonical_distribution(std::uint64_t baskets, std::uint64_t n_input);

}  // namespace baskets::solver
