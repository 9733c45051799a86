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
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arith.hpp"
#include "solver.hpp"

namespace baskets::census {

// Listed in display precedence order.
enum class DisplayClass { kPerfect, kPrime, kNearPerfect, kHighlyComposite, kPlain };

std::string_view to_string(DisplayClass c) noexcept;

struct ClassificationFlags {
  bool perfect = false;
  bool prime = false;
  bool near_perfect = false;
  bool highly_composite = false;
  DisplayClass display_class = DisplayClass::kPlain;

  friend bool operator==(const ClassificationFlags&, const ClassificationFlags&) = default;
};

ClassificationFlags classify(const solver::Solution& solution, const arith::DivisorSieve& sieve);

// Same flags from (N, n_max) alone; the sweep uses this to avoid building
// canonical distributions. n_max must be solve(N).n_max.
ClassificationFlags classify(std::uint64_t n_input, std::uint64_t n_max,
                             const arith::DivisorSieve& sieve);

// n_max / pear_bound(N) > 0.9, decided in integers.
bool efficiency_exceeds_nine_tenths(std::uint64_t n_input, std::uint64_t n_max);

using BigCount = boost::multiprecision::cpp_int;

struct DistributionCount {
  std::uint64_t n_baskets = 0;
  std::uint64_t n_input = 0;
  BigCount count;
};

// Number of sets of n distinct non-negative integers summing to N, i.e. the
// partitions of S = N - T(n) into at most n parts. O(S * min(n, S)).
// Throws DomainError when (n, N) is infeasible.
DistributionCount count_distributions(std::uint64_t baskets, std::uint64_t n_input);

// Valid distributions in lexicographic order, at most `limit` of them.
std::vector<solver::PearDistribution> enumerate_distributions(std::uint64_t baskets,
                                                              std::uint64_t n_input,
                                                              std::uint64_t limit);

struct PerfectValue {
  std::uint64_t n_input;
  std::uint64_t n_max;

  friend bool operator==(const PerfectValue&, const PerfectValue&) = default;
};

// N = T(n) for odd n >= 3, N <= limit, ascending.
std::vector<PerfectValue> perfect_values(std::uint64_t limit);

}  // namespace baskets::census
