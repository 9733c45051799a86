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
#include <vector>

// Brute-force reference for the basket count. Shares no code with arith or
// solver: divisors come from a direct mod scan and existence of a pear
// distribution from exhaustive subset-sum reachability.
namespace baskets::oracle {

inline constexpr std::uint64_t kMaxOracleLimit = 2000;

// exists[c] is true iff some c distinct values from {0, ..., N} sum to N.
std::vector<bool> distinct_sum_sizes(std::uint64_t n_input);

// Largest d | N for which d distinct non-negative integers summing to N
// exist. Throws CapacityError above kMaxOracleLimit.
std::uint64_t brute_force_max_baskets(std::uint64_t n_input);

struct Mismatch {
  std::uint64_t n_input;
  std::uint64_t expected;
  std::uint64_t actual;
};

// Compares brute_force_max_baskets against the solver for every N in
// [1, limit].
std::vector<Mismatch> verify(std::uint64_t limit);

}  // namespace baskets::oracle
