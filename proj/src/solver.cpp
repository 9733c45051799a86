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

#include "solver.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace baskets::solver {

PearDistribution::PearDistribution(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  for (std::size_t i = 1; i < counts_.size(); ++i) {
    if (counts_[i] <= counts_[i - 1]) {
      throw InvalidArgument("pear counts must be strictly increasing");
    }
  }
}

std::uint64_t PearDistribution::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

double pear_bound(std::uint64_t n_input) {
  if (n_input == 0) throw InvalidArgument("pear_bound: N must be positive");
  return (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(n_input))) / 2.0;
}

bool feasible(std::uint64_t baskets, std::uint64_t n_input) {
  if (baskets == 0 || n_input == 0) throw InvalidArgument("feasible: arguments must be positive");
  // T(n) grows past any 64-bit N long before it overflows for n < 2^32.
  if (baskets > (std::uint64_t{1} << 32)) return false;
  return arith::triangular(baskets) <= n_input;
}

PearDistribution canonical_distribution(std::uint64_t baskets, std::uint64_t n_input) {
  if (!feasible(baskets, n_input)) {
    throw DomainError(std::to_string(baskets) + " baskets cannot hold distinct pear counts summing to " +
                      std::to_string(n_input));
  }
  const std::uint64_t surplus = n_input - arith::triangular(baskets);
  std::vector<std::uint64_t> counts(baskets);
  std::iota(counts.begin(), counts.end(), std::uint64_t{0});
  counts.back() += surplus;
  return PearDistribution(std::move(counts));
}

std::uint64_t max_baskets(std::uint64_t n_input, const arith::DivisorSieve* sieve) {
  if (n_input == 0) throw InvalidArgument("solve: N must be positive");
  if (sieve != nullptr && !sieve->contains(n_input)) sieve = nullptr;

  const auto divs = arith::divisors(n_input, sieve);
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    if (feasible(*it, n_input)) return *it;
  }
  return 1;  // unreachable: 1 is always a feasible divisor
}

Solution solve(std::uint64_t n_input, const arith::DivisorSieve* sieve) {
  const std::uint64_t best = max_baskets(n_input, sieve);

  Solution s;
  s.n_input = n_input;
  s.n_max = best;
  s.apples_per_basket = n_input / best;
  s.pear_bound = pear_bound(n_input);
  s.efficiency = static_cast<double>(best) / s.pear_bound;
  s.surplus = n_input - arith::triangular(best);
  s.canonical = canonical_distribution(best, n_input);
  return s;
}

}  // namespace baskets::solver
