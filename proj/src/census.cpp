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

#include "census.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace baskets::census {
namespace {

__extension__ using u128 = unsigned __int128;

void require_feasible(std::uint64_t baskets, std::uint64_t n_input) {
  if (!solver::feasible(baskets, n_input)) {
    throw DomainError(std::to_string(baskets) + " baskets cannot hold distinct pear counts summing to " +
                      std::to_string(n_input));
  }
}

DisplayClass display_class_of(const ClassificationFlags& f) {
  if (f.perfect) return DisplayClass::kPerfect;
  if (f.prime) return DisplayClass::kPrime;
  if (f.near_perfect) return DisplayClass::kNearPerfect;
  if (f.highly_composite) return DisplayClass::kHighlyComposite;
  return DisplayClass::kPlain;
}

// Depth-first walk over strictly increasing sequences. `remaining` is the sum
// still to place over `slots` values, all of which must be >= `lowest`.
void enumerate(std::uint64_t lowest, std::uint64_t slots, std::uint64_t remaining,
               std::vector<std::uint64_t>& prefix, std::uint64_t limit,
               std::vector<solver::PearDistribution>& out) {
  if (out.size() >= limit) return;
  if (slots == 1) {
    if (remaining >= lowest) {
      prefix.push_back(remaining);
      out.emplace_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  // After choosing v, the other k = slots-1 values are at least v+1..v+k.
  const std::uint64_t k = slots - 1;
  const std::uint64_t tail_floor = arith::triangular(k + 1);  // 1 + 2 + ... + k
  if (remaining < tail_floor) return;
  const std::uint64_t highest = (remaining - tail_floor) / (k + 1);
  for (std::uint64_t v = lowest; v <= highest && out.size() < limit; ++v) {
    prefix.push_back(v);
    enumerate(v + 1, k, remaining - v, prefix, limit, out);
    prefix.pop_back();
  }
}

}  // namespace

std::string_view to_string(DisplayClass c) noexcept {
  switch (c) {
    case DisplayClass::kPerfect:
      return "perfect";
    case DisplayClass::kPrime:
      return "prime";
    case DisplayClass::kNearPerfect:
      return "near_perfect";
    case DisplayClass::kHighlyComposite:
      return "highly_composite";
    case DisplayClass::kPlain:
      break;
  }
  return "plain";
}

bool efficiency_exceeds_nine_tenths(std::uint64_t n_input, std::uint64_t n_max) {
  // 2n / (1 + sqrt(1+8N)) > 9/10  <=>  20n - 9 > 9 sqrt(1+8N)
  const u128 lhs = u128{20} * n_max;
  if (lhs <= 9) return false;
  const u128 diff = lhs - 9;
  return diff * diff > u128{81} * (u128{8} * n_input + 1);
}

ClassificationFlags classify(std::uint64_t n_input, std::uint64_t n_max,
                             const arith::DivisorSieve& sieve) {
  if (!sieve.contains(n_input)) {
    throw CapacityError("classify: " + std::to_string(n_input) + " exceeds sieve limit " +
                        std::to_string(sieve.limit()));
  }
  ClassificationFlags f;
  f.perfect = n_max % 2 == 1 && u128{2} * n_input == u128{n_max} * (n_max - 1);
  f.prime = arith::is_prime(n_input, &sieve);
  f.near_perfect = !f.perfect && efficiency_exceeds_nine_tenths(n_input, n_max);
  f.highly_composite = arith::is_highly_composite(n_input, sieve);
  f.display_class = display_class_of(f);
  return f;
}

ClassificationFlags classify(const solver::Solution& solution, const arith::DivisorSieve& sieve) {
  return classify(solution.n_input, solution.n_max, sieve);
}

DistributionCount count_distributions(std::uint64_t baskets, std::uint64_t n_input) {
  require_feasible(baskets, n_input);
  const std::uint64_t surplus = n_input - arith::triangular(baskets);

  // Partitions of S into parts of size <= n (conjugate of "at most n parts").
  std::vector<BigCount> ways(surplus + 1);
  ways[0] = 1;
  const std::uint64_t largest_part = std::min(baskets, surplus);
  for (std::uint64_t part = 1; part <= largest_part; ++part) {
    for (std::uint64_t s = part; s <= surplus; ++s) ways[s] += ways[s - part];
  }
  return DistributionCount{baskets, n_input, std::move(ways[surplus])};
}

std::vector<solver::PearDistribution> enumerate_distributions(std::uint64_t baskets,
                                                              std::uint64_t n_input,
                                                              std::uint64_t limit) {
  require_feasible(baskets, n_input);
  if (limit == 0) throw InvalidArgument("enumerate_distributions: limit must be positive");
  std::vector<solver::PearDistribution> out;
  std::vector<std::uint64_t> prefix;
  prefix.reserve(baskets);
  enumerate(0, baskets, n_input, prefix, limit, out);
  return out;
}

std::vector<PerfectValue> perfect_values(std::uint64_t limit) {
  if (limit == 0) throw InvalidArgument("perfect_values: limit must be positive");
  std::vector<PerfectValue> out;
  for (std::uint64_t n = 3; n <= (std::uint64_t{1} << 32); n += 2) {
    const std::uint64_t t = arith::triangular(n);
    if (t > limit) break;
    out.push_back({t, n});
  }
  return out;
}

}  // namespace baskets::census
