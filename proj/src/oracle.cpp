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

#include "oracle.hpp"

#include <string>

#include "errors.hpp"
#include "solver.hpp"

namespace baskets::oracle {
namespace {

// Fixed-width bitset over sums 0..N.
class SumSet {
 public:
  explicit SumSet(std::uint64_t max_sum) : bits_(max_sum + 1), words_(max_sum / 64 + 1, 0) {}

  void set(std::uint64_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::uint64_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  // *this |= other << shift, truncated to the set's width.
  void or_shifted(const SumSet& other, std::uint64_t shift) {
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    for (std::size_t i = words_.size(); i-- > word_shift;) {
      const std::size_t src = i - word_shift;
      std::uint64_t v = other.words_[src] << bit_shift;
      if (bit_shift != 0 && src > 0) v |= other.words_[src - 1] >> (64 - bit_shift);
      words_[i] |= v;
    }
    const unsigned tail = bits_ % 64;
    if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

 private:
  std::uint64_t bits_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

std::vector<bool> distinct_sum_sizes(std::uint64_t n_input) {
  // reach[c] = sums attainable with c distinct values among those seen so far.
  std::vector<SumSet> reach;
  reach.emplace_back(n_input);
  reach[0].set(0);
  for (std::uint64_t value = 0; value <= n_input; ++value) {
    // Grow a row only once the previous one became non-empty.
    if (!reach.back().empty()) reach.emplace_back(n_input);
    for (std::size_t c = reach.size() - 1; c >= 1; --c) {
      reach[c].or_shifted(reach[c - 1], value);
    }
  }
  std::vector<bool> exists(reach.size());
  for (std::size_t c = 0; c < reach.size(); ++c) exists[c] = reach[c].test(n_input);
  return exists;
}

std::uint64_t brute_force_max_baskets(std::uint64_t n_input) {
  if (n_input == 0) throw InvalidArgument("oracle: N must be positive");
  if (n_input > kMaxOracleLimit) {
    throw CapacityError("oracle: N = " + std::to_string(n_input) + " above guard " +
                        std::to_string(kMaxOracleLimit));
  }
  const auto exists = distinct_sum_sizes(n_input);
  for (std::uint64_t d = n_input; d >= 1; --d) {
    if (n_input % d != 0) continue;
    if (d < exists.size() && exists[d]) return d;
  }
  return 0;
}

std::vector<Mismatch> verify(std::uint64_t limit) {
  if (limit == 0 || limit > kMaxOracleLimit) {
    throw CapacityError("oracle limit must be in [1, " + std::to_string(kMaxOracleLimit) + "]");
  }
  std::vector<Mismatch> out;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const auto expected = brute_force_max_baskets(n);
    const auto actual = solver::solve(n).n_max;
    if (expected != actual) out.push_back({n, expected, actual});
  }
  return out;
}

}  // namespace baskets::oracle
