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
#include <utility>
#include <vector>

namespace baskets::arith {

// Largest limit accepted by DivisorSieve.
inline constexpr std::uint64_t kMaxSieveLimit = (std::uint64_t{1} << 31) - 1;

// Smallest-prime-factor table over [2, limit], plus the highly composite
// numbers in that range. Immutable after construction; safe to share across
// threads.
class DivisorSieve {
 public:
  // Throws CapacityError when limit < 2 or limit > kMaxSieveLimit.
  explicit DivisorSieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

  // Smallest prime factor of n, for 2 <= n <= limit().
  std::uint32_t spf(std::uint64_t n) const;

  bool contains(std::uint64_t n) const noexcept { return n >= 1 && n <= limit_; }

  // (prime, exponent) pairs in ascending prime order; empty for n = 1.
  std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) const;

  // Highly composite numbers <= limit(), ascending.
  std::span<const std::uint64_t> highly_composite() const noexcept { return records_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint64_t> records_;
};

// Sorted divisors of a positive integer.
class DivisorList {
 public:
  DivisorList(std::uint64_t value, std::vector<std::uint64_t> divisors)
      : value_(value), divisors_(std::move(divisors)) {}

  std::uint64_t value() const noexcept { return value_; }
  std::span<const std::uint64_t> divisors() const noexcept { return divisors_; }
  std::size_t size() const noexcept { return divisors_.size(); }

  auto begin() const noexcept { return divisors_.begin(); }
  auto end() const noexcept { return divisors_.end(); }
  auto rbegin() const noexcept { return divisors_.rbegin(); }
  auto rend() const noexcept { return divisors_.rend(); }

  friend bool operator==(const DivisorList&, const DivisorList&) = default;

 private:
  std::uint64_t value_;
  std::vector<std::uint64_t> divisors_;
};

// Factor through the sieve when one is given and covers n, otherwise trial
// division up to sqrt(n). Throws InvalidArgument for n = 0 and
// CapacityError when a sieve is given but n exceeds its limit.
DivisorList divisors(std::uint64_t n, const DivisorSieve* sieve = nullptr);

bool is_prime(std::uint64_t n, const DivisorSieve* sieve = nullptr);

// m(m-1)/2, the sum 0 + 1 + ... + (m-1). Throws OverflowError when the
// result does not fit in 64 bits.
std::uint64_t triangular(std::uint64_t m);

// True iff n has strictly more divisors than every smaller positive integer.
bool is_highly_composite(std::uint64_t n, const DivisorSieve& sieve);

// Number of divisors of n, via the sieve.
std::uint64_t divisor_count(std::uint64_t n, const DivisorSieve& sieve);

}  // namespace baskets::arith
