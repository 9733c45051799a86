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

#include "arith.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "errors.hpp"

namespace baskets::arith {
namespace {

// Enough primes that their product exceeds kMaxSieveLimit.
constexpr std::array<std::uint64_t, 11> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

struct Shaped {
  std::uint64_t value;
  std::uint64_t divisor_count;
};

// Numbers 2^a1 3^a2 5^a3 ... with a1 >= a2 >= ... Every m has a shaped
// counterpart m' <= m with d(m') = d(m), so the divisor-count records over
// all integers are exactly the records over shaped ones.
void collect_shaped(std::uint64_t limit, std::size_t prime_index, unsigned max_exponent,
                    std::uint64_t value, std::uint64_t count, std::vector<Shaped>& out) {
  out.push_back({value, count});
  if (prime_index >= kSmallPrimes.size()) return;
  const std::uint64_t p = kSmallPrimes[prime_index];
  std::uint64_t v = value;
  for (unsigned e = 1; e <= max_exponent; ++e) {
    if (v > limit / p) break;
    v *= p;
    collect_shaped(limit, prime_index + 1, e, v, count * (e + 1), out);
  }
}

std::vector<std::uint64_t> highly_composite_upto(std::uint64_t limit) {
  std::vector<Shaped> shaped;
  collect_shaped(limit, 0, std::numeric_limits<unsigned>::max(), 1, 1, shaped);
  std::sort(shaped.begin(), shaped.end(),
            [](const Shaped& a, const Shaped& b) { return a.value < b.value; });
  std::vector<std::uint64_t> records;
  std::uint64_t best = 0;
  for (const auto& s : shaped) {
    if (s.divisor_count > best) {
      best = s.divisor_count;
      records.push_back(s.value);
    }
  }
  return records;
}

std::vector<std::pair<std::uint64_t, unsigned>> trial_factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

std::vector<std::uint64_t> expand(const std::vector<std::pair<std::uint64_t, unsigned>>& factors) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw InvalidArgument(std::string(what) + ": argument must be positive");
}

}  // namespace

DivisorSieve::DivisorSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2 || limit > kMaxSieveLimit) {
    throw CapacityError("sieve limit " + std::to_string(limit) + " outside [2, " +
                        std::to_string(kMaxSieveLimit) + "]");
  }
  spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
  records_ = highly_composite_upto(limit);
}

std::uint32_t DivisorSieve::spf(std::uint64_t n) const {
  if (n < 2 || n > limit_) {
    throw CapacityError("spf(" + std::to_string(n) + ") outside sieve range [2, " +
                        std::to_string(limit_) + "]");
  }
  return spf_[n];
}

std::vector<std::pair<std::uint64_t, unsigned>> DivisorSieve::factorize(std::uint64_t n) const {
  if (!contains(n)) {
    throw CapacityError("cannot factor " + std::to_string(n) + " with sieve limit " +
                        std::to_string(limit_));
  }
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  while (n > 1) {
    const std::uint64_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  return factors;
}

DivisorList divisors(std::uint64_t n, const DivisorSieve* sieve) {
  require_positive(n, "divisors");
  auto factors = sieve != nullptr ? sieve->factorize(n) : trial_factorize(n);
  return DivisorList(n, expand(factors));
}

bool is_prime(std::uint64_t n, const DivisorSieve* sieve) {
  if (n < 2) return false;
  if (sieve != nullptr && sieve->contains(n)) return sieve->spf(n) == n;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t triangular(std::uint64_t m) {
  if (m < 2) return 0;
  // One of m, m-1 is even; halve it first so the product is exact.
  std::uint64_t a = m;
  std::uint64_t b = m - 1;
  if (a % 2 == 0) {
    a /= 2;
  } else {
    b /= 2;
  }
  if (a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw OverflowError("triangular(" + std::to_string(m) + ") overflows 64 bits");
  }
  return a * b;
}

bool is_highly_composite(std::uint64_t n, const DivisorSieve& sieve) {
  require_positive(n, "is_highly_composite");
  if (!sieve.contains(n)) {
    throw CapacityError(std::to_string(n) + " exceeds sieve limit " +
                        std::to_string(sieve.limit()));
  }
  const auto records = sieve.highly_composite();
  return std::binary_search(records.begin(), records.end(), n);
}

std::uint64_t divisor_count(std::uint64_t n, const DivisorSieve& sieve) {
  require_positive(n, "divisor_count");
  std::uint64_t count = 1;
  for (const auto& [p, e] : sieve.factorize(n)) count *= e + 1;
  return count;
}

}  // namespace baskets::arith
