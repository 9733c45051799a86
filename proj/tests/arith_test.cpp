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

#include <gtest/gtest.h>

#include <map>

#include "errors.hpp"
#include "oracles.hpp"

namespace baskets::arith {
namespace {

using Divs = std::vector<std::uint64_t>;

Divs to_vec(const DivisorList& d) { return Divs(d.begin(), d.end()); }

TEST(DivisorSieveTest, SmallestPrimeFactorsUpToTen) {
  const DivisorSieve sieve(10);
  const std::map<std::uint64_t, std::uint32_t> expected = {{2, 2}, {3, 3}, {4, 2}, {5, 5}, {6, 2},
                                                           {7, 7}, {8, 2}, {9, 3}, {10, 2}};
  for (const auto& [n, p] : expected) EXPECT_EQ(sieve.spf(n), p) << "n=" << n;
  EXPECT_EQ(sieve.limit(), 10U);
}

TEST(DivisorSieveTest, SmallestCase) {
  const DivisorSieve sieve(2);
  EXPECT_EQ(sieve.spf(2), 2U);
  EXPECT_THROW(sieve.spf(3), CapacityError);
}

TEST(DivisorSieveTest, RejectsLimitsOutsideCapacity) {
  EXPECT_THROW(DivisorSieve(0), CapacityError);
  EXPECT_THROW(DivisorSieve(1), CapacityError);
  EXPECT_THROW(DivisorSieve(kMaxSieveLimit + 1), CapacityError);
}

TEST(DivisorSieveTest, EntriesArePrimeAndDivide) {
  const DivisorSieve sieve(20'000);
  for (std::uint64_t n = 2; n <= 20'000; ++n) {
    const auto p = sieve.spf(n);
    ASSERT_EQ(n % p, 0U) << n;
    ASSERT_TRUE(testing::prime_by_scan(p)) << n;
    ASSERT_EQ(p == n, testing::prime_by_scan(n)) << n;
  }
}

TEST(DivisorsTest, Examples) {
  EXPECT_EQ(to_vec(divisors(60)), (Divs{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60}));
  EXPECT_EQ(to_vec(divisors(1)), (Divs{1}));
  EXPECT_EQ(to_vec(divisors(97)), (Divs{1, 97}));
}

TEST(DivisorsTest, RejectsZeroAndOutOfRangeSieve) {
  EXPECT_THROW(divisors(0), InvalidArgument);
  const DivisorSieve sieve(100);
  EXPECT_THROW(divisors(101, &sieve), CapacityError);
}

TEST(DivisorsTest, MatchesModScan) {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const auto d = divisors(n);
    ASSERT_EQ(to_vec(d), testing::divisors_by_scan(n)) << n;
    ASSERT_EQ(d.value(), n);
  }
}

TEST(DivisorsTest, SieveAndTrialDivisionAgree) {
  const DivisorSieve sieve(100'000);
  for (std::uint64_t n = 2; n <= 100'000; ++n) {
    ASSERT_EQ(divisors(n, &sieve), divisors(n)) << n;
  }
}

TEST(DivisorsTest, LargeValueWithoutSieve) {
  // 2^32 - 1 = 3 * 5 * 17 * 257 * 65537
  const auto d = divisors(4'294'967'295ULL);
  EXPECT_EQ(d.size(), 32U);
  EXPECT_EQ(d.divisors().front(), 1U);
  EXPECT_EQ(d.divisors().back(), 4'294'967'295ULL);
}

TEST(IsPrimeTest, Examples) {
  EXPECT_TRUE(is_prime(53));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(60));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(2'147'483'647ULL));
}

TEST(IsPrimeTest, EquivalentToTwoDivisors) {
  const DivisorSieve sieve(10'000);
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const bool two = divisors(n).size() == 2;
    ASSERT_EQ(is_prime(n), two) << n;
    ASSERT_EQ(is_prime(n, &sieve), two) << n;
  }
}

TEST(TriangularTest, Examples) {
  EXPECT_EQ(triangular(10), 45U);
  EXPECT_EQ(triangular(0), 0U);
  EXPECT_EQ(triangular(1), 0U);
  EXPECT_EQ(triangular(13), 78U);
}

TEST(TriangularTest, SuccessiveDifference) {
  for (std::uint64_t m = 0; m <= 10'000; ++m) {
    ASSERT_EQ(triangular(m + 1) - triangular(m), m) << m;
  }
}

TEST(TriangularTest, ExactUpToTwoToThe32AndReportsOverflow) {
  const std::uint64_t m = std::uint64_t{1} << 32;
  EXPECT_EQ(triangular(m), (m / 2) * (m - 1));
  EXPECT_EQ(triangular(6'074'001'000ULL), 18'446'744'070'963'499'500ULL);
  EXPECT_THROW(triangular(6'074'001'001ULL), OverflowError);
  EXPECT_THROW(triangular(UINT64_MAX), OverflowError);
}

TEST(HighlyCompositeTest, Examples) {
  const DivisorSieve sieve(200);
  EXPECT_TRUE(is_highly_composite(60, sieve));
  EXPECT_TRUE(is_highly_composite(120, sieve));
  EXPECT_TRUE(is_highly_composite(1, sieve));
  EXPECT_TRUE(is_highly_composite(2, sieve));
  EXPECT_FALSE(is_highly_composite(50, sieve));
  EXPECT_THROW(is_highly_composite(201, sieve), CapacityError);
  EXPECT_THROW(is_highly_composite(0, sieve), InvalidArgument);
}

TEST(HighlyCompositeTest, MatchesBruteForceRecordScan) {
  constexpr std::uint64_t kLimit = 10'000;
  const DivisorSieve sieve(kLimit);
  std::uint64_t best = 0;
  for (std::uint64_t n = 1; n <= kLimit; ++n) {
    const std::uint64_t d = testing::divisors_by_scan(n).size();
    const bool record = d > best;
    if (record) best = d;
    ASSERT_EQ(is_highly_composite(n, sieve), record) << n;
    ASSERT_EQ(divisor_count(n, sieve), d) << n;
  }
}

TEST(HighlyCompositeTest, KnownRecordsNearAMillion) {
  const DivisorSieve sieve(1'000'000);
  const auto records = sieve.highly_composite();
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(records.back(), 720'720U);
  EXPECT_EQ(divisor_count(720'720, sieve), 240U);
  EXPECT_EQ(records.size(), 38U);  // brute-force divisor-count scan to 10^6
}

}  // namespace
}  // namespace baskets::arith
