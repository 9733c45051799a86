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

#include <gtest/gtest.h>

#include <algorithm>
#include <iostream>
#include <map>

#include "errors.hpp"
#include "oracles.hpp"

namespace baskets::census {
namespace {

using Counts = std::vector<std::uint64_t>;

ClassificationFlags classify_n(std::uint64_t n, const arith::DivisorSieve& sieve) {
  return classify(solver::solve(n), sieve);
}

TEST(ClassifyTest, Examples) {
  const arith::DivisorSieve sieve(100);

  const auto f36 = classify_n(36, sieve);
  EXPECT_TRUE(f36.perfect);
  EXPECT_EQ(f36.display_class, DisplayClass::kPerfect);

  const auto f53 = classify_n(53, sieve);
  EXPECT_TRUE(f53.prime);
  EXPECT_FALSE(f53.perfect);
  EXPECT_EQ(f53.display_class, DisplayClass::kPrime);

  const auto f50 = classify_n(50, sieve);
  EXPECT_TRUE(f50.near_perfect);
  EXPECT_EQ(f50.display_class, DisplayClass::kNearPerfect);

  const auto f3 = classify_n(3, sieve);
  EXPECT_TRUE(f3.perfect);
  EXPECT_TRUE(f3.prime);
  EXPECT_FALSE(f3.near_perfect);
  EXPECT_EQ(f3.display_class, DisplayClass::kPerfect);

  const auto f60 = classify_n(60, sieve);
  EXPECT_TRUE(f60.highly_composite);
  EXPECT_FALSE(f60.near_perfect);  // 0.87
  EXPECT_EQ(f60.display_class, DisplayClass::kHighlyComposite);

  const auto f1 = classify_n(1, sieve);
  EXPECT_FALSE(f1.prime);
  EXPECT_EQ(f1.display_class, DisplayClass::kHighlyComposite);

  EXPECT_EQ(classify_n(14, sieve).display_class, DisplayClass::kPlain);
}

TEST(ClassifyTest, NinetyPercentIsNotNearPerfect) {
  // N = 45: n = 9, bound exactly 10.
  const arith::DivisorSieve sieve(100);
  EXPECT_FALSE(classify_n(45, sieve).near_perfect);
  EXPECT_TRUE(classify_n(66, sieve).near_perfect);
}

TEST(ClassifyTest, RequiresSieveCoverage) {
  const arith::DivisorSieve sieve(10);
  EXPECT_THROW(classify_n(11, sieve), CapacityError);
}

TEST(ClassifyProperty, FlagInvariantsUpTo10k) {
  constexpr std::uint64_t kLimit = 10'000;
  const arith::DivisorSieve sieve(kLimit);
  const auto perfect = perfect_values(kLimit);
  std::map<std::uint64_t, std::uint64_t> perfect_map;
  for (const auto& p : perfect) perfect_map[p.n_input] = p.n_max;

  for (std::uint64_t n = 1; n <= kLimit; ++n) {
    const auto s = solver::solve(n, &sieve);
    const auto f = classify(s, sieve);
    ASSERT_EQ(f.perfect, perfect_map.count(n) == 1) << n;
    if (f.perfect) {
      ASSERT_EQ(2 * n, s.n_max * (s.n_max - 1));
      ASSERT_EQ(s.n_max % 2, 1U);
      ASSERT_EQ(s.surplus, 0U);
      ASSERT_EQ(perfect_map[n], s.n_max);
      ASSERT_EQ(count_distributions(s.n_max, n).count, 1);
    }
    // Integer decision agrees with the floating-point ratio away from ties.
    if (std::abs(s.efficiency - 0.9) > 1e-12) {
      ASSERT_EQ(efficiency_exceeds_nine_tenths(n, s.n_max), s.efficiency > 0.9) << n;
    }
    if (f.near_perfect) ASSERT_FALSE(f.perfect);
    ASSERT_EQ(f.prime, testing::prime_by_scan(n)) << n;

    DisplayClass expected = DisplayClass::kPlain;
    if (f.highly_composite) expected = DisplayClass::kHighlyComposite;
    if (f.near_perfect) expected = DisplayClass::kNearPerfect;
    if (f.prime) expected = DisplayClass::kPrime;
    if (f.perfect) expected = DisplayClass::kPerfect;
    ASSERT_EQ(f.display_class, expected) << n;
  }
}

TEST(PrimeFloorProperty, PrimesAtLeastFiveHaveOneBasket) {
  for (std::uint64_t p = 2; p <= 10'000; ++p) {
    if (!testing::prime_by_scan(p)) continue;
    const auto m = solver::solve(p).n_max;
    if (p < 5) {
      ASSERT_EQ(m, p);
    } else {
      ASSERT_EQ(m, 1U) << p;
    }
  }
}

TEST(CountDistributionsTest, Examples) {
  EXPECT_EQ(count_distributions(2, 3).count, 2);
  EXPECT_EQ(count_distributions(3, 6).count, 3);
  EXPECT_EQ(count_distributions(1, 1).count, 1);
  EXPECT_EQ(count_distributions(1, 999).count, 1);
  EXPECT_EQ(count_distributions(10, 60).count, 164);  // exhaustive enumeration, frozen
  // Zero surplus leaves only {0, 1, ..., n-1}.
  for (std::uint64_t n = 2; n <= 60; ++n) {
    EXPECT_EQ(count_distributions(n, arith::triangular(n)).count, 1) << n;
  }
}

TEST(CountDistributionsTest, InfeasibleIsDomainError) {
  EXPECT_THROW(count_distributions(12, 60), DomainError);
  EXPECT_THROW(enumerate_distributions(12, 60, 5), DomainError);
}

TEST(CountDistributionsTest, ExceedsSixtyFourBits) {
  // p(500) = 2300165032574323995027 partitions; S = 500 with n >= 500.
  const auto c = count_distributions(1000, arith::triangular(1000) + 500);
  EXPECT_EQ(c.count.str(), "2300165032574323995027");
}

TEST(CountProperty, DynamicProgramMatchesEnumeration) {
  for (std::uint64_t total = 1; total <= 40; ++total) {
    std::map<std::size_t, std::uint64_t> by_size;
    testing::for_each_distinct_set(total, [&](const Counts& s) { ++by_size[s.size()]; });
    for (std::uint64_t n = 1; solver::feasible(n, total); ++n) {
      ASSERT_EQ(count_distributions(n, total).count, by_size[n]) << "n=" << n << " N=" << total;
    }
  }
}

TEST(CountProperty, NonDecreasingInN) {
  std::uint64_t strict = 0, flat = 0;
  for (std::uint64_t n = 1; n <= 16; ++n) {
    for (std::uint64_t total = std::max<std::uint64_t>(arith::triangular(n), 1); total < 200; ++total) {
      const auto a = count_distributions(n, total).count;
      const auto b = count_distributions(n, total + 1).count;
      ASSERT_GE(b, a) << "n=" << n << " N=" << total;
      if (n >= 2 && total + 1 > arith::triangular(n)) (b > a ? strict : flat) += 1;
    }
  }
  // Strict growth is observed, not required.
  std::cout << "[strictness] n>=2, S>=1 steps: strict=" << strict << " flat=" << flat << '\n';
}

TEST(EnumerateTest, Examples) {
  const auto a = enumerate_distributions(2, 3, 10);
  ASSERT_EQ(a.size(), 2U);
  EXPECT_EQ(a[0], solver::PearDistribution(Counts{0, 3}));
  EXPECT_EQ(a[1], solver::PearDistribution(Counts{1, 2}));

  const auto b = enumerate_distributions(5, 10, 10);
  ASSERT_EQ(b.size(), 1U);
  EXPECT_EQ(b[0], solver::PearDistribution(Counts{0, 1, 2, 3, 4}));

  const auto c = enumerate_distributions(10, 60, 3);
  ASSERT_EQ(c.size(), 3U);
  EXPECT_EQ(c[0], solver::PearDistribution(Counts{0, 1, 2, 3, 4, 5, 6, 7, 8, 24}));
  EXPECT_EQ(c[1], solver::PearDistribution(Counts{0, 1, 2, 3, 4, 5, 6, 7, 9, 23}));
  EXPECT_EQ(c[2], solver::PearDistribution(Counts{0, 1, 2, 3, 4, 5, 6, 7, 10, 22}));

  const auto all = enumerate_distributions(10, 60, 1000);
  EXPECT_EQ(all.size(), 164U);
  EXPECT_THROW(enumerate_distributions(2, 3, 0), InvalidArgument);
}

TEST(EnumerateProperty, MatchesEnumerationOracleAndContainsCanonical) {
  for (std::uint64_t total = 1; total <= 30; ++total) {
    for (std::uint64_t n = 1; solver::feasible(n, total); ++n) {
      const auto listed = enumerate_distributions(n, total, 100'000);
      const auto expected = testing::distinct_sets_of_size(n, total);
      ASSERT_EQ(listed.size(), expected.size());
      for (std::size_t i = 0; i < listed.size(); ++i) {
        ASSERT_EQ(listed[i], solver::PearDistribution(expected[i])) << "n=" << n << " N=" << total;
        ASSERT_EQ(listed[i].total(), total);
      }
      ASSERT_TRUE(std::is_sorted(listed.begin(), listed.end()));
      ASSERT_EQ(count_distributions(n, total).count, listed.size());
      const auto canonical = solver::canonical_distribution(n, total);
      ASSERT_NE(std::find(listed.begin(), listed.end(), canonical), listed.end());
    }
  }
}

TEST(PerfectValuesTest, Examples) {
  const auto v = perfect_values(200);
  const std::vector<PerfectValue> expected = {{3, 3},   {10, 5},   {21, 7},   {36, 9},  {55, 11},
                                              {78, 13}, {105, 15}, {136, 17}, {171, 19}};
  EXPECT_EQ(v, expected);
  EXPECT_EQ(perfect_values(1'000'000).size(), 706U);
  EXPECT_TRUE(perfect_values(2).empty());
}

TEST(PerfectValuesTest, EvenIndexedTriangularNumbers) {
  // T(n) = n(n-1)/2 with n odd; equivalently the classical k(k+1)/2 with k = n-1 even.
  for (const auto& p : perfect_values(10'000)) {
    const std::uint64_t k = p.n_max - 1;
    ASSERT_EQ(k % 2, 0U);
    ASSERT_EQ(p.n_input, k * (k + 1) / 2);
  }
}

}  // namespace
}  // namespace baskets::census
