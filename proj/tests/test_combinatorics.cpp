// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "foulkes/combinatorics.hpp"
#include "oracles.hpp"

namespace foulkes {
namespace {

TEST(Binom, VanishingConvention) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(3, -1), 0);
  EXPECT_EQ(binom(2, 5), 0);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(-1, -1), 0);
  EXPECT_EQ(binom(-3, 0), 0);
}

TEST(Partitions, ByLength) {
  auto p42 = partitions_by_length(4, 2);
  ASSERT_EQ(p42.size(), 2u);
  EXPECT_EQ(p42[0], Partition({3, 1}));
  EXPECT_EQ(p42[1], Partition({2, 2}));
  auto p64 = partitions_by_length(6, 4);
  ASSERT_EQ(p64.size(), 2u);
  EXPECT_EQ(p64[0], Partition({3, 1, 1, 1}));
  EXPECT_EQ(p64[1], Partition({2, 2, 1, 1}));
  for (int n = 1; n <= 8; ++n) {
    auto all_ones = partitions_by_length(n, n);
    ASSERT_EQ(all_ones.size(), 1u);
    EXPECT_EQ(all_ones[0], Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
  }
  EXPECT_THROW(partitions_by_length(4, 0), std::invalid_argument);
  EXPECT_THROW(partitions_by_length(4, 5), std::invalid_argument);
}

TEST(Partitions, CanonicalOrderAndCounts) {
  const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    auto ps = partitions(n);
    EXPECT_EQ(static_cast<long>(ps.size()), expected[n]);
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_TRUE(CanonicalOrder{}(ps[i - 1], ps[i]));
  }
  auto p5 = partitions(5);
  EXPECT_EQ(p5.front(), Partition({5}));
  EXPECT_EQ(p5.back(), Partition({1, 1, 1, 1, 1}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
}

TEST(Multinomial, Values) {
  EXPECT_EQ(multinomial_M(Partition({3, 1, 1, 1})), 4);
  EXPECT_EQ(multinomial_M(Partition({2, 2, 1, 1})), 6);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(multinomial_M(Partition({n})), 1);
}

TEST(PartGcd, Examples) {
  EXPECT_EQ(part_gcd(6, 4), 2);
  EXPECT_EQ(part_gcd_enumerated(6, 4), 2);
  EXPECT_EQ(part_gcd(3, 2), 2);
  EXPECT_EQ(part_gcd_enumerated(3, 2), 2);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(part_gcd(n, n), 1);
  EXPECT_THROW(part_gcd(3, 4), std::invalid_argument);
  EXPECT_THROW(part_gcd(3, 0), std::invalid_argument);
}

// gcd of M(lambda) over l(lambda) = k equals k / gcd(n, k).
TEST(PartGcd, EnumerationMatchesClosedFormUpTo20) {
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(part_gcd_enumerated(n, k), part_gcd(n, k)) << n << "," << k;
}

TEST(Multinomial, SchonemannAndCauchyDivisibility) {
  for (int n = 1; n <= 16; ++n)
    for (const auto& lambda : partitions(n)) {
      const Integer m = multinomial_M(lambda);
      int g = 0;
      for (int k = 1; k <= n; ++k) g = std::gcd(g, lambda.multiplicity(k));
      EXPECT_EQ((Integer(g) * m) % lambda.length(), 0) << lambda.str();
      EXPECT_EQ((Integer(n) * m) % lambda.length(), 0) << lambda.str();
    }
}

TEST(Eulerian, MatchesEnumeration) {
  EXPECT_EQ(eulerian(3, 1), 4);
  EXPECT_EQ(eulerian(4, 1), 11);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(eulerian(n, 0), 1);
    EXPECT_EQ(eulerian(n, -1), 0);
    EXPECT_EQ(eulerian(n, n), 0);
    for (int i = 0; i < n; ++i) EXPECT_EQ(eulerian(n, i), testing::eulerian_brute(n, i)) << n << "," << i;
  }
}

TEST(Eulerian, SumAndSymmetry) {
  for (int n = 1; n <= 9; ++n) {
    Integer sum = 0;
    for (int i = 0; i < n; ++i) {
      sum += eulerian(n, i);
      EXPECT_EQ(eulerian(n, i), eulerian(n, n - 1 - i));
    }
    EXPECT_EQ(sum, factorial(n));
  }
}

TEST(Permutation, CycleCountAndDescents) {
  EXPECT_EQ(Permutation::identity(4).cycle_count(), 4);
  EXPECT_EQ(Permutation::from_one_line({2, 1, 3, 4}).cycle_count(), 3);
  EXPECT_EQ(Permutation::from_one_line({2, 3, 4, 1}).cycle_count(), 1);
  EXPECT_EQ(Permutation::from_one_line({2, 3, 4, 1}).descents(), 1);
  EXPECT_EQ(Permutation::from_one_line({4, 3, 2, 1}).descents(), 3);
  EXPECT_EQ(Permutation::from_one_line({2, 3, 4, 1}).cycle_type(), Partition({4}));
  EXPECT_THROW(Permutation::from_one_line({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_one_line({0, 1}), std::invalid_argument);
}

TEST(Permutation, CompositionConvention) {
  const auto a = Permutation::from_one_line({2, 3, 1});
  const auto b = Permutation::from_one_line({2, 1, 3});
  // (ab)(t) = a(b(t))
  EXPECT_EQ((a * b).images(), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(a * a.inverse(), Permutation::identity(3));
}

}  // namespace
}  // namespace foulkes
