// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "foulkes/characters.hpp"
#include "oracles.hpp"

namespace foulkes {
namespace {

// Values listed from the identity class (1^n) up to the n-cycle, i.e. the
// reverse of canonical order.
ClassFunction from_longs(int n, std::initializer_list<long> vals) {
  std::vector<Rational> v;
  for (long x : vals) v.emplace_back(x);
  std::reverse(v.begin(), v.end());
  return ClassFunction(n, std::move(v));
}

TEST(Classes, Sizes) {
  EXPECT_EQ(class_size(Partition({1, 1, 1})), 1);
  EXPECT_EQ(class_size(Partition({2, 1})), 3);
  EXPECT_EQ(class_size(Partition({3})), 2);
}

// Class sizes summed by cycle count match a direct census of S_n.
TEST(Classes, SizesAgreeWithCensus) {
  for (int n = 1; n <= 8; ++n) {
    const auto census = testing::length_class_sizes(n);
    std::vector<Integer> by_length(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& mu : classes(n)) by_length[static_cast<std::size_t>(mu.length())] += class_size(mu);
    for (int l = 1; l <= n; ++l) EXPECT_EQ(by_length[static_cast<std::size_t>(l)], census[static_cast<std::size_t>(l)]);
  }
}

TEST(MurnaghanNakayama, Examples) {
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition({1, 1, 1})), 2);
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition({3})), -1);
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : classes(n)) EXPECT_EQ(mn_character(Partition({n}), mu), 1);
}

TEST(MurnaghanNakayama, AgreesWithTabloidOracle) {
  for (int n = 1; n <= 5; ++n) {
    const auto& table = character_table(n);
    for (std::size_t l = 0; l < table.size(); ++l)
      EXPECT_EQ(table.character(l), irreducible_by_tabloids(table.labels()[l])) << table.labels()[l].str();
  }
}

TEST(CharacterTable, Orthogonality) {
  for (int n = 1; n <= 8; ++n) {
    const auto& t = character_table(n);
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a; b < t.size(); ++b)
        EXPECT_EQ(std_inner(t.character(a), t.character(b)), Rational(a == b ? 1 : 0));
    // columns: sum_chi chi(mu) chi(nu) = delta |C_G(mu)|
    const auto& cls = classes(n);
    for (std::size_t m = 0; m < t.size(); ++m)
      for (std::size_t v = 0; v < t.size(); ++v) {
        Integer s = 0;
        for (std::size_t l = 0; l < t.size(); ++l) s += Integer(static_cast<long>(t(l, m) * t(l, v)));
        const Integer expect = m == v ? factorial(n) / class_size(cls[m]) : Integer(0);
        EXPECT_EQ(s, expect);
      }
  }
}

TEST(StdInner, Examples) {
  const auto& t = character_table(3);
  EXPECT_EQ(std_inner(t.character(Partition({2, 1})), t.character(Partition({3}))), Rational(0));
  const auto regular = induced_trivial(Partition({1, 1, 1}));
  EXPECT_EQ(std_inner(regular, t.character(Partition({3}))), Rational(1));
}

TEST(HookContent, Examples) {
  EXPECT_EQ(hook_content_gamma(2, Partition({2, 2, 1})), Rational(3));
  EXPECT_EQ(hook_content_gamma(2, Partition({2, 2})), Rational(6));
  for (int n = 2; n <= 8; ++n)
    for (int j = 0; j < n; ++j) {
      std::vector<int> hook(static_cast<std::size_t>(j) + 1, 1);
      hook[0] = n - j;
      EXPECT_EQ(hook_content_gamma(j, Partition(hook)), Rational(binom(n - 1, j)));
    }
}

// <(i+1)^l, chi_lambda> via the hook-content product agrees with the table.
TEST(HookContent, AgreesWithInnerProduct) {
  for (int n = 1; n <= 7; ++n) {
    const auto& cls = classes(n);
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> v;
      for (const auto& mu : cls) {
        Integer p = 1;
        for (int s = 0; s < mu.length(); ++s) p *= i + 1;
        v.emplace_back(p);
      }
      const ClassFunction gamma(n, v);
      const auto& t = character_table(n);
      for (std::size_t l = 0; l < t.size(); ++l)
        EXPECT_EQ(hook_content_gamma(i, t.labels()[l]), std_inner(gamma, t.character(l)));
    }
  }
}

TEST(InducedTrivial, Examples) {
  EXPECT_EQ(induced_trivial(Partition({2, 1})), from_longs(3, {3, 1, 0}));
  EXPECT_EQ(induced_trivial(Partition({1, 1, 1})), from_longs(3, {6, 0, 0}));
  for (int n = 1; n <= 6; ++n) {
    const auto f = induced_trivial(Partition({n}));
    for (const auto& x : f.values()) EXPECT_EQ(x, Rational(1));
  }
}

// Dynamic programming matches literal tabloid counting.
TEST(InducedTrivial, AgreesWithTabloids) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions(n)) EXPECT_EQ(induced_trivial(lambda), tabloid_character(lambda.parts())) << lambda.str();
}

// <h_lambda, chi_mu> is a Kostka number: 1 on the diagonal, 0 for mu later in canonical order.
TEST(InducedTrivial, LeadingIrreducible) {
  for (int n = 1; n <= 7; ++n) {
    const auto& t = character_table(n);
    for (std::size_t l = 0; l < t.size(); ++l) {
      const auto h = induced_trivial(t.labels()[l]);
      EXPECT_EQ(std_inner(h, t.character(l)), Rational(1));
      for (std::size_t m = l + 1; m < t.size(); ++m) EXPECT_EQ(std_inner(h, t.character(m)), Rational(0));
    }
  }
}

TEST(HCombination, ToClassFunction) {
  HCombination c(3);
  c.add(Partition({2, 1}), Rational(1));
  c.add(Partition({3}), Rational(1));
  EXPECT_EQ(h_to_classfunction(c), from_longs(3, {4, 2, 1}));
  EXPECT_EQ(c.str(), "h(3) + h(2,1)");
  EXPECT_EQ(h_to_classfunction(HCombination(4)), ClassFunction(4));
  HCombination triv(5);
  triv.add(Partition({5}), Rational(1));
  EXPECT_EQ(h_to_classfunction(triv), induced_trivial(Partition({5})));
}

TEST(GenuineCharacter, AcceptAndReject) {
  const auto chi21 = character_table(3).character(Partition({2, 1}));
  const auto cert = is_genuine_character(chi21);
  EXPECT_TRUE(cert.genuine);
  EXPECT_EQ(cert.multiplicities[class_index(Partition({2, 1}))], Rational(1));

  const auto half = Rational(Integer(1), Integer(2)) * induced_trivial(Partition({3}));
  const auto bad = is_genuine_character(half);
  EXPECT_FALSE(bad.genuine);
  ASSERT_TRUE(bad.failing.has_value());
  EXPECT_EQ(bad.multiplicities[*bad.failing], Rational(Integer(1), Integer(2)));

  // (2, 0, -1) on l = (3, 2, 1): classes (1^3), (2,1), (3) have l = 3, 2, 1
  EXPECT_TRUE(is_genuine_character(from_longs(3, {2, 0, -1})));
  EXPECT_FALSE(is_genuine_character(from_longs(3, {-2, 0, 1})));
}

// Random non-negative integer combinations of irreducibles are accepted and
// their certificates recover the coefficients.
TEST(GenuineCharacter, RandomCombinations) {
  auto gen = testing::rng(7);
  std::uniform_int_distribution<int> coef(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 7;
    const auto& t = character_table(n);
    ClassFunction f(n);
    std::vector<Rational> want;
    for (std::size_t l = 0; l < t.size(); ++l) {
      const int c = coef(gen);
      want.emplace_back(c);
      f += Rational(c) * t.character(l);
    }
    const auto cert = is_genuine_character(f);
    EXPECT_TRUE(cert.genuine);
    EXPECT_EQ(cert.multiplicities, want);
  }
}

}  // namespace
}  // namespace foulkes
