// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>

#include "foulkes/length_lattice.hpp"
#include "oracles.hpp"

namespace foulkes {
namespace {

ParamVector params(std::initializer_list<long> v) {
  ParamVector p;
  for (long x : v) p.a.emplace_back(x);
  return p;
}

BasisCoords phi_of(std::initializer_list<Rational> v) { return {Basis::phi, v}; }

const Rational kHalf(Integer(1), Integer(2));

ClassFunction irreducible_by_tabloids_or_table(int n, const Partition& nu) {
  return n <= 5 ? irreducible_by_tabloids(nu) : character_table(n).character(nu);
}

TEST(ThetaFromParams, Examples) {
  EXPECT_EQ(theta_from_params(params({0, 1, 0})), phi_of({0, kHalf, 0}));
  EXPECT_EQ(theta_from_params(params({1, 0, 0})), phi_of({1, 0, 0}));
  EXPECT_EQ(theta_from_params(params({1, 2, 1})), phi_of({1, 1, 1}));
  EXPECT_THROW(theta_from_params(params({0, -1, 0})), std::invalid_argument);
}

TEST(ParamsFromTheta, Examples) {
  const auto chi21 = character_table(3).character(Partition({2, 1}));
  EXPECT_EQ(params_from_theta(chi21), params({0, 1, 0}));
  EXPECT_EQ(params_from_theta(phi_of({0, 0, 1})), params({0, 0, 1}));
  EXPECT_EQ(params_from_theta(phi_of({1, 1, 1})), params({1, 2, 1}));
  EXPECT_EQ(convert(phi_of({0, kHalf, 0}), Basis::omega).coords, (std::vector<Rational>{-1, 1, 0}));
}

TEST(ParamsFromTheta, RejectsNonCharacters) {
  try {
    params_from_theta(phi_of({Rational(Integer(1), Integer(3)), 0, 0}));
    FAIL() << "expected NotACharacter";
  } catch (const NotACharacter& e) {
    EXPECT_FALSE(e.multiplicity().is_integer());
  }
  EXPECT_THROW(params_from_theta(phi_of({-1, 0, 0})), NotACharacter);
}

// Roundtrip over the box prod [0, 2 d_{k+1}) and injectivity of theta_from_params.
TEST(Parametrization, RoundtripAndInjectiveOnBox) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<long> bound, cur(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) bound.push_back(2 * dk(n, k + 1));
    std::set<std::vector<std::string>> seen;
    long count = 0;
    while (true) {
      ParamVector a;
      for (long x : cur) a.a.emplace_back(x);
      const auto theta = theta_from_params(a);
      EXPECT_EQ(params_from_theta(theta), a);
      seen.insert(to_strings(theta.coords));
      ++count;
      int k = n - 1;
      while (k >= 0 && ++cur[static_cast<std::size_t>(k)] == bound[static_cast<std::size_t>(k)]) cur[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
    }
    EXPECT_EQ(static_cast<long>(seen.size()), count);
  }
}

// Random characters: non-negative integer irreducible combinations that
// happen to depend only on length, built from the fundamental domain plus
// non-negative integer Foulkes shifts, roundtrip through the parameters.
TEST(Parametrization, RandomCharactersRoundtrip) {
  auto gen = testing::rng(3);
  std::uniform_int_distribution<int> shift(0, 4);
  for (int n = 1; n <= 7; ++n) {
    const auto domain = fundamental_domain_elements(n);
    std::uniform_int_distribution<std::size_t> pick(0, domain.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      BasisCoords theta = domain[pick(gen)].theta;
      for (auto& c : theta.coords) c += Rational(shift(gen));
      const auto a = params_from_theta(theta);
      EXPECT_EQ(theta_from_params(a), theta);
    }
  }
}

// Completeness: every length-dependent character of S_n with small
// multiplicities is some theta_a. Multiplicity vectors are scanned directly
// and filtered by the length-dependence test.
TEST(Parametrization, CompleteOnSmallCharacters) {
  for (int n = 1; n <= 5; ++n) {
    const auto& t = character_table(n);
    const std::size_t r = t.size();
    const int max_mult = n <= 3 ? 3 : (n == 4 ? 2 : 1);
    std::vector<int> m(r, 0);
    long hits = 0;
    while (true) {
      ClassFunction f(n);
      for (std::size_t l = 0; l < r; ++l)
        if (m[l]) f += Rational(m[l]) * t.character(l);
      if (f.depends_only_on_length()) {
        ++hits;
        const auto a = params_from_theta(f);
        EXPECT_EQ(evaluate(theta_from_params(a)).lift(), f);
      }
      std::size_t k = 0;
      while (k < r && ++m[k] > max_mult) m[k++] = 0;
      if (k == r) break;
    }
    EXPECT_GT(hits, 1);
  }
}

TEST(ConeDecompose, Examples) {
  const BasisCoords rho = phi_of({1, 1, 1});
  const BasisCoords chi = phi_of({0, kHalf, 0});
  const BasisCoords zero = phi_of({0, 0, 0});
  auto d = cone_decompose(rho);
  EXPECT_EQ(d.theta_F, rho);
  EXPECT_EQ(d.theta_P, zero);
  d = cone_decompose(chi);
  EXPECT_EQ(d.theta_F, zero);
  EXPECT_EQ(d.theta_P, chi);
  d = cone_decompose(phi_of({1, 1 + kHalf, 1}));
  EXPECT_EQ(d.theta_F, rho);
  EXPECT_EQ(d.theta_P, chi);
  EXPECT_THROW(cone_decompose(phi_of({kHalf, 0, 0})), NotACharacter);
}

TEST(FundamentalDomain, Examples) {
  ASSERT_EQ(fundamental_domain(1).size(), 1u);
  EXPECT_EQ(fundamental_domain(1)[0], phi_of({0}));
  const auto d3 = fundamental_domain(3);
  ASSERT_EQ(d3.size(), 2u);
  EXPECT_EQ(d3[0], phi_of({0, 0, 0}));
  EXPECT_EQ(d3[1], phi_of({0, kHalf, 0}));
  const auto d4 = fundamental_domain_elements(4);
  ASSERT_EQ(d4.size(), 3u);
  EXPECT_EQ(d4[1].a, params({0, 0, 1, 0}));
  EXPECT_EQ(d4[1].theta, phi_of({0, Rational(Integer(2), Integer(3)), Rational(Integer(1), Integer(3)), 0}));
  std::vector<Rational> vals = {-1, -1, 1, 11};
  EXPECT_EQ(evaluate(d4[1].theta), LengthVector(4, vals));
}

TEST(FundamentalDomain, CountsAndGenuineness) {
  const long expected[] = {1, 1, 2, 3, 24, 10, 720, 315};
  for (int n = 1; n <= 8; ++n) {
    const auto dom = fundamental_domain(n);
    EXPECT_EQ(static_cast<long>(dom.size()), expected[n - 1]);
    EXPECT_EQ(lattice_index(n), expected[n - 1]);
    EXPECT_EQ(lattice_index_closed_form(n), expected[n - 1]);
    std::set<std::vector<std::string>> distinct;
    for (const auto& th : dom) {
      distinct.insert(to_strings(th.coords));
      for (const auto& c : th.coords) {
        EXPECT_GE(c, Rational(0));
        EXPECT_LT(c, Rational(1));
      }
      if (n <= 7) {
        EXPECT_TRUE(is_genuine_character(evaluate(th).lift()));
      }
    }
    EXPECT_EQ(distinct.size(), dom.size());
  }
}

TEST(Sigma, Values) {
  EXPECT_EQ(sigma_n(1), 1);
  EXPECT_EQ(sigma_n(4), 3);
  EXPECT_EQ(sigma_n(5), 12);
  EXPECT_EQ(sigma_n(6), 10);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(sigma_n(n), sigma_closed_form(n));
}

TEST(Sigma, Minimality) {
  for (int n = 1; n <= 7; ++n) {
    const auto m = check_sigma_minimality(n);
    EXPECT_TRUE(m.clears_all) << n;
    EXPECT_TRUE(m.minimal()) << n;
  }
}

TEST(LatticeY, Membership) {
  EXPECT_TRUE(is_in_Y(phi_vector(3, 1) - phi_vector(3, 0)));
  EXPECT_TRUE(is_in_Y(evaluate(phi_of({0, kHalf, 0}))));
  EXPECT_FALSE(is_in_Y(Rational(Integer(1), Integer(3)) * phi_vector(3, 1)));
}

TEST(SpecialTheta, Examples) {
  const auto s3 = special_theta(3);
  std::vector<Rational> v3 = {1, 2, 4};
  EXPECT_EQ(s3.values, LengthVector(3, v3));
  EXPECT_EQ(s3.expansion.str(), "h(3) + h(2,1)");
  const auto s2 = special_theta(2);
  EXPECT_EQ(s2.expansion.str(), "h(2)");
  for (int n = 2; n <= 8; ++n) {
    const auto s = special_theta(n);
    EXPECT_TRUE(s.expansion.is_nonnegative_integral());
    EXPECT_EQ(h_to_classfunction(s.expansion), s.values.lift());
  }
  EXPECT_THROW(special_theta(1), std::invalid_argument);
}

TEST(GammaBox, ClosedForm) {
  EXPECT_EQ(gamma_box_closed_form(5, 2), Rational(3));
  EXPECT_EQ(gamma_box_closed_form(4, 2), Rational(6));
  for (int n = 4; n <= 9; ++n) {
    std::vector<int> nu(static_cast<std::size_t>(n - 2), 1);
    nu[0] = nu[1] = 2;
    for (int j = 0; j < n; ++j) EXPECT_EQ(gamma_box_closed_form(n, j), hook_content_gamma(j, Partition(nu))) << n << "," << j;
  }
}

// The witness inner product recomputed from scratch: phi-coordinates of
// (n-1)^(l-1) by linear solving, then the table row of (2,2,1^{n-4}).
TEST(NoBetterWitness, IndependentRecomputation) {
  for (int n = 4; n <= 9; ++n) {
    const auto w = no_better_witness_routes(n);
    const auto coords = phi_coords_by_solve(special_theta(n).values);
    const Rational c = coords.coords[static_cast<std::size_t>(n - 2)];
    EXPECT_EQ(c, Rational(Integer(1), Integer(n - 1)));
    std::vector<int> nu(static_cast<std::size_t>(n - 2), 1);
    nu[0] = nu[1] = 2;
    const Rational direct = std_inner(c * phi_vector(n, n - 2).lift(), irreducible_by_tabloids_or_table(n, Partition(nu)));
    EXPECT_EQ(w.coefficient, c);
    EXPECT_EQ(w.closed_form, direct);
    EXPECT_EQ(w.via_hook_content, direct);
    EXPECT_EQ(w.via_character_table, direct);
    EXPECT_EQ(direct, Rational(Integer(n - 3), Integer(n - 1)));
    EXPECT_FALSE(direct.is_integer());
  }
  EXPECT_THROW(no_better_witness(3), std::invalid_argument);
}

}  // namespace
}  // namespace foulkes
