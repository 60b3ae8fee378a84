// SPDX-License-Identifier: Apache-2.0
//
// Ground-truth character theory of S_n: conjugacy classes, Murnaghan-Nakayama
// character tables, permutation characters of Young subgroups, and the
// standard inner product. Nothing in here knows about Foulkes characters.
#pragma once

#include <optional>
#include <vector>

#include "foulkes/combinatorics.hpp"
#include "foulkes/rational.hpp"

namespace foulkes {

/// Partitions of n in canonical order; the column/row order of every table.
const std::vector<Partition>& classes(int n);
/// Position of mu in classes(mu.size()).
std::size_t class_index(const Partition& mu);

/// |C_mu| = n! / prod_k k^{m_k} m_k!
Integer class_size(const Partition& mu);

/// Rational-valued function on the conjugacy classes of S_n.
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(int n);
  ClassFunction(int n, std::vector<Rational> values);

  int n() const { return n_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t idx) const { return values_[idx]; }
  Rational& operator[](std::size_t idx) { return values_[idx]; }
  const Rational& at(const Partition& mu) const;

  /// True when the value on every class is determined by its number of parts.
  bool depends_only_on_length() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Rational& s);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Rational& s, ClassFunction a) { return a *= s; }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> values_;
};

/// Irreducible characters chi_lambda(mu) of S_n, rows lambda and columns mu in canonical order.
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  std::size_t size() const { return labels_->size(); }
  const std::vector<Partition>& labels() const { return *labels_; }
  long long operator()(std::size_t lambda, std::size_t mu) const { return entries_[lambda * size() + mu]; }
  long long degree(std::size_t lambda) const;
  ClassFunction character(std::size_t lambda) const;
  ClassFunction character(const Partition& lambda) const { return character(class_index(lambda)); }

 private:
  int n_;
  const std::vector<Partition>* labels_;
  std::vector<long long> entries_;
};

/// Shared, lazily built table; safe to call concurrently.
const CharacterTable& character_table(int n);

/// chi_lambda(mu) by the Murnaghan-Nakayama rule. Throws on size mismatch.
long long mn_character(const Partition& lambda, const Partition& mu);

/// (1/n!) sum_mu |C_mu| f(mu) g(mu). Values are real so no conjugation.
Rational std_inner(const ClassFunction& f, const ClassFunction& g);

/// prod over boxes b of lambda of (i + 1 + c(b)) / h(b).
Rational hook_content_gamma(int i, const Partition& lambda);

/// Permutation character of S_n on the cosets of the Young subgroup S_lambda,
/// counted combinatorially from cycle types.
ClassFunction induced_trivial(const Partition& lambda);

/// Same character by literally counting tabloids fixed by a class
/// representative. `composition` may be unsorted. Factorial cost.
ClassFunction tabloid_character(const std::vector<int>& composition);

/// chi_lambda via the Jacobi-Trudi determinant over tabloid characters.
/// Independent of the Murnaghan-Nakayama code path; factorial cost.
ClassFunction irreducible_by_tabloids(const Partition& lambda);

/// Formal rational combination of complete homogeneous symmetric functions h_lambda.
class HCombination {
 public:
  HCombination() = default;
  explicit HCombination(int n);

  int n() const { return n_; }
  const Rational& coefficient(const Partition& lambda) const;
  void add(const Partition& lambda, const Rational& c);
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Every coefficient is a non-negative integer.
  bool is_nonnegative_integral() const;
  /// Nonzero terms in canonical order.
  std::vector<std::pair<Partition, Rational>> terms() const;
  std::string str() const;

  friend bool operator==(const HCombination&, const HCombination&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> coeffs_;
};

/// Inverse Frobenius characteristic: sum_lambda c_lambda induced_trivial(lambda).
ClassFunction h_to_classfunction(const HCombination& c);

struct CharacterCertificate {
  bool genuine = false;
  /// <f, chi_lambda> for lambda in canonical order.
  std::vector<Rational> multiplicities;
  /// First irreducible whose multiplicity is negative or non-integral.
  std::optional<std::size_t> failing;

  explicit operator bool() const { return genuine; }
};

/// Accepts iff every irreducible multiplicity is a non-negative integer.
CharacterCertificate is_genuine_character(const ClassFunction& f);

}  // namespace foulkes
