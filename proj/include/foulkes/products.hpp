// SPDX-License-Identifier: Apache-2.0
//
// Products of Foulkes characters and the expected-intersection inner product
// on CF_l(S_n) under which the Foulkes characters are orthonormal.
#pragma once

#include <stdexcept>
#include <vector>

#include "foulkes/foulkes_basis.hpp"

namespace foulkes {

inline constexpr int kDefaultProductBruteCap = 7;
inline constexpr int kDefaultInnerBruteCap = 5;

/// c(i, j, k) with phi_i phi_j = sum_k c(i, j, k) phi_k.
struct StructureConstants {
  int n = 0;
  std::vector<Integer> c;

  static StructureConstants zero(int n);
  const Integer& operator()(int i, int j, int k) const { return c[index(i, j, k)]; }
  Integer& operator()(int i, int j, int k) { return c[index(i, j, k)]; }
  std::vector<Integer> slice(int i, int j) const;
  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(n) +
           static_cast<std::size_t>(k);
  }
};

/// Double alternating binomial sum over (u, v).
std::vector<Integer> c_formula(int n, int i, int j);
StructureConstants c_formula_tensor(int n);

/// Foulkes coordinates of the pointwise product phi_i * phi_j.
std::vector<Integer> c_from_values(int n, int i, int j);
StructureConstants c_from_values_tensor(int n);

/// Raised when two targets z, z' with the same descent number receive
/// different pair counts.
class ZIndependenceViolation : public std::runtime_error {
 public:
  ZIndependenceViolation(int i, int j, int k, Permutation z1, Permutation z2, Integer count1, Integer count2);
  int i, j, k;
  Permutation z1, z2;
  Integer count1, count2;
};

/// Counts pairs (x, y) with des(x) = i, des(y) = j and xy = z for every z in
/// S_n, checks the count depends only on des(z), and returns the tensor.
/// Throws std::invalid_argument when n exceeds `cap` (or 16).
StructureConstants c_brute_tensor(int n, int cap = kDefaultProductBruteCap);
std::vector<Integer> c_brute(int n, int i, int j, int cap = kDefaultProductBruteCap);

/// Distribution of the class of sigma * tau for sigma uniform on the
/// permutations with `cycles_a` cycles and tau uniform on those with `cycles_b`.
struct ClassProductDistribution {
  int n = 0;
  int cycles_a = 1;
  int cycles_b = 1;
  /// Probability per conjugacy class, canonical order.
  std::vector<Rational> probabilities;

  Rational total() const;
  friend bool operator==(const ClassProductDistribution&, const ClassProductDistribution&) = default;
};

/// #{(x, y) in K_a x K_b : xy = g} for a fixed g in K_c, from the character table.
Rational class_structure_constant(const Partition& a, const Partition& b, const Partition& c);

ClassProductDistribution class_product_distribution(int n, int cycles_a = 1, int cycles_b = 1);
/// Same distribution by enumerating all pairs; factorial-squared cost.
ClassProductDistribution class_product_distribution_brute(int n, int cycles_a = 1, int cycles_b = 1);

/// E(i-1, j-1) = expected |sigma C_i cap tau C_j| for independent uniform n-cycles.
RationalMatrix expected_intersections(int n);
/// Literal count over all pairs of n-cycles and all permutations. Throws above `cap`.
RationalMatrix expected_intersections_brute(int n, int cap = kDefaultInnerBruteCap);

/// [theta, psi] = (1/n!) sum_{i,j} theta(C_i) psi(C_j) E|sigma C_i cap tau C_j|.
Rational foulkes_inner(const LengthVector& theta, const LengthVector& psi);
Rational foulkes_inner_brute(const LengthVector& theta, const LengthVector& psi, int cap = kDefaultInnerBruteCap);

/// Gram matrix of a basis under foulkes_inner.
RationalMatrix foulkes_gram(int n, Basis basis);

}  // namespace foulkes
