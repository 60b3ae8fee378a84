// SPDX-License-Identifier: Apache-2.0
//
// Class functions of S_n that depend only on the number of cycles, stored as
// n values indexed by cycle count, and the four bases phi (Foulkes), gamma
// ((k+1)^l), psi and omega = psi_k / d_{k+1}.
#pragma once

#include <string_view>
#include <vector>

#include "foulkes/characters.hpp"
#include "foulkes/rational.hpp"

namespace foulkes {

/// Element of CF_l(S_n): value(l) for l = 1..n.
class LengthVector {
 public:
  LengthVector() = default;
  explicit LengthVector(int n);
  LengthVector(int n, std::vector<Rational> values);

  int n() const { return n_; }
  /// Value on permutations with `cycles` cycles, 1 <= cycles <= n.
  const Rational& value(int cycles) const { return v_[static_cast<std::size_t>(cycles - 1)]; }
  Rational& value(int cycles) { return v_[static_cast<std::size_t>(cycles - 1)]; }
  const std::vector<Rational>& values() const { return v_; }

  /// Class function assigning value(l(mu)) to the class mu.
  ClassFunction lift() const;
  /// Throws std::invalid_argument if f does not depend only on length.
  static LengthVector from_class_function(const ClassFunction& f);

  LengthVector& operator+=(const LengthVector& o);
  LengthVector& operator-=(const LengthVector& o);
  LengthVector& operator*=(const Rational& s);
  friend LengthVector operator+(LengthVector a, const LengthVector& b) { return a += b; }
  friend LengthVector operator-(LengthVector a, const LengthVector& b) { return a -= b; }
  friend LengthVector operator*(const Rational& s, LengthVector a) { return a *= s; }
  /// Pointwise product (tensor product of characters).
  friend LengthVector pointwise(const LengthVector& a, const LengthVector& b);
  friend bool operator==(const LengthVector&, const LengthVector&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> v_;
};

enum class Basis { phi, gamma, psi, omega };

std::string_view basis_name(Basis b);
/// Throws std::invalid_argument on an unknown name.
Basis parse_basis(std::string_view name);

/// Coordinates with respect to one of the four bases, index 0..n-1.
struct BasisCoords {
  Basis basis = Basis::phi;
  std::vector<Rational> coords;

  int n() const { return static_cast<int>(coords.size()); }
  bool is_integral() const;
  friend bool operator==(const BasisCoords&, const BasisCoords&) = default;
};

/// d_k = k / gcd(n, k), 1 <= k <= n.
long dk(int n, int k);

LengthVector gamma_vector(int n, int k);
LengthVector phi_vector(int n, int i);
LengthVector psi_vector(int n, int i);
LengthVector omega_vector(int n, int k);
LengthVector basis_vector(int n, Basis b, int index);
/// Regular character: n! on the identity, zero elsewhere.
LengthVector regular_character(int n);

/// M with (coords in `to`) = M * (coords in `from`).
RationalMatrix basis_matrix(int n, Basis from, Basis to);
BasisCoords convert(const BasisCoords& c, Basis to);
/// sum_i c_i * b_i.
LengthVector evaluate(const BasisCoords& c);

/// Foulkes coordinates r_i = <theta, eps_i> / eps_i(1), with eps_i the hook
/// character chi_{(n-i,1^i)} taken from the Murnaghan-Nakayama table.
BasisCoords phi_coords(const LengthVector& theta);
/// Foulkes coordinates by solving the triangular-free linear system of phi values.
BasisCoords phi_coords_by_solve(const LengthVector& theta);

/// ch(psi_k) = sum over l(lambda) = k+1 of M(lambda) h_lambda.
HCombination ch_psi(int n, int k);
/// ch(gamma_j) = sum_lambda binom(j+1, l(lambda)) M(lambda) h_lambda.
HCombination ch_gamma(int n, int j);

/// Restriction to S_{n-1}: value(l) of the result is value(l+1) of the input.
LengthVector restrict_length(const LengthVector& theta);

}  // namespace foulkes
