// SPDX-License-Identifier: Apache-2.0
//
// The lattices X (integer span of Foulkes characters) inside Y (virtual
// characters depending only on cycle count) inside Z (all virtual characters),
// and the parametrization of every length-dependent character by a in N^n.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "foulkes/foulkes_basis.hpp"

namespace foulkes {

/// a = (a_0, ..., a_{n-1}) with non-negative entries.
struct ParamVector {
  std::vector<Integer> a;

  int n() const { return static_cast<int>(a.size()); }
  /// 0 <= a_k < d_{k+1} for every k.
  bool is_restricted() const;
  friend bool operator==(const ParamVector&, const ParamVector&) = default;
};

/// Raised when a class function expected to be a character is not one.
class NotACharacter : public std::runtime_error {
 public:
  NotACharacter(Partition irreducible, Rational multiplicity);
  const Partition& irreducible() const { return irreducible_; }
  const Rational& multiplicity() const { return multiplicity_; }

 private:
  Partition irreducible_;
  Rational multiplicity_;
};

/// Foulkes coordinates floor(a_k / d_{k+1}) + frac(sum_j binom(n-k-1, j-k) a_j / d_{j+1}).
BasisCoords theta_from_params(const ParamVector& a);

/// Inverse of theta_from_params. Throws NotACharacter when the input fails the
/// irreducible-multiplicity oracle.
ParamVector params_from_theta(const BasisCoords& theta);
ParamVector params_from_theta(const ClassFunction& theta);

struct ConeDecomposition {
  /// Integer part: non-negative integer Foulkes coordinates.
  BasisCoords theta_F;
  /// Fractional part: Foulkes coordinates in [0, 1).
  BasisCoords theta_P;
};

/// Throws NotACharacter for non-characters.
ConeDecomposition cone_decompose(const BasisCoords& theta);

/// Every a with 0 <= a_k < d_{k+1}, lexicographic with a_0 most significant.
std::vector<ParamVector> restricted_params(int n);

struct DomainElement {
  ParamVector a;
  BasisCoords theta;
};

/// Characters in the fundamental parallelepiped, one per restricted a.
std::vector<DomainElement> fundamental_domain_elements(int n);
std::vector<BasisCoords> fundamental_domain(int n);

/// prod_k d_k.
Integer lattice_index(int n);
/// n! / prod_k gcd(k, n).
Integer lattice_index_closed_form(int n);

/// lcm(d_1, ..., d_n); throws std::logic_error if it differs from lcm(1..n)/n.
Integer sigma_n(int n);
Integer sigma_closed_form(int n);

struct SigmaMinimality {
  Integer sigma;
  /// sigma * theta has integer coordinates for every fundamental-domain element.
  bool clears_all = false;
  /// Index of a domain element that sigma fails to clear, if any.
  std::optional<std::size_t> clear_failure;
  /// Proper divisors of sigma with the index of a domain element each one fails to clear.
  std::vector<std::pair<Integer, std::optional<std::size_t>>> divisors;

  bool minimal() const;
};

SigmaMinimality check_sigma_minimality(int n);

/// Every irreducible multiplicity is an integer (sign unrestricted).
bool is_in_Y(const LengthVector& theta);

struct SpecialTheta {
  LengthVector values;      // l -> (n-1)^(l-1)
  HCombination expansion;   // coefficients binom(n-1, l(lambda)) M(lambda) / (n-1)
};

/// Throws std::invalid_argument for n < 2 and std::logic_error if the
/// expansion is not non-negative integral or the oracle rejects it.
SpecialTheta special_theta(int n);

struct NoBetterWitness {
  /// Coefficient c_{n-2} of phi_{n-2} in (n-1)^(l-1).
  Rational coefficient;
  /// Closed forms for <gamma_j, chi_nu> combined with the phi-gamma relation.
  Rational closed_form;
  /// Hook-content products combined with basis_matrix entries.
  Rational via_hook_content;
  /// Direct inner product against the Murnaghan-Nakayama row of nu.
  Rational via_character_table;
};

/// <gamma_j, chi_nu> for nu = (2,2,1^{n-4}) from its piecewise closed form.
Rational gamma_box_closed_form(int n, int j);

/// All three routes for <c_{n-2} phi_{n-2}, chi_nu>. Requires n >= 4.
NoBetterWitness no_better_witness_routes(int n);
/// The common value of the three routes; throws std::logic_error if they disagree
/// or the value is an integer. Requires n >= 4.
Rational no_better_witness(int n);

}  // namespace foulkes
