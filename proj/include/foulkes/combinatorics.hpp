// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "foulkes/rational.hpp"

namespace foulkes {

/// Binomial coefficient with the vanishing convention: zero unless u >= v >= 0.
Integer binom(long u, long v);
Integer factorial(int n);

/// Weakly decreasing list of positive parts. Doubles as a cycle type.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// m_k: number of parts equal to k.
  int multiplicity(int k) const;

  /// Conjugate (transposed) diagram.
  Partition conjugate() const;

  /// "3,1,1"; the empty partition prints as "".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Canonical order: reverse lexicographic, so (n) precedes (1^n).
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of n in canonical order.
std::vector<Partition> partitions(int n);
/// Partitions of n with exactly k parts, canonical order. Requires 1 <= k <= n.
std::vector<Partition> partitions_by_length(int n, int k);

/// M(lambda) = l(lambda)! / prod_k m_k(lambda)!
Integer multinomial_M(const Partition& lambda);

/// k / gcd(n, k). Requires 1 <= k <= n.
long part_gcd(int n, int k);
/// gcd of M(lambda) over partitions of n with exactly k parts, by enumeration.
Integer part_gcd_enumerated(int n, int k);

/// Permutation of {0..n-1} stored by images. One-line notation is 1-based.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  /// Throws std::invalid_argument unless `one_line` is a permutation of 1..n.
  static Permutation from_one_line(const std::vector<int>& one_line);
  /// Accepts 0-based images.
  static Permutation from_images(std::vector<int> images);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int t) const { return w_[static_cast<std::size_t>(t)]; }
  const std::vector<int>& images() const { return w_; }

  int descents() const;
  int cycle_count() const;
  Partition cycle_type() const;
  Permutation inverse() const;

  /// (a * b)(t) = a(b(t)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

/// Calls f on every permutation of S_n in lexicographic order of one-line words.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& f);
std::vector<Permutation> all_permutations(int n);

/// Number of permutations of S_n with exactly i descents; zero for i outside [0, n-1].
Integer eulerian(int n, int i);

}  // namespace foulkes
