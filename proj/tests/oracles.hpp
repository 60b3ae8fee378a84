// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference computations used only by the tests. Each one walks
// permutations directly and shares no code path with the library routines it
// checks.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include <ostream>

#include "foulkes/foulkes_basis.hpp"

namespace foulkes {

inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.str(); }
inline void PrintTo(const Partition& p, std::ostream* os) { *os << "(" << p.str() << ")"; }
inline void PrintTo(const ClassFunction& f, std::ostream* os) {
  *os << "[";
  for (const auto& x : f.values()) *os << " " << x.str();
  *os << " ]";
}
inline void PrintTo(const LengthVector& v, std::ostream* os) {
  *os << "l=1..n [";
  for (const auto& x : v.values()) *os << " " << x.str();
  *os << " ]";
}
inline void PrintTo(const BasisCoords& c, std::ostream* os) {
  *os << basis_name(c.basis) << " [";
  for (const auto& x : c.coords) *os << " " << x.str();
  *os << " ]";
}
inline void PrintTo(const HCombination& h, std::ostream* os) { *os << h.str(); }

}  // namespace foulkes

namespace foulkes::testing {

inline std::vector<int> identity_word(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i;
  return w;
}

inline int descents_of(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

inline int cycles_of(const std::vector<int>& w) {
  std::vector<bool> seen(w.size());
  int c = 0;
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (seen[s]) continue;
    ++c;
    for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(w[t])) seen[t] = true;
  }
  return c;
}

/// #{pi in S_n : des(pi) = i} by enumeration.
inline long eulerian_brute(int n, int i) {
  auto w = identity_word(n);
  long count = 0;
  do count += descents_of(w) == i;
  while (std::next_permutation(w.begin(), w.end()));
  return count;
}

/// Number of permutations of S_n in each cycle-count class, index l = 1..n.
inline std::vector<long> length_class_sizes(int n) {
  std::vector<long> sizes(static_cast<std::size_t>(n) + 1, 0);
  auto w = identity_word(n);
  do ++sizes[static_cast<std::size_t>(cycles_of(w))];
  while (std::next_permutation(w.begin(), w.end()));
  return sizes;
}

/// c_{ijk} for one fixed target z by a naive double loop over S_n x S_n.
inline long pair_counts_for_target(int n, const std::vector<int>& z, int i, int j) {
  std::vector<std::vector<int>> perms;
  auto w = identity_word(n);
  do perms.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  long hits = 0;
  for (const auto& x : perms) {
    if (descents_of(x) != i) continue;
    for (const auto& y : perms) {
      if (descents_of(y) != j) continue;
      bool eq = true;
      for (int t = 0; t < n && eq; ++t) eq = x[static_cast<std::size_t>(y[static_cast<std::size_t>(t)])] == z[static_cast<std::size_t>(t)];
      hits += eq;
    }
  }
  return hits;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace foulkes::testing
