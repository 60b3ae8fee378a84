// SPDX-License-Identifier: Apache-2.0
//
// Batched permutation kernels used by the brute-force oracles. A permutation
// of degree n <= 16 is packed into 16 bytes (positions >= n fixed), so
// composition is a single byte shuffle. The scalar versions are the
// reference; vector versions must agree with them bit for bit.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "foulkes/combinatorics.hpp"

namespace foulkes::kernels {

inline constexpr int kMaxDegree = 16;

struct alignas(16) Perm16 {
  std::array<std::uint8_t, 16> w;

  static Perm16 pack(const Permutation& p);
  Permutation unpack(int n) const;
  friend bool operator==(const Perm16&, const Perm16&) = default;
};

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
/// Best available backend unless FOULKES_SIMD=scalar|avx2 says otherwise.
Backend active_backend();
/// Throws std::invalid_argument if the backend is not available on this CPU.
void set_backend(Backend b);

/// out[r] = des(left * right[r]) over the first n positions.
void compose_descents(const Perm16& left, std::span<const Perm16> right, int n, std::span<std::uint8_t> out);
/// out[r] = left * right[r], i.e. out[r](t) = left(right[r](t)).
void compose(const Perm16& left, std::span<const Perm16> right, std::span<Perm16> out);

namespace scalar {
void compose_descents(const Perm16& left, std::span<const Perm16> right, int n, std::span<std::uint8_t> out);
void compose(const Perm16& left, std::span<const Perm16> right, std::span<Perm16> out);
}  // namespace scalar

namespace avx2 {
void compose_descents(const Perm16& left, std::span<const Perm16> right, int n, std::span<std::uint8_t> out);
void compose(const Perm16& left, std::span<const Perm16> right, std::span<Perm16> out);
}  // namespace avx2

}  // namespace foulkes::kernels
