// SPDX-License-Identifier: Apache-2.0
#include <immintrin.h>

#include <bit>

#include "foulkes/kernels/perm_kernels.hpp"

namespace foulkes::kernels::avx2 {

namespace {

inline int lane_descents(__m128i x, std::uint32_t mask) {
  const __m128i next = _mm_srli_si128(x, 1);
  const auto bits = static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_cmpgt_epi8(x, next)));
  return std::popcount(bits & mask);
}

}  // namespace

// _mm256_shuffle_epi8 permutes within each 128-bit lane, so one register
// holds two right-hand permutations against a broadcast left operand.
void compose_descents(const Perm16& left, std::span<const Perm16> right, int n, std::span<std::uint8_t> out) {
  const __m128i l128 = _mm_load_si128(reinterpret_cast<const __m128i*>(left.w.data()));
  const __m256i l256 = _mm256_broadcastsi128_si256(l128);
  const std::uint32_t lane = n > 1 ? (std::uint32_t{1} << (n - 1)) - 1 : 0;
  std::size_t r = 0;
  for (; r + 4 <= right.size(); r += 4) {
    const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(right[r].w.data()));
    const __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(right[r + 2].w.data()));
    const __m256i x0 = _mm256_shuffle_epi8(l256, b0);
    const __m256i x1 = _mm256_shuffle_epi8(l256, b1);
    const auto m0 = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(x0, _mm256_srli_si256(x0, 1))));
    const auto m1 = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(x1, _mm256_srli_si256(x1, 1))));
    out[r] = static_cast<std::uint8_t>(std::popcount(m0 & lane));
    out[r + 1] = static_cast<std::uint8_t>(std::popcount((m0 >> 16) & lane));
    out[r + 2] = static_cast<std::uint8_t>(std::popcount(m1 & lane));
    out[r + 3] = static_cast<std::uint8_t>(std::popcount((m1 >> 16) & lane));
  }
  for (; r < right.size(); ++r) {
    const __m128i b = _mm_load_si128(reinterpret_cast<const __m128i*>(right[r].w.data()));
    out[r] = static_cast<std::uint8_t>(lane_descents(_mm_shuffle_epi8(l128, b), lane));
  }
}

void compose(const Perm16& left, std::span<const Perm16> right, std::span<Perm16> out) {
  const __m128i l128 = _mm_load_si128(reinterpret_cast<const __m128i*>(left.w.data()));
  const __m256i l256 = _mm256_broadcastsi128_si256(l128);
  std::size_t r = 0;
  for (; r + 2 <= right.size(); r += 2) {
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(right[r].w.data()));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[r].w.data()), _mm256_shuffle_epi8(l256, b));
  }
  for (; r < right.size(); ++r) {
    const __m128i b = _mm_load_si128(reinterpret_cast<const __m128i*>(right[r].w.data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(out[r].w.data()), _mm_shuffle_epi8(l128, b));
  }
}

}  // namespace foulkes::kernels::avx2
