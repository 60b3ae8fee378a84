// SPDX-License-Identifier: Apache-2.0
#include "foulkes/kernels/perm_kernels.hpp"

namespace foulkes::kernels::scalar {

void compose_descents(const Perm16& left, std::span<const Perm16> right, int n, std::span<std::uint8_t> out) {
  for (std::size_t r = 0; r < right.size(); ++r) {
    const auto& b = right[r].w;
    int des = 0;
    for (int t = 0; t + 1 < n; ++t) des += left.w[b[static_cast<std::size_t>(t)]] > left.w[b[static_cast<std::size_t>(t) + 1]];
    out[r] = static_cast<std::uint8_t>(des);
  }
}

void compose(const Perm16& left, std::span<const Perm16> right, std::span<Perm16> out) {
  for (std::size_t r = 0; r < right.size(); ++r)
    for (std::size_t t = 0; t < 16; ++t) out[r].w[t] = left.w[right[r].w[t]];
}

}  // namespace foulkes::kernels::scalar
