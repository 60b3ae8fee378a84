// SPDX-License-Identifier: Apache-2.0
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "foulkes/kernels/perm_kernels.hpp"

namespace foulkes::kernels {

namespace {

Backend initial_backend() {
  Backend best = backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
  if (const char* env = std::getenv("FOULKES_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return Backend::scalar;
    if (want == "avx2" && backend_available(Backend::avx2)) return Backend::avx2;
  }
  return best;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{initial_backend()};
  return b;
}

}  // namespace

Perm16 Perm16::pack(const Permutation& p) {
  if (p.size() > kMaxDegree) throw std::invalid_argument("Perm16 holds at most 16 points");
  Perm16 out{};
  for (int t = 0; t < kMaxDegree; ++t)
    out.w[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(t < p.size() ? p(t) : t);
  return out;
}

Permutation Perm16::unpack(int n) const {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) images[static_cast<std::size_t>(t)] = w[static_cast<std::size_t>(t)];
  return Permutation::from_images(std::move(images));
}

std::string_view backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) {
  if (b == Backend::scalar) return true;
#if defined(FOULKES_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b)) throw std::invalid_argument("backend " + std::string(backend_name(b)) + " unavailable");
  current().store(b, std::memory_order_relaxed);
}

void compose_descents(const Perm16& left, std::span<const Perm16> right, int n, std::span<std::uint8_t> out) {
  if (out.size() < right.size()) throw std::invalid_argument("compose_descents: output too small");
  if (n < 0 || n > kMaxDegree) throw std::invalid_argument("compose_descents: degree out of range");
#if defined(FOULKES_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::compose_descents(left, right, n, out);
#endif
  scalar::compose_descents(left, right, n, out);
}

void compose(const Perm16& left, std::span<const Perm16> right, std::span<Perm16> out) {
  if (out.size() < right.size()) throw std::invalid_argument("compose: output too small");
#if defined(FOULKES_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::compose(left, right, out);
#endif
  scalar::compose(left, right, out);
}

#if !defined(FOULKES_HAVE_AVX2)
namespace avx2 {
void compose_descents(const Perm16&, std::span<const Perm16>, int, std::span<std::uint8_t>) {
  throw std::logic_error("built without AVX2 support");
}
void compose(const Perm16&, std::span<const Perm16>, std::span<Perm16>) {
  throw std::logic_error("built without AVX2 support");
}
}  // namespace avx2
#endif

}  // namespace foulkes::kernels
