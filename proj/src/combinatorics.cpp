// SPDX-License-Identifier: Apache-2.0
#include "foulkes/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace foulkes {

Integer binom(long u, long v) {
  if (v < 0 || u < v) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(u), static_cast<unsigned long>(v));
  return r;
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts_.empty()) {
    for (int col = 1; col <= parts_.front(); ++col) {
      int h = 0;
      while (h < length() && parts_[static_cast<std::size_t>(h)] >= col) ++h;
      c.push_back(h);
    }
  }
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool CanonicalOrder::operator()(const Partition& a, const Partition& b) const {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                      a.parts().end());
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions of negative number");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_by_length(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("partitions_by_length requires 1 <= k <= n");
  std::vector<Partition> out;
  for (auto& p : partitions(n))
    if (p.length() == k) out.push_back(std::move(p));
  return out;
}

Integer multinomial_M(const Partition& lambda) {
  Integer r = factorial(lambda.length());
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    r /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

long part_gcd(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("part_gcd requires 1 <= k <= n");
  return k / std::gcd(n, k);
}

Integer part_gcd_enumerated(int n, int k) {
  Integer g = 0;
  for (const auto& p : partitions_by_length(n, k)) g = gcd(g, multinomial_M(p));
  return g;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.w_.resize(static_cast<std::size_t>(n));
  std::iota(p.w_.begin(), p.w_.end(), 0);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  p.w_ = std::move(images);
  return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& one_line) {
  std::vector<int> images(one_line.size());
  for (std::size_t i = 0; i < one_line.size(); ++i) images[i] = one_line[i] - 1;
  return from_images(std::move(images));
}

int Permutation::descents() const {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w_.size(); ++i) d += w_[i] > w_[i + 1];
  return d;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(w_.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < w_.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(w_[t])) seen[t] = true;
  }
  return cycles;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(w_.size(), false);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < w_.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(w_[t])) {
      seen[t] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.w_.resize(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) p.w_[static_cast<std::size_t>(w_[i])] = static_cast<int>(i);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
  Permutation c;
  c.w_.resize(a.w_.size());
  for (std::size_t t = 0; t < a.w_.size(); ++t) c.w_[t] = a.w_[static_cast<std::size_t>(b.w_[t])];
  return c;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& f) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  do {
    f(Permutation::from_images(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

Integer eulerian(int n, int i) {
  if (n < 0) throw std::invalid_argument("eulerian of negative n");
  if (n == 0) return i == 0 ? 1 : 0;
  if (i < 0 || i > n - 1) return 0;
  // A(m, k) = (k + 1) A(m-1, k) + (m - k) A(m-1, k-1)
  std::vector<Integer> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < m; ++k) {
      Integer v = 0;
      if (k < m - 1) v += (k + 1) * row[static_cast<std::size_t>(k)];
      if (k >= 1) v += (m - k) * row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = v;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

}  // namespace foulkes
