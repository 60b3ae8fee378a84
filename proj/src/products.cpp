// SPDX-License-Identifier: Apache-2.0
#include "foulkes/products.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "foulkes/combinatorics.hpp"
#include "foulkes/kernels/perm_kernels.hpp"
#include "foulkes/parallel.hpp"

namespace foulkes {

namespace {

void require_pair(int n, int i, int j) {
  if (n < 1 || i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("structure constant index out of range");
}

int cycle_count16(const kernels::Perm16& p, int n) {
  std::uint32_t seen = 0;
  int cycles = 0;
  for (int s = 0; s < n; ++s) {
    if (seen & (1u << s)) continue;
    ++cycles;
    for (int t = s; !(seen & (1u << t)); t = p.w[static_cast<std::size_t>(t)]) seen |= 1u << t;
  }
  return cycles;
}

Partition cycle_type16(const kernels::Perm16& p, int n) {
  std::uint32_t seen = 0;
  std::vector<int> lengths;
  for (int s = 0; s < n; ++s) {
    if (seen & (1u << s)) continue;
    int len = 0;
    for (int t = s; !(seen & (1u << t)); t = p.w[static_cast<std::size_t>(t)]) {
      seen |= 1u << t;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

// a(x, y, z) = #{(g, h) in K_x x K_y : gh = fixed element of K_z}
struct ClassAlgebra {
  std::size_t p = 0;
  std::vector<Rational> a;
  const Rational& operator()(std::size_t x, std::size_t y, std::size_t z) const { return a[(x * p + y) * p + z]; }
};

const ClassAlgebra& class_algebra(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ClassAlgebra>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (slot) return *slot;
  const auto& table = character_table(n);
  const auto& cls = classes(n);
  const std::size_t p = cls.size();
  std::vector<Integer> sizes;
  for (const auto& c : cls) sizes.push_back(class_size(c));
  const Integer order = factorial(n);
  auto alg = std::make_unique<ClassAlgebra>();
  alg->p = p;
  alg->a.resize(p * p * p);
  for (std::size_t x = 0; x < p; ++x)
    for (std::size_t y = x; y < p; ++y)
      for (std::size_t z = 0; z < p; ++z) {
        Rational sum;
        for (std::size_t l = 0; l < p; ++l) {
          const long long num = table(l, x) * table(l, y) * table(l, z);
          if (num != 0) sum += Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(table.degree(l))));
        }
        const Rational v = sum * Rational(Integer(sizes[x] * sizes[y]), order);
        alg->a[(x * p + y) * p + z] = v;
        alg->a[(y * p + x) * p + z] = v;
      }
  slot = std::move(alg);
  return *slot;
}

std::vector<std::size_t> classes_with_length(int n, int cycles) {
  std::vector<std::size_t> out;
  const auto& cls = classes(n);
  for (std::size_t m = 0; m < cls.size(); ++m)
    if (cls[m].length() == cycles) out.push_back(m);
  return out;
}

}  // namespace

StructureConstants StructureConstants::zero(int n) {
  StructureConstants s;
  s.n = n;
  s.c.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  return s;
}

std::vector<Integer> StructureConstants::slice(int i, int j) const {
  std::vector<Integer> out;
  for (int k = 0; k < n; ++k) out.push_back((*this)(i, j, k));
  return out;
}

std::vector<Integer> c_formula(int n, int i, int j) {
  require_pair(n, i, j);
  std::vector<Integer> out(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    Integer sum = 0;
    for (int u = 0; u <= i; ++u)
      for (int v = 0; v <= j; ++v) {
        Integer term = binom(n + 1, i - u) * binom(n + 1, j - v) * binom(long(u) * v + u + v + n - k, n);
        if ((i - u + j - v) % 2) sum -= term;
        else sum += term;
      }
    if (sum < 0) throw std::logic_error("c_formula produced a negative constant");
    out[static_cast<std::size_t>(k)] = sum;
  }
  return out;
}

StructureConstants c_formula_tensor(int n) {
  auto s = StructureConstants::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto v = c_formula(n, i, j);
      for (int k = 0; k < n; ++k) s(i, j, k) = v[static_cast<std::size_t>(k)];
    }
  return s;
}

std::vector<Integer> c_from_values(int n, int i, int j) {
  require_pair(n, i, j);
  const auto coords = phi_coords(pointwise(phi_vector(n, i), phi_vector(n, j)));
  std::vector<Integer> out;
  for (const auto& r : coords.coords) {
    if (!r.is_integer()) throw std::logic_error("product of Foulkes characters has non-integral coordinate");
    out.push_back(r.numerator());
  }
  return out;
}

StructureConstants c_from_values_tensor(int n) {
  auto s = StructureConstants::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto v = c_from_values(n, i, j);
      for (int k = 0; k < n; ++k) s(i, j, k) = v[static_cast<std::size_t>(k)];
    }
  return s;
}

ZIndependenceViolation::ZIndependenceViolation(int i_, int j_, int k_, Permutation z1_, Permutation z2_, Integer c1,
                                               Integer c2)
    : std::runtime_error("pair count for des(x)=" + std::to_string(i_) + ", des(y)=" + std::to_string(j_) +
                         " differs between targets with des(z)=" + std::to_string(k_) + ": " + c1.get_str() +
                         " vs " + c2.get_str()),
      i(i_), j(j_), k(k_), z1(std::move(z1_)), z2(std::move(z2_)), count1(std::move(c1)), count2(std::move(c2)) {}

StructureConstants c_brute_tensor(int n, int cap) {
  if (n < 1) throw std::invalid_argument("c_brute: n must be positive");
  if (n > cap || n > kernels::kMaxDegree) throw std::invalid_argument("c_brute: n exceeds brute-force cap");
  const auto perms = all_permutations(n);
  const std::size_t count = perms.size();
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<kernels::Perm16> inverses(count);
  std::vector<std::uint8_t> des(count);
  for (std::size_t r = 0; r < count; ++r) {
    inverses[r] = kernels::Perm16::pack(perms[r].inverse());
    des[r] = static_cast<std::uint8_t>(perms[r].descents());
  }

  // tallies[z][des(x) * n + des(y)] for x = z * y^{-1}
  std::vector<std::uint32_t> tallies(count * nn, 0);
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint8_t> des_x(count);
    for (std::size_t z = begin; z < end; ++z) {
      kernels::compose_descents(kernels::Perm16::pack(perms[z]), inverses, n, des_x);
      std::uint32_t* row = &tallies[z * nn];
      for (std::size_t r = 0; r < count; ++r) ++row[des_x[r] * static_cast<std::size_t>(n) + des[r]];
    }
  });

  auto out = StructureConstants::zero(n);
  std::vector<std::ptrdiff_t> reference(static_cast<std::size_t>(n), -1);
  for (std::size_t z = 0; z < count; ++z) {
    const int k = des[z];
    auto& ref = reference[static_cast<std::size_t>(k)];
    if (ref < 0) {
      ref = static_cast<std::ptrdiff_t>(z);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          out(i, j, k) = Integer(static_cast<unsigned long>(tallies[z * nn + static_cast<std::size_t>(i * n + j)]));
      continue;
    }
    for (std::size_t cell = 0; cell < nn; ++cell) {
      const auto a = tallies[static_cast<std::size_t>(ref) * nn + cell];
      const auto b = tallies[z * nn + cell];
      if (a != b)
        throw ZIndependenceViolation(static_cast<int>(cell) / n, static_cast<int>(cell) % n, k,
                                     perms[static_cast<std::size_t>(ref)], perms[z], Integer(static_cast<unsigned long>(a)),
                                     Integer(static_cast<unsigned long>(b)));
    }
  }
  return out;
}

std::vector<Integer> c_brute(int n, int i, int j, int cap) {
  require_pair(n, i, j);
  return c_brute_tensor(n, cap).slice(i, j);
}

Rational ClassProductDistribution::total() const {
  Rational t;
  for (const auto& p : probabilities) t += p;
  return t;
}

Rational class_structure_constant(const Partition& a, const Partition& b, const Partition& c) {
  if (a.size() != b.size() || b.size() != c.size()) throw std::invalid_argument("classes of different degree");
  return class_algebra(a.size())(class_index(a), class_index(b), class_index(c));
}

ClassProductDistribution class_product_distribution(int n, int cycles_a, int cycles_b) {
  if (n < 1 || cycles_a < 1 || cycles_b < 1 || cycles_a > n || cycles_b > n)
    throw std::invalid_argument("class_product_distribution: cycle counts must lie in [1, n]");
  const auto& alg = class_algebra(n);
  const auto& cls = classes(n);
  const auto from_a = classes_with_length(n, cycles_a);
  const auto from_b = classes_with_length(n, cycles_b);
  Integer size_a = 0, size_b = 0;
  for (auto x : from_a) size_a += class_size(cls[x]);
  for (auto y : from_b) size_b += class_size(cls[y]);
  ClassProductDistribution d{n, cycles_a, cycles_b, std::vector<Rational>(cls.size())};
  const Rational pairs(Integer(size_a * size_b));
  for (std::size_t z = 0; z < cls.size(); ++z) {
    Rational hits;
    for (auto x : from_a)
      for (auto y : from_b) hits += alg(x, y, z);
    d.probabilities[z] = hits * Rational(class_size(cls[z])) / pairs;
  }
  return d;
}

ClassProductDistribution class_product_distribution_brute(int n, int cycles_a, int cycles_b) {
  if (n < 1 || n > kernels::kMaxDegree) throw std::invalid_argument("class_product_distribution_brute: bad n");
  std::vector<kernels::Perm16> as, bs;
  for_each_permutation(n, [&](const Permutation& p) {
    const int c = p.cycle_count();
    if (c == cycles_a) as.push_back(kernels::Perm16::pack(p));
    if (c == cycles_b) bs.push_back(kernels::Perm16::pack(p));
  });
  const auto& cls = classes(n);
  std::vector<long> tally(cls.size(), 0);
  std::vector<kernels::Perm16> products(bs.size());
  for (const auto& a : as) {
    kernels::compose(a, bs, products);
    for (const auto& prod : products) ++tally[class_index(cycle_type16(prod, n))];
  }
  ClassProductDistribution d{n, cycles_a, cycles_b, std::vector<Rational>(cls.size())};
  const Integer pairs = Integer(static_cast<long>(as.size())) * static_cast<long>(bs.size());
  for (std::size_t z = 0; z < cls.size(); ++z) d.probabilities[z] = Rational(Integer(tally[z]), pairs);
  return d;
}

RationalMatrix expected_intersections(int n) {
  // sigma C_i cap tau C_j has one element per alpha in C_i with (tau^{-1} sigma) alpha in C_j,
  // and tau^{-1} sigma is a product of two independent uniform n-cycles.
  const auto dist = class_product_distribution(n, 1, 1);
  const auto& alg = class_algebra(n);
  const auto& cls = classes(n);
  RationalMatrix e(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Rational expect;
      for (std::size_t g = 0; g < cls.size(); ++g) {
        if (dist.probabilities[g].is_zero()) continue;
        Rational ways;
        for (auto x : classes_with_length(n, i))
          for (auto y : classes_with_length(n, j)) ways += alg(y, x, g);
        expect += dist.probabilities[g] * ways;
      }
      e(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = expect;
    }
  return e;
}

RationalMatrix expected_intersections_brute(int n, int cap) {
  if (n < 1) throw std::invalid_argument("expected_intersections_brute: n must be positive");
  if (n > cap || n > kernels::kMaxDegree) throw std::invalid_argument("expected_intersections_brute: n exceeds cap");
  std::vector<kernels::Perm16> all, cycles_inv;
  for_each_permutation(n, [&](const Permutation& p) {
    all.push_back(kernels::Perm16::pack(p));
    if (p.cycle_count() == 1) cycles_inv.push_back(kernels::Perm16::pack(p.inverse()));
  });
  std::vector<kernels::Perm16> buf(all.size());
  std::vector<std::vector<int>> lengths(cycles_inv.size(), std::vector<int>(all.size()));
  // lengths[s][pi] = l(sigma_s^{-1} pi): pi lies in sigma_s C_l exactly when that is l.
  for (std::size_t s = 0; s < cycles_inv.size(); ++s) {
    kernels::compose(cycles_inv[s], all, buf);
    for (std::size_t p = 0; p < all.size(); ++p) lengths[s][p] = cycle_count16(buf[p], n);
  }
  std::vector<long> tally(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (std::size_t s = 0; s < cycles_inv.size(); ++s)
    for (std::size_t t = 0; t < cycles_inv.size(); ++t)
      for (std::size_t p = 0; p < all.size(); ++p)
        ++tally[static_cast<std::size_t>((lengths[s][p] - 1) * n + lengths[t][p] - 1)];
  const Integer pairs = Integer(static_cast<long>(cycles_inv.size())) * static_cast<long>(cycles_inv.size());
  RationalMatrix e(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          Rational(Integer(tally[static_cast<std::size_t>(i * n + j)]), pairs);
  return e;
}

namespace {

Rational pair_with(const RationalMatrix& e, const LengthVector& theta, const LengthVector& psi) {
  if (theta.n() != psi.n()) throw std::invalid_argument("foulkes_inner: different degrees");
  const int n = theta.n();
  Rational sum;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto& w = e(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      if (!w.is_zero()) sum += theta.value(i) * psi.value(j) * w;
    }
  return sum / Rational(factorial(n));
}

const RationalMatrix& cached_intersections(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RationalMatrix>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto e = std::make_unique<RationalMatrix>(expected_intersections(n));
  std::lock_guard lock(mu);
  return *cache.emplace(n, std::move(e)).first->second;
}

}  // namespace

Rational foulkes_inner(const LengthVector& theta, const LengthVector& psi) {
  return pair_with(cached_intersections(theta.n()), theta, psi);
}

Rational foulkes_inner_brute(const LengthVector& theta, const LengthVector& psi, int cap) {
  return pair_with(expected_intersections_brute(theta.n(), cap), theta, psi);
}

RationalMatrix foulkes_gram(int n, Basis basis) {
  std::vector<LengthVector> b;
  for (int i = 0; i < n; ++i) b.push_back(basis_vector(n, basis, i));
  RationalMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          foulkes_inner(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
  return g;
}

}  // namespace foulkes
