// SPDX-License-Identifier: Apache-2.0
#include "foulkes/foulkes_basis.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "foulkes/combinatorics.hpp"

namespace foulkes {

namespace {

void require_index(int n, int i, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
  if (i < 0 || i > n - 1) throw std::invalid_argument(std::string(what) + ": index out of range");
}

Integer ipow(long base, int e) {
  Integer r;
  if (base >= 0) {
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  } else {
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(-base), static_cast<unsigned long>(e));
    if (e % 2) r = -r;
  }
  return r;
}

Integer signed_binom(long sign_exp, long u, long v) {
  Integer b = binom(u, v);
  return (sign_exp % 2 != 0) ? Integer(-b) : b;
}

// Row i expresses basis `from` element i in terms of basis `to`: from_i = sum_j E(i, j) to_j.
RationalMatrix expansion(int n, Basis from, Basis to) {
  RationalMatrix e(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  auto fill = [&](auto entry) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) e(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(entry(i, j));
  };
  auto scale_rows = [&](const std::vector<Rational>& s) {
    for (std::size_t i = 0; i < e.rows(); ++i)
      for (std::size_t j = 0; j < e.cols(); ++j) e(i, j) *= s[i];
  };
  auto scale_cols = [&](const std::vector<Rational>& s) {
    for (std::size_t i = 0; i < e.rows(); ++i)
      for (std::size_t j = 0; j < e.cols(); ++j) e(i, j) *= s[j];
  };
  std::vector<Rational> d(static_cast<std::size_t>(n)), inv_d(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    d[static_cast<std::size_t>(k)] = Rational(dk(n, k + 1));
    inv_d[static_cast<std::size_t>(k)] = Rational(1) / d[static_cast<std::size_t>(k)];
  }

  if (from == to) return RationalMatrix::identity(static_cast<std::size_t>(n));
  // omega_k = psi_k / d_{k+1}
  if (from == Basis::omega) {
    e = (to == Basis::psi) ? RationalMatrix::identity(static_cast<std::size_t>(n)) : expansion(n, Basis::psi, to);
    scale_rows(inv_d);
    return e;
  }
  if (to == Basis::omega) {
    e = (from == Basis::psi) ? RationalMatrix::identity(static_cast<std::size_t>(n)) : expansion(n, from, Basis::psi);
    scale_cols(d);
    return e;
  }
  const long nn = n;
  if (from == Basis::phi && to == Basis::gamma)
    fill([&](long i, long j) { return signed_binom(i - j, nn + 1, i - j); });
  else if (from == Basis::gamma && to == Basis::phi)
    fill([&](long i, long j) { return binom(nn + i - j, i - j); });
  else if (from == Basis::psi && to == Basis::gamma)
    fill([&](long i, long j) { return signed_binom(i - j, i + 1, i - j); });
  else if (from == Basis::gamma && to == Basis::psi)
    fill([&](long i, long j) { return binom(i + 1, i - j); });
  else if (from == Basis::phi && to == Basis::psi)
    fill([&](long i, long j) { return signed_binom(i - j, nn - j - 1, i - j); });
  else if (from == Basis::psi && to == Basis::phi)
    fill([&](long i, long j) { return binom(nn - j - 1, i - j); });
  return e;
}

// W(i, l) with r_i = sum_l theta(l) W(i, l).
struct HookProjection {
  RationalMatrix weights;
};

const HookProjection& hook_projection(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<HookProjection>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (slot) return *slot;
  const auto& table = character_table(n);
  const auto& cls = classes(n);
  const Rational order(factorial(n));
  RationalMatrix w(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<int> hook(static_cast<std::size_t>(i) + 1, 1);
    hook[0] = n - i;
    const std::size_t row = class_index(Partition(hook));
    for (std::size_t m = 0; m < cls.size(); ++m) {
      const long long chi = table(row, m);
      if (chi == 0) continue;
      w(static_cast<std::size_t>(i), static_cast<std::size_t>(cls[m].length() - 1)) +=
          Rational(class_size(cls[m])) * Rational(static_cast<long>(chi)) / order;
    }
    const Rational deg(binom(n - 1, i));
    for (int l = 0; l < n; ++l) w(static_cast<std::size_t>(i), static_cast<std::size_t>(l)) /= deg;
  }
  slot = std::make_unique<HookProjection>(HookProjection{std::move(w)});
  return *slot;
}

const RationalMatrix& phi_value_inverse(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RationalMatrix>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (slot) return *slot;
  RationalMatrix values(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto phi = phi_vector(n, i);
    for (int l = 1; l <= n; ++l) values(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(i)) = phi.value(l);
  }
  slot = std::make_unique<RationalMatrix>(values.inverse());
  return *slot;
}

}  // namespace

LengthVector::LengthVector(int n) : n_(n), v_(static_cast<std::size_t>(n)) {}

LengthVector::LengthVector(int n, std::vector<Rational> values) : n_(n), v_(std::move(values)) {
  if (v_.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("length vector needs n values");
}

ClassFunction LengthVector::lift() const {
  const auto& cls = classes(n_);
  std::vector<Rational> values(cls.size());
  for (std::size_t m = 0; m < cls.size(); ++m) values[m] = value(cls[m].length());
  return ClassFunction(n_, std::move(values));
}

LengthVector LengthVector::from_class_function(const ClassFunction& f) {
  if (!f.depends_only_on_length()) throw std::invalid_argument("class function does not depend only on length");
  const auto& cls = classes(f.n());
  LengthVector v(f.n());
  for (std::size_t m = 0; m < cls.size(); ++m) v.value(cls[m].length()) = f[m];
  return v;
}

LengthVector& LengthVector::operator+=(const LengthVector& o) {
  if (n_ != o.n_) throw std::invalid_argument("length vectors of different degree");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

LengthVector& LengthVector::operator-=(const LengthVector& o) {
  if (n_ != o.n_) throw std::invalid_argument("length vectors of different degree");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

LengthVector& LengthVector::operator*=(const Rational& s) {
  for (auto& x : v_) x *= s;
  return *this;
}

LengthVector pointwise(const LengthVector& a, const LengthVector& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("length vectors of different degree");
  LengthVector c(a.n_);
  for (std::size_t i = 0; i < a.v_.size(); ++i) c.v_[i] = a.v_[i] * b.v_[i];
  return c;
}

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::phi: return "phi";
    case Basis::gamma: return "gamma";
    case Basis::psi: return "psi";
    case Basis::omega: return "omega";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  for (Basis b : {Basis::phi, Basis::gamma, Basis::psi, Basis::omega})
    if (basis_name(b) == name) return b;
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

bool BasisCoords::is_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r.is_integer(); });
}

long dk(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("dk requires 1 <= k <= n");
  return k / std::gcd(n, k);
}

LengthVector gamma_vector(int n, int k) {
  require_index(n, k, "gamma_vector");
  LengthVector v(n);
  for (int l = 1; l <= n; ++l) v.value(l) = Rational(ipow(k + 1, l));
  return v;
}

LengthVector phi_vector(int n, int i) {
  require_index(n, i, "phi_vector");
  LengthVector v(n);
  for (int l = 1; l <= n; ++l) {
    Integer sum = 0;
    for (int j = 0; j <= i; ++j) sum += signed_binom(i - j, n + 1, i - j) * ipow(j + 1, l);
    v.value(l) = Rational(sum);
  }
  return v;
}

LengthVector psi_vector(int n, int i) {
  require_index(n, i, "psi_vector");
  LengthVector v(n);
  for (int l = 1; l <= n; ++l) {
    Integer sum = 0;
    for (int j = 0; j <= n - 1; ++j) sum += signed_binom(i - j, i + 1, i - j) * ipow(j + 1, l);
    v.value(l) = Rational(sum);
  }
  return v;
}

LengthVector omega_vector(int n, int k) {
  require_index(n, k, "omega_vector");
  return Rational(Integer(1), Integer(dk(n, k + 1))) * psi_vector(n, k);
}

LengthVector basis_vector(int n, Basis b, int index) {
  switch (b) {
    case Basis::phi: return phi_vector(n, index);
    case Basis::gamma: return gamma_vector(n, index);
    case Basis::psi: return psi_vector(n, index);
    case Basis::omega: return omega_vector(n, index);
  }
  throw std::invalid_argument("unknown basis");
}

LengthVector regular_character(int n) {
  LengthVector v(n);
  v.value(n) = Rational(factorial(n));
  return v;
}

RationalMatrix basis_matrix(int n, Basis from, Basis to) {
  if (n < 1) throw std::invalid_argument("basis_matrix: n must be positive");
  return expansion(n, from, to).transpose();
}

BasisCoords convert(const BasisCoords& c, Basis to) {
  if (c.basis == to) return c;
  return BasisCoords{to, basis_matrix(c.n(), c.basis, to).apply(c.coords)};
}

LengthVector evaluate(const BasisCoords& c) {
  const int n = c.n();
  LengthVector sum(n);
  for (int i = 0; i < n; ++i) {
    const auto& r = c.coords[static_cast<std::size_t>(i)];
    if (!r.is_zero()) sum += r * basis_vector(n, c.basis, i);
  }
  return sum;
}

BasisCoords phi_coords(const LengthVector& theta) {
  return BasisCoords{Basis::phi, hook_projection(theta.n()).weights.apply(theta.values())};
}

BasisCoords phi_coords_by_solve(const LengthVector& theta) {
  return BasisCoords{Basis::phi, phi_value_inverse(theta.n()).apply(theta.values())};
}

HCombination ch_psi(int n, int k) {
  require_index(n, k, "ch_psi");
  HCombination h(n);
  for (const auto& lambda : partitions_by_length(n, k + 1)) h.add(lambda, Rational(multinomial_M(lambda)));
  return h;
}

HCombination ch_gamma(int n, int j) {
  require_index(n, j, "ch_gamma");
  HCombination h(n);
  for (const auto& lambda : classes(n)) {
    Integer c = binom(j + 1, lambda.length()) * multinomial_M(lambda);
    if (c != 0) h.add(lambda, Rational(c));
  }
  return h;
}

LengthVector restrict_length(const LengthVector& theta) {
  if (theta.n() < 2) throw std::invalid_argument("restrict_length requires n >= 2");
  LengthVector r(theta.n() - 1);
  for (int l = 1; l <= theta.n() - 1; ++l) r.value(l) = theta.value(l + 1);
  return r;
}

}  // namespace foulkes
