// SPDX-License-Identifier: Apache-2.0
#include "foulkes/length_lattice.hpp"

#include <numeric>

#include "foulkes/combinatorics.hpp"

namespace foulkes {

namespace {

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

void require_genuine(const ClassFunction& f) {
  auto cert = is_genuine_character(f);
  if (!cert) {
    const auto idx = *cert.failing;
    throw NotACharacter(classes(f.n())[idx], cert.multiplicities[idx]);
  }
}

}  // namespace

bool ParamVector::is_restricted() const {
  for (int k = 0; k < n(); ++k) {
    const auto& x = a[static_cast<std::size_t>(k)];
    if (x < 0 || x >= dk(n(), k + 1)) return false;
  }
  return true;
}

NotACharacter::NotACharacter(Partition irreducible, Rational multiplicity)
    : std::runtime_error("not a character: multiplicity of chi(" + irreducible.str() + ") is " + multiplicity.str()),
      irreducible_(std::move(irreducible)),
      multiplicity_(std::move(multiplicity)) {}

BasisCoords theta_from_params(const ParamVector& a) {
  const int n = a.n();
  if (n < 1) throw std::invalid_argument("theta_from_params: empty parameter");
  for (const auto& x : a.a)
    if (x < 0) throw std::invalid_argument("theta_from_params: entries must be non-negative");
  std::vector<Rational> scaled(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    scaled[static_cast<std::size_t>(j)] = Rational(a.a[static_cast<std::size_t>(j)], Integer(dk(n, j + 1)));
  BasisCoords out{Basis::phi, std::vector<Rational>(static_cast<std::size_t>(n))};
  for (int k = 0; k < n; ++k) {
    Rational s;
    for (int j = k; j < n; ++j) {
      const Integer b = binom(n - k - 1, j - k);
      if (b != 0) s += Rational(b) * scaled[static_cast<std::size_t>(j)];
    }
    out.coords[static_cast<std::size_t>(k)] = Rational(scaled[static_cast<std::size_t>(k)].floor()) + s.frac();
  }
  return out;
}

ParamVector params_from_theta(const BasisCoords& theta) {
  const BasisCoords phi = convert(theta, Basis::phi);
  const int n = phi.n();
  require_genuine(evaluate(phi).lift());

  BasisCoords fractional{Basis::phi, {}};
  std::vector<Integer> floors;
  for (const auto& r : phi.coords) {
    floors.push_back(r.floor());
    fractional.coords.push_back(r.frac());
  }
  const BasisCoords omega = convert(fractional, Basis::omega);
  if (!omega.is_integral()) throw std::logic_error("fractional part has non-integral omega coordinates");

  ParamVector a;
  for (int k = 0; k < n; ++k) {
    const Integer d(dk(n, k + 1));
    const auto c = omega.coords[static_cast<std::size_t>(k)].numerator();
    a.a.push_back(d * floors[static_cast<std::size_t>(k)] + mod_floor(c, d));
  }
  return a;
}

ParamVector params_from_theta(const ClassFunction& theta) {
  require_genuine(theta);
  return params_from_theta(phi_coords(LengthVector::from_class_function(theta)));
}

ConeDecomposition cone_decompose(const BasisCoords& theta) {
  const BasisCoords phi = convert(theta, Basis::phi);
  require_genuine(evaluate(phi).lift());
  ConeDecomposition out{{Basis::phi, {}}, {Basis::phi, {}}};
  for (const auto& r : phi.coords) {
    out.theta_F.coords.emplace_back(r.floor());
    out.theta_P.coords.push_back(r.frac());
  }
  if (!is_genuine_character(evaluate(out.theta_P).lift()))
    throw std::logic_error("fractional part of a character is not a character");
  return out;
}

std::vector<ParamVector> restricted_params(int n) {
  if (n < 1) throw std::invalid_argument("restricted_params: n must be positive");
  std::vector<long> bound(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) bound[static_cast<std::size_t>(k)] = dk(n, k + 1);
  std::vector<long> cur(static_cast<std::size_t>(n), 0);
  std::vector<ParamVector> out;
  while (true) {
    ParamVector p;
    for (long x : cur) p.a.emplace_back(x);
    out.push_back(std::move(p));
    int k = n - 1;
    while (k >= 0 && ++cur[static_cast<std::size_t>(k)] == bound[static_cast<std::size_t>(k)]) {
      cur[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

std::vector<DomainElement> fundamental_domain_elements(int n) {
  std::vector<DomainElement> out;
  for (auto& a : restricted_params(n)) {
    auto theta = theta_from_params(a);
    out.push_back({std::move(a), std::move(theta)});
  }
  return out;
}

std::vector<BasisCoords> fundamental_domain(int n) {
  std::vector<BasisCoords> out;
  for (auto& e : fundamental_domain_elements(n)) out.push_back(std::move(e.theta));
  return out;
}

Integer lattice_index(int n) {
  if (n < 1) throw std::invalid_argument("lattice_index: n must be positive");
  Integer p = 1;
  for (int k = 1; k <= n; ++k) p *= dk(n, k);
  return p;
}

Integer lattice_index_closed_form(int n) {
  Integer denom = 1;
  for (int k = 1; k <= n; ++k) denom *= std::gcd(k, n);
  return factorial(n) / denom;
}

Integer sigma_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("sigma: n must be positive");
  Integer l = 1;
  for (int k = 1; k <= n; ++k) l = lcm(l, Integer(k));
  return l / n;
}

Integer sigma_n(int n) {
  if (n < 1) throw std::invalid_argument("sigma_n: n must be positive");
  Integer l = 1;
  for (int k = 1; k <= n; ++k) l = lcm(l, Integer(dk(n, k)));
  if (l != sigma_closed_form(n)) throw std::logic_error("lcm(d_k) disagrees with lcm(1..n)/n");
  return l;
}

bool SigmaMinimality::minimal() const {
  if (!clears_all) return false;
  for (const auto& [m, witness] : divisors)
    if (!witness) return false;
  return true;
}

SigmaMinimality check_sigma_minimality(int n) {
  SigmaMinimality out;
  out.sigma = sigma_n(n);
  const auto domain = fundamental_domain(n);
  auto first_uncleared = [&](const Integer& m) -> std::optional<std::size_t> {
    const Rational factor(m);
    for (std::size_t i = 0; i < domain.size(); ++i)
      for (const auto& c : domain[i].coords)
        if (!(factor * c).is_integer()) return i;
    return std::nullopt;
  };
  out.clear_failure = first_uncleared(out.sigma);
  out.clears_all = !out.clear_failure;
  for (Integer m = 1; m < out.sigma; ++m)
    if (out.sigma % m == 0) out.divisors.emplace_back(m, first_uncleared(m));
  return out;
}

bool is_in_Y(const LengthVector& theta) {
  const ClassFunction f = theta.lift();
  const auto& table = character_table(theta.n());
  for (std::size_t l = 0; l < table.size(); ++l)
    if (!std_inner(f, table.character(l)).is_integer()) return false;
  return true;
}

SpecialTheta special_theta(int n) {
  if (n < 2) throw std::invalid_argument("special_theta requires n >= 2");
  SpecialTheta out{LengthVector(n), HCombination(n)};
  Integer power = 1;
  for (int l = 1; l <= n; ++l) {
    out.values.value(l) = Rational(power);
    power *= n - 1;
  }
  const Rational inv(Integer(1), Integer(n - 1));
  for (const auto& lambda : classes(n)) {
    const Integer c = binom(n - 1, lambda.length()) * multinomial_M(lambda);
    if (c != 0) out.expansion.add(lambda, Rational(c) * inv);
  }
  if (!out.expansion.is_nonnegative_integral()) throw std::logic_error("special character expansion is not integral");
  if (!is_genuine_character(out.values.lift())) throw std::logic_error("special class function is not a character");
  return out;
}

Rational gamma_box_closed_form(int n, int j) {
  if (j <= n - 4) return 0;
  const Integer m(n);
  if (j == n - 3) return Rational(Integer((m - 2) * (m - 3)), Integer(2));
  if (j == n - 2) return Rational(Integer(m * (m - 1) * (m - 3)), Integer(2));
  return Rational(Integer(m * m * (m + 1) * (m - 3)), Integer(4));
}

NoBetterWitness no_better_witness_routes(int n) {
  if (n < 4) throw std::invalid_argument("no_better_witness requires n >= 4");
  const int target = n - 2;
  std::vector<int> nu_parts(static_cast<std::size_t>(n - 2), 1);
  nu_parts[0] = nu_parts[1] = 2;
  const Partition nu(nu_parts);

  NoBetterWitness w;
  // c_j = binom(2n-2-j, n) / (n-1)
  const Rational c_closed = Rational(binom(2L * n - 2 - target, n), Integer(n - 1));
  Rational bracket;
  for (int j = 0; j < n; ++j) {
    const Integer b = binom(n + 1, target - j);
    if (b == 0) continue;
    const Rational term = Rational(b) * gamma_box_closed_form(n, j);
    bracket += ((target - j) % 2) ? -term : term;
  }
  w.closed_form = c_closed * bracket;

  // theta = gamma_{n-2} / (n-1), expanded in phi via the gamma -> phi matrix.
  BasisCoords theta{Basis::gamma, std::vector<Rational>(static_cast<std::size_t>(n))};
  theta.coords[static_cast<std::size_t>(target)] = Rational(Integer(1), Integer(n - 1));
  w.coefficient = convert(theta, Basis::phi).coords[static_cast<std::size_t>(target)];
  const RationalMatrix phi_to_gamma = basis_matrix(n, Basis::phi, Basis::gamma);
  Rational pairing;
  for (int j = 0; j < n; ++j) {
    const Rational& e = phi_to_gamma(static_cast<std::size_t>(j), static_cast<std::size_t>(target));
    if (!e.is_zero()) pairing += e * hook_content_gamma(j, nu);
  }
  w.via_hook_content = w.coefficient * pairing;

  const ClassFunction scaled = w.coefficient * phi_vector(n, target).lift();
  w.via_character_table = std_inner(scaled, character_table(n).character(nu));
  return w;
}

Rational no_better_witness(int n) {
  const auto w = no_better_witness_routes(n);
  if (w.closed_form != w.via_hook_content || w.via_hook_content != w.via_character_table)
    throw std::logic_error("no_better_witness: routes disagree");
  if (w.via_character_table.is_integer()) throw std::logic_error("no_better_witness: value is an integer");
  return w.via_character_table;
}

}  // namespace foulkes
