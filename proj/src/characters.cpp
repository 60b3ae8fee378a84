// SPDX-License-Identifier: Apache-2.0
#include "foulkes/characters.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace foulkes {

namespace {

struct ClassData {
  std::vector<Partition> parts;
  std::map<std::vector<int>, std::size_t> index;
  // |C_mu| / n!
  std::vector<Rational> weights;
};

const ClassData& class_data(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ClassData>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<ClassData>();
    slot->parts = partitions(n);
    const Rational order(factorial(n));
    for (std::size_t i = 0; i < slot->parts.size(); ++i) {
      slot->index[slot->parts[i].parts()] = i;
      slot->weights.push_back(Rational(class_size(slot->parts[i])) / order);
    }
  }
  return *slot;
}

void require_same_n(int a, int b) {
  if (a != b) throw std::invalid_argument("class functions of different degree");
}

// Beta-set (abacus) form of the Murnaghan-Nakayama recursion. A partition
// padded to `beads` parts becomes the bit set {lambda_i + beads - 1 - i}.
class MurnaghanNakayama {
 public:
  MurnaghanNakayama(int beads, std::vector<int> cycles) : beads_(beads), cycles_(std::move(cycles)) {
    if (2 * beads_ > 63) throw std::invalid_argument("Murnaghan-Nakayama limited to n <= 31");
  }

  std::uint64_t encode(const Partition& lambda) const {
    std::uint64_t mask = 0;
    for (int i = 0; i < beads_; ++i) {
      int part = i < lambda.length() ? lambda[static_cast<std::size_t>(i)] : 0;
      mask |= std::uint64_t{1} << (part + beads_ - 1 - i);
    }
    return mask;
  }

  long long eval(std::uint64_t mask, std::size_t step) {
    if (step == cycles_.size()) return 1;
    Key key{mask, step};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int r = cycles_[step];
    long long total = 0;
    for (int b = r; b < 64; ++b) {
      const std::uint64_t from = std::uint64_t{1} << b;
      const std::uint64_t to = std::uint64_t{1} << (b - r);
      if (!(mask & from) || (mask & to)) continue;
      const std::uint64_t between = mask & (from - 1) & ~((to << 1) - 1);
      const long long sign = (std::popcount(between) % 2) ? -1 : 1;
      total += sign * eval((mask & ~from) | to, step + 1);
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  struct Key {
    std::uint64_t mask;
    std::size_t step;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return std::hash<std::uint64_t>{}(k.mask * 131 + k.step); }
  };
  int beads_;
  std::vector<int> cycles_;
  std::unordered_map<Key, long long, KeyHash> memo_;
};

// Ways to hand each cycle to a row so that row r receives exactly capacity[r] points.
Integer count_row_assignments(const std::vector<int>& cycles, std::size_t next, std::vector<int>& capacity,
                              std::map<std::pair<std::size_t, std::vector<int>>, Integer>& memo) {
  if (next == cycles.size()) return 1;
  auto key = std::make_pair(next, capacity);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer total = 0;
  for (auto& cap : capacity) {
    if (cap < cycles[next]) continue;
    cap -= cycles[next];
    total += count_row_assignments(cycles, next + 1, capacity, memo);
    cap += cycles[next];
  }
  memo.emplace(std::move(key), total);
  return total;
}

Permutation class_representative(const Partition& mu) {
  std::vector<int> images(static_cast<std::size_t>(mu.size()));
  int start = 0;
  for (int len : mu.parts()) {
    for (int t = 0; t < len; ++t) images[static_cast<std::size_t>(start + t)] = start + (t + 1) % len;
    start += len;
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace

const std::vector<Partition>& classes(int n) { return class_data(n).parts; }

std::size_t class_index(const Partition& mu) {
  const auto& d = class_data(mu.size());
  auto it = d.index.find(mu.parts());
  if (it == d.index.end()) throw std::logic_error("partition missing from class index");
  return it->second;
}

Integer class_size(const Partition& mu) {
  Integer z = 1;
  for (int k = 1; k <= mu.size(); ++k) {
    const int m = mu.multiplicity(k);
    if (m == 0) continue;
    Integer kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    z *= kp * factorial(m);
  }
  return factorial(mu.size()) / z;
}

ClassFunction::ClassFunction(int n) : n_(n), values_(classes(n).size()) {}

ClassFunction::ClassFunction(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != classes(n).size()) throw std::invalid_argument("class function has wrong number of values");
}

const Rational& ClassFunction::at(const Partition& mu) const {
  require_same_n(n_, mu.size());
  return values_[class_index(mu)];
}

bool ClassFunction::depends_only_on_length() const {
  const auto& cls = classes(n_);
  std::vector<const Rational*> by_length(static_cast<std::size_t>(n_) + 1, nullptr);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    auto& slot = by_length[static_cast<std::size_t>(cls[i].length())];
    if (!slot) slot = &values_[i];
    else if (*slot != values_[i]) return false;
  }
  return true;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_n(n_, o.n_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same_n(n_, o.n_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: lambda and mu partition different n");
  const int n = lambda.size();
  if (n == 0) return 1;
  MurnaghanNakayama mn(n, mu.parts());
  return mn.eval(mn.encode(lambda), 0);
}

CharacterTable::CharacterTable(int n) : n_(n), labels_(&classes(n)) {
  const std::size_t p = labels_->size();
  entries_.assign(p * p, 0);
  for (std::size_t m = 0; m < p; ++m) {
    MurnaghanNakayama mn(std::max(n, 1), (*labels_)[m].parts());
    for (std::size_t l = 0; l < p; ++l) entries_[l * p + m] = mn.eval(mn.encode((*labels_)[l]), 0);
  }
}

long long CharacterTable::degree(std::size_t lambda) const {
  // (1^n) is the last class in canonical order.
  return (*this)(lambda, size() - 1);
}

ClassFunction CharacterTable::character(std::size_t lambda) const {
  std::vector<Rational> v(size());
  for (std::size_t m = 0; m < size(); ++m) v[m] = Rational(static_cast<long>((*this)(lambda, m)));
  return ClassFunction(n_, std::move(v));
}

const CharacterTable& character_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<CharacterTable>(n);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(table));
  return *it->second;
}

Rational std_inner(const ClassFunction& f, const ClassFunction& g) {
  require_same_n(f.n(), g.n());
  const auto& weights = class_data(f.n()).weights;
  Rational sum;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (f[i].is_zero() || g[i].is_zero()) continue;
    sum += weights[i] * f[i] * g[i];
  }
  return sum;
}

Rational hook_content_gamma(int i, const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Rational product = 1;
  for (int r = 0; r < lambda.length(); ++r) {
    const int row_len = lambda[static_cast<std::size_t>(r)];
    for (int c = 0; c < row_len; ++c) {
      const int content = c - r;
      const int hook = (row_len - c - 1) + (conj[static_cast<std::size_t>(c)] - r - 1) + 1;
      product *= Rational(Integer(i + 1 + content), Integer(hook));
    }
  }
  return product;
}

ClassFunction induced_trivial(const Partition& lambda) {
  const int n = lambda.size();
  const auto& cls = classes(n);
  std::vector<Rational> values(cls.size());
  for (std::size_t m = 0; m < cls.size(); ++m) {
    std::vector<int> capacity = lambda.parts();
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
    values[m] = Rational(count_row_assignments(cls[m].parts(), 0, capacity, memo));
  }
  return ClassFunction(n, std::move(values));
}

ClassFunction tabloid_character(const std::vector<int>& composition) {
  int n = 0;
  std::vector<int> word;
  for (std::size_t r = 0; r < composition.size(); ++r) {
    if (composition[r] < 0) throw std::invalid_argument("negative composition part");
    n += composition[r];
    word.insert(word.end(), static_cast<std::size_t>(composition[r]), static_cast<int>(r));
  }
  const auto& cls = classes(n);
  std::vector<Permutation> reps;
  reps.reserve(cls.size());
  for (const auto& mu : cls) reps.push_back(class_representative(mu));
  std::vector<long> fixed(cls.size(), 0);
  do {
    for (std::size_t m = 0; m < cls.size(); ++m) {
      bool ok = true;
      for (int t = 0; t < n && ok; ++t)
        ok = word[static_cast<std::size_t>(reps[m](t))] == word[static_cast<std::size_t>(t)];
      fixed[m] += ok;
    }
  } while (std::next_permutation(word.begin(), word.end()));
  std::vector<Rational> values(cls.size());
  for (std::size_t m = 0; m < cls.size(); ++m) values[m] = Rational(fixed[m]);
  return ClassFunction(n, std::move(values));
}

ClassFunction irreducible_by_tabloids(const Partition& lambda) {
  const int n = lambda.size();
  const int len = lambda.length();
  ClassFunction result(n);
  std::vector<int> w(static_cast<std::size_t>(len));
  std::iota(w.begin(), w.end(), 0);
  // det[h_{lambda_i - i + j}] expanded over S_len.
  do {
    std::vector<int> composition;
    bool vanishes = false;
    for (int i = 0; i < len; ++i) {
      const int part = lambda[static_cast<std::size_t>(i)] - i + w[static_cast<std::size_t>(i)];
      if (part < 0) {
        vanishes = true;
        break;
      }
      if (part > 0) composition.push_back(part);
    }
    if (vanishes) continue;
    int inversions = 0;
    for (int a = 0; a < len; ++a)
      for (int b = a + 1; b < len; ++b) inversions += w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)];
    ClassFunction term = tabloid_character(composition);
    if (inversions % 2) result -= term;
    else result += term;
  } while (std::next_permutation(w.begin(), w.end()));
  return result;
}

HCombination::HCombination(int n) : n_(n), coeffs_(classes(n).size()) {}

const Rational& HCombination::coefficient(const Partition& lambda) const {
  require_same_n(n_, lambda.size());
  return coeffs_[class_index(lambda)];
}

void HCombination::add(const Partition& lambda, const Rational& c) {
  require_same_n(n_, lambda.size());
  coeffs_[class_index(lambda)] += c;
}

bool HCombination::is_nonnegative_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer() && c.sign() >= 0; });
}

std::vector<std::pair<Partition, Rational>> HCombination::terms() const {
  std::vector<std::pair<Partition, Rational>> out;
  const auto& cls = classes(n_);
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (!coeffs_[i].is_zero()) out.emplace_back(cls[i], coeffs_[i]);
  return out;
}

std::string HCombination::str() const {
  std::string s;
  for (const auto& [lambda, c] : terms()) {
    if (!s.empty()) s += " + ";
    if (c != Rational(1)) s += c.str() + "*";
    s += "h(" + lambda.str() + ")";
  }
  return s.empty() ? "0" : s;
}

ClassFunction h_to_classfunction(const HCombination& c) {
  ClassFunction f(c.n());
  for (const auto& [lambda, coeff] : c.terms()) f += coeff * induced_trivial(lambda);
  return f;
}

CharacterCertificate is_genuine_character(const ClassFunction& f) {
  const auto& table = character_table(f.n());
  CharacterCertificate cert;
  cert.genuine = true;
  cert.multiplicities.reserve(table.size());
  for (std::size_t l = 0; l < table.size(); ++l) {
    Rational m = std_inner(f, table.character(l));
    if (cert.genuine && (!m.is_integer() || m.sign() < 0)) {
      cert.genuine = false;
      cert.failing = l;
    }
    cert.multiplicities.push_back(std::move(m));
  }
  return cert;
}

}  // namespace foulkes
