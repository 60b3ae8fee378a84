// SPDX-License-Identifier: Apache-2.0
#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "foulkes/length_lattice.hpp"
#include "foulkes/parallel.hpp"
#include "foulkes/products.hpp"

namespace foulkes::cli {

namespace {

Json strings(const std::vector<Rational>& v) { return Json(to_strings(v)); }

Json ints(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json one_line(const Permutation& p) {
  Json out = Json::array();
  for (int x : p.images()) out.push_back(x + 1);
  return out;
}

std::optional<Json> fail(std::string what, Json detail = Json::object()) {
  Json w = Json::object();
  w["reason"] = std::move(what);
  for (auto& [k, v] : detail.items()) w[k] = v;
  return w;
}

constexpr Basis kBases[] = {Basis::phi, Basis::gamma, Basis::psi, Basis::omega};

void properties(std::vector<Check>& out, int n_max, const BruteCaps& caps) {
  for (int n = 1; n <= n_max; ++n) {
    out.push_back({"a-degrees-eulerian", n, [n](Json&) -> std::optional<Json> {
                     for (int i = 0; i < n; ++i)
                       if (phi_vector(n, i).value(n) != Rational(eulerian(n, i)))
                         return fail("degree differs from Eulerian number", {{"i", i}});
                     return std::nullopt;
                   }});
    if (n <= 7)
      out.push_back({"b-basis-characters", n, [n](Json&) -> std::optional<Json> {
                       for (Basis b : kBases)
                         for (int i = 0; i < n; ++i) {
                           const auto cert = is_genuine_character(basis_vector(n, b, i).lift());
                           if (!cert)
                             return fail("not a character", {{"basis", basis_name(b)},
                                                             {"index", i},
                                                             {"irreducible", classes(n)[*cert.failing].str()},
                                                             {"multiplicity", cert.multiplicities[*cert.failing].str()}});
                         }
                       return std::nullopt;
                     }});
    out.push_back({"c-regular-sum", n, [n](Json&) -> std::optional<Json> {
                     LengthVector s(n);
                     for (int i = 0; i < n; ++i) s += phi_vector(n, i);
                     if (s != regular_character(n)) return fail("sum of phi_i is not the regular character", {{"values", strings(s.values())}});
                     return std::nullopt;
                   }});
    out.push_back({"d-basis-inverses", n, [n](Json&) -> std::optional<Json> {
                     const auto id = RationalMatrix::identity(static_cast<std::size_t>(n));
                     for (Basis a : kBases)
                       for (Basis b : kBases)
                         if (!(basis_matrix(n, b, a) * basis_matrix(n, a, b) == id))
                           return fail("conversions are not inverse", {{"from", basis_name(a)}, {"to", basis_name(b)}});
                     return std::nullopt;
                   }});
    if (n >= 2)
      out.push_back({"e-branching", n, [n](Json&) -> std::optional<Json> {
                       for (int i = 0; i < n; ++i) {
                         LengthVector want(n - 1);
                         if (i >= 1) want += Rational(n - i) * phi_vector(n - 1, i - 1);
                         if (i <= n - 2) want += Rational(i + 1) * phi_vector(n - 1, i);
                         const auto got = restrict_length(phi_vector(n, i));
                         if (got != want)
                           return fail("branching rule fails", {{"i", i}, {"got", strings(got.values())}, {"want", strings(want.values())}});
                       }
                       return std::nullopt;
                     }});
    if (n <= 9)
      out.push_back({"f-omega-integrality", n, [n](Json&) -> std::optional<Json> {
                       for (const auto& e : fundamental_domain_elements(n)) {
                         const auto w = convert(e.theta, Basis::omega);
                         if (!w.is_integral()) return fail("non-integral omega coordinates", {{"a", ints(e.a.a)}, {"omega", strings(w.coords)}});
                       }
                       return std::nullopt;
                     }});
    if (n <= caps.tabloids)
      out.push_back({"mn-vs-tabloids", n, [n](Json&) -> std::optional<Json> {
                       const auto& t = character_table(n);
                       for (std::size_t l = 0; l < t.size(); ++l)
                         if (t.character(l) != irreducible_by_tabloids(t.labels()[l]))
                           return fail("character table row disagrees with tabloid oracle", {{"lambda", t.labels()[l].str()}});
                       return std::nullopt;
                     }});
    if (n <= 12)
      out.push_back({"g-formula-vs-values", n, [n](Json&) -> std::optional<Json> {
                       const auto a = c_formula_tensor(n);
                       const auto b = c_from_values_tensor(n);
                       for (int i = 0; i < n; ++i)
                         for (int j = 0; j < n; ++j)
                           if (a.slice(i, j) != b.slice(i, j))
                             return fail("structure constants differ", {{"i", i}, {"j", j}, {"formula", ints(a.slice(i, j))}, {"values", ints(b.slice(i, j))}});
                       return std::nullopt;
                     }});
    if (n <= caps.products)
      out.push_back({"g-brute-force", n, [n, caps](Json&) -> std::optional<Json> {
                       try {
                         const auto brute = c_brute_tensor(n, caps.products);
                         if (!(brute == c_formula_tensor(n))) return fail("enumerated constants differ from formula");
                       } catch (const ZIndependenceViolation& e) {
                         return fail("count depends on the target", {{"i", e.i}, {"j", e.j}, {"k", e.k},
                                                                       {"z1", one_line(e.z1)}, {"z2", one_line(e.z2)},
                                                                       {"count1", e.count1.get_str()}, {"count2", e.count2.get_str()}});
                       }
                       return std::nullopt;
                     }});
    if (n <= 6)
      out.push_back({"h-orthonormal", n, [n](Json&) -> std::optional<Json> {
                       const auto g = foulkes_gram(n, Basis::phi);
                       for (std::size_t i = 0; i < g.rows(); ++i)
                         for (std::size_t j = 0; j < g.cols(); ++j)
                           if (g(i, j) != Rational(i == j ? 1 : 0))
                             return fail("Gram entry", {{"i", i}, {"j", j}, {"value", g(i, j).str()}});
                       return std::nullopt;
                     }});
    if (n <= caps.inner)
      out.push_back({"h-literal-intersections", n, [n, caps](Json&) -> std::optional<Json> {
                       if (!(expected_intersections_brute(n, caps.inner) == expected_intersections(n)))
                         return fail("enumerated intersections differ from class algebra");
                       return std::nullopt;
                     }});
  }
}

void theorem1(std::vector<Check>& out, int n_max) {
  for (int n = 4; n <= n_max; ++n)
    out.push_back({"witness-non-integral", n, [n](Json& detail) -> std::optional<Json> {
                     const auto w = no_better_witness_routes(n);
                     Json d = {{"coefficient", w.coefficient.str()},
                               {"closed_form", w.closed_form.str()},
                               {"via_hook_content", w.via_hook_content.str()},
                               {"via_character_table", w.via_character_table.str()}};
                     detail = d;
                     if (w.closed_form != w.via_hook_content || w.via_hook_content != w.via_character_table)
                       return fail("routes disagree", d);
                     if (w.via_character_table.is_integer()) return fail("witness is an integer", d);
                     return std::nullopt;
                   }});
}

void theorem2(std::vector<Check>& out, int n_max) {
  for (int n = 1; n <= std::min(n_max, 6); ++n)
    out.push_back({"roundtrip-box", n, [n](Json&) -> std::optional<Json> {
                     std::vector<long> bound, cur(static_cast<std::size_t>(n), 0);
                     for (int k = 0; k < n; ++k) bound.push_back(2 * dk(n, k + 1));
                     std::set<std::vector<std::string>> seen;
                     std::size_t count = 0;
                     while (true) {
                       ParamVector a;
                       for (long x : cur) a.a.emplace_back(x);
                       const auto theta = theta_from_params(a);
                       const auto back = params_from_theta(theta);
                       if (!(back == a)) return fail("roundtrip changed parameters", {{"a", ints(a.a)}, {"back", ints(back.a)}});
                       seen.insert(to_strings(theta.coords));
                       ++count;
                       if (seen.size() != count) return fail("two parameters give the same character", {{"a", ints(a.a)}});
                       int k = n - 1;
                       while (k >= 0 && ++cur[static_cast<std::size_t>(k)] == bound[static_cast<std::size_t>(k)])
                         cur[static_cast<std::size_t>(k--)] = 0;
                       if (k < 0) break;
                     }
                     return std::nullopt;
                   }});
}

void theorem3(std::vector<Check>& out, int n_max) {
  for (int n = 1; n <= n_max; ++n)
    out.push_back({"fundamental-domain-count", n, [n](Json&) -> std::optional<Json> {
                     const auto dom = fundamental_domain_elements(n);
                     const Integer want = lattice_index_closed_form(n);
                     if (Integer(static_cast<unsigned long>(dom.size())) != want || lattice_index(n) != want)
                       return fail("count mismatch", {{"enumerated", dom.size()}, {"closed_form", want.get_str()}});
                     std::set<std::vector<std::string>> seen;
                     for (const auto& e : dom) {
                       if (!seen.insert(to_strings(e.theta.coords)).second) return fail("repeated element", {{"a", ints(e.a.a)}});
                       const auto cert = is_genuine_character(evaluate(e.theta).lift());
                       if (!cert)
                         return fail("element is not a character", {{"a", ints(e.a.a)},
                                                                    {"irreducible", classes(n)[*cert.failing].str()},
                                                                    {"multiplicity", cert.multiplicities[*cert.failing].str()}});
                     }
                     return std::nullopt;
                   }});
}

void theorem4(std::vector<Check>& out, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    out.push_back({"sigma-closed-form", n, [n](Json&) -> std::optional<Json> {
                     try {
                       sigma_n(n);
                     } catch (const std::logic_error&) {
                       return fail("lcm of d_k differs from lcm(1..n)/n");
                     }
                     return std::nullopt;
                   }});
    if (n <= 9)
      out.push_back({"sigma-minimal", n, [n](Json&) -> std::optional<Json> {
                       const auto m = check_sigma_minimality(n);
                       if (!m.clears_all) return fail("sigma leaves a denominator", {{"sigma", m.sigma.get_str()}, {"element", *m.clear_failure}});
                       for (const auto& [d, witness] : m.divisors)
                         if (!witness) return fail("a proper divisor clears every element", {{"divisor", d.get_str()}});
                       return std::nullopt;
                     }});
  }
}

void prop_gcd(std::vector<Check>& out, int n_max) {
  for (int n = 1; n <= n_max; ++n)
    out.push_back({"gcd-enumeration", n, [n](Json&) -> std::optional<Json> {
                     for (int k = 1; k <= n; ++k)
                       if (Integer(part_gcd_enumerated(n, k)) != Integer(part_gcd(n, k)))
                         return fail("gcd mismatch", {{"k", k}, {"enumerated", Integer(part_gcd_enumerated(n, k)).get_str()}, {"closed_form", Integer(part_gcd(n, k)).get_str()}});
                     return std::nullopt;
                   }});
}

void lemma_special(std::vector<Check>& out, int n_max) {
  for (int n = 2; n <= n_max; ++n)
    out.push_back({"special-character", n, [n](Json&) -> std::optional<Json> {
                     try {
                       const auto s = special_theta(n);
                       if (h_to_classfunction(s.expansion) != s.values.lift()) return fail("expansion does not reproduce the values");
                     } catch (const std::logic_error& e) {
                       return fail(e.what());
                     }
                     return std::nullopt;
                   }});
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"properties-a-h", "theorem-1", "theorem-2", "theorem-3",
                                                 "theorem-4",      "prop-gcd",  "lemma-special", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& s = suite_names();
  return std::find(s.begin(), s.end(), name) != s.end();
}

std::vector<Check> build_suite(const std::string& suite, int n_max, const BruteCaps& caps) {
  std::vector<Check> out;
  const bool all = suite == "all";
  if (all || suite == "properties-a-h") properties(out, n_max, caps);
  if (all || suite == "theorem-1") theorem1(out, n_max);
  if (all || suite == "theorem-2") theorem2(out, n_max);
  if (all || suite == "theorem-3") theorem3(out, n_max);
  if (all || suite == "theorem-4") theorem4(out, n_max);
  if (all || suite == "prop-gcd") prop_gcd(out, n_max);
  if (all || suite == "lemma-special") lemma_special(out, n_max);
  return out;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks) {
  std::vector<CheckResult> results(checks.size());
  parallel_for(checks.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto& r = results[i];
      r.name = checks[i].name;
      r.n = checks[i].n;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        r.witness = checks[i].run(r.detail);
      } catch (const std::exception& e) {
        r.witness = Json{{"reason", "exception"}, {"what", e.what()}};
      }
      r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      r.passed = !r.witness;
    }
  });
  return results;
}

Json report_json(const std::string& suite, int n_max, const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    Json c = {{"check", r.name}, {"n", r.n}, {"status", r.passed ? "pass" : "fail"}, {"millis", r.millis}};
    if (!r.detail.is_null()) c["detail"] = r.detail;
    if (r.witness) c["witness"] = *r.witness;
    ok = ok && r.passed;
    checks.push_back(std::move(c));
  }
  return Json{{"suite", suite}, {"n_max", n_max}, {"passed", ok}, {"checks", std::move(checks)}};
}

}  // namespace foulkes::cli
