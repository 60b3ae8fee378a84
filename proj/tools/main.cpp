// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "foulkes/length_lattice.hpp"
#include "foulkes/products.hpp"
#include "verify.hpp"

namespace {

using namespace foulkes;
using foulkes::cli::Json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json strings(const std::vector<Rational>& v) { return Json(to_strings(v)); }

Json ints(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json multiplicities(int n, const std::vector<Rational>& m) {
  Json out = Json::object();
  const auto& cls = classes(n);
  for (std::size_t i = 0; i < cls.size(); ++i) out[cls[i].str()] = m[i].str();
  return out;
}

std::string csv_cell(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) {
    try {
      out.push_back(Rational::parse(s));
    } catch (const std::exception& e) {
      throw UsageError("cannot parse '" + s + "' as a rational");
    }
  }
  return out;
}

// verify

int cmd_verify(const std::string& suite, int n_max, const cli::BruteCaps& caps) {
  if (!cli::is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
  if (n_max < 1) throw UsageError("--n-max must be positive");
  const auto results = cli::run_checks(cli::build_suite(suite, n_max, caps));
  const Json report = cli::report_json(suite, n_max, results);
  std::cout << report.dump(2) << "\n";
  return report["passed"].get<bool>() ? 0 : kExitFailure;
}

// enumerate

int cmd_enumerate(int n) {
  if (n < 1) throw UsageError("--n must be positive");
  std::size_t count = 0;
  for (const auto& e : fundamental_domain_elements(n)) {
    const auto values = evaluate(e.theta);
    const auto cert = is_genuine_character(values.lift());
    Json line = {{"a", ints(e.a.a)},
                 {"phi", strings(e.theta.coords)},
                 {"values", strings(values.values())},
                 {"multiplicities", multiplicities(n, cert.multiplicities)}};
    std::cout << line.dump() << "\n";
    ++count;
  }
  std::cout << Json{{"count", count}}.dump() << "\n";
  return 0;
}

// param

int cmd_to_theta(const std::vector<std::string>& items, int n) {
  ParamVector a;
  for (const auto& s : items) {
    const auto r = parse_rationals({s})[0];
    if (!r.is_integer() || r.sign() < 0) throw UsageError("parameters must be non-negative integers");
    a.a.push_back(r.numerator());
  }
  if (a.a.empty()) throw UsageError("no parameters given");
  if (n != 0 && n != a.n()) throw UsageError("--n does not match the number of parameters");
  const auto theta = theta_from_params(a);
  const auto values = evaluate(theta);
  const auto cert = is_genuine_character(values.lift());
  const Json out = {{"n", a.n()},
                    {"a", ints(a.a)},
                    {"phi", strings(theta.coords)},
                    {"values", strings(values.values())},
                    {"character", cert.genuine},
                    {"multiplicities", multiplicities(a.n(), cert.multiplicities)}};
  std::cout << out.dump(2) << "\n";
  return cert.genuine ? 0 : kExitFailure;
}

int cmd_from_theta(const std::vector<std::string>& items, const std::string& basis_name_in, int n) {
  Basis basis;
  try {
    basis = parse_basis(basis_name_in);
  } catch (const std::exception&) {
    throw UsageError("unknown basis '" + basis_name_in + "'");
  }
  BasisCoords theta{basis, parse_rationals(items)};
  if (theta.coords.empty()) throw UsageError("no coordinates given");
  if (n != 0 && n != theta.n()) throw UsageError("--n does not match the number of coordinates");
  const auto cert = is_genuine_character(evaluate(theta).lift());
  Json out = {{"n", theta.n()}, {"basis", basis_name(basis)}, {"coords", strings(theta.coords)}};
  if (!cert) {
    const auto idx = *cert.failing;
    out["character"] = false;
    out["irreducible"] = classes(theta.n())[idx].str();
    out["multiplicity"] = cert.multiplicities[idx].str();
    out["multiplicities"] = multiplicities(theta.n(), cert.multiplicities);
    std::cout << out.dump(2) << "\n";
    std::cerr << "error: not a character; multiplicity of chi(" << classes(theta.n())[idx].str() << ") is "
              << cert.multiplicities[idx].str() << "\n";
    return kExitFailure;
  }
  const auto a = params_from_theta(theta);
  out["character"] = true;
  out["a"] = ints(a.a);
  out["phi"] = strings(convert(theta, Basis::phi).coords);
  out["multiplicities"] = multiplicities(theta.n(), cert.multiplicities);
  std::cout << out.dump(2) << "\n";
  return 0;
}

// export

constexpr int kMaxExportBasis = 30;
constexpr int kMaxExportIrr = 20;
constexpr int kMaxExportTensor = 12;

void export_basis(Basis b, int n, bool csv) {
  if (csv) {
    std::cout << "index";
    for (int l = 1; l <= n; ++l) std::cout << ",l=" << l;
    std::cout << "\n";
    for (int i = 0; i < n; ++i) {
      std::cout << i;
      const auto vec = basis_vector(n, b, i);
      for (const auto& v : vec.values()) std::cout << "," << v.str();
      std::cout << "\n";
    }
    return;
  }
  Json rows = Json::array();
  for (int i = 0; i < n; ++i) rows.push_back({{"index", i}, {"values", strings(basis_vector(n, b, i).values())}});
  Json cols = Json::array();
  for (int l = 1; l <= n; ++l) cols.push_back(l);
  std::cout << Json{{"table", basis_name(b)}, {"n", n}, {"lengths", cols}, {"rows", rows}}.dump(2) << "\n";
}

void export_irr(int n, bool csv) {
  const auto& t = character_table(n);
  const auto& labels = t.labels();
  if (csv) {
    std::cout << "lambda";
    for (const auto& mu : labels) std::cout << "," << csv_cell(mu.str());
    std::cout << "\n";
    for (std::size_t l = 0; l < t.size(); ++l) {
      std::cout << csv_cell(labels[l].str());
      for (std::size_t m = 0; m < t.size(); ++m) std::cout << "," << t(l, m);
      std::cout << "\n";
    }
    return;
  }
  Json cls = Json::array(), rows = Json::array();
  for (const auto& mu : labels) cls.push_back(mu.str());
  for (std::size_t l = 0; l < t.size(); ++l) {
    Json vals = Json::array();
    for (std::size_t m = 0; m < t.size(); ++m) vals.push_back(t(l, m));
    rows.push_back({{"lambda", labels[l].str()}, {"values", vals}});
  }
  std::cout << Json{{"table", "irr"}, {"n", n}, {"classes", cls}, {"rows", rows}}.dump(2) << "\n";
}

void export_tensor(int n, bool csv) {
  const auto c = c_formula_tensor(n);
  if (csv) {
    std::cout << "i,j,k,c\n";
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) std::cout << i << "," << j << "," << k << "," << c(i, j, k).get_str() << "\n";
    return;
  }
  Json outer = Json::array();
  for (int i = 0; i < n; ++i) {
    Json mid = Json::array();
    for (int j = 0; j < n; ++j) mid.push_back(ints(c.slice(i, j)));
    outer.push_back(std::move(mid));
  }
  std::cout << Json{{"table", "c-tensor"}, {"n", n}, {"c", outer}}.dump(2) << "\n";
}

int cmd_export(const std::string& table, int n, const std::string& format) {
  if (format != "json" && format != "csv") throw UsageError("unknown format '" + format + "'");
  const bool csv = format == "csv";
  if (n < 1) throw UsageError("--n must be positive");
  if (table == "irr") {
    if (n > kMaxExportIrr) throw UsageError("--n too large for irr (max " + std::to_string(kMaxExportIrr) + ")");
    export_irr(n, csv);
  } else if (table == "c-tensor") {
    if (n > kMaxExportTensor) throw UsageError("--n too large for c-tensor (max " + std::to_string(kMaxExportTensor) + ")");
    export_tensor(n, csv);
  } else if (table == "phi" || table == "gamma" || table == "psi" || table == "omega") {
    if (n > kMaxExportBasis) throw UsageError("--n too large (max " + std::to_string(kMaxExportBasis) + ")");
    export_basis(parse_basis(table), n, csv);
  } else {
    throw UsageError("unknown table '" + table + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Length-dependent characters of the symmetric groups: verification, enumeration and export."};
  app.require_subcommand(1);

  int cap_brute = 0;
  app.add_option("--cap-brute", cap_brute, "Override every brute-force size cap");

  std::string suite;
  int n_max = 8;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "properties-a-h | theorem-1 | theorem-2 | theorem-3 | theorem-4 | prop-gcd | lemma-special | all")
      ->required();
  verify->add_option("--n-max", n_max, "Largest degree checked");
  verify->add_option("--cap-brute", cap_brute, "Override every brute-force size cap");

  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Stream the fundamental-domain characters as JSON lines");
  enumerate->add_option("--n", enum_n, "Degree")->required();

  auto* param = app.add_subcommand("param", "Convert between parameters a and characters");
  param->require_subcommand(1);
  std::vector<std::string> to_items, from_items;
  int param_n = 0;
  std::string from_basis = "phi";
  auto* to_theta = param->add_subcommand("to-theta", "Character for a parameter vector a");
  to_theta->add_option("a", to_items, "Entries a_0 ... a_{n-1}")->required();
  to_theta->add_option("--n", param_n, "Degree (checked against the entry count)");
  auto* from_theta = param->add_subcommand("from-theta", "Parameter vector for a character");
  from_theta->add_option("coords", from_items, "Coordinates as integers or p/q")->required();
  from_theta->add_option("--basis", from_basis, "phi | gamma | psi | omega");
  from_theta->add_option("--n", param_n, "Degree (checked against the coordinate count)");

  std::string table, format = "json";
  int export_n = 0;
  auto* exp = app.add_subcommand("export", "Write a table to stdout");
  exp->add_option("--table", table, "phi | gamma | psi | omega | irr | c-tensor")->required();
  exp->add_option("--n", export_n, "Degree")->required();
  exp->add_option("--format", format, "json | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  cli::BruteCaps caps;
  if (cap_brute != 0) {
    if (cap_brute < 1) {
      std::cerr << "error: --cap-brute must be positive\n";
      return kExitUsage;
    }
    std::cerr << "warning: --cap-brute " << cap_brute << " replaces the default brute-force caps (products " << caps.products
              << ", inner product " << caps.inner << ", tabloids " << caps.tabloids << ")\n";
    caps = {cap_brute, cap_brute, cap_brute};
  }

  try {
    if (*verify) return cmd_verify(suite, n_max, caps);
    if (*enumerate) return cmd_enumerate(enum_n);
    if (*to_theta) return cmd_to_theta(to_items, param_n);
    if (*from_theta) return cmd_from_theta(from_items, from_basis, param_n);
    if (*exp) return cmd_export(table, export_n, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
