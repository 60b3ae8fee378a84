// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace foulkes::cli {

using Json = nlohmann::ordered_json;

struct BruteCaps {
  int products = 7;
  int inner = 5;
  int tabloids = 5;
};

/// A check returns std::nullopt on success or a counterexample payload. It may
/// also fill an informational payload reported either way.
struct Check {
  std::string name;
  int n = 0;
  std::function<std::optional<Json>(Json& detail)> run;
};

struct CheckResult {
  std::string name;
  int n = 0;
  bool passed = false;
  std::optional<Json> witness;
  Json detail;
  double millis = 0;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Checks of one suite (or of every suite for "all") for n up to n_max.
std::vector<Check> build_suite(const std::string& suite, int n_max, const BruteCaps& caps);

/// Runs checks on the worker pool; results come back in input order.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks);

Json report_json(const std::string& suite, int n_max, const std::vector<CheckResult>& results);

}  // namespace foulkes::cli
