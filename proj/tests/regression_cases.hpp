// Copyright 2026 The cqbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Stored CLI outputs for the fixture files, and a numeric comparison of
// fresh output against them.

#ifndef CQBOUNDS_TESTS_REGRESSION_CASES_HPP_
#define CQBOUNDS_TESTS_REGRESSION_CASES_HPP_

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cqbounds/cli.hpp"
#include "cqbounds/json_io.hpp"
#include "test_support.hpp"

namespace cqbounds::testing {

struct RegressionCase {
  std::string name;  // expected/<name>.<format>
  std::string format;
  std::vector<std::string> args;  // "@file" expands to a fixture path
};

inline std::vector<RegressionCase> regression_cases() {
  return {
      {"divergence_plus_diag", "json",
       {"divergence", "@rho_a.json", "@sigma_a.json", "--which", "psi,renyi,relent,chernoff,smax,sinf"}},
      {"divergence_hoeffding_sweep", "json",
       {"divergence", "@rho_a.json", "@sigma_a.json", "--which", "hoeffding", "--r", "0:0.1:1"}},
      {"capacity_depolarizing", "json",
       {"capacity", "@depolarizing_2_05.json", "--which", "holevo,hoeffding,chernoff,max", "--r", "0,1"}},
      {"capacity_noiseless", "json", {"capacity", "@noiseless_2.json"}},
      {"bounds_depolarizing", "csv",
       {"bounds", "@depolarizing_2_05.json", "--epsilon", "0.2", "--c", "1", "--r", "0.01", "--n", "100"}},
      {"bounds_noiseless_scan", "csv", {"bounds", "@noiseless_2.json", "--epsilon", "0.2"}},
      {"brute_depolarizing", "json", {"brute", "@depolarizing_2_05_explicit.json", "--epsilon", "0.3"}},
      {"brute_noiseless", "json", {"brute", "@noiseless_2.json", "--epsilon", "0.4"}},
      {"simulate_depolarizing", "csv",
       {"simulate", "@depolarizing_2_05.json", "--messages", "2", "--n", "2", "--c", "2", "--trials", "50",
        "--seed", "7"}},
  };
}

inline std::vector<std::string> expand(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) out.push_back(!a.empty() && a[0] == '@' ? fixture(a.substr(1)) : a);
  return out;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

inline CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(expand(args), out, err);
  return {code, out.str(), err.str()};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Numbers within tol; everything else exact. Returns a description of the
// first mismatch, or an empty string.
inline std::string json_mismatch(const Json& got, const Json& want, double tol, const std::string& path = "$") {
  if (got.is_number() && want.is_number()) {
    const double a = got.get<double>(), b = want.get<double>();
    return std::abs(a - b) <= tol ? "" : path + ": " + std::to_string(a) + " vs " + std::to_string(b);
  }
  if (got.type() != want.type()) return path + ": type differs";
  if (got.is_array()) {
    if (got.size() != want.size()) return path + ": length differs";
    for (std::size_t i = 0; i < got.size(); ++i)
      if (auto m = json_mismatch(got[i], want[i], tol, path + "[" + std::to_string(i) + "]"); !m.empty()) return m;
    return "";
  }
  if (got.is_object()) {
    if (got.size() != want.size()) return path + ": key set differs";
    for (auto it = want.begin(); it != want.end(); ++it) {
      if (!got.contains(it.key())) return path + ": missing " + it.key();
      if (auto m = json_mismatch(got.at(it.key()), it.value(), tol, path + "." + it.key()); !m.empty()) return m;
    }
    return "";
  }
  return got == want ? "" : path + ": value differs";
}

inline std::vector<std::vector<std::string>> csv_cells(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(std::move(cells));
  }
  return rows;
}

inline std::string csv_mismatch(const std::string& got, const std::string& want, double tol) {
  const auto a = csv_cells(got), b = csv_cells(want);
  if (a.size() != b.size()) return "row count differs";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return "row " + std::to_string(i) + ": cell count differs";
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] == b[i][j]) continue;
      char* end_a = nullptr;
      char* end_b = nullptr;
      const double x = std::strtod(a[i][j].c_str(), &end_a), y = std::strtod(b[i][j].c_str(), &end_b);
      if (a[i][j].empty() || b[i][j].empty() || *end_a || *end_b || std::abs(x - y) > tol)
        return "row " + std::to_string(i) + " col " + std::to_string(j) + ": " + a[i][j] + " vs " + b[i][j];
    }
  }
  return "";
}

// Empty when the fresh output matches the stored one.
inline std::string regression_mismatch(const RegressionCase& c, double tol = 1e-7) {
  const CliRun r = run(c.args);
  if (r.code != 0) return "exit code " + std::to_string(r.code) + ": " + r.err;
  const std::string stored = read_file(fixture("expected/" + c.name + "." + c.format));
  if (stored.empty()) return "missing stored output";
  if (c.format == "csv") return csv_mismatch(r.out, stored, tol);
  return json_mismatch(Json::parse(r.out), Json::parse(stored), tol);
}

}  // namespace cqbounds::testing

#endif  // CQBOUNDS_TESTS_REGRESSION_CASES_HPP_
