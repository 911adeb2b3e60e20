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

#include "cqbounds/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>
#include <variant>

#include "CLI11.hpp"

#include "cqbounds/capacities.hpp"
#include "cqbounds/coding.hpp"
#include "cqbounds/divergences.hpp"
#include "cqbounds/errors.hpp"
#include "cqbounds/json_io.hpp"
#include "cqbounds/radius.hpp"

namespace cqbounds {
namespace {

using Cell = std::variant<std::monostate, double, long long, bool, std::string, std::vector<double>>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  Json extras = Json::object();
};

struct GlobalOptions {
  std::string base = "2";
  double tol = 1e-9;
  std::uint64_t seed = 20090721;
  int workers = 1;
  std::string output;
};

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json cell_to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      c);
}

std::string cell_to_csv(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          std::string s;
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + format_double(v[i]);
          return s;
        }
      },
      c);
}

void render(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_to_csv(row[i]);
      out << "\n";
    }
    return;
  }
  Json doc = t.extras;
  doc["command"] = t.command;
  doc["columns"] = t.columns;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = cell_to_json(row[i]);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << "\n";
}

// "a:step:b", "x,y,z" or a single value.
std::vector<double> parse_sweep(const std::string& spec) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError("bad number '" + s + "' in '" + spec + "'");
    return v;
  };
  std::vector<std::string> parts;
  const char sep = spec.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  if (sep == ':') {
    if (parts.size() != 3) throw ParseError("sweep must be start:step:stop, got '" + spec + "'");
    const double start = number(parts[0]), step = number(parts[1]), stop = number(parts[2]);
    if (!(step > 0.0) || stop < start) throw DomainError("sweep needs step > 0 and stop >= start");
    const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    for (long long k = 0; k < count; ++k) out.push_back(start + static_cast<double>(k) * step);
    return out;
  }
  std::vector<double> out;
  for (const auto& p : parts) out.push_back(number(p));
  if (out.empty()) throw ParseError("empty value list");
  return out;
}

std::vector<std::string> parse_names(const std::string& spec, const std::vector<std::string>& allowed) {
  std::vector<std::string> out;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    if (std::find(allowed.begin(), allowed.end(), item) == allowed.end())
      throw DomainError("unknown quantity '" + item + "'");
    out.push_back(item);
  }
  return out;
}

// Bits to the requested log base.
double scale_of(const GlobalOptions& g) { return g.base == "e" ? std::numbers::ln2 : 1.0; }

DensityOperator load_state(const std::string& path) { return state_from_json(load_json_file(path), path); }
Channel load_channel(const std::string& path) { return channel_from_json(load_json_file(path)); }

SimplexOptions simplex_options(const GlobalOptions& g) {
  SimplexOptions o;
  o.seed = g.seed;
  o.workers = g.workers;
  o.tolerance = g.tol;
  return o;
}

struct DivergenceArgs {
  std::string a, b;
  std::string which = "psi,renyi,relent,chernoff,hoeffding,smax,sinf";
  std::string t = "0.5";
  std::string r = "0";
};

Table cmd_divergence(const DivergenceArgs& args, const GlobalOptions& g) {
  const DensityOperator rho = load_state(args.a);
  const DensityOperator sigma = load_state(args.b);
  if (rho.dim() != sigma.dim()) throw DimensionError("states differ in dimension");
  const auto which = parse_names(args.which, {"psi", "renyi", "relent", "chernoff", "hoeffding", "smax", "sinf"});
  const PsiProfile profile = PsiProfile::FromPair(rho, sigma);
  const double s = scale_of(g);
  Table t{"divergence", {"quantity", "t", "r", "value", "finite", "method"}, {}, {}};
  auto add = [&](const std::string& q, Cell tv, Cell rv, const DivergenceValue& d) {
    t.rows.push_back({q, std::move(tv), std::move(rv), d.value * s, d.finite, d.method});
  };
  for (const auto& q : which) {
    if (q == "psi") {
      for (double tv : parse_sweep(args.t)) {
        const double v = profile(tv);
        add(q, tv, {}, std::isfinite(v) ? DivergenceValue::Finite(v, "spectral") : DivergenceValue{v, false, "spectral"});
      }
    } else if (q == "renyi") {
      for (double tv : parse_sweep(args.t)) add(q, tv, {}, renyi(profile, tv));
    } else if (q == "relent") {
      add(q, {}, {}, relative_entropy(profile));
    } else if (q == "chernoff") {
      add(q, {}, {}, chernoff(profile));
    } else if (q == "hoeffding") {
      for (double rv : parse_sweep(args.r)) add(q, {}, rv, hoeffding_direct(profile, rv));
    } else if (q == "smax") {
      add(q, {}, {}, max_relative_entropy(rho, sigma));
    } else {
      add(q, {}, {}, renyi_infinity(rho, sigma));
    }
  }
  t.extras["base"] = g.base;
  return t;
}

struct CapacityArgs {
  std::string channel;
  std::string which = "holevo";
  std::string r = "0";
};

Table cmd_capacity(const CapacityArgs& args, const GlobalOptions& g) {
  const Channel ch = load_channel(args.channel);
  const auto which = parse_names(args.which, {"holevo", "hoeffding", "chernoff", "max"});
  const double s = scale_of(g);
  const SimplexOptions opts = simplex_options(g);
  Table t{"capacity",
          {"quantity", "r", "value", "certified", "iterations", "final_residual", "uniform_value",
           "improved_over_uniform", "radius_consistent", "weights"},
          {},
          {}};
  auto add = [&](const std::string& q, Cell rv, const CapacityResult& c) {
    std::vector<double> w(c.argmax_weights.data(), c.argmax_weights.data() + c.argmax_weights.size());
    Cell consistent;
    if (c.radius_consistent) consistent = *c.radius_consistent;
    t.rows.push_back({q, std::move(rv), c.value * s, c.certified, static_cast<long long>(c.iterations),
                      c.final_residual, c.uniform_value * s, c.improved_over_uniform, consistent, w});
  };
  for (const auto& q : which) {
    if (q == "holevo") {
      BlahutArimotoOptions ba;
      ba.gap_tolerance = g.tol;
      add(q, {}, holevo_capacity(ch, ba));
    } else if (q == "hoeffding") {
      for (double rv : parse_sweep(args.r)) add(q, rv, hoeffding_capacity(ch, rv, opts));
    } else if (q == "chernoff") {
      add(q, {}, chernoff_capacity(ch, opts));
    } else {
      const RadiusResult radius = max_radius(ch.outputs());
      add(q, {}, max_capacity(ch, opts, radius.value));
    }
  }
  t.extras["base"] = g.base;
  t.extras["labels"] = ch.labels();
  return t;
}

struct BoundsArgs {
  std::string channel;
  double epsilon = 0.0;
  std::optional<double> c;
  std::optional<double> r;
  std::optional<long long> n;
};

Table cmd_bounds(const BoundsArgs& args, const GlobalOptions& g) {
  const Channel ch = load_channel(args.channel);
  if (!(args.epsilon > 0.0 && args.epsilon < 1.0)) throw DomainError("epsilon must lie in (0,1)");
  const double s = scale_of(g);
  const SimplexOptions opts = simplex_options(g);
  Table t{"bounds", {"bound", "value", "clamped", "epsilon", "c", "r", "n"}, {}, {}};
  auto param = [](const BoundReport& b, const char* key) -> Cell {
    const auto it = b.parameters.find(key);
    if (it == b.parameters.end()) return {};
    if (std::string(key) == "n") return static_cast<long long>(it->second);
    return it->second;
  };
  auto add = [&](const BoundReport& b, bool rate) {
    t.rows.push_back({b.name, rate ? b.value * s : b.value, b.clamped, param(b, "epsilon"),
                      param(b, "c"), param(b, "r"), param(b, "n")});
  };
  if (args.c) {
    add(one_shot_lower_bound(ch, args.epsilon, *args.c, opts), true);
  } else {
    const auto scan = one_shot_lower_bound_scan(ch, args.epsilon, opts);
    std::size_t best = 0;
    for (std::size_t i = 0; i < scan.size(); ++i) {
      add(scan[i], true);
      if (scan[i].value > scan[best].value) best = i;
    }
    BoundReport top = scan[best];
    top.name = "one_shot_lower_best";
    add(top, true);
  }
  if (args.n) add(n_shot_lower_bound(ch, args.epsilon, args.c.value_or(1.0), *args.n, opts), true);
  if (args.r) {
    const BoundReport e = exp_capacity_lower_bound(ch, *args.r, opts);
    add(e, true);
    t.extras["exponential_positive"] = *e.positive;
  }
  add(one_shot_upper_bound(ch, args.epsilon), true);
  add(positivity_threshold(ch, opts), false);
  t.extras["base"] = g.base;
  return t;
}

struct SimulateArgs {
  std::string channel;
  int messages = 2;
  int n = 1;
  double c = 1.0;
  std::string t = "0.25,0.5,0.75";
  long long trials = 1000;
};

Table cmd_simulate(const SimulateArgs& args, const GlobalOptions& g) {
  const Channel base = load_channel(args.channel);
  if (args.trials < 2) throw DomainError("simulate needs at least two trials");
  const WeightedEnsemble e = product_ensemble(WeightedEnsemble::Uniform(base), args.n);
  const RandomCodeSampler sampler(e, args.messages, args.c);
  const auto trials = static_cast<std::size_t>(args.trials);
  std::vector<double> errors(trials);
  const auto workers = static_cast<std::size_t>(std::clamp(g.workers, 1, 64));
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < trials; i += workers) errors[i] = sampler.draw_error(g.seed, i);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  Table t{"simulate", {"record", "index", "t", "value"}, {}, {}};
  double mean = 0.0, lowest = errors.front();
  for (std::size_t i = 0; i < trials; ++i) {
    t.rows.push_back({std::string("trial"), static_cast<long long>(i), {}, errors[i]});
    mean += errors[i];
    lowest = std::min(lowest, errors[i]);
  }
  mean /= static_cast<double>(trials);
  double var = 0.0;
  for (double v : errors) var += (v - mean) * (v - mean);
  const double stddev = std::sqrt(var / static_cast<double>(trials - 1));
  t.rows.push_back({std::string("mean"), {}, {}, mean});
  t.rows.push_back({std::string("std"), {}, {}, stddev});
  t.rows.push_back({std::string("min"), {}, {}, lowest});
  double best_bound = std::numeric_limits<double>::infinity(), best_t = 0.0;
  for (double tv : parse_sweep(args.t)) {
    const double b = random_coding_bound(e, args.messages, args.c, tv);
    t.rows.push_back({std::string("bound"), {}, tv, b});
    if (b < best_bound) {
      best_bound = b;
      best_t = tv;
    }
  }
  t.rows.push_back({std::string("bound_min"), {}, best_t, best_bound});
  const bool pass = mean <= best_bound + 3.0 * stddev / std::sqrt(static_cast<double>(trials)) &&
                    lowest <= mean;
  t.rows.push_back({std::string("check"), {}, {}, std::string(pass ? "PASS" : "FAIL")});
  return t;
}

struct BruteArgs {
  std::string channel;
  double epsilon = 0.0;
  int max_messages = 4;
};

Table cmd_brute(const BruteArgs& args, const GlobalOptions& g) {
  const Channel ch = load_channel(args.channel);
  const BruteForceResult r = brute_force_capacity_commuting(ch, args.epsilon, args.max_messages);
  Table t{"brute", {"messages", "best_average_error", "best_max_error", "feasible"}, {}, {}};
  for (std::size_t m = 0; m < r.best_average_error.size(); ++m)
    t.rows.push_back({static_cast<long long>(m + 1), r.best_average_error[m], r.best_max_error[m],
                      r.best_average_error[m] <= args.epsilon + 1e-12});
  t.extras["base"] = g.base;
  t.extras["capacity"] = r.capacity * scale_of(g);
  t.extras["best_messages"] = r.best_messages;
  t.extras["witness"] = r.witness ? Json(r.witness->encoding()) : Json::array();
  return t;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds on one-shot classical-quantum channel capacities", "cqbounds"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--base", g.base, "Logarithm base of reported rates")->check(CLI::IsMember({"2", "e"}));
  app.add_option("--tol", g.tol, "Optimizer tolerance");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json", "csv"}));

  DivergenceArgs div;
  auto* sub_div = app.add_subcommand("divergence", "Divergences between two states");
  sub_div->add_option("state_a", div.a)->required();
  sub_div->add_option("state_b", div.b)->required();
  sub_div->add_option("--which", div.which, "Comma-separated quantities");
  sub_div->add_option("--t", div.t, "Order t (value, list or start:step:stop)");
  sub_div->add_option("--r", div.r, "Hoeffding rate (value, list or start:step:stop)");

  CapacityArgs cap;
  auto* sub_cap = app.add_subcommand("capacity", "Channel capacities");
  sub_cap->add_option("channel", cap.channel)->required();
  sub_cap->add_option("--which", cap.which, "Comma-separated capacities");
  sub_cap->add_option("--r", cap.r, "Hoeffding rate (value, list or start:step:stop)");

  BoundsArgs bounds;
  auto* sub_bounds = app.add_subcommand("bounds", "One-shot capacity bounds");
  sub_bounds->add_option("channel", bounds.channel)->required();
  sub_bounds->add_option("--epsilon", bounds.epsilon)->required();
  sub_bounds->add_option("--c", bounds.c);
  sub_bounds->add_option("--r", bounds.r);
  sub_bounds->add_option("--n", bounds.n);

  SimulateArgs sim;
  auto* sub_sim = app.add_subcommand("simulate", "Monte Carlo random coding");
  sub_sim->add_option("channel", sim.channel)->required();
  sub_sim->add_option("--messages", sim.messages);
  sub_sim->add_option("--n", sim.n);
  sub_sim->add_option("--c", sim.c);
  sub_sim->add_option("--t", sim.t);
  sub_sim->add_option("--trials", sim.trials);

  BruteArgs brute;
  auto* sub_brute = app.add_subcommand("brute", "Exact C_eps of a commuting channel");
  sub_brute->add_option("channel", brute.channel)->required();
  sub_brute->add_option("--epsilon", brute.epsilon)->required();
  sub_brute->add_option("--max-messages", brute.max_messages);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    Table table;
    std::string format = "json";
    if (*sub_div) {
      table = cmd_divergence(div, g);
    } else if (*sub_cap) {
      table = cmd_capacity(cap, g);
    } else if (*sub_bounds) {
      table = cmd_bounds(bounds, g);
      format = "csv";
    } else if (*sub_sim) {
      table = cmd_simulate(sim, g);
      format = "csv";
    } else {
      table = cmd_brute(brute, g);
    }
    render(table, g.output.empty() ? format : g.output, out);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  } catch (const CommutativityError& e) {
    err << "commutativity error: " << e.what() << " (commutator norm " << format_double(e.commutator_norm())
        << ")\n";
    return kExitCommutativity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace cqbounds
