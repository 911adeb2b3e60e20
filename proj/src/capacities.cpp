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

#include "cqbounds/capacities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "cqbounds/errors.hpp"

namespace cqbounds {
namespace {

WeightedEnsemble ensemble_at(const Channel& ch, const RealVector& p) {
  RealVector w = p.cwiseMax(0.0);
  w /= w.sum();
  return WeightedEnsemble(ch, std::move(w));
}

double uniform_open01(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

RealVector random_simplex_point(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 gen(seq);
  RealVector p(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = -std::log(uniform_open01(gen));
  return p / p.sum();
}

struct AscentRun {
  RealVector p;
  double value;
  int iterations;
  double last_step;
};

// f extended off the simplex by f(q / sum q).
double extended(const SimplexObjective& f, const RealVector& q) { return f(q / q.sum()); }

RealVector numerical_gradient(const SimplexObjective& f, const RealVector& p, double fp, double h) {
  RealVector g(p.size());
  for (Eigen::Index x = 0; x < p.size(); ++x) {
    RealVector up = p, down = p;
    up(x) += h;
    if (p(x) >= h) {
      down(x) -= h;
      g(x) = (extended(f, up) - extended(f, down)) / (2.0 * h);
    } else {
      g(x) = (extended(f, up) - fp) / h;
    }
  }
  return g;
}

AscentRun ascend(const SimplexObjective& f, RealVector start, const SimplexOptions& opts) {
  AscentRun run{project_to_simplex(start), 0.0, 0, 0.0};
  run.value = f(run.p);
  double eta = 1.0;
  for (; run.iterations < opts.max_iterations; ++run.iterations) {
    const RealVector g = numerical_gradient(f, run.p, run.value, opts.gradient_step);
    bool accepted = false;
    RealVector q;
    double fq = 0.0;
    eta = std::min(eta * 4.0, 1e4);
    for (; eta > 1e-14; eta *= 0.5) {
      q = project_to_simplex(run.p + eta * g);
      if ((q - run.p).norm() < 1e-15) continue;
      fq = f(q);
      if (fq - run.value >= 1e-4 * g.dot(q - run.p) && fq > run.value) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    const double gain = fq - run.value;
    run.last_step = (q - run.p).norm();
    run.p = std::move(q);
    run.value = fq;
    if (gain < opts.tolerance) {
      ++run.iterations;
      break;
    }
  }
  return run;
}

}  // namespace

double mutual_information(const WeightedEnsemble& e) {
  return relative_entropy(joint_profile(e)).value;
}

double hoeffding_information(const WeightedEnsemble& e, double r) {
  return hoeffding_direct(joint_profile(e), r).value;
}

double chernoff_information(const WeightedEnsemble& e) { return chernoff(joint_profile(e)).value; }

double max_information(const WeightedEnsemble& e) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t x : e.support())
    best = std::max(best, max_relative_entropy(e.channel().output(x), e.average()).value);
  return best;
}

RealVector project_to_simplex(const RealVector& v) {
  const Eigen::Index n = v.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return v(a) > v(b); });
  double cumulative = 0.0, theta = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    cumulative += v(order[static_cast<std::size_t>(j)]);
    const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (v(order[static_cast<std::size_t>(j)]) - candidate > 0.0) theta = candidate;
  }
  RealVector out = (v.array() - theta).cwiseMax(0.0);
  return out / out.sum();
}

CapacityResult maximize_over_simplex(std::size_t n, const SimplexObjective& f,
                                     const SimplexOptions& opts) {
  if (n == 0) throw DomainError("simplex optimizer needs at least one coordinate");
  const RealVector uniform = RealVector::Constant(static_cast<Eigen::Index>(n), 1.0 / n);
  CapacityResult result;
  result.uniform_value = f(uniform);
  if (n == 1) {
    result.value = result.uniform_value;
    result.argmax_weights = uniform;
    return result;
  }

  const int runs = 1 + std::max(opts.restarts, 0);
  std::vector<AscentRun> results(static_cast<std::size_t>(runs));
  auto work = [&](int k) {
    RealVector start = k == 0 ? uniform : random_simplex_point(n, opts.seed, static_cast<std::uint64_t>(k));
    results[static_cast<std::size_t>(k)] = ascend(f, std::move(start), opts);
  };
  const int workers = std::clamp(opts.workers, 1, runs);
  if (workers == 1) {
    for (int k = 0; k < runs; ++k) work(k);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int k = w; k < runs; k += workers) work(k);
      });
    for (auto& t : pool) t.join();
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k)
    if (results[k].value > results[best].value) best = k;
  result.value = results[best].value;
  result.argmax_weights = results[best].p;
  for (const auto& r : results) result.iterations += r.iterations;
  result.final_residual = results[best].last_step;
  result.improved_over_uniform = result.value > result.uniform_value;
  if (result.value < result.uniform_value) {
    result.value = result.uniform_value;
    result.argmax_weights = uniform;
  }
  return result;
}

CapacityResult holevo_capacity(const Channel& ch, const BlahutArimotoOptions& opts) {
  const auto n = static_cast<Eigen::Index>(ch.size());
  RealVector p = RealVector::Constant(n, 1.0 / static_cast<double>(n));
  RealVector divergence(n);
  CapacityResult result;
  for (int it = 0;; ++it) {
    const WeightedEnsemble e(ch, p);
    for (Eigen::Index x = 0; x < n; ++x)
      divergence(x) = relative_entropy(ch.output(static_cast<std::size_t>(x)), e.average()).value;
    const double info = p.dot(divergence);
    const double gap = divergence.maxCoeff() - info;
    if (it == 0) result.uniform_value = info;
    result.value = info;
    result.argmax_weights = p;
    result.iterations = it;
    result.final_residual = gap;
    if (gap < opts.gap_tolerance) {
      result.certified = true;
      break;
    }
    if (it >= opts.max_iterations) break;
    for (Eigen::Index x = 0; x < n; ++x)
      p(x) = std::max(p(x) * std::exp2(divergence(x) - divergence.maxCoeff()), 1e-300);
    p /= p.sum();
  }
  result.improved_over_uniform = result.value > result.uniform_value;
  return result;
}

CapacityResult hoeffding_capacity(const Channel& ch, double r, const SimplexOptions& opts) {
  if (!(r >= 0.0)) throw DomainError("hoeffding capacity: r must be non-negative");
  return maximize_over_simplex(
      ch.size(), [&](const RealVector& p) { return hoeffding_information(ensemble_at(ch, p), r); },
      opts);
}

CapacityResult chernoff_capacity(const Channel& ch, const SimplexOptions& opts) {
  return maximize_over_simplex(
      ch.size(), [&](const RealVector& p) { return chernoff_information(ensemble_at(ch, p)); },
      opts);
}

CapacityResult max_capacity(const Channel& ch, const SimplexOptions& opts,
                            std::optional<double> max_radius) {
  CapacityResult result = maximize_over_simplex(
      ch.size(), [&](const RealVector& p) { return max_information(ensemble_at(ch, p)); }, opts);
  if (max_radius) result.radius_consistent = *max_radius <= result.value + 1e-6;
  return result;
}

}  // namespace cqbounds
