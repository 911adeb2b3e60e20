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

#ifndef CQBOUNDS_CAPACITIES_HPP_
#define CQBOUNDS_CAPACITIES_HPP_

#include <cstdint>
#include <functional>
#include <optional>

#include "cqbounds/channel.hpp"

namespace cqbounds {

struct CapacityResult {
  double value = 0.0;
  RealVector argmax_weights;
  int iterations = 0;
  // Blahut-Arimoto: final duality gap. Simplex ascent: last accepted step norm.
  double final_residual = 0.0;
  bool certified = false;
  // Objective at the uniform distribution, and whether the optimizer found a
  // strictly better point.
  double uniform_value = 0.0;
  bool improved_over_uniform = false;
  // Set by max_capacity when a max-relative-entropy radius is supplied:
  // whether radius <= value + 1e-6.
  std::optional<bool> radius_consistent;
};

struct BlahutArimotoOptions {
  double gap_tolerance = 1e-8;
  int max_iterations = 100000;
};

struct SimplexOptions {
  int restarts = 20;
  std::uint64_t seed = 20090721;
  double gradient_step = 1e-6;
  double tolerance = 1e-9;
  int max_iterations = 5000;
  int workers = 1;
};

// Per-distribution quantities, all in bits.
double mutual_information(const WeightedEnsemble& e);               // S(R_p || Q_p)
double hoeffding_information(const WeightedEnsemble& e, double r);  // H(R_p || Q_p | r)
double chernoff_information(const WeightedEnsemble& e);             // C(R_p || Q_p)
double max_information(const WeightedEnsemble& e);                  // S_max(R_p || Q_p)

// chi*(W) by the multiplicative update p(x) <- p(x) 2^{S(W_x || E_p)}
// started at the uniform distribution. Stops once the duality gap
// max_x S(W_x||E_p) - sum_x p(x) S(W_x||E_p) falls below the tolerance.
CapacityResult holevo_capacity(const Channel& ch, const BlahutArimotoOptions& opts = {});

CapacityResult hoeffding_capacity(const Channel& ch, double r, const SimplexOptions& opts = {});
CapacityResult chernoff_capacity(const Channel& ch, const SimplexOptions& opts = {});
CapacityResult max_capacity(const Channel& ch, const SimplexOptions& opts = {},
                            std::optional<double> max_radius = std::nullopt);

// Euclidean projection onto the probability simplex (sort based; ties keep
// alphabet order).
RealVector project_to_simplex(const RealVector& v);

using SimplexObjective = std::function<double(const RealVector&)>;

// Projected-gradient ascent with central-difference gradients and step
// halving, from the uniform point and `restarts` random points. Restart k
// draws its start from a generator seeded with (seed, k).
CapacityResult maximize_over_simplex(std::size_t n, const SimplexObjective& f,
                                     const SimplexOptions& opts);

}  // namespace cqbounds

#endif  // CQBOUNDS_CAPACITIES_HPP_
