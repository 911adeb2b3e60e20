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

#ifndef CQBOUNDS_RADIUS_HPP_
#define CQBOUNDS_RADIUS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cqbounds/hermitian.hpp"

namespace cqbounds {

// A possibly sub-normalized POVM: E_k >= 0 and sum_k E_k <= I.
class Povm {
 public:
  explicit Povm(std::vector<HermitianMatrix> elements);

  std::size_t size() const { return elements_.size(); }
  Eigen::Index dim() const { return elements_.front().dim(); }
  const HermitianMatrix& operator[](std::size_t k) const { return elements_.at(k); }
  const std::vector<HermitianMatrix>& elements() const { return elements_; }
  // Spectrum range of I - sum_k E_k.
  double completeness_defect_min() const { return defect_min_; }
  double completeness_defect_max() const { return defect_max_; }

 private:
  std::vector<HermitianMatrix> elements_;
  double defect_min_ = 0.0;
  double defect_max_ = 0.0;
};

struct RadiusResult {
  double value = 0.0;  // bits
  std::optional<DensityOperator> center;
  HermitianMatrix dominating;  // B with B >= rho_k for all k
  std::string method;
  int iterations = 0;
  // max_radius: |max_k S_max(rho_k || center) - value|.
  double center_residual = 0.0;
  bool converged = true;
};

struct DominatingOptions {
  // Skip the commuting shortcut and always run the general solver.
  bool force_general = false;
  double gap_tolerance = 1e-11;
  int max_newton_steps = 500;
};

// min Tr B subject to B >= rho_k for every k. Commuting families are solved
// in a joint eigenbasis (B = entrywise maximum of the diagonals); otherwise a
// log-barrier Newton method is run and the result is rescaled to the
// smallest feasible multiple s B.
RadiusResult min_trace_dominating(std::span<const DensityOperator> states,
                                  const DominatingOptions& opts = {});

// Max-relative-entropy radius log2 min Tr B, with center B / Tr B.
RadiusResult max_radius(std::span<const DensityOperator> states,
                        const DominatingOptions& opts = {});

// Relative-entropy radius inf_sigma max_k S(rho_k || sigma), computed as the
// Holevo quantity of the channel k -> rho_k.
RadiusResult relent_radius(std::span<const DensityOperator> states, double gap_tolerance = 1e-6);

// sum_k w_k Tr rho_k E_k.
double success_probability(std::span<const DensityOperator> states, const RealVector& weights,
                           const Povm& povm);

// Unitary diagonalizing every state, or nullopt if the family does not
// commute within tol.
std::optional<Matrix> joint_eigenbasis(std::span<const DensityOperator> states, double tol = 1e-10);

// Maximum-likelihood measurement for commuting states; ties go to the lowest
// index. Throws CommutativityError otherwise.
Povm ml_measurement_commuting(std::span<const DensityOperator> states);

// Optimal uniform-prior success probability (1/M) min Tr B.
double optimal_success(std::span<const DensityOperator> states,
                       const DominatingOptions& opts = {});

struct HelstromResult {
  HermitianMatrix projection;
  double value;  // Tr A (I - P) + Tr B P
};
// Projection {A - B > 0}, which minimizes Tr A (I - P) + Tr B P.
HelstromResult helstrom_test(const HermitianMatrix& a, const HermitianMatrix& b);

struct AudenaertSides {
  double lhs;  // (Tr(A+B) - Tr|A-B|) / 2
  double rhs;  // Tr A^t B^(1-t)
};
AudenaertSides audenaert_bound(const HermitianMatrix& a, const HermitianMatrix& b, double t);

}  // namespace cqbounds

#endif  // CQBOUNDS_RADIUS_HPP_
