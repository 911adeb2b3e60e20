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

#ifndef CQBOUNDS_DIVERGENCES_HPP_
#define CQBOUNDS_DIVERGENCES_HPP_

#include <limits>
#include <string>
#include <vector>

#include "cqbounds/hermitian.hpp"

namespace cqbounds {

// All divergences are reported in bits.
struct DivergenceValue {
  double value = 0.0;
  bool finite = true;
  std::string method;

  static DivergenceValue Finite(double v, std::string method) {
    return {v, true, std::move(method)};
  }
  static DivergenceValue Infinite(std::string method) {
    return {std::numeric_limits<double>::infinity(), false, std::move(method)};
  }
};

// The function t -> log2 Tr rho^t sigma^(1-t) of a pair of states, or of a
// block-diagonal pair sum_x p_x (delta_x (x) rho_x, delta_x (x) sigma_x).
//
// With rho = sum_i a_i |u_i><u_i| and sigma = sum_j b_j |v_j><v_j| on their
// supports, Tr rho^t sigma^(1-t) = sum_ij w_ij a_i^t b_j^(1-t) with
// w_ij = |<u_i|v_j>|^2. The profile stores these terms in log form and is
// evaluated by log-sum-exp, which stays finite for large |t|.
class PsiProfile {
 public:
  PsiProfile() = default;

  static PsiProfile FromPair(const DensityOperator& rho, const DensityOperator& sigma);

  // Appends the block weight * (rho, sigma). Weights must be positive.
  void add_block(const DensityOperator& rho, const DensityOperator& sigma, double weight);

  // psi(t) in bits; -infinity when the trace vanishes.
  double operator()(double t) const;
  // d psi / dt in bits.
  double derivative(double t) const;

  // True iff supp rho <= supp sigma (per block).
  bool support_contained() const;
  // Tr P_rho (I - P_sigma), summed over blocks.
  double support_leak() const { return leak_; }
  // Tr rho^t sigma^(1-t) vanishes identically (orthogonal supports).
  bool vanishes() const { return terms_.empty(); }

  // Tr rho (log2 rho - log2 sigma); meaningful only when support_contained().
  double relative_entropy_bits() const;
  // max over non-vanishing overlaps of log2(a_i / b_j).
  double max_log_ratio() const;

  std::size_t term_count() const { return terms_.size(); }

 private:
  struct Term {
    double log_a;
    double log_b;
    double log_w;
  };
  std::vector<Term> terms_;
  double leak_ = 0.0;
};

// Overlaps below this are treated as exact zeros of |<u_i|v_j>|^2.
inline constexpr double kOverlapCutoff = 1e-24;
// Tr P_rho (I - P_sigma) above this means supp rho is not inside supp sigma.
inline constexpr double kSupportLeakTol = 1e-9;

bool support_contained(const DensityOperator& rho, const DensityOperator& sigma);

// log2 Tr rho^t sigma^(1-t).
double psi(const DensityOperator& rho, const DensityOperator& sigma, double t);

// Renyi relative entropy of order t in [0,1).
DivergenceValue renyi(const PsiProfile& profile, double t);
DivergenceValue renyi(const DensityOperator& rho, const DensityOperator& sigma, double t);

DivergenceValue relative_entropy(const PsiProfile& profile);
DivergenceValue relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

// -min_{0<=t<=1} psi(t).
DivergenceValue chernoff(const PsiProfile& profile);
DivergenceValue chernoff(const DensityOperator& rho, const DensityOperator& sigma);

struct HoeffdingOptions {
  int grid_points = 2001;
  double t_cap = 1.0 - 1e-6;
  double refine_tol = 1e-10;
  double unbounded_threshold = 1e6;
};

// sup_{0<=t<1} (-t r - psi(t)) / (1 - t) by grid search plus golden-section
// refinement around the grid maximum.
DivergenceValue hoeffding_direct(const PsiProfile& profile, double r,
                                 const HoeffdingOptions& opts = {});
DivergenceValue hoeffding_direct(const DensityOperator& rho, const DensityOperator& sigma,
                                 double r, const HoeffdingOptions& opts = {});

// sup_{0<=t<=1} {a t - psi(t)} and sup_{0<=t<=1} {a (t-1) - psi(t)}.
double legendre_phi(const PsiProfile& profile, double a);
double legendre_phi_hat(const PsiProfile& profile, double a);
double legendre_phi(const DensityOperator& rho, const DensityOperator& sigma, double a);
double legendre_phi_hat(const DensityOperator& rho, const DensityOperator& sigma, double a);

// Hoeffding distance through the Legendre pair: phi(a_r) where a_r solves
// phi_hat(a_r) = r on a <= psi'(1-). Valid for r >= -psi(1).
DivergenceValue hoeffding_parametric(const PsiProfile& profile, double r);
DivergenceValue hoeffding_parametric(const DensityOperator& rho, const DensityOperator& sigma,
                                     double r);

// log2 lambda_max(sigma^(-1/2) rho sigma^(-1/2)), or +infinity when
// supp rho is not inside supp sigma.
DivergenceValue max_relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

// Limit t -> infinity of the order-t Renyi quantity.
DivergenceValue renyi_infinity(const DensityOperator& rho, const DensityOperator& sigma);

}  // namespace cqbounds

#endif  // CQBOUNDS_DIVERGENCES_HPP_
