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

#include "cqbounds/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cqbounds/detail/scalar_search.hpp"
#include "cqbounds/errors.hpp"

namespace cqbounds {
namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_dim(const DensityOperator& rho, const DensityOperator& sigma, const char* op) {
  if (rho.dim() != sigma.dim()) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << rho.dim() << " vs " << sigma.dim() << ")";
    throw DimensionError(msg.str());
  }
}

}  // namespace

PsiProfile PsiProfile::FromPair(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho, sigma, "psi profile");
  PsiProfile p;
  p.add_block(rho, sigma, 1.0);
  return p;
}

void PsiProfile::add_block(const DensityOperator& rho, const DensityOperator& sigma,
                           double weight) {
  require_same_dim(rho, sigma, "psi profile block");
  if (!(weight > 0.0)) throw DomainError("psi profile block weight must be positive");
  const Matrix overlap = rho.eigenvectors().adjoint() * sigma.eigenvectors();
  const RealVector& a = rho.eigenvalues();
  const RealVector& b = sigma.eigenvalues();
  const double cut_a = support_cutoff(rho.spectrum());
  const double cut_b = support_cutoff(sigma.spectrum());
  const double log_weight = std::log(weight);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!(a(i) > cut_a)) continue;
    const double log_a = std::log(a(i));
    for (Eigen::Index j = 0; j < b.size(); ++j) {
      const double w = std::norm(overlap(i, j));
      if (!(b(j) > cut_b)) {
        leak_ += w;
        continue;
      }
      if (w > kOverlapCutoff) terms_.push_back({log_a, std::log(b(j)), std::log(w) + log_weight});
    }
  }
}

double PsiProfile::operator()(double t) const {
  if (terms_.empty()) return -kInf;
  double m = -kInf;
  for (const auto& k : terms_) m = std::max(m, t * k.log_a + (1.0 - t) * k.log_b + k.log_w);
  double s = 0.0;
  for (const auto& k : terms_) s += std::exp(t * k.log_a + (1.0 - t) * k.log_b + k.log_w - m);
  return (m + std::log(s)) / kLn2;
}

double PsiProfile::derivative(double t) const {
  if (terms_.empty()) return 0.0;
  double m = -kInf;
  for (const auto& k : terms_) m = std::max(m, t * k.log_a + (1.0 - t) * k.log_b + k.log_w);
  double s = 0.0, ds = 0.0;
  for (const auto& k : terms_) {
    const double e = std::exp(t * k.log_a + (1.0 - t) * k.log_b + k.log_w - m);
    s += e;
    ds += e * (k.log_a - k.log_b);
  }
  return ds / s / kLn2;
}

bool PsiProfile::support_contained() const { return leak_ <= kSupportLeakTol; }

double PsiProfile::relative_entropy_bits() const {
  double s = 0.0;
  for (const auto& k : terms_) s += std::exp(k.log_a + k.log_w) * (k.log_a - k.log_b);
  return s / kLn2;
}

double PsiProfile::max_log_ratio() const {
  double m = -kInf;
  for (const auto& k : terms_) m = std::max(m, k.log_a - k.log_b);
  return m / kLn2;
}

bool support_contained(const DensityOperator& rho, const DensityOperator& sigma) {
  return PsiProfile::FromPair(rho, sigma).support_contained();
}

double psi(const DensityOperator& rho, const DensityOperator& sigma, double t) {
  const PsiProfile p = PsiProfile::FromPair(rho, sigma);
  if (!p.support_contained() && (t < 0.0 || t > 1.0))
    throw DomainError("psi: t outside [0,1] requires supp rho <= supp sigma");
  return p(t);
}

DivergenceValue renyi(const PsiProfile& profile, double t) {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("renyi: order must lie in [0,1)");
  const double v = profile(t);
  if (!std::isfinite(v)) return DivergenceValue::Infinite("psi-vanishes");
  return DivergenceValue::Finite(v / (t - 1.0), "psi");
}

DivergenceValue renyi(const DensityOperator& rho, const DensityOperator& sigma, double t) {
  return renyi(PsiProfile::FromPair(rho, sigma), t);
}

DivergenceValue relative_entropy(const PsiProfile& profile) {
  if (!profile.support_contained()) return DivergenceValue::Infinite("support-violation");
  return DivergenceValue::Finite(profile.relative_entropy_bits(), "spectral");
}

DivergenceValue relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  return relative_entropy(PsiProfile::FromPair(rho, sigma));
}

DivergenceValue chernoff(const PsiProfile& profile) {
  if (profile.vanishes()) return DivergenceValue::Infinite("psi-vanishes");
  const auto opt = detail::golden_section_minimize(profile, 0.0, 1.0, 1e-10);
  return DivergenceValue::Finite(-opt.value, "golden-section");
}

DivergenceValue chernoff(const DensityOperator& rho, const DensityOperator& sigma) {
  return chernoff(PsiProfile::FromPair(rho, sigma));
}

DivergenceValue hoeffding_direct(const PsiProfile& profile, double r,
                                 const HoeffdingOptions& opts) {
  if (!(r >= 0.0)) throw DomainError("hoeffding: rate r must be non-negative");
  if (profile.vanishes()) return DivergenceValue::Infinite("psi-vanishes");
  // The objective tends to +infinity as t -> 1 exactly when -r - psi(1) > 0.
  if (-r - profile(1.0) > 1e-12) return DivergenceValue::Infinite("unbounded");

  auto objective = [&](double t) { return (-t * r - profile(t)) / (1.0 - t); };
  const int n = std::max(opts.grid_points, 3);
  const double step = opts.t_cap / (n - 1);
  int best = 0;
  double best_value = -kInf;
  for (int k = 0; k < n; ++k) {
    const double v = objective(k * step);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  if (objective(opts.t_cap) > opts.unbounded_threshold)
    return DivergenceValue::Infinite("unbounded");

  const double lo = best > 0 ? (best - 1) * step : 0.0;
  const double hi = best < n - 1 ? (best + 1) * step : opts.t_cap;
  const auto refined = detail::golden_section_maximize(objective, lo, hi, opts.refine_tol);
  double value = std::max(best_value, refined.value);

  if (profile.support_contained()) {
    // H(r) <= S; at r = 0 the supremum is the t -> 1 limit, which is S.
    const double s1 = profile.relative_entropy_bits();
    if (r == 0.0) value = std::max(value, s1);
    value = std::min(value, s1);
  }
  return DivergenceValue::Finite(value, "grid-golden");
}

DivergenceValue hoeffding_direct(const DensityOperator& rho, const DensityOperator& sigma,
                                 double r, const HoeffdingOptions& opts) {
  return hoeffding_direct(PsiProfile::FromPair(rho, sigma), r, opts);
}

double legendre_phi(const PsiProfile& profile, double a) {
  if (profile.vanishes()) return kInf;
  return detail::golden_section_maximize([&](double t) { return a * t - profile(t); }, 0.0, 1.0,
                                         1e-10)
      .value;
}

double legendre_phi_hat(const PsiProfile& profile, double a) {
  if (profile.vanishes()) return kInf;
  return detail::golden_section_maximize([&](double t) { return a * (t - 1.0) - profile(t); },
                                         0.0, 1.0, 1e-10)
      .value;
}

double legendre_phi(const DensityOperator& rho, const DensityOperator& sigma, double a) {
  return legendre_phi(PsiProfile::FromPair(rho, sigma), a);
}

double legendre_phi_hat(const DensityOperator& rho, const DensityOperator& sigma, double a) {
  return legendre_phi_hat(PsiProfile::FromPair(rho, sigma), a);
}

DivergenceValue hoeffding_parametric(const PsiProfile& profile, double r) {
  if (profile.vanishes()) return DivergenceValue::Infinite("psi-vanishes");
  const double psi1 = profile(1.0);
  if (r < -psi1 - 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "hoeffding_parametric: r = " << r << " below -psi(1) = " << -psi1;
    throw DomainError(msg.str());
  }
  // psi is smooth on [0,1], so the left derivative at 1 is the derivative.
  const double upper = profile.derivative(1.0);
  auto phat = [&](double a) { return legendre_phi_hat(profile, a); };
  if (phat(upper) >= r) return DivergenceValue::Finite(legendre_phi(profile, upper), "legendre");

  double hi = upper;
  double width = 1.0;
  double lo = upper - width;
  int doublings = 0;
  while (phat(lo) < r) {
    if (++doublings > 200) return DivergenceValue::Finite(-profile(0.0), "saturated");
    hi = lo;
    width *= 2.0;
    lo = upper - width;
  }
  // phat is strictly decreasing: phat(lo) >= r > phat(hi).
  while (hi - lo > 1e-11) {
    const double mid = 0.5 * (lo + hi);
    if (phat(mid) >= r) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return DivergenceValue::Finite(legendre_phi(profile, 0.5 * (lo + hi)), "legendre");
}

DivergenceValue hoeffding_parametric(const DensityOperator& rho, const DensityOperator& sigma,
                                     double r) {
  return hoeffding_parametric(PsiProfile::FromPair(rho, sigma), r);
}

DivergenceValue max_relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho, sigma, "max_relative_entropy");
  if (!support_contained(rho, sigma)) return DivergenceValue::Infinite("support-violation");
  const HermitianMatrix inv_sqrt = frac_power(sigma, -0.5);
  const double lambda = max_eigenvalue(sandwich(inv_sqrt, rho.hermitian()));
  return DivergenceValue::Finite(std::log2(lambda), "similarity-eigenvalue");
}

DivergenceValue renyi_infinity(const DensityOperator& rho, const DensityOperator& sigma) {
  const PsiProfile profile = PsiProfile::FromPair(rho, sigma);
  if (!profile.support_contained()) return DivergenceValue::Infinite("support-violation");
  if (commutator_norm(rho.hermitian(), sigma.hermitian()) < 1e-10)
    return DivergenceValue::Finite(profile.max_log_ratio(), "commuting-closed-form");

  // For large t, psi(t) = t L + C + O(exp(-gap t)), so order-t values
  // psi(t)/(t-1) approach L only like 1/t. The secant slope of psi between
  // consecutive doublings removes the 1/t term and converges to L
  // exponentially fast.
  double prev_t = 1.0;
  double prev_psi = profile(1.0);
  double prev_slope = kInf;
  double slope = 0.0;
  for (double t = 2.0; t <= 1048576.0; t *= 2.0) {
    const double v = profile(t);
    slope = (v - prev_psi) / (t - prev_t);
    if (std::abs(slope - prev_slope) < 1e-7) {
      std::ostringstream tag;
      tag << "secant-doubling@t=" << t;
      return DivergenceValue::Finite(slope, tag.str());
    }
    prev_slope = slope;
    prev_t = t;
    prev_psi = v;
  }
  return DivergenceValue::Finite(slope, "unconverged");
}

}  // namespace cqbounds
