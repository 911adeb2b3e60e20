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

#include "cqbounds/radius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cqbounds/capacities.hpp"
#include "cqbounds/channel.hpp"
#include "cqbounds/divergences.hpp"
#include "cqbounds/errors.hpp"

namespace cqbounds {
namespace {

void require_family(std::span<const DensityOperator> states, const char* op) {
  if (states.empty()) throw DomainError(std::string(op) + ": empty state list");
  for (const auto& s : states)
    if (s.dim() != states.front().dim())
      throw DimensionError(std::string(op) + ": states differ in dimension");
}

// Coordinates of Hermitian matrices in the basis E_ii, E_ij + E_ji,
// i(E_ij - E_ji) (i < j). dual_coords(X)_b = Tr(F_b X).
class HermitianBasis {
 public:
  explicit HermitianBasis(Eigen::Index d) : d_(d) {}
  Eigen::Index size() const { return d_ * d_; }

  RealVector dual_coords(const Matrix& x) const {
    RealVector out(size());
    Eigen::Index a = 0;
    for (Eigen::Index i = 0; i < d_; ++i) out(a++) = x(i, i).real();
    for (Eigen::Index i = 0; i < d_; ++i)
      for (Eigen::Index j = i + 1; j < d_; ++j) {
        out(a++) = 2.0 * x(i, j).real();
        out(a++) = 2.0 * x(i, j).imag();
      }
    return out;
  }

  Matrix element(Eigen::Index a) const {
    Matrix f = Matrix::Zero(d_, d_);
    if (a < d_) {
      f(a, a) = 1.0;
      return f;
    }
    Eigen::Index k = d_;
    for (Eigen::Index i = 0; i < d_; ++i)
      for (Eigen::Index j = i + 1; j < d_; ++j) {
        if (k == a) {
          f(i, j) = f(j, i) = 1.0;
          return f;
        }
        if (k + 1 == a) {
          f(i, j) = Complex(0.0, 1.0);
          f(j, i) = Complex(0.0, -1.0);
          return f;
        }
        k += 2;
      }
    return f;
  }

  Matrix combine(const RealVector& x) const {
    Matrix out = Matrix::Zero(d_, d_);
    Eigen::Index a = 0;
    for (Eigen::Index i = 0; i < d_; ++i) out(i, i) = x(a++);
    for (Eigen::Index i = 0; i < d_; ++i)
      for (Eigen::Index j = i + 1; j < d_; ++j) {
        out(i, j) = Complex(x(a), x(a + 1));
        out(j, i) = Complex(x(a), -x(a + 1));
        a += 2;
      }
    return out;
  }

 private:
  Eigen::Index d_;
};

struct Slacks {
  bool feasible = true;
  double log_det_sum = 0.0;
  std::vector<Matrix> inverses;
};

Slacks slacks_of(const Matrix& b, std::span<const DensityOperator> states, bool want_inverse) {
  Slacks out;
  const Eigen::Index d = b.rows();
  for (const auto& rho : states) {
    Eigen::LLT<Matrix> llt(b - rho.matrix());
    if (llt.info() != Eigen::Success) {
      out.feasible = false;
      return out;
    }
    const auto diag = llt.matrixL().toDenseMatrix().diagonal().real();
    if ((diag.array() <= 0.0).any()) {
      out.feasible = false;
      return out;
    }
    out.log_det_sum += 2.0 * diag.array().log().sum();
    if (want_inverse) out.inverses.push_back(llt.solve(Matrix::Identity(d, d)));
  }
  return out;
}

RadiusResult dominating_commuting(std::span<const DensityOperator> states, const Matrix& basis) {
  const Eigen::Index d = basis.rows();
  RealVector m = RealVector::Constant(d, 0.0);
  for (const auto& rho : states) {
    const RealVector diag = (basis.adjoint() * rho.matrix() * basis).diagonal().real();
    m = m.cwiseMax(diag);
  }
  RadiusResult out;
  out.dominating = HermitianMatrix(Matrix(basis * m.cast<Complex>().asDiagonal() * basis.adjoint()));
  out.value = std::log2(m.sum());
  out.method = "commuting-diagonal";
  return out;
}

RadiusResult dominating_barrier(std::span<const DensityOperator> states,
                                const DominatingOptions& opts) {
  const Eigen::Index d = states.front().dim();
  const auto count = static_cast<double>(states.size());
  const HermitianBasis basis(d);
  const Matrix identity = Matrix::Identity(d, d);

  Matrix b = identity;
  for (const auto& rho : states) b += rho.matrix();

  double mu = 1.0;
  int newton_steps = 0;
  bool converged = false;
  auto barrier = [&](const Matrix& x, double mu_now, bool& feasible) {
    const Slacks s = slacks_of(x, states, false);
    feasible = s.feasible;
    return feasible ? x.trace().real() - mu_now * s.log_det_sum : 0.0;
  };

  while (newton_steps < opts.max_newton_steps) {
    // Centering for the current mu.
    while (newton_steps < opts.max_newton_steps) {
      const Slacks s = slacks_of(b, states, true);
      Matrix grad = identity;
      for (const auto& z : s.inverses) grad -= mu * z;
      const Eigen::Index n = basis.size();
      Eigen::MatrixXd hess(n, n);
      for (Eigen::Index a = 0; a < n; ++a) {
        const Matrix f = basis.element(a);
        Matrix applied = Matrix::Zero(d, d);
        for (const auto& z : s.inverses) applied += z * f * z;
        hess.col(a) = mu * basis.dual_coords(applied);
      }
      const RealVector rhs = -basis.dual_coords(grad);
      const RealVector step = hess.ldlt().solve(rhs);
      const double decrement = rhs.dot(step);
      ++newton_steps;
      if (!(decrement > 2e-14)) break;
      const Matrix delta = basis.combine(step);
      bool feasible = false;
      const double f0 = barrier(b, mu, feasible);
      double t = 1.0;
      Matrix trial;
      while (t > 1e-14) {
        trial = b + t * delta;
        const double f1 = barrier(trial, mu, feasible);
        if (feasible && f1 <= f0 - 0.25 * t * decrement) break;
        t *= 0.5;
      }
      if (t <= 1e-14) break;
      b = 0.5 * (trial + trial.adjoint());
    }
    if (mu * count * static_cast<double>(d) < opts.gap_tolerance) {
      converged = true;
      break;
    }
    mu *= 0.1;
  }

  // Rescale to the smallest feasible multiple of B.
  const HermitianMatrix bh(b);
  const HermitianMatrix inv_sqrt = frac_power(bh, -0.5);
  double scale = 0.0;
  for (const auto& rho : states)
    scale = std::max(scale, max_eigenvalue(sandwich(inv_sqrt, rho.hermitian())));

  RadiusResult out;
  out.dominating = scale * bh;
  out.value = std::log2(out.dominating.trace());
  out.method = "log-barrier-newton";
  out.iterations = newton_steps;
  out.converged = converged;
  return out;
}

}  // namespace

Povm::Povm(std::vector<HermitianMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("POVM needs at least one element");
  const Eigen::Index d = elements_.front().dim();
  HermitianMatrix total = HermitianMatrix::Zero(d);
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k].dim() != d) throw DimensionError("POVM elements differ in dimension");
    if (min_eigenvalue(elements_[k]) < -kTolPsd) {
      std::ostringstream msg;
      msg << "POVM element " << k << " is not positive semidefinite";
      throw DomainError(msg.str());
    }
    total += elements_[k];
  }
  const Spectrum defect = spectral_decompose(HermitianMatrix::Identity(d) - total);
  defect_min_ = defect.min();
  defect_max_ = defect.max();
  if (defect_min_ < -1e-9) throw DomainError("POVM elements sum to more than the identity");
}

std::optional<Matrix> joint_eigenbasis(std::span<const DensityOperator> states, double tol) {
  if (states.empty()) return std::nullopt;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j)
      if (commutator_norm(states[i].hermitian(), states[j].hermitian()) >= tol) return std::nullopt;
  const Eigen::Index d = states.front().dim();
  HermitianMatrix mix = HermitianMatrix::Zero(d);
  for (std::size_t k = 0; k < states.size(); ++k)
    mix += std::sqrt(static_cast<double>(k) + 2.0) * states[k].hermitian();
  Matrix basis = spectral_decompose(mix).vectors;
  for (const auto& rho : states) {
    Matrix rotated = basis.adjoint() * rho.matrix() * basis;
    rotated.diagonal().setZero();
    if (rotated.size() && rotated.cwiseAbs().maxCoeff() > 1e-9) return std::nullopt;
  }
  return basis;
}

RadiusResult min_trace_dominating(std::span<const DensityOperator> states,
                                  const DominatingOptions& opts) {
  require_family(states, "min_trace_dominating");
  RadiusResult out;
  if (states.size() == 1) {
    out.dominating = states.front().hermitian();
    out.value = 0.0;
    out.method = "single-state";
  } else if (auto basis = opts.force_general ? std::nullopt : joint_eigenbasis(states)) {
    out = dominating_commuting(states, *basis);
  } else {
    out = dominating_barrier(states, opts);
  }
  out.center = DensityOperator(out.dominating, DensityOperator::Normalization::kRenormalize);
  return out;
}

RadiusResult max_radius(std::span<const DensityOperator> states, const DominatingOptions& opts) {
  RadiusResult out = min_trace_dominating(states, opts);
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& rho : states) worst = std::max(worst, max_relative_entropy(rho, *out.center).value);
  out.center_residual = std::abs(worst - out.value);
  return out;
}

RadiusResult relent_radius(std::span<const DensityOperator> states, double gap_tolerance) {
  require_family(states, "relent_radius");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < states.size(); ++k) labels.push_back(std::to_string(k + 1));
  const Channel ch(std::move(labels), std::vector<DensityOperator>(states.begin(), states.end()));
  BlahutArimotoOptions ba;
  ba.gap_tolerance = gap_tolerance;
  const CapacityResult cap = holevo_capacity(ch, ba);
  const WeightedEnsemble e(ch, cap.argmax_weights);
  RadiusResult out;
  out.value = cap.value;
  out.center = e.average();
  out.dominating = e.average().hermitian();
  out.method = "blahut-arimoto";
  out.iterations = cap.iterations;
  out.converged = cap.certified;
  return out;
}

double success_probability(std::span<const DensityOperator> states, const RealVector& weights,
                           const Povm& povm) {
  if (states.size() != povm.size() || static_cast<std::size_t>(weights.size()) != states.size())
    throw DimensionError("success_probability: states, weights and POVM sizes differ");
  double total = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k)
    total += weights(static_cast<Eigen::Index>(k)) * trace_product(states[k].hermitian(), povm[k]);
  return total;
}

Povm ml_measurement_commuting(std::span<const DensityOperator> states) {
  require_family(states, "ml_measurement_commuting");
  const auto basis = joint_eigenbasis(states);
  if (!basis) {
    double worst = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = i + 1; j < states.size(); ++j)
        worst = std::max(worst, commutator_norm(states[i].hermitian(), states[j].hermitian()));
    throw CommutativityError("maximum-likelihood measurement needs commuting states", worst);
  }
  const Eigen::Index d = basis->rows();
  std::vector<RealVector> diags;
  for (const auto& rho : states) diags.push_back((basis->adjoint() * rho.matrix() * *basis).diagonal().real());
  std::vector<RealVector> indicators(states.size(), RealVector::Zero(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& diag : diags) m = std::max(m, diag(i));
    for (std::size_t k = 0; k < diags.size(); ++k) {
      if (diags[k](i) >= m - 1e-12) {
        indicators[k](i) = 1.0;
        break;
      }
    }
  }
  std::vector<HermitianMatrix> elements;
  for (const auto& ind : indicators)
    elements.emplace_back(Matrix(*basis * ind.cast<Complex>().asDiagonal() * basis->adjoint()));
  return Povm(std::move(elements));
}

double optimal_success(std::span<const DensityOperator> states, const DominatingOptions& opts) {
  const RadiusResult r = min_trace_dominating(states, opts);
  return r.dominating.trace() / static_cast<double>(states.size());
}

HelstromResult helstrom_test(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("helstrom_test: dimension mismatch");
  HermitianMatrix projection = positive_part_projection(a - b);
  const double value = a.trace() - trace_product(a, projection) + trace_product(b, projection);
  return {std::move(projection), value};
}

AudenaertSides audenaert_bound(const HermitianMatrix& a, const HermitianMatrix& b, double t) {
  if (a.dim() != b.dim()) throw DimensionError("audenaert_bound: dimension mismatch");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("audenaert_bound: t must lie in [0,1]");
  const double lhs = 0.5 * (a.trace() + b.trace()) - 0.5 * trace_abs(a - b);
  const double rhs = trace_product(frac_power(a, t), frac_power(b, 1.0 - t));
  return {lhs, rhs};
}

}  // namespace cqbounds
