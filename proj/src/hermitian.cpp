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

#include "cqbounds/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cqbounds/errors.hpp"

namespace cqbounds {

HermitianMatrix::HermitianMatrix(const Matrix& m) {
  if (m.rows() != m.cols()) {
    std::ostringstream msg;
    msg << "hermitian matrix must be square, got " << m.rows() << "x" << m.cols();
    throw DimensionError(msg.str());
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::Zero(Eigen::Index dim) {
  return HermitianMatrix(Matrix::Zero(dim, dim), Trusted{});
}

HermitianMatrix HermitianMatrix::Identity(Eigen::Index dim) {
  return HermitianMatrix(Matrix::Identity(dim, dim), Trusted{});
}

HermitianMatrix HermitianMatrix::Diagonal(const RealVector& diag) {
  Matrix m = Matrix::Zero(diag.size(), diag.size());
  m.diagonal() = diag.cast<Complex>();
  return HermitianMatrix(std::move(m), Trusted{});
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  if (o.dim() != dim()) throw DimensionError("hermitian sum: dimension mismatch");
  m_ += o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  if (o.dim() != dim()) throw DimensionError("hermitian difference: dimension mismatch");
  m_ -= o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

Spectrum spectral_decompose(const HermitianMatrix& h) {
  const Eigen::Index n = h.dim();
  Spectrum out;
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    const Matrix& m = h.matrix();
    double off = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) off = std::max(off, std::abs(m(i, j)));
    throw ConvergenceError("hermitian eigendecomposition did not converge", off);
  }
  // Eigen returns ascending order.
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

double support_cutoff(const Spectrum& s) { return kTolSupport * std::max(s.max(), 0.0); }

int support_rank(const Spectrum& s) {
  if (s.max() <= 0.0) return 0;
  const double cut = support_cutoff(s);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.values.size(); ++i)
    if (s.values(i) > cut) ++rank;
  return rank;
}

DensityOperator::DensityOperator(const HermitianMatrix& h, Normalization mode) : h_(h) {
  if (h_.dim() == 0) throw DimensionError("density operator must have positive dimension");
  double tr = h_.trace();
  if (mode == Normalization::kRenormalize) {
    if (!(tr > 0.0)) throw DomainError("cannot renormalize an operator with non-positive trace");
    h_ *= 1.0 / tr;
  } else if (std::abs(tr - 1.0) > kTolTrace) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density operator trace " << tr << " differs from 1";
    throw DomainError(msg.str());
  }
  spectrum_ = spectral_decompose(h_);
  if (spectrum_.min() < -kTolPsd) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density operator has negative eigenvalue " << spectrum_.min();
    throw DomainError(msg.str());
  }
  spectrum_.values = spectrum_.values.cwiseMax(0.0);
  support_rank_ = cqbounds::support_rank(spectrum_);
}

DensityOperator DensityOperator::Pure(const Eigen::VectorXcd& v) {
  const double norm2 = v.squaredNorm();
  if (!(norm2 > 0.0)) throw DomainError("pure state vector must be non-zero");
  return DensityOperator(Matrix(v * v.adjoint() / norm2), Normalization::kRenormalize);
}

DensityOperator DensityOperator::MaximallyMixed(Eigen::Index dim) {
  return DensityOperator(HermitianMatrix::Identity(dim) * (1.0 / static_cast<double>(dim)),
                         Normalization::kRenormalize);
}

DensityOperator DensityOperator::Diagonal(const RealVector& probabilities) {
  return DensityOperator(HermitianMatrix::Diagonal(probabilities));
}

HermitianMatrix frac_power(const Spectrum& s, double t) {
  const double cut = support_cutoff(s);
  const bool any = s.max() > 0.0;
  return spectral_function(s, [&](double lambda) {
    if (!any || lambda <= cut) return 0.0;
    return t == 0.0 ? 1.0 : std::pow(lambda, t);
  });
}

HermitianMatrix frac_power(const HermitianMatrix& a, double t) {
  return frac_power(spectral_decompose(a), t);
}

HermitianMatrix positive_part_projection(const HermitianMatrix& x) {
  const Spectrum s = spectral_decompose(x);
  return spectral_function(s, [](double lambda) { return lambda > kTolPsd ? 1.0 : 0.0; });
}

double min_eigenvalue(const HermitianMatrix& h) {
  return Eigen::SelfAdjointEigenSolver<Matrix>(h.matrix(), Eigen::EigenvaluesOnly)
      .eigenvalues()
      .minCoeff();
}

double max_eigenvalue(const HermitianMatrix& h) {
  return Eigen::SelfAdjointEigenSolver<Matrix>(h.matrix(), Eigen::EigenvaluesOnly)
      .eigenvalues()
      .maxCoeff();
}

bool operator_leq(const HermitianMatrix& a, const HermitianMatrix& b, double slack) {
  if (a.dim() != b.dim()) throw DimensionError("operator_leq: dimension mismatch");
  return min_eigenvalue(b - a) >= -slack;
}

double trace_abs(const HermitianMatrix& x) {
  if (x.dim() == 0) return 0.0;
  return Eigen::SelfAdjointEigenSolver<Matrix>(x.matrix(), Eigen::EigenvaluesOnly)
      .eigenvalues()
      .cwiseAbs()
      .sum();
}

double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace_product: dimension mismatch");
  // Tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
  return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

HermitianMatrix sandwich(const HermitianMatrix& outer, const HermitianMatrix& inner) {
  return HermitianMatrix(Matrix(outer.matrix() * inner.matrix() * outer.matrix()));
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  const Eigen::Index n = a.dim(), m = b.dim();
  Matrix out(n * m, n * m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out.block(i * m, j * m, m, m) = a(i, j) * b.matrix();
  return HermitianMatrix(out);
}

double commutator_norm(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("commutator: dimension mismatch");
  const Matrix c = a.matrix() * b.matrix() - b.matrix() * a.matrix();
  return c.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace cqbounds
