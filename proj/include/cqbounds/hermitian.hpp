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

#ifndef CQBOUNDS_HERMITIAN_HPP_
#define CQBOUNDS_HERMITIAN_HPP_

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace cqbounds {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Eigenvalues below -kTolPsd make an operator non-PSD; values in
// [-kTolPsd, 0) are clamped to zero.
inline constexpr double kTolPsd = 1e-10;
// Eigenvalues at or below kTolSupport * lambda_max are outside the support.
inline constexpr double kTolSupport = 1e-12;
inline constexpr double kTolTrace = 1e-10;

// Dense complex Hermitian matrix. The input is symmetrized once on
// construction, so entry(j,i) == conj(entry(i,j)) holds exactly.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const Matrix& m);

  static HermitianMatrix Zero(Eigen::Index dim);
  static HermitianMatrix Identity(Eigen::Index dim);
  static HermitianMatrix Diagonal(const RealVector& diag);

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  double trace() const { return m_.diagonal().real().sum(); }

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(double s);

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }

 private:
  struct Trusted {};
  HermitianMatrix(Matrix m, Trusted) : m_(std::move(m)) {}

  Matrix m_;
};

// Eigenvalues in descending order with matching orthonormal eigenvector
// columns.
struct Spectrum {
  RealVector values;
  Matrix vectors;

  double max() const { return values.size() ? values(0) : 0.0; }
  double min() const { return values.size() ? values(values.size() - 1) : 0.0; }
};

Spectrum spectral_decompose(const HermitianMatrix& h);

// V diag(f(lambda)) V^dagger.
template <class F>
HermitianMatrix spectral_function(const Spectrum& s, F&& f) {
  RealVector mapped(s.values.size());
  for (Eigen::Index i = 0; i < s.values.size(); ++i) mapped(i) = f(s.values(i));
  return HermitianMatrix(s.vectors * mapped.asDiagonal() * s.vectors.adjoint());
}

// Number of eigenvalues strictly above kTolSupport * lambda_max.
int support_rank(const Spectrum& s);
double support_cutoff(const Spectrum& s);

// A density operator: PSD, unit trace, with its spectral decomposition
// cached. Eigenvalues in [-kTolPsd, 0) are clamped to zero.
class DensityOperator {
 public:
  enum class Normalization { kRequireUnitTrace, kRenormalize };

  explicit DensityOperator(const HermitianMatrix& h,
                           Normalization mode = Normalization::kRequireUnitTrace);
  explicit DensityOperator(const Matrix& m,
                           Normalization mode = Normalization::kRequireUnitTrace)
      : DensityOperator(HermitianMatrix(m), mode) {}

  // Pure state |v><v| / <v|v>.
  static DensityOperator Pure(const Eigen::VectorXcd& v);
  static DensityOperator MaximallyMixed(Eigen::Index dim);
  static DensityOperator Diagonal(const RealVector& probabilities);

  Eigen::Index dim() const { return h_.dim(); }
  const HermitianMatrix& hermitian() const { return h_; }
  const Matrix& matrix() const { return h_.matrix(); }
  const Spectrum& spectrum() const { return spectrum_; }
  const RealVector& eigenvalues() const { return spectrum_.values; }
  const Matrix& eigenvectors() const { return spectrum_.vectors; }
  int support_rank() const { return support_rank_; }

 private:
  HermitianMatrix h_;
  Spectrum spectrum_;
  int support_rank_ = 0;
};

// A^t on the support of A; the zero matrix maps to zero for every t, and
// t = 0 yields the support projection.
HermitianMatrix frac_power(const Spectrum& s, double t);
HermitianMatrix frac_power(const HermitianMatrix& a, double t);
inline HermitianMatrix frac_power(const DensityOperator& rho, double t) {
  return frac_power(rho.spectrum(), t);
}
inline HermitianMatrix support_projection(const DensityOperator& rho) {
  return frac_power(rho.spectrum(), 0.0);
}

// {X > 0}: projection onto eigenvectors with eigenvalue > kTolPsd.
HermitianMatrix positive_part_projection(const HermitianMatrix& x);

// True iff lambda_min(B - A) >= -slack.
bool operator_leq(const HermitianMatrix& a, const HermitianMatrix& b, double slack);

double min_eigenvalue(const HermitianMatrix& h);
double max_eigenvalue(const HermitianMatrix& h);

// Sum of |lambda_i(X)|.
double trace_abs(const HermitianMatrix& x);

// Re Tr(AB).
double trace_product(const HermitianMatrix& a, const HermitianMatrix& b);

// Similarity A B A for Hermitian A, B.
HermitianMatrix sandwich(const HermitianMatrix& outer, const HermitianMatrix& inner);

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b);

// max_ij |(AB - BA)_ij|.
double commutator_norm(const HermitianMatrix& a, const HermitianMatrix& b);

// max_ij |A_ij - B_ij|.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace cqbounds

#endif  // CQBOUNDS_HERMITIAN_HPP_
