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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "cqbounds/divergences.hpp"
#include "cqbounds/errors.hpp"
#include "test_support.hpp"

namespace cqbounds {
namespace {

using testing::random_state;

DensityOperator plus_state() {
  Matrix r(2, 2);
  r << 0.5, 0.5, 0.5, 0.5;
  return DensityOperator(r);
}

DensityOperator diag2(double a) { return DensityOperator::Diagonal((RealVector(2) << a, 1.0 - a).finished()); }

// log2 Tr rho^t sigma^(1-t) through matrix functions, t in [0,1].
double psi_by_matrix_powers(const DensityOperator& rho, const DensityOperator& sigma, double t) {
  return std::log2(trace_product(frac_power(rho, t), frac_power(sigma, 1.0 - t)));
}

// Dense-grid oracle for sup_{0<=t<1} (-t r - psi(t)) / (1 - t).
double hoeffding_grid(const DensityOperator& rho, const DensityOperator& sigma, double r, int points) {
  double best = -1e300;
  for (int k = 0; k < points; ++k) {
    const double t = static_cast<double>(k) / points;
    best = std::max(best, (-t * r - psi_by_matrix_powers(rho, sigma, t)) / (1.0 - t));
  }
  return best;
}

TEST(Psi, PlusStateAgainstDiagonal) {
  // rho is pure, so Tr rho sigma^(1/2) = (sqrt(1/4) + sqrt(3/4)) / 2.
  const double expected = std::log2(0.5 * (0.5 + std::sqrt(0.75)));
  EXPECT_NEAR(psi(plus_state(), diag2(0.25), 0.5), expected, 1e-13);
  EXPECT_NEAR(expected, -0.550016, 1e-6);
}

TEST(Psi, MatchesMatrixPowersOnRandomPairs) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 4;
    const DensityOperator rho = random_state(d, 1 + trial % d, gen);
    const DensityOperator sigma = random_state(d, gen);
    for (double t : {0.0, 0.2, 0.5, 0.9, 1.0})
      EXPECT_NEAR(psi(rho, sigma, t), psi_by_matrix_powers(rho, sigma, t), 1e-10);
  }
}

TEST(Psi, DerivativeMatchesFiniteDifference) {
  std::mt19937_64 gen(22);
  const PsiProfile p = PsiProfile::FromPair(random_state(3, gen), random_state(3, gen));
  for (double t : {0.1, 0.5, 0.95, 1.0, 3.0}) {
    const double h = 1e-5;
    EXPECT_NEAR(p.derivative(t), (p(t + h) - p(t - h)) / (2 * h), 1e-7);
  }
}

TEST(Psi, OutsideUnitIntervalNeedsSupportInclusion) {
  const DensityOperator zero = diag2(1.0);
  const DensityOperator one = diag2(0.0);
  EXPECT_THROW(psi(diag2(0.5), zero, 2.0), DomainError);
  EXPECT_NO_THROW(psi(zero, diag2(0.5), 2.0));
  EXPECT_EQ(psi(zero, one, 0.5), -std::numeric_limits<double>::infinity());
}

TEST(Renyi, PlusStateExamples) {
  EXPECT_NEAR(renyi(plus_state(), diag2(0.25), 0.0).value, 1.0, 1e-12);
  EXPECT_THROW(renyi(plus_state(), diag2(0.25), 1.0), DomainError);
  const DivergenceValue orthogonal = renyi(diag2(1.0), diag2(0.0), 0.5);
  EXPECT_FALSE(orthogonal.finite);
}

TEST(RelativeEntropy, PlusStateAndSupportViolation) {
  // rho pure: S = -<+| log2 sigma |+> = -(log2(1/4) + log2(3/4)) / 2.
  const double expected = -0.5 * (std::log2(0.25) + std::log2(0.75));
  EXPECT_NEAR(relative_entropy(plus_state(), diag2(0.25)).value, expected, 1e-12);
  EXPECT_NEAR(expected, 1.2075187, 1e-7);
  EXPECT_FALSE(relative_entropy(diag2(0.5), diag2(1.0)).finite);
  EXPECT_NEAR(relative_entropy(diag2(0.3), diag2(0.3)).value, 0.0, 1e-14);
}

TEST(Chernoff, SymmetricClassicalPair) {
  EXPECT_NEAR(chernoff(diag2(0.9), diag2(0.1)).value, -std::log2(0.6), 1e-9);
  EXPECT_NEAR(chernoff(diag2(0.4), diag2(0.4)).value, 0.0, 1e-12);
}

TEST(Hoeffding, MatchesDenseGridOracle) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 6; ++trial) {
    const DensityOperator rho = random_state(2 + trial % 2, gen);
    const DensityOperator sigma = random_state(2 + trial % 2, gen);
    for (double r : {0.05, 0.5, 2.0}) {
      const double oracle = hoeffding_grid(rho, sigma, r, 200000);
      const DivergenceValue h = hoeffding_direct(rho, sigma, r);
      ASSERT_TRUE(h.finite);
      EXPECT_NEAR(h.value, oracle, 1e-6) << "trial " << trial << " r " << r;
      EXPECT_GE(h.value, oracle - 1e-12);
    }
  }
}

TEST(Hoeffding, ZeroRateIsRelativeEntropyAndMonotone) {
  std::mt19937_64 gen(24);
  const DensityOperator rho = random_state(3, gen);
  const DensityOperator sigma = random_state(3, gen);
  EXPECT_NEAR(hoeffding_direct(rho, sigma, 0.0).value, relative_entropy(rho, sigma).value, 1e-6);
  double prev = 1e300;
  for (double r = 0.0; r <= 3.0; r += 0.25) {
    const double h = hoeffding_direct(rho, sigma, r).value;
    EXPECT_LE(h, prev + 1e-12);
    EXPECT_GE(h, -1e-12);
    prev = h;
  }
  EXPECT_THROW(hoeffding_direct(rho, sigma, -0.1), DomainError);
}

TEST(Hoeffding, SupportViolationAndOrthogonality) {
  // Tr rho P_sigma = 1/2, so the quantity is unbounded for r < 1.
  const DensityOperator rho = diag2(0.5);
  const DensityOperator sigma = diag2(1.0);
  EXPECT_FALSE(hoeffding_direct(rho, sigma, 0.5).finite);
  const DivergenceValue above = hoeffding_direct(rho, sigma, 2.0);
  ASSERT_TRUE(above.finite);
  EXPECT_NEAR(above.value, hoeffding_grid(rho, sigma, 2.0, 200000), 1e-6);
  EXPECT_FALSE(hoeffding_direct(diag2(1.0), diag2(0.0), 5.0).finite);
}

TEST(Legendre, ParametricRouteAgreesWithDirect) {
  std::mt19937_64 gen(25);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = random_state(2 + trial % 3, gen);
    const DensityOperator sigma = random_state(2 + trial % 3, gen);
    const PsiProfile p = PsiProfile::FromPair(rho, sigma);
    for (double a : {-1.0, 0.0, 0.7}) EXPECT_NEAR(legendre_phi_hat(p, a), legendre_phi(p, a) - a, 1e-9);
    for (double r : {0.05, 0.1, 0.5, 1.0, 5.0})
      EXPECT_NEAR(hoeffding_parametric(p, r).value, hoeffding_direct(p, r).value, 1e-6);
  }
}

// Smallest lambda with lambda sigma - rho >= 0, by bisection on the
// operator order.
double smax_bisection(const DensityOperator& rho, const DensityOperator& sigma) {
  double lo = 0.0, hi = 1.0;
  while (!operator_leq(rho.hermitian(), hi * sigma.hermitian(), 0.0)) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (operator_leq(rho.hermitian(), mid * sigma.hermitian(), 0.0) ? hi : lo) = mid;
  }
  return std::log2(hi);
}

TEST(MaxRelativeEntropy, ClosedFormAndBisection) {
  for (double a : {0.1, 0.25, 0.4}) {
    const DivergenceValue smax = max_relative_entropy(plus_state(), diag2(a));
    EXPECT_NEAR(smax.value, std::log2(1.0 / (2.0 * a * (1.0 - a))), 1e-12);
    const DivergenceValue sinf = renyi_infinity(plus_state(), diag2(a));
    EXPECT_NEAR(sinf.value, -std::log2(a), 1e-7);
    EXPECT_LT(smax.value, sinf.value);
  }
  std::mt19937_64 gen(26);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityOperator rho = random_state(3, 1 + trial % 3, gen);
    const DensityOperator sigma = random_state(3, gen);
    EXPECT_NEAR(max_relative_entropy(rho, sigma).value, smax_bisection(rho, sigma), 1e-9);
  }
  EXPECT_FALSE(max_relative_entropy(diag2(0.5), diag2(1.0)).finite);
}

TEST(RenyiInfinity, CommutingClosedForm) {
  const DivergenceValue v = renyi_infinity(diag2(0.5), diag2(0.25));
  EXPECT_NEAR(v.value, 1.0, 1e-12);
  EXPECT_FALSE(renyi_infinity(diag2(0.5), diag2(1.0)).finite);
}

TEST(Ordering, ChainOnRandomPairs) {
  std::mt19937_64 gen(27);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 3;
    const DensityOperator rho = random_state(d, 1 + trial % d, gen);
    const DensityOperator sigma = random_state(d, gen);
    const double s0 = renyi(rho, sigma, 0.0).value;
    const double c = chernoff(rho, sigma).value;
    const double s1 = relative_entropy(rho, sigma).value;
    const double smax = max_relative_entropy(rho, sigma).value;
    const double sinf = renyi_infinity(rho, sigma).value;
    EXPECT_LE(s0, c + 1e-7);
    EXPECT_LE(c, s1 + 1e-7);
    EXPECT_LE(s1, smax + 1e-7);
    EXPECT_LE(smax, sinf + 1e-7);
  }
}

TEST(Divergences, IdenticalStatesVanish) {
  std::mt19937_64 gen(28);
  const DensityOperator rho = random_state(3, gen);
  EXPECT_NEAR(relative_entropy(rho, rho).value, 0.0, 1e-12);
  EXPECT_NEAR(chernoff(rho, rho).value, 0.0, 1e-12);
  EXPECT_NEAR(max_relative_entropy(rho, rho).value, 0.0, 1e-10);
  EXPECT_NEAR(renyi_infinity(rho, rho).value, 0.0, 1e-7);
  EXPECT_NEAR(hoeffding_direct(rho, rho, 0.5).value, 0.0, 1e-12);
}

}  // namespace
}  // namespace cqbounds
