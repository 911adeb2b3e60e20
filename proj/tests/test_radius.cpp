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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "cqbounds/channel.hpp"
#include "cqbounds/errors.hpp"
#include "cqbounds/radius.hpp"
#include "test_support.hpp"

namespace cqbounds {
namespace {

using testing::random_psd;
using testing::random_state;
using testing::random_unitary;

std::vector<DensityOperator> commuting_family(int count, int d, std::mt19937_64& gen) {
  const Matrix v = random_unitary(d, gen);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<DensityOperator> out;
  for (int k = 0; k < count; ++k) {
    RealVector p(d);
    for (int i = 0; i < d; ++i) p(i) = u(gen);
    p /= p.sum();
    out.emplace_back(Matrix(v * p.cast<Complex>().asDiagonal() * v.adjoint()),
                     DensityOperator::Normalization::kRenormalize);
  }
  return out;
}

// Pure qubit states cos(a)|0> + sin(a)|1>.
DensityOperator real_pure(double angle) {
  return DensityOperator::Pure((Eigen::VectorXcd(2) << std::cos(angle), std::sin(angle)).finished());
}

TEST(Povm, Validation) {
  EXPECT_THROW(Povm({}), DomainError);
  EXPECT_THROW(Povm({HermitianMatrix::Identity(2), HermitianMatrix::Identity(2)}), DomainError);
  EXPECT_THROW(Povm({HermitianMatrix::Identity(2), HermitianMatrix::Identity(3)}), DimensionError);
  const HermitianMatrix neg = HermitianMatrix::Diagonal((RealVector(2) << 1.0, -0.5).finished());
  EXPECT_THROW(Povm({neg}), DomainError);
  const Povm half({0.5 * HermitianMatrix::Identity(2)});
  EXPECT_NEAR(half.completeness_defect_min(), 0.5, 1e-15);
}

TEST(MinTraceDominating, TwoPureStatesMatchBlochGrid) {
  const double theta = std::numbers::pi / 3;
  const std::vector<DensityOperator> states{real_pure(0.0), real_pure(theta)};
  const RadiusResult r = max_radius(states);
  const RadiusResult general = max_radius(states, {.force_general = true});

  // Grid over real qubit states sigma = (I + x X + z Z) / 2 of
  // max_k log2 <psi_k| sigma^-1 |psi_k>.
  double oracle = 1e300;
  const int steps = 1000;
  for (int i = -steps; i <= steps; ++i)
    for (int j = -steps; j <= steps; ++j) {
      const double x = static_cast<double>(i) / steps, z = static_cast<double>(j) / steps;
      const double det = 0.25 * (1.0 - x * x - z * z);
      if (det <= 1e-9) continue;
      double worst = 0.0;
      for (double a : {0.0, theta}) {
        const double c = std::cos(a), s = std::sin(a);
        // sigma^-1 = adj(sigma) / det with adj = (I - x X - z Z) / 2.
        const double quad = 0.5 * (c * c * (1.0 + z) + s * s * (1.0 - z) - 2.0 * x * c * s);
        worst = std::max(worst, quad / det);
      }
      oracle = std::min(oracle, std::log2(worst));
    }
  EXPECT_NEAR(general.value, oracle, 1e-4);
  EXPECT_LE(general.value, oracle + 1e-9);
  EXPECT_NEAR(general.value, std::log2(1.0 + std::sin(theta)), 1e-7);
  EXPECT_NEAR(r.value, general.value, 1e-9);
  EXPECT_LT(general.center_residual, 1e-6);
}

TEST(MinTraceDominating, CommutingPathAgreesWithGeneralPath) {
  std::mt19937_64 gen(51);
  for (int trial = 0; trial < 10; ++trial) {
    const auto states = commuting_family(2 + trial % 3, 2 + trial % 3, gen);
    const RadiusResult fast = min_trace_dominating(states);
    EXPECT_EQ(fast.method, "commuting-diagonal");
    const RadiusResult general = min_trace_dominating(states, {.force_general = true});
    EXPECT_EQ(general.method, "log-barrier-newton");
    EXPECT_NEAR(fast.value, general.value, 1e-7);
  }
}

TEST(MinTraceDominating, TwoStatesEqualHelstromValue) {
  // min Tr B over B >= rho_1, rho_2 is 1 + ||rho_1 - rho_2||_1 / 2.
  std::mt19937_64 gen(52);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 3;
    const std::vector<DensityOperator> states{random_state(d, gen), random_state(d, 1, gen)};
    const RadiusResult r = min_trace_dominating(states);
    const double expected = 1.0 + 0.5 * trace_abs(states[0].hermitian() - states[1].hermitian());
    EXPECT_NEAR(r.dominating.trace(), expected, 1e-7);
    for (const auto& s : states) EXPECT_TRUE(operator_leq(s.hermitian(), r.dominating, 1e-12));
  }
}

TEST(MinTraceDominating, FeasibleAndAboveEveryPovmValue) {
  std::mt19937_64 gen(53);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<DensityOperator> states;
    for (int k = 0; k < 4; ++k) states.push_back(random_state(3, gen));
    const RadiusResult r = min_trace_dominating(states);
    EXPECT_TRUE(r.converged);
    for (const auto& s : states) EXPECT_TRUE(operator_leq(s.hermitian(), r.dominating, 1e-12));
    // Weak duality: Tr B >= sum_k Tr rho_k E_k for every POVM.
    for (int p = 0; p < 20; ++p) {
      std::vector<HermitianMatrix> raw;
      HermitianMatrix total = HermitianMatrix::Zero(3);
      for (int k = 0; k < 4; ++k) {
        raw.push_back(random_psd(3, 1.0, gen));
        total += raw.back();
      }
      const HermitianMatrix inv = frac_power(total, -0.5);
      std::vector<HermitianMatrix> elems;
      for (const auto& e : raw) elems.push_back(sandwich(inv, e));
      const double value = 4.0 * success_probability(states, RealVector::Constant(4, 0.25), Povm(elems));
      EXPECT_LE(value, r.dominating.trace() + 1e-9);
    }
  }
}

TEST(MaxRadius, SingleStateAndDepolarizing) {
  std::mt19937_64 gen(54);
  const std::vector<DensityOperator> one{random_state(3, gen)};
  EXPECT_EQ(max_radius(one).value, 0.0);

  for (auto [d, alpha] : std::vector<std::pair<int, double>>{{2, 0.5}, {3, 0.5}, {4, 0.7}}) {
    const Channel ch = depolarizing(d, alpha);
    const double expected = std::log2(1.0 + (d - 1) * alpha);
    EXPECT_NEAR(max_radius(ch.outputs()).value, expected, 1e-12);
    const RadiusResult general = max_radius(ch.outputs(), {.force_general = true});
    EXPECT_NEAR(general.value, expected, 1e-7);
    EXPECT_LT(general.center_residual, 1e-6);
  }
}

TEST(RelentRadius, EqualsHolevoOfDepolarizing) {
  const Channel ch = depolarizing(3, 0.5);
  const RadiusResult r = relent_radius(ch.outputs());
  EXPECT_NEAR(r.value, depolarizing_closed_forms(3, 0.5).holevo, 1e-6);
  EXPECT_TRUE(r.converged);
}

TEST(MaximumLikelihood, TiesGoToLowestIndexAndNonCommutingThrows) {
  const std::vector<DensityOperator> same{DensityOperator::MaximallyMixed(2), DensityOperator::MaximallyMixed(2)};
  const Povm ml = ml_measurement_commuting(same);
  EXPECT_NEAR(ml[0].trace(), 2.0, 1e-12);
  EXPECT_NEAR(ml[1].trace(), 0.0, 1e-12);

  const std::vector<DensityOperator> noncommuting{real_pure(0.0), real_pure(0.4)};
  try {
    ml_measurement_commuting(noncommuting);
    FAIL() << "expected CommutativityError";
  } catch (const CommutativityError& e) {
    EXPECT_GT(e.commutator_norm(), 0.1);
  }
}

TEST(MaximumLikelihood, OptimalSuccessMatchesMl) {
  std::mt19937_64 gen(55);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 2 + trial % 3;
    const auto states = commuting_family(m, 3, gen);
    const Povm ml = ml_measurement_commuting(states);
    const double ml_success = success_probability(states, RealVector::Constant(m, 1.0 / m), ml);
    EXPECT_NEAR(optimal_success(states), ml_success, 1e-12);
    EXPECT_NEAR(optimal_success(states, {.force_general = true}), ml_success, 1e-7);
  }
  const Channel ch = depolarizing(2, 0.5);
  EXPECT_NEAR(optimal_success(ch.outputs()), depolarizing_closed_forms(2, 0.5).success_bound(2), 1e-12);
}

TEST(Helstrom, ProjectionIsOptimalAmongEigenprojections) {
  std::mt19937_64 gen(56);
  for (int trial = 0; trial < 10; ++trial) {
    const HermitianMatrix a = random_psd(4, 1.0, gen), b = random_psd(4, 1.0, gen);
    const HelstromResult h = helstrom_test(a, b);
    EXPECT_NEAR(h.value, 0.5 * (a.trace() + b.trace() - trace_abs(a - b)), 1e-12);
    const Spectrum s = spectral_decompose(a - b);
    for (int mask = 0; mask < 16; ++mask) {
      RealVector ind(4);
      for (int i = 0; i < 4; ++i) ind(i) = (mask >> i) & 1;
      const HermitianMatrix p(Matrix(s.vectors * ind.cast<Complex>().asDiagonal() * s.vectors.adjoint()));
      const double v = a.trace() - trace_product(a, p) + trace_product(b, p);
      EXPECT_GE(v, h.value - 1e-12);
    }
  }
}

TEST(Audenaert, HoldsOnRandomPairsAndEndpoints) {
  std::mt19937_64 gen(57);
  for (int trial = 0; trial < 50; ++trial) {
    const HermitianMatrix a = random_psd(3, 1.0, gen), b = random_psd(3, 1.0, gen);
    for (double t : {0.0, 0.3, 0.5, 1.0}) {
      const AudenaertSides s = audenaert_bound(a, b, t);
      EXPECT_LE(s.lhs, s.rhs + 1e-12);
    }
  }
  const HermitianMatrix id = HermitianMatrix::Identity(2);
  const AudenaertSides equal = audenaert_bound(id, id, 0.5);
  EXPECT_NEAR(equal.lhs, 2.0, 1e-14);
  EXPECT_NEAR(equal.rhs, 2.0, 1e-14);
  EXPECT_THROW(audenaert_bound(id, id, 1.5), DomainError);
}

}  // namespace
}  // namespace cqbounds
