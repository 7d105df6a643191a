// Copyright 2026 The gksl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gksl/lattloss.hpp"
#include "test_util.hpp"

namespace gksl {
namespace {

LossModel loss(int sites, int order, double rate, Boundary boundary = Boundary::Open) {
  LossModel m;
  m.sites = sites;
  m.order = order;
  m.rate = rate;
  m.boundary = boundary;
  return m;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
  return out;
}

TEST(LossModel, Validation) {
  EXPECT_THROW(validate(loss(3, 4, 1.0)), SpecError);
  EXPECT_THROW(validate(loss(3, 0, 1.0)), SpecError);
  EXPECT_THROW(validate(loss(3, 1, -0.1)), SpecError);
  EXPECT_THROW(validate(loss(13, 1, 1.0)), DimensionError);
  EXPECT_NO_THROW(validate(loss(12, 3, 0.0)));
}

TEST(LossModel, WindowCounting) {
  EXPECT_EQ(loss_windows(loss(2, 1, 1.0)).size(), 2u);
  const auto open = loss_windows(loss(3, 2, 1.0));
  ASSERT_EQ(open.size(), 2u);
  EXPECT_EQ(open[0], (std::vector<int>{1, 2}));
  EXPECT_EQ(open[1], (std::vector<int>{2, 3}));
  EXPECT_EQ(loss_windows(loss(5, 2, 1.0, Boundary::Periodic)).size(), 5u);
  EXPECT_EQ(loss_windows(loss(4, 4, 1.0, Boundary::Periodic)).size(), 1u);
}

TEST(LossModel, SingleBodyJumps) {
  const double gamma = 0.7;
  const LindbladModel m = build_loss_lindblad(loss(2, 1, gamma));
  ASSERT_EQ(m.jumps().size(), 2u);
  EXPECT_LT(max_abs(m.jumps()[0] - std::sqrt(gamma) * site_operator(pauli::lower(), 1, 2)), 1e-15);
  EXPECT_LT(max_abs(m.jumps()[1] - std::sqrt(gamma) * site_operator(pauli::lower(), 2, 2)), 1e-15);
  EXPECT_TRUE(build_loss_lindblad(loss(3, 1, 0.0)).jumps().empty());
}

TEST(LossModel, GlobalLossOnlyEmptiesFullFilling) {
  const int l = 4;
  const LindbladModel m = build_loss_lindblad(loss(l, l, 1.0));
  ASSERT_EQ(m.jumps().size(), 1u);
  const CMatrix& op = m.jumps()[0];
  for (Index s = 0; s < 16; ++s) {
    const CVector image = op * CVector::Unit(16, s);
    if (s == 15) {
      EXPECT_NEAR(std::abs(image(0)), 1.0, 1e-15);
      EXPECT_NEAR(image.norm(), 1.0, 1e-15);
    } else {
      EXPECT_EQ(image.norm(), 0.0) << s;
    }
  }
}

TEST(LossModel, HamiltonianConservesNumberAndAddsTrap) {
  LossModel m = loss(4, 1, 0.0, Boundary::Periodic);
  m.trap = 0.3;
  const CMatrix h = loss_hamiltonian(m);
  CMatrix n = CMatrix::Zero(16, 16);
  for (int j = 1; j <= 4; ++j) n += site_operator(pauli::number(), j, 4);
  EXPECT_LT(max_abs(commutator(h, n)), 1e-14);
  // |1000>: trap energy 0.3 * (1 - 2.5)^2.
  EXPECT_NEAR(h(8, 8).real(), 0.3 * 2.25, 1e-14);
  EXPECT_NEAR(h(8, 4).real(), -1.0, 1e-15);
  EXPECT_NEAR(h(8, 1).real(), -1.0, 1e-15);
}

TEST(Density, ConstantWithoutLoss) {
  const LossModel m = loss(4, 1, 0.0);
  const DensitySeries s = density_trajectory(m, occupation_state({1, 1, 0, 1}), linspace(0.0, 5.0, 11));
  for (double n : s.density) EXPECT_NEAR(n, 0.75, 1e-10);
}

TEST(Density, SingleBodyLossIsExponential) {
  std::mt19937_64 rng(5);
  for (int l : {2, 4, 6}) {
    const double gamma = 0.6;
    LossModel m = loss(l, 1, gamma);
    m.trap = 0.2;
    const DensityMatrix rho0 = testing::random_density(Index{1} << l, rng);
    const DensitySeries s = density_trajectory(m, rho0, linspace(0.0, 4.0, 9));
    for (std::size_t i = 0; i < s.times.size(); ++i) {
      EXPECT_NEAR(s.density[i], s.density[0] * std::exp(-gamma * s.times[i]), 1e-8) << l;
    }
  }
}

TEST(Density, PairLossFromFullFillingIsMonotoneAndNonExponential) {
  const LossModel m = loss(6, 2, 1.0);
  const std::vector<double> times = linspace(0.0, 20.0, 81);
  const DensitySeries s = density_trajectory(m, occupation_state({1, 1, 1, 1, 1, 1}), times);
  for (std::size_t i = 1; i < s.density.size(); ++i) EXPECT_LT(s.density[i], s.density[i - 1]);
  const DecayFit fit = decay_exponent_fit(times, s.density, 1.0, 20.0);
  EXPECT_TRUE(fit.non_exponential);
  EXPECT_LT(fit.alpha, 0.0);
}

TEST(Momentum, LocalizedStateIsFlat) {
  const LossModel m = loss(5, 1, 0.0, Boundary::Periodic);
  const RVector nk = momentum_occupation(m, occupation_state({1, 0, 1, 1, 0}).matrix());
  for (Index q = 0; q < nk.size(); ++q) EXPECT_NEAR(nk(q), 0.6, 1e-14);
  EXPECT_LT(first_fourier_mode(nk), 1e-14);
}

TEST(Momentum, SumRuleForRandomStates) {
  std::mt19937_64 rng(9);
  const LossModel m = loss(4, 2, 1.0, Boundary::Periodic);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = testing::random_density(16, rng);
    EXPECT_NEAR(momentum_occupation(m, rho.matrix()).sum(), 4.0 * mean_density(rho.matrix(), 4), 1e-10);
  }
}

TEST(Momentum, PlaneWaveIsStationaryWithoutLoss) {
  // One particle in the q = 1 plane wave of a periodic ring.
  const int l = 4;
  const LossModel m = loss(l, 1, 0.0, Boundary::Periodic);
  CVector psi = CVector::Zero(16);
  for (int j = 0; j < l; ++j) psi(Index{1} << (l - 1 - j)) = std::exp(Complex(0.0, 2.0 * M_PI * j / l)) / 2.0;
  const DensityMatrix rho0 = DensityMatrix::pure(psi);
  const RVector nk0 = momentum_occupation(m, rho0.matrix());
  EXPECT_NEAR(nk0.maxCoeff(), 1.0, 1e-12);
  const DensitySeries s = density_trajectory(m, rho0, {0.0, 0.7, 2.3});
  for (const DensityMatrix& rho : s.states) {
    EXPECT_LT((momentum_occupation(m, rho.matrix()) - nk0).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(DecayFit, ExactPowerLaw) {
  std::vector<double> t, n;
  for (int i = 0; i < 20; ++i) {
    t.push_back(1.0 + i);
    n.push_back(1.0 / std::sqrt(t.back()));
  }
  const DecayFit fit = decay_exponent_fit(t, n, 1.0, 20.0);
  EXPECT_NEAR(fit.alpha, -0.5, 1e-6);
  EXPECT_LT(fit.std_error, 1e-10);
  EXPECT_FALSE(fit.non_power_law);
  EXPECT_TRUE(fit.non_exponential);
}

TEST(DecayFit, ExponentialIsFlaggedWithLocalSlope) {
  const std::vector<double> t = linspace(1.0, 2.0, 41);
  std::vector<double> n;
  for (double x : t) n.push_back(std::exp(-x));
  const DecayFit fit = decay_exponent_fit(t, n, 1.0, 2.0);
  // Ordinary least-squares slope of -t against log t, written out directly.
  double mx = 0.0, my = 0.0;
  for (double x : t) {
    mx += std::log(x);
    my -= x;
  }
  mx /= t.size();
  my /= t.size();
  double sxy = 0.0, sxx = 0.0;
  for (double x : t) {
    sxy += (std::log(x) - mx) * (-x - my);
    sxx += (std::log(x) - mx) * (std::log(x) - mx);
  }
  EXPECT_NEAR(fit.alpha, sxy / sxx, 1e-12);
  EXPECT_NEAR(fit.alpha, -1.44, 0.02);
  EXPECT_TRUE(fit.non_power_law);
  EXPECT_FALSE(fit.non_exponential);
}

TEST(DecayFit, SingleBodySimulationIsNotPowerLaw) {
  const std::vector<double> times = linspace(0.5, 5.0, 19);
  const DensitySeries s = density_trajectory(loss(3, 1, 1.0), occupation_state({1, 1, 1}), times);
  const DecayFit fit = decay_exponent_fit(times, s.density, 0.5, 5.0);
  EXPECT_TRUE(fit.non_power_law);
  EXPECT_FALSE(fit.non_exponential);
}

TEST(DecayFit, Errors) {
  const std::vector<double> t = linspace(1.0, 2.0, 7);
  const std::vector<double> n(7, 0.5);
  EXPECT_THROW(decay_exponent_fit(t, n, 1.0, 2.0), SpecError);
  std::vector<double> t2 = linspace(1.0, 2.0, 9), n2(9, 0.5);
  n2[3] = 0.0;
  EXPECT_THROW(decay_exponent_fit(t2, n2, 1.0, 2.0), NumericError);
}

TEST(Uniqueness, SingleBodyLossIsIrreducible) {
  const LindbladModel k1 = build_loss_lindblad(loss(3, 1, 1.0));
  EXPECT_TRUE(commutant_uniqueness_test(k1).irreducible);
  const SteadyState ss = steady_state(k1);
  EXPECT_TRUE(ss.unique);
  EXPECT_NEAR(ss.state.population(0), 1.0, 1e-10);
}

TEST(Uniqueness, PairLossHasDarkSectors) {
  const LindbladModel k2 = build_loss_lindblad(loss(3, 2, 1.0));
  EXPECT_FALSE(commutant_uniqueness_test(k2).irreducible);
  EXPECT_FALSE(steady_state(k2).unique);
  // A single particle is never lost.
  const DensityMatrix one = occupation_state({0, 1, 0});
  EXPECT_LT(max_abs(apply_generator(LindbladModel(HermitianOperator::zero(8), k2.jumps()), one)), 1e-15);
}

}  // namespace
}  // namespace gksl
