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

#include "gksl/liouvillian.hpp"
#include "test_util.hpp"

namespace gksl {
namespace {

using testing::amplitude_damping;
using testing::random_density;
using testing::random_matrix;
using testing::random_model;

constexpr PropagationOptions kRk{PropagationMethod::AdaptiveRk, 1e-11, 1e-13};

TEST(Generator, ZeroModelGivesZero) {
  const LindbladModel m(HermitianOperator::zero(3), {});
  EXPECT_EQ(max_abs(apply_generator(m, DensityMatrix::maximally_mixed(3))), 0.0);
}

TEST(Generator, AmplitudeDampingOnExcitedState) {
  const LindbladModel m(HermitianOperator::zero(2), {pauli::lower()});
  const CMatrix out = apply_generator(m, DensityMatrix::basis_state(2, 1));
  EXPECT_LT(max_abs(out - testing::diag2(1.0, -1.0)), 1e-15);
}

TEST(Generator, DephasingDecaysCoherenceAtTwiceKappa) {
  const double kappa = 0.7;
  const LindbladModel m(HermitianOperator::zero(2), {std::sqrt(kappa) * pauli::z()});
  CMatrix rho = 0.5 * CMatrix::Identity(2, 2);
  rho(0, 1) = Complex(0.2, 0.1);
  rho(1, 0) = std::conj(rho(0, 1));
  const CMatrix out = apply_generator(m, rho);
  EXPECT_LT(std::abs(out(0, 1) + 2.0 * kappa * rho(0, 1)), 1e-15);
  EXPECT_EQ(std::abs(out(0, 0)), 0.0);
  EXPECT_EQ(std::abs(out(1, 1)), 0.0);
}

TEST(Generator, TracelessAndHermitian) {
  std::mt19937_64 rng(1);
  for (Index n = 2; n <= 5; ++n) {
    const LindbladModel m = random_model(n, 3, rng);
    const CMatrix out = apply_generator(m, random_density(n, rng));
    EXPECT_LT(std::abs(out.trace()), 1e-10);
    EXPECT_LT(hermiticity_defect(out), 1e-10);
  }
}

TEST(Generator, RejectsDimensionMismatch) {
  EXPECT_THROW(apply_generator(amplitude_damping(1.0, 1.0), CMatrix::Identity(3, 3)), DimensionError);
  EXPECT_THROW(LindbladModel(HermitianOperator::zero(2), {CMatrix::Identity(3, 3)}), DimensionError);
}

TEST(Superoperator, MatchesGeneratorOnRandomInputs) {
  std::mt19937_64 rng(2);
  for (Index n = 2; n <= 6; ++n) {
    const LindbladModel m = random_model(n, 2, rng);
    const Superoperator s = build_superoperator(m);
    for (int rep = 0; rep < 10; ++rep) {
      const CMatrix rho = random_matrix(n, rng);
      EXPECT_LT(max_abs(s.apply(rho) - apply_generator(m, rho)), 1e-10);
    }
  }
}

TEST(Superoperator, ClosedSystemFormula) {
  const LindbladModel m(HermitianOperator(pauli::z()), {});
  const CMatrix h = pauli::z();
  const CMatrix id = CMatrix::Identity(2, 2);
  const CMatrix expected = -kI * (tensor(id, h) - tensor(h.transpose(), id));
  EXPECT_LT(max_abs(build_superoperator(m).matrix() - expected), 1e-15);
}

TEST(Superoperator, AmplitudeDampingSpectrum) {
  const double gamma = 0.8, omega = 1.7;
  CVector ev = liouvillian_spectrum(amplitude_damping(gamma, omega));
  std::vector<Complex> expected = {0.0, -gamma, Complex(-gamma / 2, omega), Complex(-gamma / 2, -omega)};
  for (const Complex& e : expected) {
    double best = 1e9;
    for (Index k = 0; k < ev.size(); ++k) best = std::min(best, std::abs(ev(k) - e));
    EXPECT_LT(best, 1e-12) << e;
  }
}

TEST(Superoperator, TracePreservationForRandomModels) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const Index n = 2 + rep % 4;
    EXPECT_LT(build_superoperator(random_model(n, 1 + rep % 3, rng)).trace_preservation_defect(), 1e-10);
  }
}

TEST(Superoperator, SizeLimit) {
  const LindbladModel m(HermitianOperator::zero(8), {});
  EXPECT_THROW(build_superoperator(m, 4), DimensionError);
}

TEST(Propagate, TimeZeroIsIdentity) {
  std::mt19937_64 rng(4);
  const DensityMatrix rho = random_density(3, rng);
  const LindbladModel m = random_model(3, 2, rng);
  EXPECT_LT(max_abs(propagate(m, rho, 0.0).matrix() - rho.matrix()), 1e-15);
  EXPECT_LT(max_abs(propagate(m, rho, 0.0, kRk).matrix() - rho.matrix()), 1e-15);
}

TEST(Propagate, AmplitudeDampingAnalytic) {
  const LindbladModel m = amplitude_damping(1.0, 2.0);
  const DensityMatrix rho0 = DensityMatrix::basis_state(2, 1);
  EXPECT_NEAR(propagate(m, rho0, 1.0).population(1), std::exp(-1.0), 1e-8);
  EXPECT_NEAR(propagate(m, rho0, 1.0, kRk).population(1), std::exp(-1.0), 1e-8);
  EXPECT_NEAR(std::exp(-1.0), 0.367879, 1e-6);
}

TEST(Propagate, UnitaryEvolutionIsIsospectral) {
  std::mt19937_64 rng(5);
  const LindbladModel m(HermitianOperator(testing::random_hermitian(4, rng)), {});
  const DensityMatrix rho0 = random_density(4, rng);
  const RVector before = eigh(rho0.matrix()).values;
  for (double t : {0.3, 2.0, 7.5}) {
    EXPECT_LT((eigh(propagate(m, rho0, t).matrix()).values - before).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Propagate, MethodsAgreeAndSemigroupHolds) {
  std::mt19937_64 rng(6);
  for (Index n : {2, 4, 8}) {
    const LindbladModel m = random_model(n, 2, rng);
    const DensityMatrix rho0 = random_density(n, rng);
    const DensityMatrix a = propagate(m, rho0, 1.1);
    const DensityMatrix b = propagate(m, rho0, 1.1, kRk);
    EXPECT_LT(max_abs(a.matrix() - b.matrix()), 1e-7);
    const DensityMatrix twice = propagate(m, propagate(m, rho0, 0.4), 0.7);
    EXPECT_LT(max_abs(twice.matrix() - a.matrix()), 1e-9);
  }
}

TEST(Propagate, SeriesMatchesIndividualCalls) {
  std::mt19937_64 rng(7);
  const LindbladModel m = random_model(3, 2, rng);
  const DensityMatrix rho0 = random_density(3, rng);
  const double times[] = {0.0, 0.5, 1.0, 1.5};
  const auto series = propagate_series(m, rho0, times);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_LT(max_abs(series[i].matrix() - propagate(m, rho0, times[i]).matrix()), 1e-10);
  }
  const double bad[] = {1.0, 0.5};
  EXPECT_THROW(propagate_series(m, rho0, bad), NumericError);
  EXPECT_THROW(propagate(m, rho0, -1.0), NumericError);
}

TEST(Propagate, IrreducibleModelsForgetInitialState) {
  std::mt19937_64 rng(8);
  const LindbladModel m = random_model(3, 2, rng);
  const SteadyState ss = steady_state(m);
  ASSERT_TRUE(ss.unique);
  const double t = 40.0 / ss.gap;
  const DensityMatrix a = propagate(m, random_density(3, rng), t);
  const DensityMatrix b = propagate(m, random_density(3, rng), t);
  EXPECT_LT(trace_distance(a.matrix(), b.matrix()), 1e-6);
}

TEST(SteadyState, AmplitudeDamping) {
  const double gamma = 0.6;
  const SteadyState ss = steady_state(amplitude_damping(gamma, 1.0));
  EXPECT_TRUE(ss.unique);
  EXPECT_LT(max_abs(ss.state.matrix() - DensityMatrix::basis_state(2, 0).matrix()), 1e-10);
  EXPECT_NEAR(ss.gap, gamma / 2, 1e-10);
  EXPECT_LT(ss.residual, 1e-10);
}

TEST(SteadyState, ThermalQubitRateBalance) {
  const double down = 1.3, up = 0.4;
  const LindbladModel m(HermitianOperator(0.5 * pauli::z()),
                        {std::sqrt(down) * pauli::lower(), std::sqrt(up) * pauli::raise()});
  const SteadyState ss = steady_state(m);
  EXPECT_TRUE(ss.unique);
  EXPECT_NEAR(ss.state.population(0), down / (down + up), 1e-12);
  EXPECT_NEAR(ss.state.population(1), up / (down + up), 1e-12);
}

TEST(SteadyState, UnitaryModelIsDegenerate) {
  std::mt19937_64 rng(9);
  const LindbladModel m(HermitianOperator(testing::random_hermitian(3, rng)), {});
  const SteadyState ss = steady_state(m);
  EXPECT_FALSE(ss.unique);
  EXPECT_EQ(ss.null_space.size(), 3u);
  EXPECT_LT(max_abs(ss.state.matrix() - DensityMatrix::maximally_mixed(3).matrix()), 1e-10);
}

TEST(SteadyState, IterativePathAboveSixteen) {
  // Five independently damped qubits relax to the vacuum.
  const int n = 5;
  std::vector<CMatrix> jumps;
  CMatrix h = CMatrix::Zero(32, 32);
  for (int j = 1; j <= n; ++j) {
    jumps.push_back(std::sqrt(0.5 + 0.1 * j) * site_operator(pauli::lower(), j, n));
    h += 0.3 * j * site_operator(pauli::z(), j, n);
  }
  const CMatrix hop = two_site_operator(pauli::raise(), 1, pauli::lower(), 2, n);
  h += hop + hop.adjoint();
  const SteadyState ss = steady_state(LindbladModel(HermitianOperator(h), jumps));
  EXPECT_TRUE(ss.unique);
  EXPECT_NEAR(ss.state.population(0), 1.0, 1e-9);
  EXPECT_LT(ss.residual, 1e-9);
  EXPECT_GT(ss.gap, 0.0);
}

TEST(SteadyState, DegenerateKernelProjectionMatchesLongTimeLimit) {
  // Dephasing on one qubit of two, no Hamiltonian: populations are frozen.
  const LindbladModel m(HermitianOperator::zero(2), {pauli::z()});
  const SteadyState ss = steady_state(m);
  EXPECT_FALSE(ss.unique);
  EXPECT_EQ(ss.null_space.size(), 2u);
  EXPECT_LT(max_abs(ss.state.matrix() - 0.5 * CMatrix::Identity(2, 2)), 1e-12);
}

TEST(Commutant, DampedQubitIsIrreducible) {
  const CommutantResult r = commutant_uniqueness_test(amplitude_damping(1.0, 1.0));
  EXPECT_TRUE(r.irreducible);
  EXPECT_EQ(r.dimension, 1);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Commutant, IdentityJumpIsReducible) {
  const LindbladModel m(HermitianOperator::zero(2), {CMatrix::Identity(2, 2)});
  const CommutantResult r = commutant_uniqueness_test(m);
  EXPECT_FALSE(r.irreducible);
  EXPECT_EQ(r.dimension, 4);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_GT(max_abs(*r.witness - (r.witness->trace() / 2.0) * CMatrix::Identity(2, 2)), 1e-6);
}

TEST(Commutant, DecoupledQubitsAreReducible) {
  const LindbladModel m(HermitianOperator::zero(4),
                        {site_operator(pauli::lower(), 1, 2), site_operator(pauli::lower(), 2, 2)});
  const CommutantResult r = commutant_uniqueness_test(m);
  // Local damping on both qubits: only the joint vacuum is stationary, but the
  // algebra generated by sigma^-_1, sigma^-_2 and adjoints is all of M_4.
  EXPECT_TRUE(r.irreducible);

  const LindbladModel split(HermitianOperator::zero(4), {site_operator(pauli::lower(), 2, 2)});
  const CommutantResult rs = commutant_uniqueness_test(split);
  EXPECT_FALSE(rs.irreducible);
  ASSERT_TRUE(rs.witness.has_value());
  for (const CMatrix& g : {split.jumps()[0], CMatrix(split.jumps()[0].adjoint())}) {
    EXPECT_LT(max_abs(commutator(*rs.witness, g)), 1e-9);
  }
  const CMatrix z1 = site_operator(pauli::z(), 1, 2);
  EXPECT_LT(max_abs(commutator(z1, split.jumps()[0])), 1e-15);
}

TEST(Commutant, AgreesWithSteadyStateMultiplicity) {
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 10; ++rep) {
    const LindbladModel m = random_model(2 + rep % 3, 1, rng);
    EXPECT_EQ(commutant_uniqueness_test(m).irreducible, steady_state(m).unique);
  }
}

TEST(Kraus, UnitaryChannel) {
  std::mt19937_64 rng(11);
  const CMatrix u = matrix_exp(-kI * testing::random_hermitian(3, rng));
  const DensityMatrix rho = random_density(3, rng);
  const KrausMap k({u});
  EXPECT_LT(max_abs(apply_kraus(k, rho).matrix() - u * rho.matrix() * u.adjoint()), 1e-14);
}

TEST(Kraus, AmplitudeDampingChannel) {
  const double p = 0.25;
  CMatrix k1 = CMatrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(p);
  const KrausMap k({testing::diag2(1.0, std::sqrt(1.0 - p)), k1});
  const DensityMatrix out = apply_kraus(k, DensityMatrix::basis_state(2, 1));
  EXPECT_LT(max_abs(out.matrix() - testing::diag2(0.25, 0.75)), 1e-15);
  EXPECT_LT(max_abs(apply_dual_kraus(k, CMatrix::Identity(2, 2)) - CMatrix::Identity(2, 2)), 1e-15);
}

TEST(Kraus, CompletenessViolation) {
  EXPECT_THROW(KrausMap({1.01 * CMatrix::Identity(2, 2)}), MapError);
  EXPECT_THROW(KrausMap(std::vector<CMatrix>{}), MapError);
}

TEST(Kraus, FirstOrderMapConvergesLinearly) {
  std::mt19937_64 rng(12);
  const LindbladModel m = random_model(3, 2, rng);
  const DensityMatrix rho0 = random_density(3, rng);
  const double t = 1.0;
  const CMatrix exact = propagate(m, rho0, t).matrix();
  std::vector<double> errors;
  for (int steps : {100, 200, 400}) {
    const double dt = t / steps;
    const auto ops = first_order_kraus(m, dt);
    CMatrix rho = rho0.matrix();
    for (int s = 0; s < steps; ++s) {
      CMatrix next = CMatrix::Zero(3, 3);
      for (const CMatrix& k : ops) next += k * rho * k.adjoint();
      rho = next;
    }
    errors.push_back(max_abs(rho - exact));
  }
  EXPECT_NEAR(errors[0] / errors[1], 2.0, 0.2);
  EXPECT_NEAR(errors[1] / errors[2], 2.0, 0.2);
}

TEST(Dual, UnitalAndDuality) {
  std::mt19937_64 rng(13);
  const LindbladModel m = random_model(4, 2, rng);
  EXPECT_LT(max_abs(dual_generator(m, CMatrix::Identity(4, 4))), 1e-12);
  for (int rep = 0; rep < 5; ++rep) {
    const CMatrix x = random_matrix(4, rng);
    const CMatrix rho = random_density(4, rng).matrix();
    const Complex lhs = (x.adjoint() * apply_generator(m, rho)).trace();
    const Complex rhs = (dual_generator(m, x).adjoint() * rho).trace();
    EXPECT_LT(std::abs(lhs - rhs), 1e-10);
  }
}

TEST(Dual, AmplitudeDampingSigmaZ) {
  const double gamma = 0.9;
  const CMatrix out = dual_generator(amplitude_damping(gamma, 1.3), pauli::z());
  EXPECT_LT(max_abs(out - gamma * (CMatrix::Identity(2, 2) - pauli::z())), 1e-15);
}

TEST(Dual, ClosedSystemHeisenberg) {
  std::mt19937_64 rng(14);
  const CMatrix h = testing::random_hermitian(3, rng);
  const CMatrix x = random_matrix(3, rng);
  const LindbladModel m(HermitianOperator(h), {});
  EXPECT_LT(max_abs(dual_generator(m, x) - kI * commutator(h, x)), 1e-14);
}

TEST(Gauge, IdentityGauge) {
  const LindbladModel m = amplitude_damping(1.0, 1.0);
  const Complex a[] = {0.0};
  const LindbladModel g = gauge_transform(m, a, 0.0);
  EXPECT_EQ(max_abs(g.hamiltonian().matrix() - m.hamiltonian().matrix()), 0.0);
  EXPECT_EQ(max_abs(g.jumps()[0] - m.jumps()[0]), 0.0);
}

TEST(Gauge, SuperoperatorInvariance) {
  const LindbladModel m = amplitude_damping(1.0, 1.0);
  const Complex a[] = {Complex(0.3, 0.1)};
  const LindbladModel g = gauge_transform(m, a, 0.7);
  EXPECT_LE(max_abs(build_superoperator(g).matrix() - build_superoperator(m).matrix()), 1e-12);
  EXPECT_GT(max_abs(g.jumps()[0] - m.jumps()[0]), 0.1);

  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 5; ++rep) {
    const LindbladModel r = random_model(3, 2, rng);
    const Complex shifts[] = {Complex(0.5, -0.2), Complex(-1.0, 0.7)};
    EXPECT_LE(max_abs(build_superoperator(gauge_transform(r, shifts, -0.4)).matrix() -
                      build_superoperator(r).matrix()),
              1e-10);
  }
}

TEST(Gauge, RealShiftOfHermitianJumpOnlyMovesEnergy) {
  const LindbladModel m(HermitianOperator(pauli::x()), {pauli::z()});
  const Complex a[] = {0.4};
  const LindbladModel g = gauge_transform(m, a, 0.25);
  EXPECT_LT(max_abs(g.hamiltonian().matrix() - pauli::x() - 0.25 * CMatrix::Identity(2, 2)), 1e-15);
  const Complex wrong[] = {0.1, 0.2};
  EXPECT_THROW(gauge_transform(m, wrong, 0.0), DimensionError);
}

TEST(EffectiveHamiltonian, ClosedSystem) {
  std::mt19937_64 rng(16);
  const CMatrix h = testing::random_hermitian(3, rng);
  const CMatrix heff = effective_hamiltonian(LindbladModel(HermitianOperator(h), {}));
  EXPECT_EQ(max_abs(heff - h), 0.0);
  EXPECT_LT(eigenvalues(heff).imag().cwiseAbs().maxCoeff(), 1e-12);
}

TEST(EffectiveHamiltonian, AmplitudeDampingEigenvalues) {
  // With sigma^z = diag(1, -1), |1> has energy -omega/2 and carries the decay.
  const double gamma = 0.5, omega = 2.0;
  const CMatrix heff = effective_hamiltonian(amplitude_damping(gamma, omega));
  EXPECT_LT(std::abs(heff(0, 0) - Complex(omega / 2, 0.0)), 1e-15);
  EXPECT_LT(std::abs(heff(1, 1) - Complex(-omega / 2, -gamma / 2)), 1e-15);
  EXPECT_EQ(std::abs(heff(0, 1)), 0.0);
}

TEST(EffectiveHamiltonian, DecayRatesNonNegative) {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    const CVector ev = eigenvalues(effective_hamiltonian(random_model(2 + rep % 4, 2, rng)));
    EXPECT_LE(ev.imag().maxCoeff(), 1e-10);
  }
}

TEST(Trajectories, ClosedSystemIsDeterministic) {
  std::mt19937_64 rng(18);
  const CMatrix h = testing::random_hermitian(3, rng);
  const CVector psi0 = testing::random_state(3, rng);
  const TrajectoryOptions opts{0.5, 1e-3, 5, 1, 1};
  const TrajectoryEnsembleResult r = run_trajectories(LindbladModel(HermitianOperator(h), {}), psi0, opts);
  // The first-order drift I - i dt H with renormalization is O(dt) accurate.
  const CVector exact = matrix_exp(-kI * h, 0.5) * psi0;
  EXPECT_LT(max_abs(r.mean_state.matrix() - exact * exact.adjoint()), 5 * opts.dt * h.norm());
  EXPECT_LT(r.population_std_error.maxCoeff(), 1e-12);
}

TEST(Trajectories, AmplitudeDampingMeanPopulation) {
  CVector psi0 = CVector::Zero(2);
  psi0(1) = 1.0;
  const TrajectoryOptions opts{1.0, 1e-3, 4000, 2024, 1};
  const TrajectoryEnsembleResult r = run_trajectories(amplitude_damping(1.0, 1.0), psi0, opts);
  const double p1 = r.mean_state.population(1);
  EXPECT_LT(std::abs(p1 - std::exp(-1.0)), 4.0 * r.population_std_error(1) + 5 * opts.dt);
  EXPECT_EQ(r.n_steps, 1000);
  ASSERT_EQ(r.jump_counts.size(), 1u);
  EXPECT_NEAR(r.jump_counts[0].mean_per_trajectory, 1.0 - p1, 1e-12);
}

TEST(Trajectories, SeedDeterminismAndThreadIndependence) {
  std::mt19937_64 rng(19);
  const LindbladModel m = random_model(3, 2, rng);
  const CVector psi0 = testing::random_state(3, rng);
  TrajectoryOptions opts{0.3, 1e-3, 50, 99, 1};
  const auto a = run_trajectories(m, psi0, opts);
  const auto b = run_trajectories(m, psi0, opts);
  opts.threads = 3;
  const auto c = run_trajectories(m, psi0, opts);
  EXPECT_EQ(max_abs(a.mean_state.matrix() - b.mean_state.matrix()), 0.0);
  EXPECT_EQ(max_abs(a.mean_state.matrix() - c.mean_state.matrix()), 0.0);
  for (std::size_t j = 0; j < a.jump_counts.size(); ++j) EXPECT_EQ(a.jump_counts[j].total, c.jump_counts[j].total);
  opts.seed = 100;
  EXPECT_GT(max_abs(run_trajectories(m, psi0, opts).mean_state.matrix() - a.mean_state.matrix()), 0.0);
}

TEST(Trajectories, Preconditions) {
  const LindbladModel m = amplitude_damping(1.0, 1.0);
  CVector psi0 = CVector::Zero(2);
  psi0(1) = 1.0;
  EXPECT_THROW(run_trajectories(m, psi0, {1.0, 0.2, 10, 0, 1}), NumericError);
  EXPECT_THROW(run_trajectories(m, psi0, {1.0, 1e-3, 0, 0, 1}), NumericError);
  EXPECT_THROW(run_trajectories(m, 2.0 * psi0, {1.0, 1e-3, 10, 0, 1}), NumericError);
}

}  // namespace
}  // namespace gksl
