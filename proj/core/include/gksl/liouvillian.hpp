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

// GKSL generators in diagonal form,
//
//   L(rho) = -i[H, rho] + sum_j ( L_j rho L_j^dagger - 1/2 {L_j^dagger L_j, rho} ),
//
// together with everything built on top of them: the vectorized
// superoperator, propagation, steady states, the dual (Heisenberg) generator,
// Kraus maps, gauge transformations and Monte-Carlo wave-function
// trajectories.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gksl/opcore.hpp"

namespace gksl {

class LindbladModel {
 public:
  LindbladModel(HermitianOperator hamiltonian, std::vector<CMatrix> jumps);

  const HermitianOperator& hamiltonian() const noexcept { return hamiltonian_; }
  const std::vector<CMatrix>& jumps() const noexcept { return jumps_; }
  Index dim() const noexcept { return hamiltonian_.dim(); }

 private:
  HermitianOperator hamiltonian_;
  std::vector<CMatrix> jumps_;
};

CMatrix apply_generator(const LindbladModel& model, const CMatrix& rho);
inline CMatrix apply_generator(const LindbladModel& model, const DensityMatrix& rho) {
  return apply_generator(model, rho.matrix());
}

// Heisenberg-picture generator: +i[H, X] + sum_j (L_j^dagger X L_j - 1/2 {L_j^dagger L_j, X}).
CMatrix dual_generator(const LindbladModel& model, const CMatrix& x);

// H - (i/2) sum_j L_j^dagger L_j.
CMatrix effective_hamiltonian(const LindbladModel& model);

// L_j -> L_j + a_j, H -> H + (1/2i) sum_j (a_j^* L_j - a_j L_j^dagger) + b.
LindbladModel gauge_transform(const LindbladModel& model, std::span<const Complex> shifts,
                              double energy_shift);

inline constexpr Index kDefaultMaxSuperoperatorSystemDim = 64;

// Matrix of the generator on column-stacked density matrices (dim N^2).
class Superoperator {
 public:
  Superoperator(Index system_dim, CMatrix matrix);

  Index system_dim() const noexcept { return system_dim_; }
  const CMatrix& matrix() const noexcept { return matrix_; }
  CMatrix apply(const CMatrix& rho) const;
  // max |vec(I)^dagger S|; zero for a trace-preserving generator.
  double trace_preservation_defect() const;

 private:
  Index system_dim_;
  CMatrix matrix_;
};

Superoperator build_superoperator(const LindbladModel& model,
                                  Index max_system_dim = kDefaultMaxSuperoperatorSystemDim);

enum class PropagationMethod { ExactExp, AdaptiveRk };

struct PropagationOptions {
  PropagationMethod method = PropagationMethod::ExactExp;
  double rel_tol = 1e-11;
  double abs_tol = 1e-13;
};

// rho(t) = e^{tL} rho0. The result is validated with trace tolerance 1e-9 and
// positivity tolerance 1e-8.
DensityMatrix propagate(const LindbladModel& model, const DensityMatrix& rho0, double t,
                        const PropagationOptions& options = {});

// States at each of `times` (ascending, >= 0), propagated sequentially.
std::vector<DensityMatrix> propagate_series(const LindbladModel& model, const DensityMatrix& rho0,
                                            std::span<const double> times,
                                            const PropagationOptions& options = {});

inline constexpr DensityTolerance kPropagatedStateTolerance{1e-10, 1e-9, 1e-8};

struct SteadyState {
  DensityMatrix state;
  // -max Re(lambda) over the non-zero eigenvalues; for system dims above 16
  // it is estimated from the eigenvalues closest to zero.
  double gap = 0.0;
  bool unique = true;
  double residual = 0.0;       // ||L(rho*)||_F
  double zero_tolerance = 0.0; // eigenvalues below this count as zero
  // Basis of the kernel of L (as matrices); one element when unique.
  std::vector<CMatrix> null_space;
  // Full Liouvillian spectrum when it was computed (system dim <= 16).
  CVector spectrum;
};

// Full eigendecomposition for system dims <= 16, shifted inverse subspace
// iteration for 16 < N <= 64. When the kernel is degenerate the returned
// state is the projection of the maximally mixed state onto it.
SteadyState steady_state(const LindbladModel& model, std::optional<double> tol = std::nullopt);

// All N^2 eigenvalues of the superoperator.
CVector liouvillian_spectrum(const LindbladModel& model);

struct CommutantResult {
  bool irreducible = true;
  Index dimension = 1;           // dimension of the commutant
  std::optional<CMatrix> witness; // Hermitian, traceless, non-scalar element
};

// Solves [A, H] = [A, L_k] = [A, L_k^dagger] = 0.
CommutantResult commutant_uniqueness_test(const LindbladModel& model,
                                          std::optional<double> tol = std::nullopt);

class KrausMap {
 public:
  static constexpr double kDefaultTolerance = 1e-8;

  // Throws MapError if ||sum K^dagger K - I||_max exceeds `tol`.
  explicit KrausMap(std::vector<CMatrix> generators, double tol = kDefaultTolerance);

  const std::vector<CMatrix>& generators() const noexcept { return generators_; }
  Index dim() const noexcept { return generators_.front().rows(); }
  double completeness_defect() const;

 private:
  std::vector<CMatrix> generators_;
};

DensityMatrix apply_kraus(const KrausMap& map, const DensityMatrix& rho);
CMatrix apply_kraus(const KrausMap& map, const CMatrix& rho);
// sum K^dagger A K.
CMatrix apply_dual_kraus(const KrausMap& map, const CMatrix& a);

// {I - dt (iH + 1/2 sum L^dagger L), sqrt(dt) L_j}; complete only to O(dt^2).
std::vector<CMatrix> first_order_kraus(const LindbladModel& model, double dt);

struct TrajectoryOptions {
  double t_final = 1.0;
  double dt = 1e-3;
  int n_traj = 1000;
  std::uint64_t seed = 0;
  // Worker threads; results do not depend on this value.
  int threads = 1;
};

struct JumpStatistics {
  std::uint64_t total = 0;
  double mean_per_trajectory = 0.0;
  double variance_per_trajectory = 0.0;
};

struct TrajectoryEnsembleResult {
  int n_traj = 0;
  int n_steps = 0;
  double dt = 0.0; // step actually used, t_final / n_steps
  DensityMatrix mean_state;
  // Standard error of the mean of each diagonal entry |<k|psi>|^2.
  RVector population_std_error;
  std::vector<JumpStatistics> jump_counts;
  std::uint64_t seed = 0;
};

inline constexpr DensityTolerance kTrajectoryMeanTolerance{1e-10, 1e-10, 1e-6};

// First-order jump / no-jump unraveling. Requires dt * max_rate <= 0.1 where
// max_rate is the largest eigenvalue of sum_j L_j^dagger L_j.
TrajectoryEnsembleResult run_trajectories(const LindbladModel& model, const CVector& psi0,
                                          const TrajectoryOptions& options);

}  // namespace gksl
