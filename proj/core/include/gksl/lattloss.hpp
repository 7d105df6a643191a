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

// Hard-core bosons on a lattice with K-body losses
//
//   H = -J sum_j (s+_j s-_{j+1} + h.c.) + sum_j V_j n_j,   L_j = sqrt(Gamma) prod_{l<K} s-_{j+l},
//
// simulated exactly on 2^L states.

#pragma once

#include <optional>
#include <vector>

#include "gksl/liouvillian.hpp"
#include "gksl/opcore.hpp"

namespace gksl {

enum class Boundary { Open, Periodic };

inline constexpr int kMaxLossSites = 12;

struct LossModel {
  int sites = 4;
  double hopping = 1.0;
  int order = 1;    // K
  double rate = 1.0; // Gamma
  Boundary boundary = Boundary::Open;
  // Harmonic trap V_j = trap (j - (L + 1) / 2)^2; zero disables it.
  double trap = 0.0;
};

void validate(const LossModel& model);

// 1-based site windows that carry a loss operator. Periodic windows that
// cover the same set of sites are listed once.
std::vector<std::vector<int>> loss_windows(const LossModel& model);

CMatrix loss_hamiltonian(const LossModel& model);
LindbladModel build_loss_lindblad(const LossModel& model);

// (1/L) sum_j <n_j>.
double mean_density(const CMatrix& rho, int sites);

struct DensitySeries {
  std::vector<double> times;
  std::vector<double> density;
  std::vector<DensityMatrix> states;
};

PropagationOptions default_loss_propagation(const LossModel& model);

DensitySeries density_trajectory(const LossModel& model, const DensityMatrix& rho0,
                                 const std::vector<double>& times,
                                 std::optional<PropagationOptions> options = std::nullopt);

// n(k_q) = (1/L) sum_{j,l} e^{i k (j - l)} <c_j^dagger c_l>, k_q = 2 pi q / L,
// from the Jordan-Wigner fermion two-point function. On open chains this is
// the same discrete transform without translation invariance.
RVector momentum_occupation(const LossModel& model, const CMatrix& rho);
std::vector<double> momentum_grid(int sites);

// |(1/L) sum_q n(k_q) e^{i k_q}|.
double first_fourier_mode(const RVector& occupation);

struct DecayFit {
  double alpha = 0.0;  // slope of log n against log t
  double std_error = 0.0;
  int points = 0;
  // |c2| w^2 / 4 for a quadratic fit over a window of width w, in log-log
  // and in log-linear coordinates; zero for an exact power law resp. exponential.
  double loglog_curvature = 0.0;
  double semilog_curvature = 0.0;
  bool non_power_law = false;
  bool non_exponential = false;
};

inline constexpr double kCurvatureFlagThreshold = 1e-3;

// Requires at least 8 points with t_min <= t <= t_max and n > 0.
DecayFit decay_exponent_fit(const std::vector<double>& times, const std::vector<double>& values,
                            double t_min, double t_max);

// Product state with the listed occupations (site 1 first).
DensityMatrix occupation_state(const std::vector<int>& occupations);

}  // namespace gksl
