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

// Quadratic (free-fermion) open dynamics reduced to the two-point matrix
// C_ij = <c_j^dagger c_i>, which obeys the Lyapunov equation
//
//   dC/dt = P C + C P^dagger + F,   P = -i T - (g Theta)(g Theta)^dagger / 2,
//                                   F = (g Theta) C_A (g Theta)^dagger.

#pragma once

#include <optional>
#include <vector>

#include "gksl/liouvillian.hpp"
#include "gksl/opcore.hpp"

namespace gksl {

class LyapunovModel {
 public:
  // t_s: L_S x L_S Hermitian; theta: L_S x L_A; c_a: L_A x L_A with 0 <= C_A <= 1.
  LyapunovModel(const CMatrix& t_s, const CMatrix& theta, double g, const CMatrix& c_a);

  const CMatrix& hopping() const noexcept { return t_s_; }
  const CMatrix& theta() const noexcept { return theta_; }
  double coupling() const noexcept { return g_; }
  const CMatrix& ancilla_correlations() const noexcept { return c_a_; }
  const CMatrix& p() const noexcept { return p_; }
  const CMatrix& f() const noexcept { return f_; }
  Index modes() const noexcept { return t_s_.rows(); }
  Index ancilla_modes() const noexcept { return theta_.cols(); }

 private:
  CMatrix t_s_;
  CMatrix theta_;
  double g_;
  CMatrix c_a_;
  CMatrix p_;
  CMatrix f_;
};

// Hermitian matrix with spectrum in [-tol, 1 + tol].
class CorrelationMatrix {
 public:
  static constexpr double kDefaultTolerance = 1e-10;
  explicit CorrelationMatrix(const CMatrix& c, double tol = kDefaultTolerance);

  const CMatrix& matrix() const noexcept { return c_; }
  Index modes() const noexcept { return c_.rows(); }
  double occupation(Index i) const { return c_(i, i).real(); }

 private:
  CMatrix c_;
};

CMatrix lyapunov_rhs(const LyapunovModel& model, const CMatrix& c);

// C(t) = e^{Pt} C0 e^{P^dagger t} + int_0^t e^{Ps} F e^{P^dagger s} ds.
CorrelationMatrix evolve_correlations(const LyapunovModel& model, const CorrelationMatrix& c0, double t);

enum class LyapunovSolver { Vectorized, Schur };

struct LyapunovSteadyState {
  CMatrix c;
  bool unique = true;
  // min |lambda_i(P) + conj(lambda_j(P))|; zero separation means P and
  // -P^dagger share an eigenvalue.
  double separation = 0.0;
  double residual = 0.0;  // ||P C + C P^dagger + F||_F
  bool consistent = true; // false when no exact solution exists
};

inline constexpr double kLyapunovUniquenessTolerance = 1e-9;

// Vectorized solve of (I (x) P + conj(P) (x) I) vec C = -vec F, or
// Bartels-Stewart on the Schur form of P. Without uniqueness the
// minimum-norm least-squares solution is returned.
LyapunovSteadyState lyapunov_steady(const LyapunovModel& model,
                                    LyapunovSolver solver = LyapunovSolver::Vectorized);

// Dimension of the kernel of C -> P C + C P^dagger from an SVD of its matrix.
Index lyapunov_null_dimension(const LyapunovModel& model, double tol = kLyapunovUniquenessTolerance);

// Particle current on bond (k, k+1), k 1-based, for hopping J between
// neighbours: j_k = 2 J Im C_{k,k+1}.
double bond_current(const CMatrix& c, double hopping, int k);
std::vector<double> bond_currents(const CMatrix& c, double hopping);

// Open tight-binding chain, T_{i,i+1} = T_{i+1,i} = J, with one ancilla mode on
// site 1 (occupation n_left) and one on site L (n_right).
LyapunovModel boundary_chain(int length, double hopping, double g, double n_left, double n_right);

// Many-body GKSL model on 2^L Jordan-Wigner states with the same Lyapunov
// reduction: H = c^dagger T c, gains from the spectral decomposition of F and
// losses from that of (g Theta)(g Theta)^dagger - F.
LindbladModel lyapunov_many_body_model(const LyapunovModel& model);

// C_ij = tr(c_j^dagger c_i rho) for rho on 2^L Jordan-Wigner states.
CMatrix many_body_correlations(const CMatrix& rho, int modes);

struct BallisticReport {
  std::vector<int> lengths;
  std::vector<double> currents;
  double spread = 0.0;          // (max - min) / max |j|, zero when all currents vanish
  double max_bond_deviation = 0.0; // largest deviation from a flat profile over all L
  std::optional<double> kappa;  // j / (n_left - n_right)
};

BallisticReport ballistic_scaling_experiment(double g, double hopping, double n_left, double n_right,
                                             const std::vector<int>& lengths);

enum class AncillaPreparation { Bell, Product };

struct RainbowOptions {
  int length = 4;
  double hopping = 1.0;
  double coupling = 1.0;
  double bell_phase = 0.0;
  AncillaPreparation preparation = AncillaPreparation::Bell;
  // Discrete collisions of duration tau with coupling g / sqrt(tau); the
  // continuum Lyapunov steady state is used when unset.
  std::optional<double> collision_tau;
  // Upper bound on collisions; without `fixed_collisions` the iteration stops
  // once ||C_{n+1} - C_n||_max <= 1e-13.
  int max_collisions = 200000;
  bool fixed_collisions = false;
  double threshold = 0.99;
};

struct RainbowPair {
  int site = 0;     // 1-based, counted from the driven end of each chain
  double fidelity = 0.0;
  Complex cross_correlation; // <d_site^dagger c_site>
};

struct RainbowReport {
  std::vector<RainbowPair> pairs;
  double min_fidelity = 0.0;
  bool all_above_threshold = false;
  double max_cross_correlation = 0.0; // max |<d_j^dagger c_i>| over all i, j
  int collisions = 0;
  CMatrix correlations; // 2L x 2L, chain 1 first
};

// Two chains of `length` sites, each driven at site 1 by one mode of an
// ancilla pair in (|01> + e^{i phi}|10>)/sqrt(2) (Bell) or |0>|1> (Product).
// Throws ConvergenceError if the collision iteration does not settle.
RainbowReport rainbow_experiment(const RainbowOptions& options);

// Fidelity of the Wick-reconstructed two-mode state of modes (p, q) with
// (|01> + e^{i phi}|10>)/sqrt(2), where |10> has mode p occupied.
double bell_pair_fidelity(const CMatrix& c, Index p, Index q, double phase);

}  // namespace gksl
