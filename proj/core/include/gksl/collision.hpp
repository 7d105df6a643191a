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

// Repeated-interaction (collision) models: the system meets a fresh ancilla
// in state eta for a time tau under K = exp(-i tau (H_S + h + V)), after which
// the ancilla is discarded.

#pragma once

#include <cstdint>
#include <vector>

#include "gksl/liouvillian.hpp"
#include "gksl/opcore.hpp"

namespace gksl {

class CollisionSpec {
 public:
  // v acts on system (x) ancilla.
  CollisionSpec(HermitianOperator hs, HermitianOperator h, HermitianOperator v, DensityMatrix eta,
                double tau);

  const HermitianOperator& system_hamiltonian() const noexcept { return hs_; }
  const HermitianOperator& ancilla_hamiltonian() const noexcept { return h_; }
  const HermitianOperator& interaction() const noexcept { return v_; }
  const DensityMatrix& eta() const noexcept { return eta_; }
  double tau() const noexcept { return tau_; }
  Index system_dim() const noexcept { return hs_.dim(); }
  Index ancilla_dim() const noexcept { return h_.dim(); }

  // Per-collision ancilla states, used cyclically by stroboscopic_evolve in
  // place of eta when non-empty.
  const std::vector<DensityMatrix>& eta_sequence() const noexcept { return eta_sequence_; }
  CollisionSpec with_eta_sequence(std::vector<DensityMatrix> etas) const;

  CollisionSpec with_tau(double tau) const;
  CollisionSpec with_interaction(const HermitianOperator& v) const;

 private:
  HermitianOperator hs_;
  HermitianOperator h_;
  HermitianOperator v_;
  DensityMatrix eta_;
  double tau_;
  std::vector<DensityMatrix> eta_sequence_;
};

// exp(-i tau (H_S (x) I + I (x) h + V)).
CMatrix collision_unitary(const CollisionSpec& spec);

// tr_anc K (rho (x) eta) K^dagger.
DensityMatrix collision_map(const CollisionSpec& spec, const DensityMatrix& rho);
DensityMatrix collision_map(const CollisionSpec& spec, const DensityMatrix& rho, const DensityMatrix& eta);

struct CollisionKraus {
  // sqrt(pi_q) W_p^q with W_p^q = <phi_p|K|phi_q>.
  std::vector<CMatrix> generators;
  std::vector<double> weights;              // pi_q per generator
  std::vector<std::pair<int, int>> indices; // (p, q) per generator

  KrausMap map() const { return KrausMap(generators); }
};

// Eigenvalues pi_q <= 1e-14 and vanishing W_p^q are dropped.
CollisionKraus extract_kraus(const CollisionSpec& spec);
CollisionKraus extract_kraus(const CollisionSpec& spec, const DensityMatrix& eta);

DensityMatrix stroboscopic_evolve(const CollisionSpec& spec, const DensityMatrix& rho0, std::int64_t n);

struct ContinuumReport {
  double tau_ref = 0.0;
  double t_final = 0.0;
  bool scaled = true;
  std::vector<double> taus;
  std::vector<std::int64_t> steps;
  std::vector<double> errors; // trace distance to the reference at t_final
  // Least-squares slope of log(error) against log(tau); NaN when fewer than
  // two errors are positive.
  double fitted_order = 0.0;
};

// For each tau, V -> V sqrt(tau_ref / tau) (tau_ref = base.tau()) unless
// `scale_interaction` is false, then compares K_tau^n rho0 with e^{t L} rho0.
// Throws SpecError unless t_final / tau is an integer within 1e-9.
ContinuumReport continuum_limit_check(const CollisionSpec& base, const LindbladModel& reference,
                                      const DensityMatrix& rho0, const std::vector<double>& taus,
                                      double t_final, bool scale_interaction = true);

struct ExchangeCollisionModel {
  CollisionSpec spec;
  LindbladModel reference;
};

// Qubit system and qubit ancilla, H_S = h = omega |1><1|,
// V = g (sigma^+ (x) sigma^- + sigma^- (x) sigma^+), eta = diag(1 - n, n).
// The reference has jumps sqrt(g^2 tau (1 - n)) sigma^- and sqrt(g^2 tau n) sigma^+.
ExchangeCollisionModel exchange_collision_model(double omega, double g, double n_ancilla, double tau);

}  // namespace gksl
