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

// Microscopic (weak-coupling, secular) construction of GKSL generators for a
// system coupled to a bath through V = sum_i X^i (x) Y^i. The bath enters only
// through its spectral matrices gamma^{ij}(w) and sigma^{ij}(w) at the Bohr
// frequencies of the system Hamiltonian.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gksl/liouvillian.hpp"
#include "gksl/opcore.hpp"

namespace gksl {

class CouplingSet {
 public:
  // Labels default to "X1", "X2", ...
  explicit CouplingSet(std::vector<HermitianOperator> ops, std::vector<std::string> labels = {});

  const std::vector<HermitianOperator>& ops() const noexcept { return ops_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return ops_.size(); }
  Index dim() const noexcept { return ops_.front().dim(); }

 private:
  std::vector<HermitianOperator> ops_;
  std::vector<std::string> labels_;
};

struct BohrSpectrum {
  HermitianOperator hamiltonian;
  HermitianEigen eigen;
  double freq_tol = 0.0;
  // Ascending, closed under negation.
  std::vector<double> frequencies;
  // jump_ops[f][i] = X~^i(frequencies[f]) in the original basis.
  std::vector<std::vector<CMatrix>> jump_ops;

  std::size_t coupling_count() const noexcept {
    return jump_ops.empty() ? 0 : jump_ops.front().size();
  }
  // Index of the frequency within freq_tol of omega, if any.
  std::optional<std::size_t> index_of(double omega) const;
};

// X~^i(w) = sum_{e_m - e_n = w} <n|X^i|m> |n><m|. Bohr frequencies closer than
// freq_tol are merged (single linkage); the default is 1e-8 ||H_s||.
BohrSpectrum bohr_decompose(const HermitianOperator& hs, const CouplingSet& x,
                            std::optional<double> freq_tol = std::nullopt);

struct BathEntry {
  double omega = 0.0;
  CMatrix gamma; // Hermitian PSD, couplings x couplings
  CMatrix sigma; // Hermitian
};

class BathSpectralFunction {
 public:
  static constexpr double kDefaultMatchTolerance = 1e-9;

  // gamma must be PSD within 1e-10 (PositivityError otherwise).
  explicit BathSpectralFunction(std::vector<BathEntry> entries,
                                std::optional<double> beta = std::nullopt,
                                double match_tol = kDefaultMatchTolerance);

  const std::vector<BathEntry>& entries() const noexcept { return entries_; }
  std::optional<double> beta() const noexcept { return beta_; }
  double match_tolerance() const noexcept { return match_tol_; }
  // Entry within max(match_tol, tol) of omega, or nullptr.
  const BathEntry* find(double omega, double tol = 0.0) const;

 private:
  std::vector<BathEntry> entries_;
  std::optional<double> beta_;
  double match_tol_;
};

enum class BathFamily { Flat, Ohmic };

// Diagonal baths gamma^{ij}(w) = delta_ij gamma(w), sigma = 0.
//   Flat:  gamma(w) = 2 kappa / (1 + e^{-beta w})          (kappa when beta is unset)
//   Ohmic: gamma(w) = kappa w e^{-|w|/w_c} / (1 - e^{-beta w}),  gamma(0) = kappa / beta
struct BathFamilySpec {
  BathFamily type = BathFamily::Flat;
  double coupling = 1.0;
  std::optional<double> beta;
  double cutoff = 10.0;
};

double bath_family_rate(const BathFamilySpec& spec, double omega);
BathSpectralFunction evaluate_bath_family(const BathFamilySpec& spec, const BohrSpectrum& spectrum);

// H = H_s + sum sigma^{ij} X~^i^dagger X~^j and, per frequency, jumps
// sqrt(l_k) sum_i v_k(i)^* X~^i from gamma = sum_k l_k v_k v_k^dagger.
LindbladModel build_secular_lindblad(const BohrSpectrum& spectrum, const BathSpectralFunction& bath);

// Sum over frequencies of sigma^{ij} X~^i^dagger X~^j.
CMatrix lamb_shift(const BohrSpectrum& spectrum, const BathSpectralFunction& bath);

struct DetailedBalanceReport {
  std::vector<double> frequencies; // w >= 0; each +-w pair is reported once
  std::vector<double> residuals; // max_ij |gamma^{ij}(w) e^{-beta w} - gamma^{ji}(-w)|
  double max_residual = 0.0;
  bool pass = true;
};

DetailedBalanceReport check_detailed_balance(const BathSpectralFunction& bath, double beta,
                                             double tol);

struct PauliMasterModel {
  RMatrix rates;      // rates(n, k) = W_{k -> n}, zero diagonal
  RMatrix stochastic; // dp/dt = M p
  RVector energies;
};

// Requires a non-degenerate H_s (DegeneracyError otherwise). Populations are
// in the eigenbasis of H_s, ascending energy.
PauliMasterModel extract_pauli_model(const BohrSpectrum& spectrum, const BathSpectralFunction& bath,
                                     const HermitianOperator& hs);

RVector evolve_pauli(const PauliMasterModel& model, const RVector& p0, double t);
// Normalized null vector of M.
RVector pauli_stationary(const PauliMasterModel& model);

// e^{-beta H} / Z.
DensityMatrix gibbs_state(const HermitianOperator& h, double beta);

}  // namespace gksl
