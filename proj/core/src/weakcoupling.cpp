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

#include "gksl/weakcoupling.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/SVD>

namespace gksl {
namespace {

double operator_norm(const HermitianEigen& e) { return e.values.cwiseAbs().maxCoeff(); }

void require_coupling_matrix(const CMatrix& m, std::size_t n, std::string_view what) {
  const auto k = static_cast<Index>(n);
  if (m.rows() != k || m.cols() != k) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(n) + "x" +
                         std::to_string(n) + " coupling matrix");
  }
}

}  // namespace

CouplingSet::CouplingSet(std::vector<HermitianOperator> ops, std::vector<std::string> labels)
    : ops_(std::move(ops)), labels_(std::move(labels)) {
  if (ops_.empty()) throw DimensionError("CouplingSet: no operators");
  for (const HermitianOperator& op : ops_) {
    if (op.dim() != ops_.front().dim()) throw DimensionError("CouplingSet: dimensions differ");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < ops_.size(); ++i) labels_.push_back("X" + std::to_string(i + 1));
  }
  if (labels_.size() != ops_.size()) throw DimensionError("CouplingSet: label count mismatch");
}

std::optional<std::size_t> BohrSpectrum::index_of(double omega) const {
  const auto it = std::lower_bound(frequencies.begin(), frequencies.end(), omega - freq_tol);
  if (it != frequencies.end() && std::abs(*it - omega) <= freq_tol) {
    return static_cast<std::size_t>(it - frequencies.begin());
  }
  return std::nullopt;
}

BohrSpectrum bohr_decompose(const HermitianOperator& hs, const CouplingSet& x,
                            std::optional<double> freq_tol) {
  if (x.dim() != hs.dim()) throw DimensionError("bohr_decompose: coupling and Hamiltonian dims differ");
  HermitianEigen e = eigh(hs);
  const double norm = operator_norm(e);
  const double tol = freq_tol.value_or(norm > 0.0 ? 1e-8 * norm : 1e-8);
  if (!(tol > 0.0)) throw NumericError("bohr_decompose: freq_tol must be positive");

  const Index n = hs.dim();
  struct Pair {
    double omega;
    Index m, n;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n * n));
  for (Index m = 0; m < n; ++m)
    for (Index k = 0; k < n; ++k) pairs.push_back({e.values(m) - e.values(k), m, k});
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.omega < b.omega; });

  std::vector<std::size_t> cluster(pairs.size());
  std::vector<double> sums;
  std::vector<std::size_t> counts;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (p == 0 || pairs[p].omega - pairs[p - 1].omega > tol) {
      sums.push_back(0.0);
      counts.push_back(0);
    }
    cluster[p] = sums.size() - 1;
    sums.back() += pairs[p].omega;
    ++counts.back();
  }
  const std::size_t nf = sums.size();
  std::vector<double> freqs(nf);
  for (std::size_t c = 0; c < nf; ++c) freqs[c] = sums[c] / static_cast<double>(counts[c]);
  // The pair set is symmetric, so clusters mirror each other; pin that exactly.
  for (std::size_t c = 0; c < nf / 2; ++c) {
    const double w = 0.5 * (freqs[nf - 1 - c] - freqs[c]);
    freqs[c] = -w;
    freqs[nf - 1 - c] = w;
  }
  if (nf % 2 == 1) freqs[nf / 2] = 0.0;

  std::vector<CMatrix> x_eig;
  for (const HermitianOperator& op : x.ops()) x_eig.push_back(e.vectors.adjoint() * op.matrix() * e.vectors);

  std::vector<std::vector<CMatrix>> jumps(nf);
  for (std::size_t c = 0; c < nf; ++c) {
    jumps[c].assign(x.size(), CMatrix::Zero(n, n));
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    // w = e_m - e_n contributes <n|X|m> |n><m|.
    const Index m = pairs[p].m;
    const Index k = pairs[p].n;
    for (std::size_t i = 0; i < x.size(); ++i) jumps[cluster[p]][i](k, m) = x_eig[i](k, m);
  }
  for (auto& per_freq : jumps)
    for (CMatrix& j : per_freq) j = e.vectors * j * e.vectors.adjoint();

  return BohrSpectrum{hs, std::move(e), tol, std::move(freqs), std::move(jumps)};
}

BathSpectralFunction::BathSpectralFunction(std::vector<BathEntry> entries, std::optional<double> beta,
                                           double match_tol)
    : entries_(std::move(entries)), beta_(beta), match_tol_(match_tol) {
  if (beta_ && !std::isfinite(*beta_)) throw NumericError("BathSpectralFunction: beta must be finite");
  std::sort(entries_.begin(), entries_.end(),
            [](const BathEntry& a, const BathEntry& b) { return a.omega < b.omega; });
  for (BathEntry& entry : entries_) {
    require_square(entry.gamma, "BathSpectralFunction gamma");
    if (entry.sigma.size() == 0) entry.sigma = CMatrix::Zero(entry.gamma.rows(), entry.gamma.cols());
    if (entry.sigma.rows() != entry.gamma.rows() || entry.sigma.cols() != entry.gamma.cols()) {
      throw DimensionError("BathSpectralFunction: gamma and sigma dims differ");
    }
    entry.gamma = HermitianOperator(entry.gamma).matrix();
    entry.sigma = HermitianOperator(entry.sigma).matrix();
    const double lo = eigh(entry.gamma).values.minCoeff();
    if (lo < -1e-10) {
      throw PositivityError("BathSpectralFunction: gamma(" + std::to_string(entry.omega) +
                            ") has eigenvalue " + std::to_string(lo));
    }
  }
}

const BathEntry* BathSpectralFunction::find(double omega, double tol) const {
  const double t = std::max(match_tol_, tol);
  const BathEntry* best = nullptr;
  for (const BathEntry& entry : entries_) {
    const double d = std::abs(entry.omega - omega);
    if (d <= t && (!best || d < std::abs(best->omega - omega))) best = &entry;
  }
  return best;
}

double bath_family_rate(const BathFamilySpec& spec, double omega) {
  if (spec.coupling < 0.0) throw SpecError("bath family: coupling must be >= 0");
  switch (spec.type) {
    case BathFamily::Flat: {
      if (!spec.beta) return spec.coupling;
      return 2.0 * spec.coupling / (1.0 + std::exp(-*spec.beta * omega));
    }
    case BathFamily::Ohmic: {
      if (!spec.beta || !(*spec.beta > 0.0)) throw SpecError("ohmic bath: requires beta > 0");
      if (!(spec.cutoff > 0.0)) throw SpecError("ohmic bath: requires cutoff > 0");
      const double b = *spec.beta;
      if (std::abs(b * omega) < 1e-8) return spec.coupling / b;
      return spec.coupling * omega * std::exp(-std::abs(omega) / spec.cutoff) /
             -std::expm1(-b * omega);
    }
  }
  throw SpecError("bath family: unknown type");
}

BathSpectralFunction evaluate_bath_family(const BathFamilySpec& spec, const BohrSpectrum& spectrum) {
  const auto k = static_cast<Index>(spectrum.coupling_count());
  std::vector<BathEntry> entries;
  for (double w : spectrum.frequencies) {
    entries.push_back({w, bath_family_rate(spec, w) * CMatrix::Identity(k, k), CMatrix::Zero(k, k)});
  }
  return BathSpectralFunction(std::move(entries), spec.beta,
                              std::max(BathSpectralFunction::kDefaultMatchTolerance, spectrum.freq_tol));
}

namespace {

const BathEntry& lookup(const BohrSpectrum& spectrum, const BathSpectralFunction& bath, double w) {
  const BathEntry* entry = bath.find(w, spectrum.freq_tol);
  if (!entry) throw SpecError("bath does not define frequency " + std::to_string(w));
  require_coupling_matrix(entry->gamma, spectrum.coupling_count(), "bath");
  return *entry;
}

}  // namespace

CMatrix lamb_shift(const BohrSpectrum& spectrum, const BathSpectralFunction& bath) {
  const Index n = spectrum.hamiltonian.dim();
  CMatrix delta = CMatrix::Zero(n, n);
  const std::size_t nc = spectrum.coupling_count();
  for (std::size_t f = 0; f < spectrum.frequencies.size(); ++f) {
    const BathEntry& entry = lookup(spectrum, bath, spectrum.frequencies[f]);
    const auto& x = spectrum.jump_ops[f];
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t j = 0; j < nc; ++j) {
        const Complex s = entry.sigma(static_cast<Index>(i), static_cast<Index>(j));
        if (s != Complex(0.0)) delta.noalias() += s * (x[i].adjoint() * x[j]);
      }
  }
  return delta;
}

LindbladModel build_secular_lindblad(const BohrSpectrum& spectrum, const BathSpectralFunction& bath) {
  const std::size_t nc = spectrum.coupling_count();
  double x_scale = 0.0;
  for (const auto& per_freq : spectrum.jump_ops)
    for (const CMatrix& x : per_freq) x_scale = std::max(x_scale, max_abs(x));

  std::vector<CMatrix> jumps;
  for (std::size_t f = 0; f < spectrum.frequencies.size(); ++f) {
    const BathEntry& entry = lookup(spectrum, bath, spectrum.frequencies[f]);
    const HermitianEigen ge = eigh(entry.gamma);
    const double lo = ge.values.minCoeff();
    if (lo < -1e-8) {
      throw PositivityError("build_secular_lindblad: gamma(" + std::to_string(spectrum.frequencies[f]) +
                            ") has eigenvalue " + std::to_string(lo));
    }
    const double hi = ge.values.maxCoeff();
    if (!(hi > 0.0)) continue;
    const auto& x = spectrum.jump_ops[f];
    for (Index k = 0; k < ge.values.size(); ++k) {
      const double lam = ge.values(k);
      if (lam < 1e-12 * hi) continue;
      CMatrix l = CMatrix::Zero(spectrum.hamiltonian.dim(), spectrum.hamiltonian.dim());
      for (std::size_t i = 0; i < nc; ++i) l += std::conj(ge.vectors(static_cast<Index>(i), k)) * x[i];
      l *= std::sqrt(lam);
      if (max_abs(l) <= 1e-13 * std::sqrt(hi) * std::max(x_scale, 1e-300)) continue;
      jumps.push_back(std::move(l));
    }
  }
  const CMatrix h = spectrum.hamiltonian.matrix() + lamb_shift(spectrum, bath);
  return LindbladModel(HermitianOperator(h), std::move(jumps));
}

DetailedBalanceReport check_detailed_balance(const BathSpectralFunction& bath, double beta, double tol) {
  if (!std::isfinite(beta)) throw NumericError("check_detailed_balance: beta must be finite");
  DetailedBalanceReport report;
  for (const BathEntry& entry : bath.entries()) {
    const BathEntry* partner = bath.find(-entry.omega);
    if (!partner) {
      throw SpecError("check_detailed_balance: frequency " + std::to_string(entry.omega) +
                      " has no partner at " + std::to_string(-entry.omega));
    }
    // The condition at -w is the one at +w multiplied by e^{beta w}.
    if (entry.omega < 0.0) continue;
    const CMatrix diff = entry.gamma * std::exp(-beta * entry.omega) - partner->gamma.transpose();
    const double r = max_abs(diff);
    report.frequencies.push_back(entry.omega);
    report.residuals.push_back(r);
    report.max_residual = std::max(report.max_residual, r);
  }
  report.pass = report.max_residual <= tol;
  return report;
}

PauliMasterModel extract_pauli_model(const BohrSpectrum& spectrum, const BathSpectralFunction& bath,
                                     const HermitianOperator& hs) {
  if (hs.dim() != spectrum.hamiltonian.dim() ||
      max_abs(hs.matrix() - spectrum.hamiltonian.matrix()) > 1e-12 * std::max(1.0, max_abs(hs.matrix()))) {
    throw SpecError("extract_pauli_model: Hamiltonian differs from the decomposed one");
  }
  const RVector& e = spectrum.eigen.values;
  const Index n = e.size();
  for (Index k = 1; k < n; ++k) {
    if (e(k) - e(k - 1) <= spectrum.freq_tol) {
      throw DegeneracyError("extract_pauli_model: H_s has degenerate levels " + std::to_string(k - 1) +
                            " and " + std::to_string(k));
    }
  }
  const std::size_t nc = spectrum.coupling_count();
  // X^i in the eigenbasis is recovered from the completeness of X~^i(w).
  std::vector<CMatrix> x_eig(nc, CMatrix::Zero(n, n));
  for (const auto& per_freq : spectrum.jump_ops)
    for (std::size_t i = 0; i < nc; ++i) x_eig[i] += per_freq[i];
  for (CMatrix& x : x_eig) x = spectrum.eigen.vectors.adjoint() * x * spectrum.eigen.vectors;

  PauliMasterModel model{RMatrix::Zero(n, n), RMatrix::Zero(n, n), e};
  for (Index k = 0; k < n; ++k) {
    for (Index m = 0; m < n; ++m) {
      if (m == k) continue;
      const double w = e(k) - e(m);
      bool coupled = false;
      for (const CMatrix& x : x_eig) coupled = coupled || x(k, m) != Complex(0.0);
      if (!coupled) continue;
      const CMatrix& gamma = lookup(spectrum, bath, w).gamma;
      Complex rate = 0.0;
      for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = 0; j < nc; ++j)
          rate += gamma(static_cast<Index>(i), static_cast<Index>(j)) * x_eig[i](k, m) * x_eig[j](m, k);
      model.rates(m, k) = std::max(0.0, rate.real());
    }
  }
  model.stochastic = model.rates;
  for (Index k = 0; k < n; ++k) model.stochastic(k, k) = -model.rates.col(k).sum();
  return model;
}

RVector evolve_pauli(const PauliMasterModel& model, const RVector& p0, double t) {
  const Index n = model.stochastic.rows();
  if (p0.size() != n) throw DimensionError("evolve_pauli: wrong probability vector length");
  if (!(t >= 0.0) || !std::isfinite(t)) throw NumericError("evolve_pauli: t must be finite and >= 0");
  if (p0.minCoeff() < 0.0 || std::abs(p0.sum() - 1.0) > 1e-10) {
    throw NumericError("evolve_pauli: p0 is not a probability vector");
  }
  const CMatrix prop = matrix_exp(model.stochastic.cast<Complex>(), t);
  return (prop * p0.cast<Complex>()).real();
}

RVector pauli_stationary(const PauliMasterModel& model) {
  Eigen::JacobiSVD<RMatrix> svd(model.stochastic, Eigen::ComputeFullV);
  RVector p = svd.matrixV().col(model.stochastic.cols() - 1);
  p /= p.sum();
  return p;
}

DensityMatrix gibbs_state(const HermitianOperator& h, double beta) {
  const HermitianEigen e = eigh(h);
  const double e0 = e.values.minCoeff();
  const RVector w = (-beta * (e.values.array() - e0)).exp().matrix();
  const CMatrix rho = e.vectors * (w / w.sum()).cast<Complex>().asDiagonal() * e.vectors.adjoint();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

}  // namespace gksl
