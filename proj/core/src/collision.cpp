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

#include "gksl/collision.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace gksl {

CollisionSpec::CollisionSpec(HermitianOperator hs, HermitianOperator h, HermitianOperator v,
                             DensityMatrix eta, double tau)
    : hs_(std::move(hs)), h_(std::move(h)), v_(std::move(v)), eta_(std::move(eta)), tau_(tau) {
  if (v_.dim() != hs_.dim() * h_.dim()) {
    throw DimensionError("CollisionSpec: interaction dim " + std::to_string(v_.dim()) +
                         " != system dim * ancilla dim");
  }
  if (eta_.dim() != h_.dim()) throw DimensionError("CollisionSpec: eta and h dims differ");
  if (!(tau_ >= 0.0) || !std::isfinite(tau_)) throw NumericError("CollisionSpec: tau must be >= 0");
}

CollisionSpec CollisionSpec::with_eta_sequence(std::vector<DensityMatrix> etas) const {
  for (const DensityMatrix& e : etas)
    if (e.dim() != h_.dim()) throw DimensionError("CollisionSpec: eta sequence dims differ");
  CollisionSpec out = *this;
  out.eta_sequence_ = std::move(etas);
  return out;
}

CollisionSpec CollisionSpec::with_tau(double tau) const {
  CollisionSpec out(hs_, h_, v_, eta_, tau);
  out.eta_sequence_ = eta_sequence_;
  return out;
}

CollisionSpec CollisionSpec::with_interaction(const HermitianOperator& v) const {
  CollisionSpec out(hs_, h_, v, eta_, tau_);
  out.eta_sequence_ = eta_sequence_;
  return out;
}

CMatrix collision_unitary(const CollisionSpec& spec) {
  const Index ds = spec.system_dim();
  const Index da = spec.ancilla_dim();
  const CMatrix total = tensor(spec.system_hamiltonian().matrix(), CMatrix::Identity(da, da)) +
                        tensor(CMatrix::Identity(ds, ds), spec.ancilla_hamiltonian().matrix()) +
                        spec.interaction().matrix();
  return matrix_exp(-kI * 0.5 * (total + total.adjoint()), spec.tau());
}

DensityMatrix collision_map(const CollisionSpec& spec, const DensityMatrix& rho) {
  return collision_map(spec, rho, spec.eta());
}

DensityMatrix collision_map(const CollisionSpec& spec, const DensityMatrix& rho, const DensityMatrix& eta) {
  if (rho.dim() != spec.system_dim()) throw DimensionError("collision_map: state dim mismatch");
  if (eta.dim() != spec.ancilla_dim()) throw DimensionError("collision_map: ancilla dim mismatch");
  const CMatrix k = collision_unitary(spec);
  const CMatrix joint = k * tensor(rho.matrix(), eta.matrix()) * k.adjoint();
  const CMatrix out = partial_trace(joint, spec.system_dim(), spec.ancilla_dim(), Subsystem::A);
  return DensityMatrix(0.5 * (out + out.adjoint()), kPropagatedStateTolerance);
}

CollisionKraus extract_kraus(const CollisionSpec& spec) { return extract_kraus(spec, spec.eta()); }

CollisionKraus extract_kraus(const CollisionSpec& spec, const DensityMatrix& eta) {
  if (eta.dim() != spec.ancilla_dim()) throw DimensionError("extract_kraus: ancilla dim mismatch");
  const Index ds = spec.system_dim();
  const Index da = spec.ancilla_dim();
  const CMatrix k = collision_unitary(spec);
  const HermitianEigen e = eigh(eta.matrix());

  CollisionKraus out;
  for (Index q = 0; q < da; ++q) {
    const double pi = e.values(q);
    if (pi <= 1e-14) continue;
    for (Index p = 0; p < da; ++p) {
      // W_p^q = (I (x) <phi_p|) K (I (x) |phi_q>)
      CMatrix w = CMatrix::Zero(ds, ds);
      for (Index a = 0; a < da; ++a) {
        for (Index b = 0; b < da; ++b) {
          const Complex c = std::conj(e.vectors(a, p)) * e.vectors(b, q);
          if (c == Complex(0.0)) continue;
          for (Index i = 0; i < ds; ++i)
            for (Index j = 0; j < ds; ++j) w(i, j) += c * k(i * da + a, j * da + b);
        }
      }
      w *= std::sqrt(pi);
      if (max_abs(w) <= 1e-15) continue;
      out.generators.push_back(std::move(w));
      out.weights.push_back(pi);
      out.indices.emplace_back(static_cast<int>(p), static_cast<int>(q));
    }
  }
  return out;
}

DensityMatrix stroboscopic_evolve(const CollisionSpec& spec, const DensityMatrix& rho0, std::int64_t n) {
  if (n < 0) throw NumericError("stroboscopic_evolve: n must be >= 0");
  if (rho0.dim() != spec.system_dim()) throw DimensionError("stroboscopic_evolve: state dim mismatch");
  std::vector<KrausMap> maps;
  if (spec.eta_sequence().empty()) {
    maps.push_back(extract_kraus(spec).map());
  } else {
    for (const DensityMatrix& eta : spec.eta_sequence()) maps.push_back(extract_kraus(spec, eta).map());
  }
  CMatrix rho = rho0.matrix();
  for (std::int64_t c = 0; c < n; ++c) {
    rho = apply_kraus(maps[static_cast<std::size_t>(c) % maps.size()], rho);
    rho = 0.5 * (rho + rho.adjoint()).eval();
  }
  return DensityMatrix(rho, kPropagatedStateTolerance);
}

ContinuumReport continuum_limit_check(const CollisionSpec& base, const LindbladModel& reference,
                                      const DensityMatrix& rho0, const std::vector<double>& taus,
                                      double t_final, bool scale_interaction) {
  if (reference.dim() != base.system_dim()) throw DimensionError("continuum_limit_check: reference dim mismatch");
  if (taus.empty()) throw SpecError("continuum_limit_check: no collision times");
  ContinuumReport report;
  report.tau_ref = base.tau();
  report.t_final = t_final;
  report.scaled = scale_interaction;
  const DensityMatrix target = propagate(reference, rho0, t_final);

  for (double tau : taus) {
    if (!(tau > 0.0)) throw SpecError("continuum_limit_check: tau must be positive");
    const double ratio = t_final / tau;
    const double steps = std::round(ratio);
    if (std::abs(ratio - steps) > 1e-9 * std::max(1.0, ratio)) {
      throw SpecError("continuum_limit_check: t_final is not a multiple of tau = " + std::to_string(tau));
    }
    CollisionSpec spec = base.with_tau(tau);
    if (scale_interaction) {
      spec = spec.with_interaction(HermitianOperator(base.interaction().matrix() * std::sqrt(base.tau() / tau)));
    }
    const auto n = static_cast<std::int64_t>(steps);
    const DensityMatrix rho = stroboscopic_evolve(spec, rho0, n);
    report.taus.push_back(tau);
    report.steps.push_back(n);
    report.errors.push_back(trace_distance(rho.matrix(), target.matrix()));
  }

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (std::size_t i = 0; i < report.taus.size(); ++i) {
    if (!(report.errors[i] > 0.0)) continue;
    const double x = std::log(report.taus[i]);
    const double y = std::log(report.errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  const double denom = m * sxx - sx * sx;
  report.fitted_order = (m >= 2 && denom > 0.0) ? (m * sxy - sx * sy) / denom : std::nan("");
  return report;
}

ExchangeCollisionModel exchange_collision_model(double omega, double g, double n_ancilla, double tau) {
  if (!(n_ancilla >= 0.0 && n_ancilla <= 1.0)) throw SpecError("exchange model: n must lie in [0, 1]");
  if (!(tau > 0.0)) throw SpecError("exchange model: tau must be positive");
  const CMatrix num = omega * pauli::number();
  const CMatrix v = g * (tensor(pauli::raise(), pauli::lower()) + tensor(pauli::lower(), pauli::raise()));
  CMatrix eta = CMatrix::Zero(2, 2);
  eta(0, 0) = 1.0 - n_ancilla;
  eta(1, 1) = n_ancilla;
  CollisionSpec spec{HermitianOperator(num), HermitianOperator(num), HermitianOperator(v), DensityMatrix(eta), tau};

  const double rate = g * g * tau;
  std::vector<CMatrix> jumps;
  if (n_ancilla < 1.0) jumps.push_back(std::sqrt(rate * (1.0 - n_ancilla)) * pauli::lower());
  if (n_ancilla > 0.0) jumps.push_back(std::sqrt(rate * n_ancilla) * pauli::raise());
  return {std::move(spec), LindbladModel(HermitianOperator(num), std::move(jumps))};
}

}  // namespace gksl
