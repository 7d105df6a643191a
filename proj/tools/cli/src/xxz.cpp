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

#include "gksl_cli/xxz.hpp"

#include <algorithm>
#include <cmath>

namespace gksl::cli {
namespace {

CMatrix pauli_component(int a) {
  switch (a) {
    case 0: return pauli::x();
    case 1: return pauli::y();
    default: return pauli::z();
  }
}

Direction normalized(const Direction& n) {
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw SpecError("xxz: target direction must be non-zero");
  return {n[0] / norm, n[1] / norm, n[2] / norm};
}

CMatrix bond_hamiltonian(const XxzOptions& o, int k) {
  const int l = o.sites;
  return o.exchange * (two_site_operator(pauli::x(), k, pauli::x(), k + 1, l) +
                       two_site_operator(pauli::y(), k, pauli::y(), k + 1, l) +
                       o.delta * two_site_operator(pauli::z(), k, pauli::z(), k + 1, l));
}

}  // namespace

CMatrix polarizing_lowering(const Direction& direction) {
  const Direction n = normalized(direction);
  const double theta = std::acos(std::clamp(n[2], -1.0, 1.0));
  const double phi = std::atan2(n[1], n[0]);
  CVector up(2), down(2);
  up << std::cos(theta / 2), std::exp(Complex(0.0, phi)) * std::sin(theta / 2);
  down << -std::exp(Complex(0.0, -phi)) * std::sin(theta / 2), std::cos(theta / 2);
  return up * down.adjoint();
}

LindbladModel xxz_model(const XxzOptions& o) {
  if (o.sites < 2) throw SpecError("xxz: need at least two sites");
  if (o.gamma_left < 0.0 || o.gamma_right < 0.0) throw SpecError("xxz: rates must be >= 0");
  const int l = o.sites;
  const Index dim = Index{1} << l;
  CMatrix h = CMatrix::Zero(dim, dim);
  for (int k = 1; k < l; ++k) h += bond_hamiltonian(o, k);
  std::vector<CMatrix> jumps;
  if (o.gamma_left > 0.0) jumps.push_back(std::sqrt(o.gamma_left) * site_operator(polarizing_lowering(o.left), 1, l));
  if (o.gamma_right > 0.0) {
    jumps.push_back(std::sqrt(o.gamma_right) * site_operator(polarizing_lowering(o.right), l, l));
  }
  return LindbladModel(HermitianOperator(h), std::move(jumps));
}

CMatrix spin_current_operator(const XxzOptions& o, int bond, int component) {
  if (bond < 1 || bond >= o.sites) throw DimensionError("xxz: bond index out of range");
  const CMatrix s = pauli_component(component);
  const CMatrix diff = site_operator(s, bond + 1, o.sites) - site_operator(s, bond, o.sites);
  return Complex(0.0, 0.5) * commutator(bond_hamiltonian(o, bond), diff);
}

XxzReport xxz_ness_experiment(const XxzOptions& o) {
  const SteadyState ss = steady_state(xxz_model(o));
  const CMatrix& rho = ss.state.matrix();
  XxzReport r;
  r.unique = ss.unique;
  r.residual = ss.residual;
  for (int k = 1; k < o.sites; ++k) {
    std::array<double, 3> j{};
    for (int a = 0; a < 3; ++a) j[a] = (rho * spin_current_operator(o, k, a)).trace().real();
    r.currents.push_back(j);
  }
  for (int a = 0; a < 3; ++a) {
    double lo = r.currents.front()[a], hi = lo;
    for (const auto& j : r.currents) {
      lo = std::min(lo, j[a]);
      hi = std::max(hi, j[a]);
    }
    r.flatness[a] = hi - lo;
  }
  for (int s = 1; s <= o.sites; ++s) {
    std::array<double, 3> m{};
    for (int a = 0; a < 3; ++a) m[a] = (rho * site_operator(pauli_component(a), s, o.sites)).trace().real();
    r.magnetization.push_back(m);
  }
  return r;
}

}  // namespace gksl::cli
