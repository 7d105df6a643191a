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

#include <algorithm>
#include <cmath>
#include <string>

#include "gksl/fermigauss.hpp"

namespace gksl {
namespace {

CMatrix ancilla_pair(const RainbowOptions& options) {
  CMatrix c_a = CMatrix::Zero(2, 2);
  if (options.preparation == AncillaPreparation::Bell) {
    c_a(0, 0) = 0.5;
    c_a(1, 1) = 0.5;
    c_a(0, 1) = 0.5 * std::exp(Complex(0.0, options.bell_phase));
    c_a(1, 0) = std::conj(c_a(0, 1));
  } else {
    c_a(1, 1) = 1.0;
  }
  return c_a;
}

// Two decoupled chains (chain 1 first) whose site 1 couples to one ancilla mode each.
LyapunovModel two_chain_model(const RainbowOptions& options) {
  const Index l = options.length;
  CMatrix t = CMatrix::Zero(2 * l, 2 * l);
  for (Index i = 0; i + 1 < l; ++i) {
    t(i, i + 1) = t(i + 1, i) = options.hopping;
    t(l + i, l + i + 1) = t(l + i + 1, l + i) = options.hopping;
  }
  CMatrix theta = CMatrix::Zero(2 * l, 2);
  theta(0, 0) = 1.0;
  theta(l, 1) = 1.0;
  return LyapunovModel(t, theta, options.coupling, ancilla_pair(options));
}

struct CollisionResult {
  CMatrix c;
  int collisions = 0;
};

CollisionResult collide(const LyapunovModel& model, const RainbowOptions& options) {
  const double tau = *options.collision_tau;
  if (!(tau > 0.0)) throw SpecError("rainbow_experiment: collision tau must be positive");
  const Index n = model.modes();
  const Index na = model.ancilla_modes();
  CMatrix h = CMatrix::Zero(n + na, n + na);
  h.topLeftCorner(n, n) = model.hopping();
  const CMatrix coupling = (model.coupling() / std::sqrt(tau)) * model.theta();
  h.topRightCorner(n, na) = coupling;
  h.bottomLeftCorner(na, n) = coupling.adjoint();
  const CMatrix u = matrix_exp(-kI * h, tau);

  CMatrix joint = CMatrix::Zero(n + na, n + na);
  joint.bottomRightCorner(na, na) = model.ancilla_correlations();
  CMatrix c = CMatrix::Zero(n, n);
  CollisionResult out;
  for (int k = 0; k < options.max_collisions; ++k) {
    joint.topLeftCorner(n, n) = c;
    const CMatrix next = (u * joint * u.adjoint()).topLeftCorner(n, n);
    const double change = max_abs(next - c);
    c = 0.5 * (next + next.adjoint());
    out.collisions = k + 1;
    if (!options.fixed_collisions && change <= 1e-13) {
      out.c = c;
      return out;
    }
  }
  if (!options.fixed_collisions) {
    throw ConvergenceError("rainbow_experiment: no convergence within " + std::to_string(options.max_collisions) +
                           " collisions");
  }
  out.c = c;
  return out;
}

}  // namespace

RainbowReport rainbow_experiment(const RainbowOptions& options) {
  if (options.length < 1) throw DimensionError("rainbow_experiment: length must be >= 1");
  if (options.max_collisions < 1) throw SpecError("rainbow_experiment: max_collisions must be >= 1");
  const LyapunovModel model = two_chain_model(options);
  const Index l = options.length;

  RainbowReport report;
  if (options.collision_tau) {
    CollisionResult res = collide(model, options);
    report.correlations = std::move(res.c);
    report.collisions = res.collisions;
  } else {
    const LyapunovSteadyState steady = lyapunov_steady(model);
    if (!steady.unique) throw ConvergenceError("rainbow_experiment: steady state is not unique");
    report.correlations = steady.c;
  }

  const CMatrix& c = report.correlations;
  report.max_cross_correlation = c.bottomLeftCorner(l, l).cwiseAbs().maxCoeff();
  report.min_fidelity = 1.0;
  for (Index i = 0; i < l; ++i) {
    RainbowPair pair;
    pair.site = static_cast<int>(i + 1);
    pair.fidelity = bell_pair_fidelity(c, i, l + i, options.bell_phase);
    pair.cross_correlation = c(i, l + i);
    report.min_fidelity = std::min(report.min_fidelity, pair.fidelity);
    report.pairs.push_back(pair);
  }
  report.all_above_threshold = report.min_fidelity > options.threshold;
  return report;
}

}  // namespace gksl
