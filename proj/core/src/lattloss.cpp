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

#include "gksl/lattloss.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <numbers>
#include <set>
#include <string>

#include "gksl/fermigauss.hpp"

namespace gksl {
namespace {

struct Fit {
  RVector coeffs;
  RVector residuals;
};

Fit polyfit(const RVector& x, const RVector& y, int degree) {
  RMatrix a(x.size(), degree + 1);
  for (Index i = 0; i < x.size(); ++i)
    for (int d = 0; d <= degree; ++d) a(i, d) = std::pow(x(i), d);
  Fit f;
  f.coeffs = a.colPivHouseholderQr().solve(y);
  f.residuals = y - a * f.coeffs;
  return f;
}

double curvature_statistic(const RVector& x, const RVector& y) {
  const double center = x.mean();
  const RVector xc = (x.array() - center).matrix();
  const double width = x.maxCoeff() - x.minCoeff();
  return std::abs(polyfit(xc, y, 2).coeffs(2)) * width * width / 4.0;
}

}  // namespace

void validate(const LossModel& model) {
  if (model.sites < 1 || model.sites > kMaxLossSites) {
    throw DimensionError("LossModel: sites must lie in [1, " + std::to_string(kMaxLossSites) + "]");
  }
  if (model.order < 1 || model.order > model.sites) throw SpecError("LossModel: need 1 <= K <= L");
  if (!(model.rate >= 0.0) || !std::isfinite(model.rate)) throw SpecError("LossModel: Gamma must be >= 0");
  if (!std::isfinite(model.hopping) || !std::isfinite(model.trap)) throw SpecError("LossModel: non-finite parameter");
}

std::vector<std::vector<int>> loss_windows(const LossModel& model) {
  validate(model);
  const int l = model.sites;
  const int k = model.order;
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  const int count = model.boundary == Boundary::Open ? l - k + 1 : l;
  for (int j = 1; j <= count; ++j) {
    std::vector<int> window;
    for (int s = 0; s < k; ++s) window.push_back((j - 1 + s) % l + 1);
    std::vector<int> key = window;
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) out.push_back(std::move(window));
  }
  return out;
}

CMatrix loss_hamiltonian(const LossModel& model) {
  validate(model);
  const int l = model.sites;
  const Index dim = Index{1} << l;
  CMatrix h = CMatrix::Zero(dim, dim);
  std::vector<std::pair<int, int>> bonds;
  for (int j = 1; j < l; ++j) bonds.emplace_back(j, j + 1);
  if (model.boundary == Boundary::Periodic && l > 2) bonds.emplace_back(l, 1);
  for (const auto& [a, b] : bonds) {
    const CMatrix hop = two_site_operator(pauli::raise(), a, pauli::lower(), b, l);
    h -= model.hopping * (hop + hop.adjoint());
  }
  if (model.trap != 0.0) {
    const double center = 0.5 * (l + 1);
    for (int j = 1; j <= l; ++j) {
      h += model.trap * (j - center) * (j - center) * site_operator(pauli::number(), j, l);
    }
  }
  return h;
}

LindbladModel build_loss_lindblad(const LossModel& model) {
  const CMatrix h = loss_hamiltonian(model);
  std::vector<CMatrix> jumps;
  if (model.rate > 0.0) {
    const int l = model.sites;
    const Index dim = Index{1} << l;
    for (const std::vector<int>& window : loss_windows(model)) {
      CMatrix op = std::sqrt(model.rate) * CMatrix::Identity(dim, dim);
      for (int site : window) op = site_operator(pauli::lower(), site, l) * op;
      jumps.push_back(std::move(op));
    }
  }
  return LindbladModel(HermitianOperator(h), std::move(jumps));
}

double mean_density(const CMatrix& rho, int sites) {
  if (rho.rows() != (Index{1} << sites)) throw DimensionError("mean_density: dim mismatch");
  double total = 0.0;
  for (Index s = 0; s < rho.rows(); ++s) {
    total += std::popcount(static_cast<unsigned long long>(s)) * rho(s, s).real();
  }
  return total / sites;
}

PropagationOptions default_loss_propagation(const LossModel& model) {
  PropagationOptions options;
  options.method = model.sites <= 4 ? PropagationMethod::ExactExp : PropagationMethod::AdaptiveRk;
  options.rel_tol = 1e-12;
  options.abs_tol = 1e-14;
  return options;
}

DensitySeries density_trajectory(const LossModel& model, const DensityMatrix& rho0,
                                 const std::vector<double>& times, std::optional<PropagationOptions> options) {
  const LindbladModel lindblad = build_loss_lindblad(model);
  DensitySeries out;
  out.times = times;
  out.states = propagate_series(lindblad, rho0, times, options.value_or(default_loss_propagation(model)));
  for (const DensityMatrix& rho : out.states) out.density.push_back(mean_density(rho.matrix(), model.sites));
  return out;
}

std::vector<double> momentum_grid(int sites) {
  std::vector<double> k;
  for (int q = 0; q < sites; ++q) k.push_back(2.0 * std::numbers::pi * q / sites);
  return k;
}

RVector momentum_occupation(const LossModel& model, const CMatrix& rho) {
  validate(model);
  const int l = model.sites;
  // c(i, j) = <c_j^dagger c_i>
  const CMatrix c = many_body_correlations(rho, l);
  const std::vector<double> ks = momentum_grid(l);
  RVector nk(l);
  for (int q = 0; q < l; ++q) {
    Complex sum = 0.0;
    for (int j = 0; j < l; ++j)
      for (int m = 0; m < l; ++m) sum += std::exp(Complex(0.0, ks[q] * (j - m))) * c(m, j);
    nk(q) = sum.real() / l;
  }
  return nk;
}

double first_fourier_mode(const RVector& occupation) {
  const Index l = occupation.size();
  Complex sum = 0.0;
  for (Index q = 0; q < l; ++q) sum += occupation(q) * std::exp(Complex(0.0, 2.0 * std::numbers::pi * q / l));
  return std::abs(sum) / static_cast<double>(l);
}

DecayFit decay_exponent_fit(const std::vector<double>& times, const std::vector<double>& values, double t_min,
                            double t_max) {
  if (times.size() != values.size()) throw DimensionError("decay_exponent_fit: series lengths differ");
  std::vector<double> t, n;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < t_min || times[i] > t_max) continue;
    if (!(values[i] > 0.0) || !(times[i] > 0.0)) {
      throw NumericError("decay_exponent_fit: times and densities in the window must be positive");
    }
    t.push_back(times[i]);
    n.push_back(values[i]);
  }
  if (t.size() < 8) {
    throw SpecError("decay_exponent_fit: " + std::to_string(t.size()) + " points in window, need at least 8");
  }
  const auto m = static_cast<Index>(t.size());
  RVector tv(m), logt(m), logn(m);
  for (Index i = 0; i < m; ++i) {
    tv(i) = t[static_cast<std::size_t>(i)];
    logt(i) = std::log(tv(i));
    logn(i) = std::log(n[static_cast<std::size_t>(i)]);
  }
  const RVector xc = (logt.array() - logt.mean()).matrix();
  const Fit line = polyfit(xc, logn, 1);

  DecayFit fit;
  fit.points = static_cast<int>(m);
  fit.alpha = line.coeffs(1);
  const double sxx = xc.squaredNorm();
  fit.std_error = m > 2 && sxx > 0.0 ? std::sqrt(line.residuals.squaredNorm() / (m - 2) / sxx) : 0.0;
  fit.loglog_curvature = curvature_statistic(logt, logn);
  fit.semilog_curvature = curvature_statistic(tv, logn);
  fit.non_power_law = fit.loglog_curvature > kCurvatureFlagThreshold;
  fit.non_exponential = fit.semilog_curvature > kCurvatureFlagThreshold;
  return fit;
}

DensityMatrix occupation_state(const std::vector<int>& occupations) {
  return DensityMatrix::pure(basis_vector(occupations));
}

}  // namespace gksl
