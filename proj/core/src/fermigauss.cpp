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

#include "gksl/fermigauss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace gksl {
namespace {

constexpr Index kVectorizedMaxModes = 64;

CMatrix vectorized_operator(const CMatrix& p) {
  const Index n = p.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  return tensor(id, p) + tensor(p.conjugate(), id);
}

double separation(const CMatrix& p) {
  const CVector lam = eigenvalues(p);
  double best = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < lam.size(); ++i)
    for (Index j = 0; j < lam.size(); ++j) best = std::min(best, std::abs(lam(i) + std::conj(lam(j))));
  return best;
}

// Solves P C + C P^dagger = -F through the complex Schur form P = U S U^dagger.
CMatrix bartels_stewart(const CMatrix& p, const CMatrix& f) {
  const Index n = p.rows();
  Eigen::ComplexSchur<CMatrix> schur(p);
  if (schur.info() != Eigen::Success) throw NumericError("lyapunov_steady: Schur decomposition failed");
  const CMatrix& u = schur.matrixU();
  const CMatrix& s = schur.matrixT();
  const CMatrix g = -(u.adjoint() * f * u);
  CMatrix y = CMatrix::Zero(n, n);
  for (Index j = n - 1; j >= 0; --j) {
    CVector rhs = g.col(j);
    for (Index k = j + 1; k < n; ++k) rhs -= std::conj(s(j, k)) * y.col(k);
    CMatrix a = s;
    a.diagonal().array() += std::conj(s(j, j));
    y.col(j) = a.triangularView<Eigen::Upper>().solve(rhs);
  }
  return u * y * u.adjoint();
}

}  // namespace

LyapunovModel::LyapunovModel(const CMatrix& t_s, const CMatrix& theta, double g, const CMatrix& c_a)
    : t_s_(HermitianOperator(t_s).matrix()), theta_(theta), g_(g), c_a_(CorrelationMatrix(c_a).matrix()) {
  if (theta_.rows() != t_s_.rows()) throw DimensionError("LyapunovModel: Theta rows must equal L_S");
  if (theta_.cols() != c_a_.rows()) throw DimensionError("LyapunovModel: Theta columns must equal L_A");
  require_finite(theta_, "LyapunovModel Theta");
  if (!std::isfinite(g_)) throw NumericError("LyapunovModel: g must be finite");
  const CMatrix gt = g_ * theta_;
  p_ = -kI * t_s_ - 0.5 * gt * gt.adjoint();
  f_ = gt * c_a_ * gt.adjoint();
  f_ = 0.5 * (f_ + f_.adjoint()).eval();
}

CorrelationMatrix::CorrelationMatrix(const CMatrix& c, double tol) {
  require_square(c, "CorrelationMatrix");
  require_finite(c, "CorrelationMatrix");
  if (hermiticity_defect(c) > tol) throw NumericError("CorrelationMatrix: not Hermitian");
  c_ = 0.5 * (c + c.adjoint());
  const RVector ev = eigh(c_).values;
  if (ev.minCoeff() < -tol || ev.maxCoeff() > 1.0 + tol) {
    throw NumericError("CorrelationMatrix: occupations outside [0, 1]: [" + std::to_string(ev.minCoeff()) +
                       ", " + std::to_string(ev.maxCoeff()) + "]");
  }
}

CMatrix lyapunov_rhs(const LyapunovModel& model, const CMatrix& c) {
  if (c.rows() != model.modes() || c.cols() != model.modes()) throw DimensionError("lyapunov_rhs: dims differ");
  const CMatrix out = model.p() * c + c * model.p().adjoint() + model.f();
  return 0.5 * (out + out.adjoint());
}

LyapunovSteadyState lyapunov_steady(const LyapunovModel& model, LyapunovSolver solver) {
  const CMatrix& p = model.p();
  const CMatrix& f = model.f();
  const Index n = p.rows();
  LyapunovSteadyState out;
  out.separation = separation(p);
  out.unique = out.separation > kLyapunovUniquenessTolerance;

  if (out.unique && solver == LyapunovSolver::Schur) {
    out.c = bartels_stewart(p, f);
  } else {
    if (n > kVectorizedMaxModes) {
      if (!out.unique) throw DimensionError("lyapunov_steady: too many modes for the vectorized solve");
      out.c = bartels_stewart(p, f);
    } else {
      const CMatrix a = vectorized_operator(p);
      const CVector b = -vec(f);
      const CVector x = out.unique ? CVector(a.partialPivLu().solve(b))
                                   : CVector(a.completeOrthogonalDecomposition().solve(b));
      out.c = unvec(x, n);
    }
  }
  out.c = 0.5 * (out.c + out.c.adjoint()).eval();
  out.residual = (p * out.c + out.c * p.adjoint() + f).norm();
  out.consistent = out.unique || out.residual <= 1e-10 * std::max(1.0, f.norm());
  return out;
}

Index lyapunov_null_dimension(const LyapunovModel& model, double tol) {
  const CMatrix a = vectorized_operator(model.p());
  Eigen::BDCSVD<CMatrix> svd(a);
  const RVector& sv = svd.singularValues();
  Index count = 0;
  for (Index k = 0; k < sv.size(); ++k)
    if (sv(k) <= tol) ++count;
  return count;
}

CorrelationMatrix evolve_correlations(const LyapunovModel& model, const CorrelationMatrix& c0, double t) {
  if (c0.modes() != model.modes()) throw DimensionError("evolve_correlations: dims differ");
  if (!(t >= 0.0) || !std::isfinite(t)) throw NumericError("evolve_correlations: t must be >= 0");
  if (t == 0.0) return c0;
  const CMatrix& p = model.p();
  const Index n = p.rows();
  const CMatrix ept = matrix_exp(p, t);
  CMatrix c;
  const LyapunovSteadyState steady = lyapunov_steady(model, LyapunovSolver::Schur);
  if (steady.unique) {
    c = steady.c + ept * (c0.matrix() - steady.c) * ept.adjoint();
  } else {
    // Van Loan: the upper-right block of exp([[P, F], [0, -P^dagger]] t) is
    // int_0^t e^{P(t-s)} F e^{-P^dagger s} ds.
    CMatrix block = CMatrix::Zero(2 * n, 2 * n);
    block.topLeftCorner(n, n) = p;
    block.topRightCorner(n, n) = model.f();
    block.bottomRightCorner(n, n) = -p.adjoint();
    const CMatrix e = matrix_exp(block, t);
    const CMatrix integral = e.topRightCorner(n, n) * ept.adjoint();
    c = ept * c0.matrix() * ept.adjoint() + integral;
  }
  return CorrelationMatrix(0.5 * (c + c.adjoint()), 1e-9);
}

double bond_current(const CMatrix& c, double hopping, int k) {
  if (k < 1 || k >= c.rows()) {
    throw DimensionError("bond_current: bond " + std::to_string(k) + " outside [1, " +
                         std::to_string(c.rows() - 1) + "]");
  }
  return 2.0 * hopping * c(k - 1, k).imag();
}

std::vector<double> bond_currents(const CMatrix& c, double hopping) {
  std::vector<double> out;
  for (int k = 1; k < c.rows(); ++k) out.push_back(bond_current(c, hopping, k));
  return out;
}

LyapunovModel boundary_chain(int length, double hopping, double g, double n_left, double n_right) {
  if (length < 1) throw DimensionError("boundary_chain: length must be >= 1");
  const Index n = length;
  CMatrix t = CMatrix::Zero(n, n);
  for (Index i = 0; i + 1 < n; ++i) t(i, i + 1) = t(i + 1, i) = hopping;
  CMatrix theta = CMatrix::Zero(n, 2);
  theta(0, 0) = 1.0;
  theta(n - 1, 1) = 1.0;
  CMatrix c_a = CMatrix::Zero(2, 2);
  c_a(0, 0) = n_left;
  c_a(1, 1) = n_right;
  return LyapunovModel(t, theta, g, c_a);
}

LindbladModel lyapunov_many_body_model(const LyapunovModel& model) {
  const int modes = static_cast<int>(model.modes());
  if (modes > 10) throw DimensionError("lyapunov_many_body_model: at most 10 modes");
  const Index dim = Index{1} << modes;
  std::vector<CMatrix> c;
  for (int j = 1; j <= modes; ++j) c.push_back(jordan_wigner_lowering(modes, j));

  CMatrix h = CMatrix::Zero(dim, dim);
  const CMatrix& t = model.hopping();
  for (int i = 0; i < modes; ++i)
    for (int j = 0; j < modes; ++j)
      if (t(i, j) != Complex(0.0)) h += t(i, j) * c[i].adjoint() * c[j];

  std::vector<CMatrix> jumps;
  const CMatrix gt = model.coupling() * model.theta();
  const CMatrix& f = model.f();
  const CMatrix loss = gt * gt.adjoint() - f;
  const double scale = std::max(1e-300, max_abs(gt * gt.adjoint()));
  const HermitianEigen fe = eigh(f);
  for (Index k = 0; k < fe.values.size(); ++k) {
    if (fe.values(k) <= 1e-13 * scale) continue;
    const CVector u = std::sqrt(fe.values(k)) * fe.vectors.col(k);
    CMatrix l = CMatrix::Zero(dim, dim);
    for (int i = 0; i < modes; ++i) l += u(i) * c[i].adjoint();
    jumps.push_back(std::move(l));
  }
  const HermitianEigen le = eigh(0.5 * (loss + loss.adjoint()));
  for (Index k = 0; k < le.values.size(); ++k) {
    if (le.values(k) <= 1e-13 * scale) continue;
    const CVector w = std::sqrt(le.values(k)) * le.vectors.col(k);
    CMatrix l = CMatrix::Zero(dim, dim);
    for (int i = 0; i < modes; ++i) l += std::conj(w(i)) * c[i];
    jumps.push_back(std::move(l));
  }
  return LindbladModel(HermitianOperator(h), std::move(jumps));
}

CMatrix many_body_correlations(const CMatrix& rho, int modes) {
  if (rho.rows() != (Index{1} << modes)) throw DimensionError("many_body_correlations: dim mismatch");
  std::vector<CMatrix> c;
  for (int j = 1; j <= modes; ++j) c.push_back(jordan_wigner_lowering(modes, j));
  CMatrix out(modes, modes);
  for (int i = 0; i < modes; ++i)
    for (int j = 0; j < modes; ++j) out(i, j) = (c[j].adjoint() * c[i] * rho).trace();
  return out;
}

BallisticReport ballistic_scaling_experiment(double g, double hopping, double n_left, double n_right,
                                             const std::vector<int>& lengths) {
  BallisticReport report;
  for (int len : lengths) {
    if (len < 2) throw DimensionError("ballistic_scaling_experiment: lengths must be >= 2");
    const LyapunovModel model = boundary_chain(len, hopping, g, n_left, n_right);
    const LyapunovSteadyState steady = lyapunov_steady(model);
    if (!steady.unique) throw NumericError("ballistic_scaling_experiment: steady state is not unique");
    const std::vector<double> j = bond_currents(steady.c, hopping);
    const double mean = j.front();
    for (double v : j) report.max_bond_deviation = std::max(report.max_bond_deviation, std::abs(v - mean));
    report.lengths.push_back(len);
    report.currents.push_back(mean);
  }
  if (!report.currents.empty()) {
    const auto [lo, hi] = std::minmax_element(report.currents.begin(), report.currents.end());
    double mag = 0.0;
    for (double v : report.currents) mag = std::max(mag, std::abs(v));
    report.spread = mag > 0.0 ? (*hi - *lo) / mag : 0.0;
    if (n_left != n_right) report.kappa = report.currents.front() / (n_left - n_right);
  }
  return report;
}

double bell_pair_fidelity(const CMatrix& c, Index p, Index q, double phase) {
  const double np = c(p, p).real();
  const double nq = c(q, q).real();
  // Wick: <n_p n_q> = C_pp C_qq - |C_pq|^2.
  const double both = np * nq - std::norm(c(p, q));
  const double only_p = np - both;
  const double only_q = nq - both;
  return 0.5 * (only_p + only_q) + (std::exp(Complex(0.0, -phase)) * c(p, q)).real();
}

}  // namespace gksl
