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
#include <numeric>
#include <vector>

#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "gksl/liouvillian.hpp"

namespace gksl {
namespace {

constexpr Index kFullSolveMaxDim = 16;
constexpr Index kSubspaceSize = 6;
constexpr int kSubspaceIterations = 40;

struct KernelData {
  CMatrix right;  // columns: vec of kernel elements
  CMatrix left;   // columns: left null vectors (u^dagger S = 0)
  CVector spectrum;
  double gap = 0.0;
};

double spectral_gap(const CVector& lambdas, double zero_tol) {
  double gap = 0.0;
  bool found = false;
  for (Index k = 0; k < lambdas.size(); ++k) {
    if (std::abs(lambdas(k)) <= zero_tol) continue;
    const double g = -lambdas(k).real();
    if (!found || g < gap) gap = g;
    found = true;
  }
  return gap;
}

KernelData full_kernel(const CMatrix& s, double zero_tol) {
  KernelData out;
  out.spectrum = eigenvalues(s);
  out.gap = spectral_gap(out.spectrum, zero_tol);

  Eigen::BDCSVD<CMatrix> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVector& sv = svd.singularValues();
  Index nullity = 0;
  for (Index k = 0; k < sv.size(); ++k)
    if (sv(k) <= zero_tol) ++nullity;
  // A trace-preserving generator always has a kernel; take the smallest
  // singular direction if roundoff pushed it above the threshold.
  nullity = std::max<Index>(nullity, 1);
  out.right = svd.matrixV().rightCols(nullity);
  out.left = svd.matrixU().rightCols(nullity);
  return out;
}

// Block inverse iteration on (S - mu) followed by Rayleigh-Ritz on S.
CMatrix subspace_kernel(const Eigen::PartialPivLU<CMatrix>& lu, const CMatrix& s, bool adjoint,
                        double zero_tol, CVector* ritz_out) {
  const Index n2 = s.rows();
  const Index k = std::min(kSubspaceSize, n2);
  CMatrix q = CMatrix::Zero(n2, k);
  // Deterministic, generic starting block.
  for (Index j = 0; j < k; ++j) {
    for (Index i = 0; i < n2; ++i)
      q(i, j) = Complex(std::cos(0.37 * (i + 1) * (j + 1)), std::sin(0.11 * (i + 3) * (j + 2)));
  }
  for (int it = 0; it < kSubspaceIterations; ++it) {
    CMatrix z = adjoint ? CMatrix(lu.adjoint().solve(q)) : CMatrix(lu.solve(q));
    Eigen::HouseholderQR<CMatrix> qr(z);
    q = qr.householderQ() * CMatrix::Identity(n2, k);
  }
  const CMatrix sq = adjoint ? CMatrix(s.adjoint() * q) : CMatrix(s * q);
  const CMatrix small = q.adjoint() * sq;
  Eigen::ComplexEigenSolver<CMatrix> es(small);
  if (es.info() != Eigen::Success) throw NumericError("steady_state: Ritz eigensolver failed");
  const CVector ritz = es.eigenvalues();
  const CMatrix vecs = q * es.eigenvectors();
  std::vector<Index> zero;
  for (Index j = 0; j < ritz.size(); ++j)
    if (std::abs(ritz(j)) <= zero_tol) zero.push_back(j);
  if (zero.empty()) {
    Index best = 0;
    for (Index j = 1; j < ritz.size(); ++j)
      if (std::abs(ritz(j)) < std::abs(ritz(best))) best = j;
    zero.push_back(best);
  }
  CMatrix basis(n2, static_cast<Index>(zero.size()));
  for (std::size_t j = 0; j < zero.size(); ++j) basis.col(static_cast<Index>(j)) = vecs.col(zero[j]);
  Eigen::HouseholderQR<CMatrix> qr(basis);
  if (ritz_out) *ritz_out = adjoint ? CVector(ritz.conjugate()) : ritz;
  return qr.householderQ() * CMatrix::Identity(n2, basis.cols());
}

KernelData iterative_kernel(const CMatrix& s, double zero_tol) {
  const double scale = std::max(s.norm(), 1e-300);
  const Complex mu = Complex(1e-7, 0.5e-7) * scale;
  CMatrix shifted = s;
  shifted.diagonal().array() -= mu;
  const Eigen::PartialPivLU<CMatrix> lu(shifted);
  KernelData out;
  out.right = subspace_kernel(lu, s, false, zero_tol, &out.spectrum);
  out.left = subspace_kernel(lu, s, true, zero_tol, nullptr);
  // Kernel dims of S and S^dagger agree; keep the smaller estimate for both.
  const Index dim = std::min(out.right.cols(), out.left.cols());
  out.right = out.right.leftCols(dim).eval();
  out.left = out.left.leftCols(dim).eval();
  out.gap = spectral_gap(out.spectrum, zero_tol);
  return out;
}

}  // namespace

CVector liouvillian_spectrum(const LindbladModel& model) {
  return eigenvalues(build_superoperator(model).matrix());
}

SteadyState steady_state(const LindbladModel& model, std::optional<double> tol) {
  const Index n = model.dim();
  const Superoperator sop = build_superoperator(model);
  const CMatrix& s = sop.matrix();
  const double zero_tol = tol.value_or(1e-9 * s.norm());

  const KernelData kernel = n <= kFullSolveMaxDim ? full_kernel(s, zero_tol) : iterative_kernel(s, zero_tol);
  const Index dim = kernel.right.cols();

  CMatrix rho;
  if (dim == 1) {
    rho = unvec(kernel.right.col(0), n);
    const Complex tr = rho.trace();
    if (std::abs(tr) < 1e-300) throw NumericError("steady_state: kernel element has zero trace");
    rho /= tr;
  } else {
    // Spectral projection of I/N onto the kernel along the range of S.
    const CVector mixed = vec(CMatrix::Identity(n, n)) / static_cast<double>(n);
    const CMatrix lr = kernel.left.adjoint() * kernel.right;
    const CVector coeff = lr.fullPivLu().solve(kernel.left.adjoint() * mixed);
    rho = unvec(kernel.right * coeff, n);
    rho /= rho.trace();
  }
  rho = 0.5 * (rho + rho.adjoint());

  std::vector<CMatrix> null_space;
  null_space.reserve(static_cast<std::size_t>(dim));
  for (Index j = 0; j < dim; ++j) null_space.push_back(unvec(kernel.right.col(j), n));

  const double residual = (s * vec(rho)).norm();
  return SteadyState{DensityMatrix(rho, kPropagatedStateTolerance),
                     kernel.gap,
                     dim == 1,
                     residual,
                     zero_tol,
                     std::move(null_space),
                     n <= kFullSolveMaxDim ? kernel.spectrum : CVector()};
}

}  // namespace gksl
