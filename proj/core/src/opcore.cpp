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

#include "gksl/opcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace gksl {

void require_square(const CMatrix& m, std::string_view what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_finite(const CMatrix& m, std::string_view what) {
  if (!m.allFinite()) {
    throw NumericError(std::string(what) + ": non-finite entries");
  }
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const CMatrix& m) {
  return max_abs(m - m.adjoint());
}

bool is_normal(const CMatrix& m, double rel_tol) {
  const double scale = m.squaredNorm();
  if (scale == 0.0) return true;
  return (m * m.adjoint() - m.adjoint() * m).norm() <= rel_tol * scale;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }
CMatrix anticommutator(const CMatrix& a, const CMatrix& b) { return a * b + b * a; }

CVector vec(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

CMatrix unvec(const CVector& v, Index dim) {
  if (v.size() != dim * dim) {
    throw DimensionError("unvec: vector length " + std::to_string(v.size()) +
                         " is not dim^2 for dim " + std::to_string(dim));
  }
  return Eigen::Map<const CMatrix>(v.data(), dim, dim);
}

HermitianOperator::HermitianOperator(const CMatrix& m) {
  require_square(m, "HermitianOperator");
  require_finite(m, "HermitianOperator");
  const double tol = kRelativeTolerance * max_abs(m);
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    throw NumericError("HermitianOperator: |M - M^dagger| = " + std::to_string(defect) +
                       " exceeds tolerance " + std::to_string(tol));
  }
  m_ = (m + m.adjoint()) / 2.0;
}

HermitianOperator HermitianOperator::zero(Index dim) {
  return HermitianOperator(CMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::identity(Index dim) {
  return HermitianOperator(CMatrix::Identity(dim, dim));
}

DensityMatrix::DensityMatrix(const CMatrix& m, DensityTolerance tol) {
  require_square(m, "DensityMatrix");
  require_finite(m, "DensityMatrix");
  const double defect = hermiticity_defect(m);
  if (defect > tol.hermiticity) {
    throw NumericError("DensityMatrix: Hermiticity defect " + std::to_string(defect));
  }
  m_ = (m + m.adjoint()) / 2.0;
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw NumericError("DensityMatrix: trace " + std::to_string(tr) + " differs from 1");
  }
  const double lo = min_eigenvalue();
  if (lo < -tol.positivity) {
    throw NumericError("DensityMatrix: negative eigenvalue " + std::to_string(lo));
  }
}

DensityMatrix DensityMatrix::pure(const CVector& psi) {
  const double n = psi.norm();
  if (n == 0.0 || !std::isfinite(n)) throw NumericError("DensityMatrix::pure: zero or non-finite state");
  const CVector u = psi / n;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::basis_state(Index dim, Index k) {
  if (k < 0 || k >= dim) throw DimensionError("DensityMatrix::basis_state: index out of range");
  CMatrix m = CMatrix::Zero(dim, dim);
  m(k, k) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

HermitianEigen eigh(const CMatrix& m) {
  require_square(m, "eigh");
  require_finite(m, "eigh");
  const CMatrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
  if (es.info() != Eigen::Success) throw NumericError("eigh: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

GeneralEigen eig(const CMatrix& m) {
  require_square(m, "eig");
  require_finite(m, "eig");
  Eigen::ComplexEigenSolver<CMatrix> es(m);
  if (es.info() != Eigen::Success) throw NumericError("eig: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

CVector eigenvalues(const CMatrix& m) {
  require_square(m, "eigenvalues");
  require_finite(m, "eigenvalues");
  Eigen::ComplexEigenSolver<CMatrix> es(m, false);
  if (es.info() != Eigen::Success) throw NumericError("eigenvalues: eigensolver failed");
  return es.eigenvalues();
}

CMatrix tensor(const CMatrix& a, const CMatrix& b, Index max_dim) {
  require_square(a, "tensor");
  require_square(b, "tensor");
  const Index da = a.rows();
  const Index db = b.rows();
  if (da > max_dim / db) {
    throw DimensionError("tensor: product dimension " + std::to_string(da) + "*" +
                         std::to_string(db) + " exceeds limit " + std::to_string(max_dim));
  }
  CMatrix out(da * db, da * db);
  for (Index j = 0; j < da; ++j) {
    for (Index i = 0; i < da; ++i) {
      out.block(i * db, j * db, db, db) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix tensor(std::initializer_list<CMatrix> factors, Index max_dim) {
  if (factors.size() == 0) throw DimensionError("tensor: no factors");
  auto it = factors.begin();
  CMatrix out = *it;
  for (++it; it != factors.end(); ++it) out = tensor(out, *it, max_dim);
  return out;
}

CMatrix partial_trace(const CMatrix& m, Index dim_a, Index dim_b, Subsystem keep) {
  require_square(m, "partial_trace");
  if (dim_a < 1 || dim_b < 1 || m.rows() != dim_a * dim_b) {
    throw DimensionError("partial_trace: matrix dim " + std::to_string(m.rows()) +
                         " != " + std::to_string(dim_a) + "*" + std::to_string(dim_b));
  }
  if (keep == Subsystem::A) {
    CMatrix out = CMatrix::Zero(dim_a, dim_a);
    for (Index a = 0; a < dim_a; ++a)
      for (Index ap = 0; ap < dim_a; ++ap)
        for (Index b = 0; b < dim_b; ++b) out(a, ap) += m(a * dim_b + b, ap * dim_b + b);
    return out;
  }
  CMatrix out = CMatrix::Zero(dim_b, dim_b);
  for (Index a = 0; a < dim_a; ++a) out += m.block(a * dim_b, a * dim_b, dim_b, dim_b);
  return out;
}

double trace_distance(const CMatrix& a, const CMatrix& b) {
  const HermitianEigen e = eigh(a - b);
  return 0.5 * e.values.cwiseAbs().sum();
}

namespace pauli {

CMatrix identity(Index dim) { return CMatrix::Identity(dim, dim); }

CMatrix x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMatrix y() {
  CMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

CMatrix z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

CMatrix lower() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

CMatrix raise() { return lower().adjoint(); }

CMatrix number() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(1, 1) = 1.0;
  return m;
}

}  // namespace pauli

namespace {

void check_site(int site, int n_sites, std::string_view what) {
  if (n_sites < 1 || site < 1 || site > n_sites) {
    throw DimensionError(std::string(what) + ": site " + std::to_string(site) +
                         " outside 1.." + std::to_string(n_sites));
  }
}

CMatrix identity_qubits(int n) { return CMatrix::Identity(Index{1} << n, Index{1} << n); }

}  // namespace

CMatrix site_operator(const CMatrix& op, int site, int n_sites) {
  check_site(site, n_sites, "site_operator");
  if (op.rows() != 2 || op.cols() != 2) throw DimensionError("site_operator: expected 2x2 operator");
  return tensor(tensor(identity_qubits(site - 1), op), identity_qubits(n_sites - site));
}

CMatrix two_site_operator(const CMatrix& op_a, int site_a, const CMatrix& op_b, int site_b,
                          int n_sites) {
  check_site(site_a, n_sites, "two_site_operator");
  check_site(site_b, n_sites, "two_site_operator");
  if (site_a == site_b) throw DimensionError("two_site_operator: sites must differ");
  return site_operator(op_a, site_a, n_sites) * site_operator(op_b, site_b, n_sites);
}

CMatrix jordan_wigner_lowering(int n_modes, int j) {
  check_site(j, n_modes, "jordan_wigner_lowering");
  CMatrix out = CMatrix::Identity(1, 1);
  for (int l = 1; l <= n_modes; ++l) {
    const CMatrix factor = l < j ? pauli::z() : (l == j ? pauli::lower() : pauli::identity());
    out = tensor(out, factor);
  }
  return out;
}

CVector basis_vector(std::span<const int> occupations) {
  const int n = static_cast<int>(occupations.size());
  if (n < 1 || n > 30) throw DimensionError("basis_vector: unsupported number of sites");
  Index idx = 0;
  for (int b : occupations) {
    if (b != 0 && b != 1) throw DimensionError("basis_vector: occupations must be 0 or 1");
    idx = (idx << 1) | b;
  }
  CVector v = CVector::Zero(Index{1} << n);
  v(idx) = 1.0;
  return v;
}

}  // namespace gksl
