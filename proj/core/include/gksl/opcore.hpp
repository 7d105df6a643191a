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

// Dense complex operator algebra shared by every engine in the library.
//
// Conventions used throughout:
//  * hbar = 1; all energies and rates share one arbitrary unit.
//  * Single qubit / fermion mode basis is {|0>, |1>} with |1> the occupied
//    (excited) state: sigma^- = |0><1| = [[0,1],[0,0]], sigma^z = diag(1,-1).
//  * Multi-site operators are ordered with site 1 as the most significant
//    tensor factor.
//  * Superoperators act on column-stacked matrices: vec(A X B) = (B^T kron A) vec(X).

#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gksl/errors.hpp"

namespace gksl {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// Largest dimension tensor() will produce unless told otherwise.
inline constexpr Index kDefaultMaxTensorDim = Index{1} << 14;

// Throws DimensionError unless m is square with dim >= 1.
void require_square(const CMatrix& m, std::string_view what);
// Throws NumericError if any entry is NaN or infinite.
void require_finite(const CMatrix& m, std::string_view what);

double max_abs(const CMatrix& m);
// max |M - M^dagger| over entries.
double hermiticity_defect(const CMatrix& m);
bool is_normal(const CMatrix& m, double rel_tol = 1e-12);

CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

// Column stacking and its inverse.
CVector vec(const CMatrix& m);
CMatrix unvec(const CVector& v, Index dim);

// A matrix that is Hermitian within 1e-12 relative to its largest entry.
// Construction stores the symmetrized (M + M^dagger) / 2.
class HermitianOperator {
 public:
  static constexpr double kRelativeTolerance = 1e-12;

  explicit HermitianOperator(const CMatrix& m);
  static HermitianOperator zero(Index dim);
  static HermitianOperator identity(Index dim);

  const CMatrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

 private:
  CMatrix m_;
};

struct DensityTolerance {
  double hermiticity = 1e-12;
  double trace = 1e-10;
  double positivity = 1e-10;
};

// A Hermitian, unit-trace, positive semidefinite matrix (each within the
// tolerances given at construction).
class DensityMatrix {
 public:
  explicit DensityMatrix(const CMatrix& m, DensityTolerance tol = {});

  static DensityMatrix pure(const CVector& psi);
  static DensityMatrix basis_state(Index dim, Index k);
  static DensityMatrix maximally_mixed(Index dim);

  const CMatrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }
  double min_eigenvalue() const;
  // Real part of <k|rho|k>.
  double population(Index k) const { return m_(k, k).real(); }

 private:
  CMatrix m_;
};

struct HermitianEigen {
  RVector values;  // ascending
  CMatrix vectors; // columns
};

struct GeneralEigen {
  CVector values;
  CMatrix vectors;
};

HermitianEigen eigh(const CMatrix& m);
inline HermitianEigen eigh(const HermitianOperator& h) { return eigh(h.matrix()); }
GeneralEigen eig(const CMatrix& m);
CVector eigenvalues(const CMatrix& m);

// Kronecker product. Throws DimensionError if dim_a * dim_b > max_dim.
CMatrix tensor(const CMatrix& a, const CMatrix& b, Index max_dim = kDefaultMaxTensorDim);
CMatrix tensor(std::initializer_list<CMatrix> factors, Index max_dim = kDefaultMaxTensorDim);

enum class Subsystem { A, B };

// Partial trace over the factor that is not `keep`, for m acting on A (x) B.
CMatrix partial_trace(const CMatrix& m, Index dim_a, Index dim_b, Subsystem keep);

// e^{tM}. Normal matrices go through a Schur (unitary) diagonalization,
// everything else through Pade scaling-and-squaring.
CMatrix matrix_exp(const CMatrix& m, double t = 1.0);
// Always uses scaling-and-squaring; exposed for cross-checking.
CMatrix matrix_exp_pade(const CMatrix& m);

// Trace distance 1/2 ||a - b||_1 for Hermitian a, b.
double trace_distance(const CMatrix& a, const CMatrix& b);

namespace pauli {
CMatrix identity(Index dim = 2);
CMatrix x();
CMatrix y();
CMatrix z();
CMatrix lower();  // |0><1|
CMatrix raise();  // |1><0|
CMatrix number(); // |1><1|
}  // namespace pauli

// op acting on site `site` (1-based) of an n-site chain of qubits.
CMatrix site_operator(const CMatrix& op, int site, int n_sites);
// Product of two single-site operators on distinct sites.
CMatrix two_site_operator(const CMatrix& op_a, int site_a, const CMatrix& op_b, int site_b,
                          int n_sites);

// Jordan-Wigner annihilator c_j = (prod_{l<j} sigma^z_l) sigma^-_j on 2^L
// dimensions; j is 1-based.
CMatrix jordan_wigner_lowering(int n_modes, int j);

// |b_1 ... b_L> with site 1 the most significant bit.
CVector basis_vector(std::span<const int> occupations);

}  // namespace gksl
