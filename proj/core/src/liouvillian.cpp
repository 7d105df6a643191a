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

#include "gksl/liouvillian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace gksl {
namespace {

CMatrix jump_rate_operator(const LindbladModel& model) {
  CMatrix sum = CMatrix::Zero(model.dim(), model.dim());
  for (const CMatrix& l : model.jumps()) sum.noalias() += l.adjoint() * l;
  return sum;
}

void require_dim(const CMatrix& m, Index dim, std::string_view what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(dim) + "x" +
                         std::to_string(dim) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

// out += coeff * (a kron b)
void add_kron(CMatrix& out, const CMatrix& a, const CMatrix& b, Complex coeff) {
  const Index na = a.rows();
  const Index nb = b.rows();
  for (Index j = 0; j < na; ++j) {
    for (Index i = 0; i < na; ++i) {
      const Complex c = coeff * a(i, j);
      if (c == Complex(0.0)) continue;
      out.block(i * nb, j * nb, nb, nb) += c * b;
    }
  }
}

}  // namespace

LindbladModel::LindbladModel(HermitianOperator hamiltonian, std::vector<CMatrix> jumps)
    : hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)) {
  for (const CMatrix& l : jumps_) {
    require_dim(l, hamiltonian_.dim(), "LindbladModel jump operator");
    require_finite(l, "LindbladModel jump operator");
  }
}

CMatrix apply_generator(const LindbladModel& model, const CMatrix& rho) {
  require_dim(rho, model.dim(), "apply_generator");
  const CMatrix heff = effective_hamiltonian(model);
  CMatrix out = -kI * (heff * rho - rho * heff.adjoint());
  for (const CMatrix& l : model.jumps()) out.noalias() += l * rho * l.adjoint();
  return out;
}

CMatrix dual_generator(const LindbladModel& model, const CMatrix& x) {
  require_dim(x, model.dim(), "dual_generator");
  const CMatrix& h = model.hamiltonian().matrix();
  CMatrix out = kI * commutator(h, x);
  const CMatrix rate = jump_rate_operator(model);
  out -= 0.5 * anticommutator(rate, x);
  for (const CMatrix& l : model.jumps()) out.noalias() += l.adjoint() * x * l;
  return out;
}

CMatrix effective_hamiltonian(const LindbladModel& model) {
  return model.hamiltonian().matrix() - 0.5 * kI * jump_rate_operator(model);
}

LindbladModel gauge_transform(const LindbladModel& model, std::span<const Complex> shifts,
                              double energy_shift) {
  if (shifts.size() != model.jumps().size()) {
    throw DimensionError("gauge_transform: " + std::to_string(shifts.size()) + " shifts for " +
                         std::to_string(model.jumps().size()) + " jump operators");
  }
  const Index n = model.dim();
  const CMatrix ident = CMatrix::Identity(n, n);
  CMatrix h = model.hamiltonian().matrix() + energy_shift * ident;
  std::vector<CMatrix> jumps;
  jumps.reserve(model.jumps().size());
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    const CMatrix& l = model.jumps()[j];
    const Complex a = shifts[j];
    h += (std::conj(a) * l - a * l.adjoint()) / (2.0 * kI);
    jumps.push_back(l + a * ident);
  }
  return LindbladModel(HermitianOperator(h), std::move(jumps));
}

Superoperator::Superoperator(Index system_dim, CMatrix matrix)
    : system_dim_(system_dim), matrix_(std::move(matrix)) {
  if (matrix_.rows() != system_dim_ * system_dim_ || matrix_.cols() != matrix_.rows()) {
    throw DimensionError("Superoperator: matrix is not N^2 x N^2");
  }
}

CMatrix Superoperator::apply(const CMatrix& rho) const {
  require_dim(rho, system_dim_, "Superoperator::apply");
  return unvec(matrix_ * vec(rho), system_dim_);
}

double Superoperator::trace_preservation_defect() const {
  const CVector id = vec(CMatrix::Identity(system_dim_, system_dim_));
  return (id.adjoint() * matrix_).cwiseAbs().maxCoeff();
}

Superoperator build_superoperator(const LindbladModel& model, Index max_system_dim) {
  const Index n = model.dim();
  if (n > max_system_dim) {
    throw DimensionError("build_superoperator: system dim " + std::to_string(n) +
                         " exceeds limit " + std::to_string(max_system_dim));
  }
  const CMatrix ident = CMatrix::Identity(n, n);
  const CMatrix heff = effective_hamiltonian(model);
  CMatrix s = CMatrix::Zero(n * n, n * n);
  // -i H_eff rho + i rho H_eff^dagger
  add_kron(s, ident, heff, -kI);
  add_kron(s, heff.conjugate(), ident, kI);
  for (const CMatrix& l : model.jumps()) add_kron(s, l.conjugate(), l, 1.0);
  return Superoperator(n, std::move(s));
}

CommutantResult commutant_uniqueness_test(const LindbladModel& model, std::optional<double> tol) {
  const Index n = model.dim();
  if (n > kDefaultMaxSuperoperatorSystemDim) {
    throw DimensionError("commutant_uniqueness_test: system dim too large");
  }
  const double rel_tol = tol.value_or(1e-9);
  const Index n2 = n * n;
  const CMatrix ident = CMatrix::Identity(n, n);

  std::vector<CMatrix> generators;
  generators.push_back(model.hamiltonian().matrix());
  for (const CMatrix& l : model.jumps()) {
    generators.push_back(l);
    generators.push_back(l.adjoint());
  }

  // Accumulate the triangular factor of the stacked system [G^T (x) I - I (x) G]
  // so the full stack is never held in memory.
  CMatrix r = CMatrix::Zero(0, n2);
  for (const CMatrix& g : generators) {
    CMatrix block = CMatrix::Zero(n2, n2);
    add_kron(block, g.transpose(), ident, 1.0);
    add_kron(block, ident, g, -1.0);
    CMatrix stacked(r.rows() + n2, n2);
    stacked << r, block;
    Eigen::HouseholderQR<CMatrix> qr(stacked);
    r = qr.matrixQR().topRows(std::min(stacked.rows(), n2)).triangularView<Eigen::Upper>();
  }

  Eigen::BDCSVD<CMatrix> svd(r, Eigen::ComputeFullV);
  const RVector& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cutoff = rel_tol * std::max(smax, 1e-300);
  // Singular values come sorted in decreasing order; r may have fewer rows than n2.
  Index rank = 0;
  for (Index k = 0; k < sv.size(); ++k)
    if (sv(k) > cutoff) ++rank;
  CommutantResult result;
  result.dimension = n2 - rank;
  result.irreducible = result.dimension <= 1;
  if (result.irreducible) return result;

  const CMatrix& v = svd.matrixV();
  CMatrix best;
  double best_norm = -1.0;
  for (Index k = rank; k < n2; ++k) {
    CMatrix a = unvec(v.col(k), n);
    a -= (a.trace() / static_cast<double>(n)) * ident;
    const CMatrix herm_re = a + a.adjoint();
    const CMatrix herm_im = kI * (a - a.adjoint());
    for (const CMatrix* cand : {&herm_re, &herm_im}) {
      const double norm = cand->norm();
      if (norm > best_norm) {
        best_norm = norm;
        best = *cand;
      }
    }
  }
  result.witness = best / best_norm;
  return result;
}

KrausMap::KrausMap(std::vector<CMatrix> generators, double tol) : generators_(std::move(generators)) {
  if (generators_.empty()) throw MapError("KrausMap: no generators");
  const Index n = generators_.front().rows();
  for (const CMatrix& k : generators_) {
    require_dim(k, n, "KrausMap generator");
    require_finite(k, "KrausMap generator");
  }
  const double defect = completeness_defect();
  if (defect > tol) {
    throw MapError("KrausMap: completeness defect " + std::to_string(defect) + " exceeds " +
                   std::to_string(tol));
  }
}

double KrausMap::completeness_defect() const {
  const Index n = dim();
  CMatrix sum = -CMatrix::Identity(n, n);
  for (const CMatrix& k : generators_) sum.noalias() += k.adjoint() * k;
  return max_abs(sum);
}

CMatrix apply_kraus(const KrausMap& map, const CMatrix& rho) {
  require_dim(rho, map.dim(), "apply_kraus");
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (const CMatrix& k : map.generators()) out.noalias() += k * rho * k.adjoint();
  return out;
}

DensityMatrix apply_kraus(const KrausMap& map, const DensityMatrix& rho) {
  return DensityMatrix(apply_kraus(map, rho.matrix()), kPropagatedStateTolerance);
}

CMatrix apply_dual_kraus(const KrausMap& map, const CMatrix& a) {
  require_dim(a, map.dim(), "apply_dual_kraus");
  CMatrix out = CMatrix::Zero(a.rows(), a.cols());
  for (const CMatrix& k : map.generators()) out.noalias() += k.adjoint() * a * k;
  return out;
}

std::vector<CMatrix> first_order_kraus(const LindbladModel& model, double dt) {
  if (!(dt > 0.0)) throw NumericError("first_order_kraus: dt must be positive");
  const Index n = model.dim();
  std::vector<CMatrix> ops;
  ops.push_back(CMatrix::Identity(n, n) - kI * dt * effective_hamiltonian(model));
  for (const CMatrix& l : model.jumps()) ops.push_back(std::sqrt(dt) * l);
  return ops;
}

}  // namespace gksl
