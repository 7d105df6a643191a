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

// Matrix exponential. Normal inputs (Hermitian, anti-Hermitian, unitary) are
// diagonalized by a complex Schur decomposition, whose triangular factor is
// diagonal for a normal matrix. Everything else, notably Liouvillians, goes
// through the degree 3..13 Pade scaling-and-squaring scheme of Higham (2005).

#include <algorithm>
#include <array>
#include <type_traits>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "gksl/opcore.hpp"

namespace gksl {
namespace {

double one_norm(const CMatrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

template <std::size_t N>
void pade_terms(const CMatrix& a, const std::array<double, N>& b, CMatrix& u, CMatrix& v) {
  // Degrees 3..9: U = A * sum_k b_{2k+1} A^{2k}, V = sum_k b_{2k} A^{2k}.
  const Index n = a.rows();
  const CMatrix ident = CMatrix::Identity(n, n);
  const CMatrix a2 = a * a;
  CMatrix power = ident;
  CMatrix odd = CMatrix::Zero(n, n);
  CMatrix even = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k + 1 < N; k += 2) {
    even += b[k] * power;
    odd += b[k + 1] * power;
    power = power * a2;
  }
  u.noalias() = a * odd;
  v = even;
}

void pade13_terms(const CMatrix& a, CMatrix& u, CMatrix& v) {
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};
  const Index n = a.rows();
  const CMatrix ident = CMatrix::Identity(n, n);
  const CMatrix a2 = a * a;
  const CMatrix a4 = a2 * a2;
  const CMatrix a6 = a4 * a2;
  const CMatrix inner_u = b[13] * a6 + b[11] * a4 + b[9] * a2;
  const CMatrix tmp_u = a6 * inner_u + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident;
  u.noalias() = a * tmp_u;
  const CMatrix inner_v = b[12] * a6 + b[10] * a4 + b[8] * a2;
  v = a6 * inner_v + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
}

CMatrix pade_scaling_squaring(const CMatrix& m) {
  static constexpr std::array<double, 3> b3 = {120.0, 60.0, 12.0};
  static constexpr std::array<double, 5> b5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0};
  static constexpr std::array<double, 7> b7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                               25200.0,    1512.0,    56.0};
  static constexpr std::array<double, 9> b9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                               302702400.0,   30270240.0,   2162160.0,
                                               110880.0,      3960.0,       90.0};
  // Leading coefficient 1 is appended below so the loops stay uniform.
  const Index n = m.rows();
  const double norm = one_norm(m);
  CMatrix u(n, n);
  CMatrix v(n, n);
  int squarings = 0;

  auto with_unit = [](const auto& coeffs) {
    std::array<double, std::tuple_size_v<std::decay_t<decltype(coeffs)>> + 1> out{};
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i];
    out.back() = 1.0;
    return out;
  };

  if (norm <= 1.495585217958292e-2) {
    pade_terms(m, with_unit(b3), u, v);
  } else if (norm <= 2.539398330063230e-1) {
    pade_terms(m, with_unit(b5), u, v);
  } else if (norm <= 9.504178996162932e-1) {
    pade_terms(m, with_unit(b7), u, v);
  } else if (norm <= 2.097847961257068e0) {
    pade_terms(m, with_unit(b9), u, v);
  } else {
    constexpr double theta13 = 5.371920351148152e0;
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
    const CMatrix scaled = m / std::ldexp(1.0, squarings);
    pade13_terms(scaled, u, v);
  }
  CMatrix result = (v - u).partialPivLu().solve(v + u);
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace

CMatrix matrix_exp_pade(const CMatrix& m) {
  require_square(m, "matrix_exp");
  require_finite(m, "matrix_exp");
  return pade_scaling_squaring(m);
}

CMatrix matrix_exp(const CMatrix& m, double t) {
  require_square(m, "matrix_exp");
  require_finite(m, "matrix_exp");
  if (!std::isfinite(t)) throw NumericError("matrix_exp: non-finite time");
  const CMatrix scaled = t * m;
  if (scaled.isZero(0.0)) return CMatrix::Identity(m.rows(), m.cols());
  if (is_normal(scaled)) {
    Eigen::ComplexSchur<CMatrix> schur(scaled);
    if (schur.info() == Eigen::Success) {
      const CMatrix& q = schur.matrixU();
      const CVector d = schur.matrixT().diagonal().array().exp();
      CMatrix out = q * d.asDiagonal() * q.adjoint();
      if (out.allFinite()) return out;
    }
  }
  CMatrix out = pade_scaling_squaring(scaled);
  if (!out.allFinite()) throw NumericError("matrix_exp: result overflowed");
  return out;
}

}  // namespace gksl
