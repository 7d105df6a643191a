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

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Sparse>
#include <boost/numeric/odeint.hpp>

#include "gksl/liouvillian.hpp"

namespace gksl {
namespace {

namespace odeint = boost::numeric::odeint;
using State = std::vector<double>;

// Real view of a complex N x N matrix: 2 N^2 doubles, column-major, re/im interleaved.
Eigen::Map<CMatrix> as_matrix(State& x, Index n) {
  return Eigen::Map<CMatrix>(reinterpret_cast<Complex*>(x.data()), n, n);
}
Eigen::Map<const CMatrix> as_matrix(const State& x, Index n) {
  return Eigen::Map<const CMatrix>(reinterpret_cast<const Complex*>(x.data()), n, n);
}

using SparseC = Eigen::SparseMatrix<Complex>;

// Operators with at most a quarter of their entries non-zero are applied in
// sparse form; lattice models are dominated by such operators.
struct Operand {
  explicit Operand(const CMatrix& m) {
    const Index nnz = (m.array() != Complex(0.0)).count();
    sparse = 4 * nnz <= m.size();
    if (sparse) {
      s = m.sparseView();
      s_adj = SparseC(m.adjoint().sparseView());
    } else {
      d = m;
      d_adj = m.adjoint();
    }
  }
  bool sparse = false;
  CMatrix d, d_adj;
  SparseC s, s_adj;
};

class GeneratorRhs {
 public:
  explicit GeneratorRhs(const LindbladModel& model)
      : n_(model.dim()), heff_(-kI * effective_hamiltonian(model)), tmp_(n_, n_) {
    for (const CMatrix& l : model.jumps()) jumps_.emplace_back(l);
  }

  void operator()(const State& x, State& dxdt, double /*t*/) {
    const auto rho = as_matrix(x, n_);
    auto out = as_matrix(dxdt, n_);
    // -i H_eff rho + (-i H_eff rho)^dagger, using rho = rho^dagger.
    if (heff_.sparse) {
      tmp_.noalias() = heff_.s * rho;
    } else {
      tmp_.noalias() = heff_.d * rho;
    }
    out = tmp_ + tmp_.adjoint();
    for (const Operand& l : jumps_) {
      if (l.sparse) {
        tmp_.noalias() = rho * l.s_adj;
        out.noalias() += l.s * tmp_;
      } else {
        tmp_.noalias() = rho * l.d_adj;
        out.noalias() += l.d * tmp_;
      }
    }
  }

 private:
  Index n_;
  Operand heff_;
  std::vector<Operand> jumps_;
  CMatrix tmp_;
};

void symmetrize(State& x, Index n) {
  auto rho = as_matrix(x, n);
  const CMatrix sym = 0.5 * (rho + rho.adjoint());
  rho = sym;
}

CMatrix integrate_rk(GeneratorRhs& rhs, const CMatrix& rho0, double t_total,
                     const PropagationOptions& options) {
  const Index n = rho0.rows();
  State x(static_cast<std::size_t>(2 * n * n));
  as_matrix(x, n) = rho0;
  if (t_total == 0.0) return rho0;

  auto stepper = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(options.abs_tol,
                                                                          options.rel_tol);
  const double min_step = 1e-14 * std::max(1.0, t_total);
  double t = 0.0;
  double dt = std::min(t_total, 1e-3);
  constexpr long kMaxAttempts = 50'000'000;
  for (long attempt = 0; t < t_total; ++attempt) {
    if (attempt >= kMaxAttempts) throw IntegrationError("adaptive_rk: step budget exhausted");
    const bool last = t + dt >= t_total;
    if (last) dt = t_total - t;
    const double t_before = t;
    if (stepper.try_step(std::ref(rhs), x, t, dt) == odeint::success) {
      symmetrize(x, n);
      if (last) t = t_total;
    } else if (dt < min_step) {
      throw IntegrationError("adaptive_rk: step size underflow at t = " + std::to_string(t_before));
    }
  }
  return as_matrix(x, n);
}

void require_time(double t, std::string_view what) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw NumericError(std::string(what) + ": time must be finite and non-negative");
  }
}

CMatrix finish(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

DensityMatrix propagate(const LindbladModel& model, const DensityMatrix& rho0, double t,
                        const PropagationOptions& options) {
  const double times[] = {t};
  return propagate_series(model, rho0, times, options).front();
}

std::vector<DensityMatrix> propagate_series(const LindbladModel& model, const DensityMatrix& rho0,
                                            std::span<const double> times,
                                            const PropagationOptions& options) {
  if (rho0.dim() != model.dim()) throw DimensionError("propagate: state and model dims differ");
  double prev = 0.0;
  for (double t : times) {
    require_time(t, "propagate");
    if (t < prev) throw NumericError("propagate_series: times must be ascending");
    prev = t;
  }

  std::vector<DensityMatrix> out;
  out.reserve(times.size());
  CMatrix rho = rho0.matrix();
  double t_now = 0.0;

  if (options.method == PropagationMethod::ExactExp) {
    const Superoperator s = build_superoperator(model);
    const Index n = model.dim();
    CMatrix step;
    double step_dt = -1.0;
    for (double t : times) {
      const double dt = t - t_now;
      if (dt > 0.0) {
        if (dt != step_dt) {
          step = matrix_exp(s.matrix(), dt);
          step_dt = dt;
        }
        rho = finish(unvec(step * vec(rho), n));
      }
      t_now = t;
      out.emplace_back(rho, kPropagatedStateTolerance);
    }
    return out;
  }

  GeneratorRhs rhs(model);
  for (double t : times) {
    rho = finish(integrate_rk(rhs, rho, t - t_now, options));
    t_now = t;
    out.emplace_back(rho, kPropagatedStateTolerance);
  }
  return out;
}

}  // namespace gksl
