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
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gksl/liouvillian.hpp"

namespace gksl {
namespace {

struct TrajectoryOutcome {
  CVector psi;
  std::vector<std::uint64_t> jumps;
};

// Independent stream for each (seed, trajectory) pair, so the result does
// not depend on which worker runs which trajectory.
std::mt19937_64 trajectory_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

class Unraveling {
 public:
  Unraveling(const LindbladModel& model, double dt, int n_steps)
      : jumps_(model.jumps()), dt_(dt), n_steps_(n_steps) {
    const Index n = model.dim();
    drift_ = CMatrix::Identity(n, n) - kI * dt * effective_hamiltonian(model);
  }

  TrajectoryOutcome run(const CVector& psi0, std::mt19937_64& rng) const {
    TrajectoryOutcome out{psi0, std::vector<std::uint64_t>(jumps_.size(), 0)};
    std::vector<CVector> branches(jumps_.size());
    std::vector<double> probs(jumps_.size());
    for (int step = 0; step < n_steps_; ++step) {
      double total = 0.0;
      for (std::size_t j = 0; j < jumps_.size(); ++j) {
        branches[j] = jumps_[j] * out.psi;
        probs[j] = dt_ * branches[j].squaredNorm();
        total += probs[j];
      }
      const double r = uniform01(rng);
      if (r < total) {
        double acc = 0.0;
        std::size_t chosen = jumps_.size() - 1;
        for (std::size_t j = 0; j < jumps_.size(); ++j) {
          acc += probs[j];
          if (r < acc) {
            chosen = j;
            break;
          }
        }
        out.psi = branches[chosen] / branches[chosen].norm();
        ++out.jumps[chosen];
      } else {
        out.psi = drift_ * out.psi;
        out.psi /= out.psi.norm();
      }
    }
    return out;
  }

 private:
  const std::vector<CMatrix>& jumps_;
  CMatrix drift_;
  double dt_;
  int n_steps_;
};

}  // namespace

TrajectoryEnsembleResult run_trajectories(const LindbladModel& model, const CVector& psi0,
                                          const TrajectoryOptions& options) {
  const Index n = model.dim();
  if (psi0.size() != n) throw DimensionError("run_trajectories: state and model dims differ");
  if (std::abs(psi0.norm() - 1.0) > 1e-10) throw NumericError("run_trajectories: psi0 is not normalized");
  if (options.n_traj < 1) throw NumericError("run_trajectories: n_traj must be >= 1");
  if (!(options.dt > 0.0) || !(options.t_final >= 0.0) || !std::isfinite(options.t_final)) {
    throw NumericError("run_trajectories: need dt > 0 and finite t_final >= 0");
  }
  CMatrix rate = CMatrix::Zero(n, n);
  for (const CMatrix& l : model.jumps()) rate.noalias() += l.adjoint() * l;
  const double max_rate = model.jumps().empty() ? 0.0 : eigh(0.5 * (rate + rate.adjoint())).values.maxCoeff();
  if (options.dt * max_rate > 0.1) {
    throw NumericError("run_trajectories: dt * max_rate = " + std::to_string(options.dt * max_rate) +
                       " exceeds 0.1");
  }

  const int n_steps = static_cast<int>(std::ceil(options.t_final / options.dt - 1e-9));
  const double dt = n_steps > 0 ? options.t_final / n_steps : 0.0;
  const Unraveling unraveling(model, dt, n_steps);

  const auto n_traj = static_cast<std::size_t>(options.n_traj);
  std::vector<TrajectoryOutcome> outcomes(n_traj);
  const auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < n_traj; i += stride) {
      auto rng = trajectory_stream(options.seed, i);
      outcomes[i] = unraveling.run(psi0, rng);
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, options.threads));
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(worker, w, threads);
    for (std::thread& t : pool) t.join();
  }

  // Reduction in trajectory-index order.
  CMatrix mean = CMatrix::Zero(n, n);
  RVector pop_sum = RVector::Zero(n);
  RVector pop_sq = RVector::Zero(n);
  const std::size_t n_ch = model.jumps().size();
  std::vector<double> jump_sum(n_ch, 0.0), jump_sq(n_ch, 0.0);
  std::vector<std::uint64_t> jump_total(n_ch, 0);
  for (const TrajectoryOutcome& o : outcomes) {
    mean.noalias() += o.psi * o.psi.adjoint();
    const RVector pops = o.psi.cwiseAbs2();
    pop_sum += pops;
    pop_sq += pops.cwiseAbs2();
    for (std::size_t j = 0; j < n_ch; ++j) {
      const auto c = static_cast<double>(o.jumps[j]);
      jump_total[j] += o.jumps[j];
      jump_sum[j] += c;
      jump_sq[j] += c * c;
    }
  }
  const auto m = static_cast<double>(n_traj);
  mean /= m;
  mean = 0.5 * (mean + mean.adjoint()).eval();

  RVector std_err = RVector::Zero(n);
  if (n_traj > 1) {
    for (Index k = 0; k < n; ++k) {
      const double mu = pop_sum(k) / m;
      const double var = std::max(0.0, (pop_sq(k) - m * mu * mu) / (m - 1.0));
      std_err(k) = std::sqrt(var / m);
    }
  }
  std::vector<JumpStatistics> stats(n_ch);
  for (std::size_t j = 0; j < n_ch; ++j) {
    const double mu = jump_sum[j] / m;
    stats[j].total = jump_total[j];
    stats[j].mean_per_trajectory = mu;
    stats[j].variance_per_trajectory =
        n_traj > 1 ? std::max(0.0, (jump_sq[j] - m * mu * mu) / (m - 1.0)) : 0.0;
  }

  return TrajectoryEnsembleResult{options.n_traj, n_steps, dt,
                                  DensityMatrix(mean, kTrajectoryMeanTolerance),
                                  std::move(std_err), std::move(stats), options.seed};
}

}  // namespace gksl
