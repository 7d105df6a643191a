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

#include <benchmark/benchmark.h>

#include "gksl/lattloss.hpp"
#include "gksl/liouvillian.hpp"

namespace {

gksl::LossModel loss_model(int sites, int order) {
  gksl::LossModel m;
  m.sites = sites;
  m.order = order;
  return m;
}

std::vector<int> half_filled(int sites) {
  std::vector<int> occ(static_cast<std::size_t>(sites), 0);
  for (int j = 0; j < sites; j += 2) occ[static_cast<std::size_t>(j)] = 1;
  return occ;
}

void BM_BuildSuperoperator(benchmark::State& state) {
  const auto model = gksl::build_loss_lindblad(loss_model(static_cast<int>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(gksl::build_superoperator(model));
}
BENCHMARK(BM_BuildSuperoperator)->DenseRange(2, 6, 2);

void BM_SteadyState(benchmark::State& state) {
  const auto model = gksl::build_loss_lindblad(loss_model(static_cast<int>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(gksl::steady_state(model));
}
BENCHMARK(BM_SteadyState)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_PropagateExact(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  const auto model = gksl::build_loss_lindblad(loss_model(sites, 2));
  const auto rho0 = gksl::occupation_state(half_filled(sites));
  for (auto _ : state) benchmark::DoNotOptimize(gksl::propagate(model, rho0, 1.0));
}
BENCHMARK(BM_PropagateExact)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_PropagateRk(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  const auto model = gksl::build_loss_lindblad(loss_model(sites, 2));
  const auto rho0 = gksl::occupation_state(half_filled(sites));
  gksl::PropagationOptions options;
  options.method = gksl::PropagationMethod::AdaptiveRk;
  for (auto _ : state) benchmark::DoNotOptimize(gksl::propagate(model, rho0, 1.0, options));
}
BENCHMARK(BM_PropagateRk)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Trajectories(benchmark::State& state) {
  const gksl::LindbladModel model(gksl::HermitianOperator(0.5 * gksl::pauli::z()),
                                  {gksl::pauli::lower(), std::sqrt(0.5) * gksl::pauli::raise()});
  gksl::CVector psi0 = gksl::CVector::Zero(2);
  psi0(1) = 1.0;
  gksl::TrajectoryOptions options;
  options.t_final = 5.0;
  options.dt = 1e-2;
  options.n_traj = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gksl::run_trajectories(model, psi0, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Trajectories)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
