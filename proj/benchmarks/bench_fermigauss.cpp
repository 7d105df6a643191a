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

#include "gksl/fermigauss.hpp"

namespace {

void BM_LyapunovSteady(benchmark::State& state) {
  const auto model = gksl::boundary_chain(static_cast<int>(state.range(0)), 1.0, 0.9, 0.8, 0.3);
  const auto solver = state.range(1) == 0 ? gksl::LyapunovSolver::Vectorized : gksl::LyapunovSolver::Schur;
  for (auto _ : state) benchmark::DoNotOptimize(gksl::lyapunov_steady(model, solver));
}
BENCHMARK(BM_LyapunovSteady)
    ->ArgsProduct({{4, 8, 16, 32}, {0, 1}})
    ->ArgNames({"L", "schur"})
    ->Unit(benchmark::kMicrosecond);

void BM_EvolveCorrelations(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const auto model = gksl::boundary_chain(l, 1.0, 0.9, 0.8, 0.3);
  const gksl::CorrelationMatrix c0(gksl::CMatrix::Zero(l, l));
  for (auto _ : state) benchmark::DoNotOptimize(gksl::evolve_correlations(model, c0, 2.0));
}
BENCHMARK(BM_EvolveCorrelations)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

}  // namespace
