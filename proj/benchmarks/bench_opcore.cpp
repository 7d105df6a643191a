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

#include <random>

#include <benchmark/benchmark.h>

#include "gksl/opcore.hpp"

namespace {

gksl::CMatrix random_matrix(gksl::Index n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  gksl::CMatrix m(n, n);
  for (gksl::Index i = 0; i < n; ++i)
    for (gksl::Index j = 0; j < n; ++j) m(i, j) = {d(rng), d(rng)};
  return m / std::sqrt(static_cast<double>(n));
}

void BM_MatrixExpPade(benchmark::State& state) {
  const gksl::CMatrix m = random_matrix(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(gksl::matrix_exp_pade(m));
}
BENCHMARK(BM_MatrixExpPade)->RangeMultiplier(2)->Range(4, 256);

void BM_MatrixExpHermitian(benchmark::State& state) {
  const gksl::CMatrix a = random_matrix(state.range(0), 2);
  const gksl::CMatrix h = gksl::kI * (a + a.adjoint());
  for (auto _ : state) benchmark::DoNotOptimize(gksl::matrix_exp(h));
}
BENCHMARK(BM_MatrixExpHermitian)->RangeMultiplier(2)->Range(4, 256);

void BM_Tensor(benchmark::State& state) {
  const gksl::CMatrix a = random_matrix(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gksl::tensor(a, a));
}
BENCHMARK(BM_Tensor)->RangeMultiplier(2)->Range(2, 32);

}  // namespace
