// Copyright 2026 The LefForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "lefforge/family.hpp"
#include "lefforge/symmetric.hpp"
#include "lefforge/symmetry.hpp"

namespace {

using namespace lefforge;

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CharacterTable(n).irreps().size());
}
BENCHMARK(BM_CharacterTable)->DenseRange(4, 10, 2);

void BM_IsotypicMultiplicities(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = build_family(n, FamilyParams(3, -1, 2, 7));
  const auto& q = inst.quotient();
  for (auto _ : state)
    for (int d = 0; d <= n; ++d) benchmark::DoNotOptimize(isotypic_multiplicities(q, d));
}
BENCHMARK(BM_IsotypicMultiplicities)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_SpechtBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_span_rank(specht_basis(n)));
}
BENCHMARK(BM_SpechtBasis)->DenseRange(4, 8, 2);

}  // namespace
