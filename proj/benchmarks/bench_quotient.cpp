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

#include <random>

#include "lefforge/family.hpp"
#include "lefforge/lefschetz.hpp"
#include "lefforge/linalg.hpp"
#include "lefforge/symmetric.hpp"

namespace {

using namespace lefforge;

// Generic parameters: dense ideal pieces with coefficient growth.
void BM_FamilyBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto inst = build_family(n, FamilyParams(3, -1, 2, 7));
    benchmark::DoNotOptimize(inst.quotient().dim(2));
  }
}
BENCHMARK(BM_FamilyBuild)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_MonomialBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto inst = build_family(n, FamilyParams(1, 0, 0, 0));
    benchmark::DoNotOptimize(inst.quotient().dim(2));
  }
}
BENCHMARK(BM_MonomialBuild)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_StrongLefschetz(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = build_family(n, FamilyParams(3, -1, 2, 7));
  const auto space = GradedSubspaceFamily::full(inst.quotient());
  const auto ell = elementary_symmetric(n, 1, all_variables(n));
  for (auto _ : state) benchmark::DoNotOptimize(is_strong_lefschetz(space, ell).strong);
}
BENCHMARK(BM_StrongLefschetz)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

// Random sparse integer rows, six entries each.
std::vector<SparseRow> random_rows(int rows, int columns, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9), col(0, columns - 1);
  std::vector<SparseRow> out;
  for (int r = 0; r < rows; ++r) {
    std::vector<Rational> dense(static_cast<std::size_t>(columns));
    for (int k = 0; k < 6; ++k) dense[static_cast<std::size_t>(col(rng))] = coeff(rng);
    SparseRow row;
    for (int j = 0; j < columns; ++j)
      if (!dense[static_cast<std::size_t>(j)].is_zero()) row.emplace_back(j, dense[static_cast<std::size_t>(j)]);
    out.push_back(std::move(row));
  }
  return out;
}

void BM_MultimodularRref(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const auto rows = random_rows(size, size + size / 4, 42);
  for (auto _ : state) benchmark::DoNotOptimize(multimodular_rref(rows, size + size / 4));
}
BENCHMARK(BM_MultimodularRref)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SparseRank(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const auto rows = random_rows(size, size + size / 4, 42);
  for (auto _ : state) benchmark::DoNotOptimize(sparse_rank(rows, size + size / 4));
}
BENCHMARK(BM_SparseRank)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
