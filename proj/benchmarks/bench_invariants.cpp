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
#include "lefforge/invariants.hpp"

namespace {

using namespace lefforge;

GradedQuotient cubes() {
  std::vector<Polynomial> gs;
  for (int i = 0; i < 6; ++i) gs.push_back(Polynomial::variable(6, i).pow(3));
  const GradedIdealPresentation pres(6, gs);
  return GradedQuotient::build(pres, pres.ci_socle_degree() + 1);
}

void BM_CubesBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cubes().dim(6));
}
BENCHMARK(BM_CubesBuild)->Unit(benchmark::kMillisecond);

void BM_CubesInvariantSlice(benchmark::State& state) {
  const auto q = cubes();
  const YoungSubgroup g({3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(invariant_slice(q, g).dim(6));
}
BENCHMARK(BM_CubesInvariantSlice)->Unit(benchmark::kMillisecond);

void BM_CubesMinimalGenerators(benchmark::State& state) {
  const auto q = cubes();
  const YoungSubgroup g({3, 3});
  const auto slice = invariant_slice(q, g);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_generator_degrees(q, slice));
}
BENCHMARK(BM_CubesMinimalGenerators)->Unit(benchmark::kMillisecond);

void BM_IntersectionEquality(benchmark::State& state) {
  const auto p = FamilyParams(5, 2, 0, 2);
  const YoungSubgroup g({2, 3});
  const auto inst = build_family(5, p);
  const auto gens = vandermonde_generators(inst.generators(), g);
  for (auto _ : state) benchmark::DoNotOptimize(ideal_intersection_equality(inst.quotient(), g, gens, 12).equal);
}
BENCHMARK(BM_IntersectionEquality)->Unit(benchmark::kMillisecond);

void BM_ClassifyPoint(benchmark::State& state) {
  const YoungSubgroup g({2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(classify_point(5, g, FamilyParams(7, 7, 3, 8)).cls);
}
BENCHMARK(BM_ClassifyPoint)->Unit(benchmark::kMillisecond);

}  // namespace
