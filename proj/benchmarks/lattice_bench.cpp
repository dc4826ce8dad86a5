//  Copyright 2026 The congforge Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <benchmark/benchmark.h>

#include "congforge/fixtures.hpp"
#include "congforge/partition.hpp"
#include "congforge/search.hpp"
#include "congforge/subspace.hpp"

namespace {

using namespace congforge;

void BM_PartitionLattice(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(full_partition_lattice(n).lattice().size());
}
BENCHMARK(BM_PartitionLattice)->DenseRange(4, 6);

void BM_SubspaceLattice(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subspace_lattice(d, 2).lattice().size());
}
BENCHMARK(BM_SubspaceLattice)->DenseRange(2, 4);

void BM_IsModular(benchmark::State& state) {
  auto pi = full_partition_lattice(5);
  for (auto _ : state) benchmark::DoNotOptimize(is_modular(pi.lattice()).modular);
}
BENCHMARK(BM_IsModular);

void BM_KInfinitySnake(benchmark::State& state) {
  auto L = fixtures::snake();
  for (auto _ : state) benchmark::DoNotOptimize(k_infinity_member(L).member);
}
BENCHMARK(BM_KInfinitySnake);

void BM_FindSublatticeM3InPi5(benchmark::State& state) {
  auto m3 = fixtures::m3();
  auto pi = full_partition_lattice(5);
  for (auto _ : state) benchmark::DoNotOptimize(find_sublattice(pi.lattice(), m3).has_value());
}
BENCHMARK(BM_FindSublatticeM3InPi5);

void BM_SurjectionsOntoM3(benchmark::State& state) {
  auto L = fixtures::m3_times_2();
  auto m3 = fixtures::m3();
  for (auto _ : state) benchmark::DoNotOptimize(find_surjections(L, m3).size());
}
BENCHMARK(BM_SurjectionsOntoM3);

}  // namespace
