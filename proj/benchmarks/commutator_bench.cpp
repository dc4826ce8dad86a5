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

#include "congforge/commutator.hpp"
#include "congforge/construction.hpp"
#include "congforge/fixtures.hpp"

namespace {

using namespace congforge;

void BM_ConLattice(benchmark::State& state, const char* name) {
  auto A = fixtures::algebra(name).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(con_lattice(A).lattice().size());
}
BENCHMARK_CAPTURE(BM_ConLattice, s3, "s3");
BENCHMARK_CAPTURE(BM_ConLattice, z3z3, "z3z3");
BENCHMARK_CAPTURE(BM_ConLattice, majority3, "majority3");

void BM_CommutatorTopTop(benchmark::State& state, const char* name) {
  auto A = fixtures::algebra(name).algebra;
  auto top = Congruence::top(A);
  for (auto _ : state) benchmark::DoNotOptimize(commutator(A, top, top));
}
BENCHMARK_CAPTURE(BM_CommutatorTopTop, s3, "s3");
BENCHMARK_CAPTURE(BM_CommutatorTopTop, z3z3, "z3z3");
BENCHMARK_CAPTURE(BM_CommutatorTopTop, semilattice2, "semilattice2");

void BM_TermMatrices(benchmark::State& state) {
  auto A = fixtures::symmetric_group3();
  auto top = Congruence::top(A);
  for (auto _ : state) benchmark::DoNotOptimize(term_matrices(A, top, top).size());
}
BENCHMARK(BM_TermMatrices);

void BM_EmbeddingConstruction(benchmark::State& state) {
  auto z2 = fixtures::cyclic_group(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_embedding_construction(z2, Congruence::top(z2), n).all_pass());
  }
}
BENCHMARK(BM_EmbeddingConstruction)->DenseRange(2, 4);

}  // namespace
