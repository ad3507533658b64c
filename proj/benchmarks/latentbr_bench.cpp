// Copyright 2026 The latentbr Authors
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

#include "latentbr/conformance.hpp"
#include "latentbr/operators.hpp"

namespace {

using namespace latentbr;

ScenarioInstance Instance(int atoms) {
  Bounds bounds;
  bounds.atoms = atoms;
  return Generate(7, bounds);
}

void BM_Close(benchmark::State& state) {
  const ScenarioInstance inst = Instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BeliefSet::Close(inst.interp, inst.base));
  }
}
BENCHMARK(BM_Close)->DenseRange(3, 6);

void BM_RemaindersEnumerate(benchmark::State& state) {
  const ScenarioInstance inst = Instance(static_cast<int>(state.range(0)));
  const BeliefSet bs = BeliefSet::Close(inst.interp, inst.base);
  const std::vector<Formula> v = Visible(bs, inst.info);
  for (auto _ : state) benchmark::DoNotOptimize(Remainders(bs, v));
}
BENCHMARK(BM_RemaindersEnumerate)->DenseRange(3, 5);

void BM_RemaindersSearch(benchmark::State& state) {
  const ScenarioInstance inst = Instance(static_cast<int>(state.range(0)));
  const BeliefSet bs = BeliefSet::Close(inst.interp, inst.base);
  const std::vector<Formula> v = Visible(bs, inst.info);
  for (auto _ : state) benchmark::DoNotOptimize(SearchRemainders(bs, v));
}
BENCHMARK(BM_RemaindersSearch)->DenseRange(3, 5);

void BM_Revise(benchmark::State& state) {
  const ScenarioInstance inst = Instance(static_cast<int>(state.range(0)));
  const BeliefSet bs = BeliefSet::Close(inst.interp, inst.base);
  for (auto _ : state) benchmark::DoNotOptimize(Revise(bs, inst.info, Selection::All()));
}
BENCHMARK(BM_Revise)->DenseRange(3, 5);

void BM_CheckAll(benchmark::State& state) {
  const ScenarioInstance inst = Instance(4);
  for (auto _ : state) benchmark::DoNotOptimize(CheckAll(inst));
}
BENCHMARK(BM_CheckAll);

}  // namespace

BENCHMARK_MAIN();
