// Copyright 2026 The seqspectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "seqspectra/dft.h"
#include "seqspectra/representation.h"
#include "seqspectra/spectrum.h"

namespace seqspectra {
namespace {

std::vector<double> RandomSignal(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = u(rng);
  return x;
}

SymbolicSequence RandomDna(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<int> sym(0, 3);
  std::vector<SymbolIndex> idx(n);
  for (auto& i : idx) i = static_cast<SymbolIndex>(sym(rng));
  return SymbolicSequence(Alphabet::Dna(), std::move(idx));
}

void BM_DftNaive(benchmark::State& state) {
  const auto x = RandomSignal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(DftNaive(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DftNaive)->Arg(256)->Arg(1236)->Arg(4096)->Complexity();

// Plan construction excluded; this is the per-channel cost.
void BM_FftPlanForward(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto x = RandomSignal(n);
  const FftPlan plan(n);
  for (auto _ : state) benchmark::DoNotOptimize(plan.Forward(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FftPlanForward)
    ->Arg(256)
    ->Arg(1024)
    ->Arg(1236)   // 2^2 * 3 * 103, Bluestein
    ->Arg(4096)
    ->Arg(4999)   // prime
    ->Arg(65536)
    ->Complexity();

void BM_FftPlanConstruct(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(FftPlan(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_FftPlanConstruct)->Arg(1236)->Arg(4096)->Arg(4999);

void BM_SpectrumBase(benchmark::State& state) {
  const IndicatorMatrix ind(RandomDna(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(SpectrumBase(ind));
}
BENCHMARK(BM_SpectrumBase)->Arg(1236)->Arg(100000);

void BM_SnrRatioZCurve(benchmark::State& state) {
  const IndicatorMatrix ind(RandomDna(static_cast<std::size_t>(state.range(0))));
  const RepresentationMatrix z = BuildZCurve();
  for (auto _ : state) benchmark::DoNotOptimize(CheckSnrRatio(ind, z));
}
BENCHMARK(BM_SnrRatioZCurve)->Arg(1236)->Arg(100000);

}  // namespace
}  // namespace seqspectra

BENCHMARK_MAIN();
