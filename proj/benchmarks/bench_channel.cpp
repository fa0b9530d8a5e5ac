// Copyright 2026 The jcqubit Authors
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

#include <numbers>

#include <benchmark/benchmark.h>

#include "jcq/error_metrics.hpp"
#include "jcq/fock_field.hpp"
#include "jcq/jc_channel.hpp"

namespace {

using namespace jcq;

void BM_MakeCoherent(benchmark::State& state) {
  const double mean = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_coherent(mean, kRotationPhase));
  }
}

void BM_BuildKraus(benchmark::State& state) {
  const double mean = static_cast<double>(state.range(0));
  const FieldState field = make_coherent(mean, kRotationPhase);
  const PulseSpec pulse = PulseSpec::from_vartheta(std::numbers::pi / 4, mean);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_kraus(field, pulse));
  }
  state.counters["operators"] = static_cast<double>(field.size() + 2);
}

void BM_ApplyChannel(benchmark::State& state) {
  const double mean = static_cast<double>(state.range(0));
  const KrausSet kraus =
      build_kraus(make_coherent(mean, kRotationPhase),
                  PulseSpec::from_vartheta(std::numbers::pi / 4, mean));
  const QubitState rho = QubitState::pure(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_channel(rho, kraus));
  }
}

void BM_ClosedFormPlus(benchmark::State& state) {
  const double mean = static_cast<double>(state.range(0));
  const FieldState field = make_coherent(mean, kRotationPhase);
  const PulseSpec pulse = PulseSpec::from_vartheta(std::numbers::pi / 4, mean);
  for (auto _ : state) {
    benchmark::DoNotOptimize(p_plus(field, pulse));
  }
}

}  // namespace

BENCHMARK(BM_MakeCoherent)->RangeMultiplier(10)->Range(10, 1000000);
BENCHMARK(BM_BuildKraus)->RangeMultiplier(10)->Range(10, 1000000);
BENCHMARK(BM_ApplyChannel)->RangeMultiplier(10)->Range(10, 1000000);
BENCHMARK(BM_ClosedFormPlus)->RangeMultiplier(10)->Range(10, 1000000);

BENCHMARK_MAIN();
