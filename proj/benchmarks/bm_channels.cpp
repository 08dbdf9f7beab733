// Copyright 2026 The qnoise Authors
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

#include "qnoise/channels.hpp"

namespace {

using namespace qnoise;

void BM_ThermalResetBranch(benchmark::State& state) {
  const ThermalParams tp{56.15, 56.01, 100.0, 0.015, 4.9801e9};
  for (auto _ : state) benchmark::DoNotOptimize(thermal_channel(tp));
}
BENCHMARK(BM_ThermalResetBranch);

void BM_ThermalChoiBranch(benchmark::State& state) {
  const ThermalParams tp{50.0, 80.0, 300.0, 0.015, 5e9};
  for (auto _ : state) benchmark::DoNotOptimize(thermal_channel(tp));
}
BENCHMARK(BM_ThermalChoiBranch);

void BM_Depolarizing(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(depolarizing_channel(1.168e-3));
}
BENCHMARK(BM_Depolarizing);

}  // namespace
