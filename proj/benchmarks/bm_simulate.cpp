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

#include "qnoise/noise_model.hpp"
#include "qnoise/walks.hpp"

namespace {

using namespace qnoise;

void BM_SimulateWalk(benchmark::State& state, ModelVariant variant) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Circuit c = step_circuit({n, 1, 0});
  const Architecture arch = Architecture::linear(c.n_qubits());
  const NoiseModel model = build_model(uniform_calibration(arch), arch, variant);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_exact(c, model));
  state.counters["qubits"] = static_cast<double>(c.n_qubits());
  state.counters["gates"] = static_cast<double>(c.gates().size());
}

BENCHMARK_CAPTURE(BM_SimulateWalk, unm, ModelVariant::UNM)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SimulateWalk, ideal, ModelVariant::IDEAL)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_StepCircuit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(step_circuit({n, 1, 0}));
}
BENCHMARK(BM_StepCircuit)->Arg(4)->Arg(64);

}  // namespace
