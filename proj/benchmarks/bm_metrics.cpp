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

#include <random>

#include "qnoise/metrics.hpp"

namespace {

using namespace qnoise;

Distribution random_distribution(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& x : w) sum += (x = u(rng));
  std::map<Outcome, double> probs;
  for (std::size_t i = 0; i < n; ++i) probs.emplace(i, w[i] / sum);
  return Distribution(std::move(probs));
}

void BM_Hellinger(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Distribution p = random_distribution(n, 1);
  const Distribution q = random_distribution(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hellinger(p, q));
}
BENCHMARK(BM_Hellinger)->Arg(16)->Arg(1024)->Arg(4096);

void BM_SampleShots(benchmark::State& state) {
  const Distribution p = random_distribution(64, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sample_shots(p, 100000, 7));
}
BENCHMARK(BM_SampleShots)->Unit(benchmark::kMillisecond);

}  // namespace
