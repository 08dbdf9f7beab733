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

#include "qnoise/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace qnoise {
namespace {

// Calls f(p_i, q_i) for every outcome in the union of supports, in outcome
// order, so the accumulation order does not depend on argument order.
template <typename F>
void for_union(const Distribution& p, const Distribution& q, F&& f) {
  auto a = p.begin();
  auto b = q.begin();
  while (a != p.end() || b != q.end()) {
    if (b == q.end() || (a != p.end() && a->first < b->first)) {
      f(a->second, 0.0);
      ++a;
    } else if (a == p.end() || b->first < a->first) {
      f(0.0, b->second);
      ++b;
    } else {
      f(a->second, b->second);
      ++a;
      ++b;
    }
  }
}

}  // namespace

double hellinger(const Distribution& p, const Distribution& q) {
  double sum = 0.0;
  for_union(p, q, [&sum](double x, double y) {
    const double d = std::sqrt(x) - std::sqrt(y);
    sum += d * d;
  });
  return std::min(1.0, std::sqrt(sum / 2.0));
}

double total_variation(const Distribution& p, const Distribution& q) {
  double sum = 0.0;
  for_union(p, q, [&sum](double x, double y) { sum += std::abs(x - y); });
  return sum / 2.0;
}

Distribution counts_to_distribution(const ShotCounts& counts) {
  if (counts.total_shots == 0) throw std::invalid_argument("shot counts are empty");
  std::uint64_t sum = 0;
  std::map<Outcome, double> probs;
  for (const auto& [o, n] : counts.counts) {
    sum += n;
    if (n > 0) probs.emplace(o, static_cast<double>(n) / static_cast<double>(counts.total_shots));
  }
  if (sum != counts.total_shots) {
    throw std::invalid_argument("shot counts sum to " + std::to_string(sum) + ", expected " +
                                std::to_string(counts.total_shots));
  }
  return Distribution(std::move(probs));
}

Distribution uniform_distribution(std::size_t n_outcomes) {
  if (n_outcomes == 0) throw std::invalid_argument("uniform distribution needs at least one outcome");
  std::map<Outcome, double> probs;
  const double p = 1.0 / static_cast<double>(n_outcomes);
  for (std::size_t o = 0; o < n_outcomes; ++o) probs.emplace(o, p);
  return Distribution(std::move(probs));
}

}  // namespace qnoise
