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


#include <gtest/gtest.h>

#include <random>

#include "qnoise/metrics.hpp"
#include "test_util.hpp"

namespace qnoise {
namespace {

TEST(Hellinger, Examples) {
  const Distribution p({{0, 0.3}, {2, 0.7}});
  EXPECT_EQ(hellinger(p, p), 0.0);
  EXPECT_DOUBLE_EQ(hellinger(Distribution({{0, 1.0}}), Distribution({{1, 0.5}, {2, 0.5}})), 1.0);
  EXPECT_NEAR(hellinger(Distribution({{0, 1.0}}), Distribution({{0, 0.5}, {1, 0.5}})), 0.5411961001461970, 1e-12);
  EXPECT_EQ(hellinger(uniform_distribution(2), uniform_distribution(2)), 0.0);
}

TEST(Hellinger, WalkAgainstUniform) {
  // Two outcomes at 1/2 against four at 1/4.
  const double h = hellinger(Distribution({{1, 0.5}, {3, 0.5}}), uniform_distribution(4));
  EXPECT_NEAR(h, std::sqrt(1.0 - 2.0 * std::sqrt(0.125)), 1e-12);
}

TEST(Hellinger, MetricAxioms) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 16);
    const Distribution p = testing::random_distribution(n, rng);
    const Distribution q = testing::random_distribution(n + 2, rng);
    const Distribution r = testing::random_distribution(n + 1, rng);
    const double pq = hellinger(p, q);
    EXPECT_EQ(pq, hellinger(q, p));
    EXPECT_GE(pq, 0.0);
    EXPECT_LE(pq, 1.0);
    EXPECT_LE(hellinger(p, r), pq + hellinger(q, r) + 1e-12);
  }
}

TEST(TotalVariation, BoundsHellinger) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const Distribution p = testing::random_distribution(8, rng);
    const Distribution q = testing::random_distribution(8, rng);
    const double h = hellinger(p, q);
    const double tv = total_variation(p, q);
    EXPECT_LE(h * h, tv + 1e-12);
    EXPECT_LE(tv, std::sqrt(2.0) * h + 1e-12);
  }
}

TEST(CountsToDistribution, Examples) {
  EXPECT_DOUBLE_EQ(counts_to_distribution({{{0, 100}}, 100})[0], 1.0);
  const Distribution half = counts_to_distribution({{{0, 50}, {1, 50}}, 100});
  EXPECT_DOUBLE_EQ(half[0], 0.5);
  EXPECT_DOUBLE_EQ(half[1], 0.5);
  const Distribution quarter = counts_to_distribution({{{0, 1}, {1, 3}}, 4});
  EXPECT_DOUBLE_EQ(quarter[0], 0.25);
  EXPECT_DOUBLE_EQ(quarter[1], 0.75);
}

TEST(CountsToDistribution, RejectsInconsistentTotals) {
  EXPECT_THROW(counts_to_distribution({{}, 0}), std::invalid_argument);
  EXPECT_THROW(counts_to_distribution({{{0, 3}}, 4}), std::invalid_argument);
}

TEST(UniformDistribution, Examples) {
  const Distribution u4 = uniform_distribution(4);
  for (Outcome o = 0; o < 4; ++o) EXPECT_DOUBLE_EQ(u4[o], 0.25);
  EXPECT_DOUBLE_EQ(uniform_distribution(1)[0], 1.0);
  EXPECT_THROW(uniform_distribution(0), std::invalid_argument);
}

}  // namespace
}  // namespace qnoise
