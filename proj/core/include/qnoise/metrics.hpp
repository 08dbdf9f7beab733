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

#ifndef QNOISE_METRICS_HPP
#define QNOISE_METRICS_HPP

#include "qnoise/qstate.hpp"

namespace qnoise {

/// h(P, Q) = sqrt(sum_i (sqrt(p_i) - sqrt(q_i))^2 / 2) over the union of the
/// two supports; outcomes missing from one side count as probability zero.
double hellinger(const Distribution& p, const Distribution& q);

/// sum_i |p_i - q_i| / 2, for cross-checks.
double total_variation(const Distribution& p, const Distribution& q);

Distribution counts_to_distribution(const ShotCounts& counts);

/// 1/n on outcomes 0..n-1.
Distribution uniform_distribution(std::size_t n_outcomes);

}  // namespace qnoise

#endif  // QNOISE_METRICS_HPP
