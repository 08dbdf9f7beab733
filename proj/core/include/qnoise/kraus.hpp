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

#ifndef QNOISE_KRAUS_HPP
#define QNOISE_KRAUS_HPP

#include <vector>

#include "qnoise/types.hpp"

namespace qnoise {

/// Tolerance on max |sum K^dagger K - I| for a channel to count as CPTP.
inline constexpr double kCptpTolerance = 1e-10;

/// Operator-sum representation of a channel on `arity` qubits.
///
/// Construction checks that every operator is 2^arity square and that the
/// completeness relation holds to kCptpTolerance; a channel object is always
/// trace preserving.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> operators);

  static KrausChannel identity(std::size_t arity);

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return std::size_t{1} << arity_; }
  const std::vector<Matrix>& operators() const { return operators_; }

  /// max-norm of (sum_i K_i^dagger K_i - I).
  double completeness_error() const;

 private:
  std::vector<Matrix> operators_;
  std::size_t arity_ = 0;
};

/// Max-norm completeness error of an arbitrary operator list.
double completeness_error(const std::vector<Matrix>& operators);

}  // namespace qnoise

#endif  // QNOISE_KRAUS_HPP
