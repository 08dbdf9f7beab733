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

// Dense density-matrix state, local operator embedding, and measurement.
//
// Memory: a DensityMatrix on n qubits stores 4^n complex<double> values,
// i.e. 16 * 4^n bytes. 12 qubits is 256 MiB, and simulate() holds up to
// three such buffers at once. kMaxQubits caps the state at 12.

#ifndef QNOISE_QSTATE_HPP
#define QNOISE_QSTATE_HPP

#include <map>
#include <span>
#include <vector>

#include "qnoise/kraus.hpp"
#include "qnoise/types.hpp"

namespace qnoise {

inline constexpr std::size_t kMaxQubits = 12;

class DensityMatrix {
 public:
  /// |i><i| on n qubits.
  static DensityMatrix pure_state(std::size_t n_qubits, std::uint64_t basis_index);

  /// Wraps an arbitrary 2^n x 2^n matrix. Only the shape is checked; use
  /// the invariant accessors to check physicality.
  static DensityMatrix from_matrix(Matrix rho);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  const Matrix& matrix() const { return rho_; }
  Complex operator()(std::size_t row, std::size_t col) const { return rho_(row, col); }

  Complex trace() const { return rho_.trace(); }
  double purity() const;
  double hermiticity_error() const;
  double min_eigenvalue() const;

  /// In-place U rho U^dagger with U acting on `targets` (targets[0] is the
  /// least-significant bit of U's local index).
  DensityMatrix& transform(const Matrix& unitary, std::span<const Qubit> targets);

  /// In-place sum_i K_i rho K_i^dagger.
  DensityMatrix& transform(const KrausChannel& channel, std::span<const Qubit> targets);

 private:
  DensityMatrix(std::size_t n_qubits, Matrix rho) : rho_(std::move(rho)), n_qubits_(n_qubits) {}

  Matrix rho_;
  std::size_t n_qubits_ = 0;
};

/// Probability mass over measured-qubit outcomes. Bit j of an outcome is the
/// value of the j-th measured qubit. Outcomes absent from the map have
/// probability zero.
class Distribution {
 public:
  Distribution() = default;
  /// Validates that each probability lies in [0, 1] and the total is 1
  /// within 1e-9. Throws std::invalid_argument otherwise.
  explicit Distribution(std::map<Outcome, double> probs);

  const std::map<Outcome, double>& probs() const { return probs_; }
  double operator[](Outcome o) const;
  std::size_t size() const { return probs_.size(); }
  double total() const;

  auto begin() const { return probs_.begin(); }
  auto end() const { return probs_.end(); }

 private:
  std::map<Outcome, double> probs_;
};

struct ShotCounts {
  std::map<Outcome, std::uint64_t> counts;
  std::uint64_t total_shots = 0;
};

DensityMatrix pure_state(std::size_t n_qubits, std::uint64_t basis_index);

DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& unitary,
                            std::span<const Qubit> targets);

DensityMatrix apply_kraus(const DensityMatrix& rho, const KrausChannel& channel,
                          std::span<const Qubit> targets);

/// Diagonal marginals over `measured`. Numerical noise below 1e-15 (including
/// tiny negative diagonals) is dropped from the support.
Distribution measure_distribution(const DensityMatrix& rho, std::span<const Qubit> measured);

/// Multinomial draw of `shots` samples, reproducible per seed.
ShotCounts sample_shots(const Distribution& d, std::uint64_t shots, std::uint64_t seed);

}  // namespace qnoise

#endif  // QNOISE_QSTATE_HPP
