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

// Single-qubit error channels: depolarizing gate infidelity, SPAM bit flips,
// and thermal relaxation with dephasing (Kraus and Choi forms).

#ifndef QNOISE_CHANNELS_HPP
#define QNOISE_CHANNELS_HPP

#include "qnoise/kraus.hpp"
#include "qnoise/qstate.hpp"

namespace qnoise {

namespace constants {
inline constexpr double kPlanck = 6.62607015e-34;     // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K
inline constexpr double kDefaultTemperature = 0.015;  // K, dilution-fridge mixing chamber
}  // namespace constants

/// Eigenvalue / singular-value cutoff below which Kraus operators are dropped.
inline constexpr double kKrausCutoff = 1e-12;

namespace pauli {
Matrix I();
Matrix X();
Matrix Y();
Matrix Z();
}  // namespace pauli

/// {sqrt(1-p) I, sqrt(p/3) X, sqrt(p/3) Z, sqrt(p/3) Y}. Throws
/// std::invalid_argument unless p1 is in [0, 1].
KrausChannel depolarizing_channel(double p1);

/// {sqrt(1-p) I, sqrt(p) X}. Serves both readout (p2) and preparation (p2')
/// errors.
KrausChannel spam_channel(double p2);

/// Probability that a thermal reset lands in |1> rather than |0>:
/// 1 / (1 + exp(2 h f / (k_B theta))). theta == 0 returns the zero-temperature
/// limit 0; freq == 0 returns 0.5.
double excitation_weight(double freq_hz, double theta_k);

struct ThermalParams {
  double t1_us = 0.0;
  double t2_us = 0.0;
  double gate_ns = 0.0;
  double theta_k = 0.0;
  double freq_hz = 0.0;

  /// Throws std::invalid_argument if T1/T2 are not positive, T2 > 2 T1, or
  /// gate_ns / theta_k are negative. Infinite T1 and T2 are allowed.
  void validate() const;
};

struct ThermalProbabilities {
  double p_t1 = 1.0;
  double p_t2 = 1.0;
  double w_e = 0.0;
  double p_reset = 0.0;
  double p_reset0 = 0.0;
  double p_reset1 = 0.0;
  double p_z = 0.0;
  double p_i = 1.0;  // complement of the other three
};

ThermalProbabilities thermal_probabilities(const ThermalParams& tp);

/// 4x4 Choi matrix of a single-qubit channel, C = sum_ij |i><j| (x) E(|i><j|).
/// Row/column index is 2 * input + output.
class ChoiMatrix {
 public:
  explicit ChoiMatrix(Matrix c);

  const Matrix& matrix() const { return c_; }

  /// max-norm of (tr_output C - I); zero for trace-preserving channels.
  double trace_preservation_error() const;

 private:
  Matrix c_;
};

/// Choi matrix of relaxation plus dephasing. With w_e == 0 this is
///   [[1, 0, 0, p_T2], [0, 0, 0, 0], [0, 0, p_reset, 0], [p_T2, 0, 0, 1 - p_reset]];
/// a nonzero w_e adds the excitation populations.
ChoiMatrix thermal_choi(const ThermalProbabilities& probs);

/// rho -> tr_1[C (rho^T (x) I)].
DensityMatrix apply_choi(const DensityMatrix& rho, const ChoiMatrix& choi);

/// Spectral decomposition when C is Hermitian with eigenvalues >= -1e-10,
/// otherwise SVD. Throws ChannelError("... not CPTP ...") when the SVD's left
/// and right singular vectors disagree for a retained singular value, or when
/// the recovered operators fail the completeness check.
KrausChannel choi_to_kraus(const ChoiMatrix& choi);

/// Relaxation/dephasing channel for one gate (or idle) interval. T2 <= T1
/// uses the operator-sum form directly, T1 < T2 <= 2 T1 goes through the
/// Choi matrix.
KrausChannel thermal_channel(const ThermalParams& tp);

}  // namespace qnoise

#endif  // QNOISE_CHANNELS_HPP
