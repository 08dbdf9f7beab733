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

// Unified noise model and noisy density-matrix simulation.
//
// Channel placement for a circuit, starting from |0...0>:
//   PREPARE q      reset q to |0>, then the preparation flip S'(prep_error)
//   1-qubit gate   U, depolarizing D(p1 of that gate on q), thermal N on q
//   CNOT c->t      U, D(pair rate) on t only, N on t and on c
//   MEASURE        N for any idle time before readout, then S(readout_error)
// N on a qubit covers the idle gap since that qubit's previous operation plus
// the gate duration, so the thermal decay tracks elapsed wall time.

#ifndef QNOISE_NOISE_MODEL_HPP
#define QNOISE_NOISE_MODEL_HPP

#include <optional>
#include <string_view>
#include <variant>

#include "qnoise/calibration.hpp"
#include "qnoise/circuit.hpp"
#include "qnoise/qstate.hpp"

namespace qnoise {

/// UNM: depolarizing + SPAM + thermal. DSPAM: depolarizing + SPAM. TRM:
/// thermal only. SDM: one averaged depolarizing rate after every gate on every
/// operand, no connectivity. IDEAL: noiseless.
enum class ModelVariant { UNM, DSPAM, TRM, SDM, IDEAL };

std::string_view to_string(ModelVariant v);
std::optional<ModelVariant> parse_model_variant(std::string_view name);  // case-insensitive

/// How the CNOT control's thermal step is timed: the full CNOT duration, or
/// zero (idle gap only).
enum class ControlThermal { Duration, Zero };

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NoiseModel {
  ModelVariant variant = ModelVariant::UNM;
  CalibrationData calibration;
  Architecture architecture;
  ControlThermal control_thermal = ControlThermal::Duration;
  /// SDM only: mean of the per-qubit single-qubit rates.
  double sdm_rate = 0.0;

  bool has_depolarizing() const;
  bool has_spam() const;
  bool has_thermal() const;
};

/// Throws CalibrationError when some architecture qubit or coupled pair has no
/// calibration.
NoiseModel build_model(CalibrationData cal, Architecture arch, ModelVariant variant,
                       ControlThermal control = ControlThermal::Duration);

/// Fills unset gate durations from the calibration. I, PREPARE and MEASURE
/// take zero time.
Circuit with_durations(const Circuit& circuit, const CalibrationData& cal);

/// Thermal interval for each gate touching q, in order: idle gap plus gate
/// duration. Sums to q's final clock.
std::vector<double> idle_decay_accounting(const Schedule& sched, Qubit q);

/// Final state just before the measurement superoperator.
DensityMatrix evolve(const Circuit& circuit, const NoiseModel& model);

Distribution simulate_exact(const Circuit& circuit, const NoiseModel& model);
ShotCounts simulate_shots(const Circuit& circuit, const NoiseModel& model, std::uint64_t shots,
                          std::uint64_t seed);

struct ExactMode {};
struct ShotsMode {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};
using SimulationMode = std::variant<ExactMode, ShotsMode>;
using SimulationResult = std::variant<Distribution, ShotCounts>;

SimulationResult simulate(const Circuit& circuit, const NoiseModel& model, SimulationMode mode);

}  // namespace qnoise

#endif  // QNOISE_NOISE_MODEL_HPP
