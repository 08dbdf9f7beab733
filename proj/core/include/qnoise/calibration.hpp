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

// Device calibration tables and their JSON document form:
//
//   {
//     "temperature_K": 0.015,
//     "qubits":   [{"id": 0, "T1_us": 56.15, "T2_us": 56.01, "freq_Hz": 4.98e9,
//                   "readout_error": 0.0761, "prep_error": 0.0}, ...],
//     "gates":    [{"kind": "SQ", "qubits": [0], "error_rate": 0.001168, "duration_ns": 100},
//                  {"kind": "CNOT", "qubits": [0, 1], "error_rate": 0.0317, "duration_ns": 300}, ...],
//     "coupling": [[0, 1], [1, 0], ...]
//   }
//
// Single-qubit gate entries use a gate name (H, X, T, TDG) or "SQ", which
// covers every single-qubit gate on that qubit without a more specific entry.
// CNOT entries are keyed by the unordered qubit pair.

#ifndef QNOISE_CALIBRATION_HPP
#define QNOISE_CALIBRATION_HPP

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qnoise/channels.hpp"
#include "qnoise/circuit.hpp"

namespace qnoise {

inline constexpr std::string_view kGenericSingleQubitKind = "SQ";

struct QubitCalibration {
  double t1_us = 0.0;
  double t2_us = 0.0;
  double freq_hz = 0.0;
  double readout_error = 0.0;
  double prep_error = 0.0;
};

struct GateCalibration {
  double error_rate = 0.0;
  double duration_ns = 0.0;
};

using QubitPair = std::pair<Qubit, Qubit>;

/// (min, max) of the two qubits.
QubitPair unordered(Qubit a, Qubit b);

struct CalibrationData {
  double temperature_k = constants::kDefaultTemperature;
  std::map<Qubit, QubitCalibration> qubits;
  std::map<Qubit, GateCalibration> generic_single_qubit;
  std::map<std::pair<GateKind, Qubit>, GateCalibration> single_qubit;
  std::map<QubitPair, GateCalibration> cnot;  // keyed by unordered pair
  std::vector<QubitPair> coupling;            // directed, as listed in the document

  /// Throws CalibrationError on rates outside [0, 1], non-positive T1/T2,
  /// T2 > 2 T1, negative durations, frequencies or temperature.
  void validate() const;

  const QubitCalibration& qubit(Qubit q) const;
  /// I is virtual: zero error, zero duration.
  GateCalibration single_qubit_gate(GateKind kind, Qubit q) const;
  GateCalibration cnot_gate(Qubit a, Qubit b) const;
  bool has_single_qubit_entry(Qubit q) const;
  /// The "SQ" rate when present, else the mean over the qubit's named entries.
  double single_qubit_rate(Qubit q) const;

  /// Coupling graph of the document; n_qubits covers every referenced id.
  Architecture architecture() const;
};

CalibrationData load_calibration(std::string_view json_text);
CalibrationData load_calibration_file(const std::filesystem::path& path);
std::string calibration_to_json(const CalibrationData& cal);

/// Uniform calibration with the given averages on every qubit and coupled
/// pair of `arch`: one "SQ" entry per qubit and one CNOT entry per pair.
struct UniformCalibration {
  double single_qubit_error = 11.68e-4;
  double two_qubit_error = 3.17e-2;
  double readout_error = 7.61e-2;
  double prep_error = 0.0;
  double t1_us = 56.15;
  double t2_us = 56.01;
  double freq_hz = 4.9801e9;
  double single_qubit_duration_ns = 100.0;
  double two_qubit_duration_ns = 300.0;
  double temperature_k = constants::kDefaultTemperature;
};

CalibrationData uniform_calibration(const Architecture& arch, const UniformCalibration& values = {});

/// Adds CNOT entries for coupled pairs of `arch` missing from `cal`, using the
/// mean error rate and duration of the entries that are present.
CalibrationData fill_missing_pairs(CalibrationData cal, const Architecture& arch);

}  // namespace qnoise

#endif  // QNOISE_CALIBRATION_HPP
