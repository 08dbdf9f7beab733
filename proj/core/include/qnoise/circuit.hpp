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

#ifndef QNOISE_CIRCUIT_HPP
#define QNOISE_CIRCUIT_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qnoise/types.hpp"

namespace qnoise {

/// T and TDG are the pi/8 phase gates needed to express Toffoli over a
/// hardware basis; they count as ordinary single-qubit gates everywhere.
enum class GateKind { H, X, T, TDG, I, CNOT, PREPARE, MEASURE };

std::string_view to_string(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

/// H, X, T, TDG and I.
bool is_single_qubit_unitary(GateKind kind);
bool is_unitary(GateKind kind);

/// 2x2 (or 4x4 for CNOT, local index = control + 2 * target) matrix.
Matrix gate_matrix(GateKind kind);

struct Gate {
  GateKind kind = GateKind::I;
  std::vector<Qubit> qubits;
  /// Per-instance override; unset means "take the calibrated duration".
  std::optional<double> duration_ns;

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  /// Throws CircuitError if an operand is out of range or repeated, CNOT does
  /// not have exactly two operands, PREPARE follows a non-PREPARE gate, or any
  /// gate follows a MEASURE.
  Circuit(std::size_t n_qubits, std::vector<Gate> gates);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  /// Operands of the trailing MEASURE gates, in order.
  const std::vector<Qubit>& measured() const { return measured_; }

  /// Qubits with at least one PREPARE.
  std::vector<Qubit> prepared() const;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Gate> gates_;
  std::vector<Qubit> measured_;
};

/// Device connectivity as directed (control, target) pairs.
struct Architecture {
  std::size_t n_qubits = 0;
  std::set<std::pair<Qubit, Qubit>> coupling;

  /// Chain 0 - 1 - ... - (n-1), both directions.
  static Architecture linear(std::size_t n_qubits);
  /// Every ordered pair of distinct qubits.
  static Architecture full(std::size_t n_qubits);

  bool allows(Qubit control, Qubit target) const {
    return coupling.contains({control, target});
  }
  /// Throws CircuitError on self-loops or out-of-range pairs.
  void check() const;
};

/// Empty when the circuit fits the architecture; otherwise one message per
/// problem. Never throws.
std::vector<std::string> validate(const Circuit& circuit, const Architecture& arch);

struct ScheduledGate {
  double start_ns = 0.0;
  double duration_ns = 0.0;
  /// Per operand (aligned with Gate::qubits): start_ns minus the time the
  /// operand became free.
  std::vector<double> idle_ns;
};

/// ASAP schedule: each gate starts once all of its operands are free.
struct Schedule {
  std::vector<ScheduledGate> gates;
  std::vector<std::vector<Qubit>> operands;
  std::vector<double> clock_ns;  // per qubit, time it becomes free after the last gate

  double makespan() const;
};

/// Every gate must have a resolved duration (see with_durations in
/// noise_model.hpp). Throws CircuitError otherwise.
Schedule schedule(const Circuit& circuit);

/// Circuit text: one gate per line (`H 0`, `CNOT 0 1`, `MEASURE 0 1 2`), `#`
/// starts a comment, and a trailing `@<ns>` token overrides the duration.
/// The qubit count is one more than the largest operand unless `min_qubits`
/// is larger.
Circuit parse_circuit(std::string_view text, std::size_t min_qubits = 0);
std::string to_text(const Circuit& circuit);

}  // namespace qnoise

#endif  // QNOISE_CIRCUIT_HPP
