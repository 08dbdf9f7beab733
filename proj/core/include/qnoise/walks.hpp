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

// Discrete-time quantum walk on a cycle of N = 2^k positions.
//
// One step is H on the coin, then +1 on the position register if the coin is
// |1> and -1 if it is |0>. The increment is a cascade of generalized CNOTs
// from the most significant position bit down; the decrement is the same
// cascade conjugated by X on the coin and position bits.
//
// Workspace (2k qubits) is laid out along a line so that a chain coupling
// needs no long-range interaction beyond distance two:
//
//   coin = 0, position bit j = 2j + 1, ancilla j = 2j + 2

#ifndef QNOISE_WALKS_HPP
#define QNOISE_WALKS_HPP

#include <span>
#include <vector>

#include "qnoise/circuit.hpp"
#include "qnoise/qstate.hpp"

namespace qnoise {

struct WalkSpec {
  std::size_t n_states = 4;
  std::size_t steps = 1;
  std::size_t initial_position = 0;

  /// Throws std::invalid_argument unless n_states is a power of two >= 4 and
  /// the initial position is in range.
  void validate() const;
  std::size_t position_bits() const;
  std::size_t workspace_qubits() const { return 2 * position_bits(); }
};

/// Logical: two-qubit gates between any workspace qubits. Linear: every CNOT
/// between non-neighbouring qubits is expanded into a SWAP chain so the
/// circuit runs on Architecture::linear(workspace).
enum class WalkLayout { Logical, Linear };

struct WalkRegisters {
  Qubit coin = 0;
  std::vector<Qubit> position;  // position[0] is the least-significant bit
  std::vector<Qubit> ancilla;
  std::size_t n_qubits = 0;
};

WalkRegisters walk_registers(std::size_t position_bits);

/// Toffoli over {H, T, TDG, CNOT}: 6 CNOTs, exact (no relative phase).
std::vector<Gate> toffoli(Qubit control_a, Qubit control_b, Qubit target);

/// X on `target` iff every control is |1>. One control is a plain CNOT;
/// n >= 2 controls compute the running AND into n-1 clean ancillas with
/// Toffolis, CNOT the last ancilla onto the target, then uncompute.
std::vector<Gate> generalized_cnot(std::span<const Qubit> controls, Qubit target,
                                   std::span<const Qubit> ancillas);

/// Same, on canonical qubits: controls 0..n-1, ancillas n..2n-2, target 2n-1
/// (target n when n == 1).
std::vector<Gate> generalized_cnot(std::size_t n_controls);

/// Expands CNOTs between non-adjacent qubits into SWAP-in / CNOT / SWAP-out
/// sequences over neighbouring qubits. Other gates pass through unchanged.
std::vector<Gate> route_linear(const std::vector<Gate>& gates);

Circuit step_circuit(const WalkSpec& spec, WalkLayout layout = WalkLayout::Linear);

/// Noiseless exact output of step_circuit.
Distribution ideal_walk_distribution(const WalkSpec& spec);

}  // namespace qnoise

#endif  // QNOISE_WALKS_HPP
