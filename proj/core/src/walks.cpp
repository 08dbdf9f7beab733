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

#include "qnoise/walks.hpp"

#include <string>

namespace qnoise {

void WalkSpec::validate() const {
  if (n_states < 4 || (n_states & (n_states - 1)) != 0) {
    throw std::invalid_argument("N must be a power of two and at least 4, got " +
                                std::to_string(n_states));
  }
  if (2 * position_bits() > kMaxQubits) {
    throw std::invalid_argument("N = " + std::to_string(n_states) + " needs more than " +
                                std::to_string(kMaxQubits) + " qubits");
  }
  if (initial_position >= n_states) {
    throw std::invalid_argument("initial position " + std::to_string(initial_position) +
                                " outside [0, " + std::to_string(n_states) + ")");
  }
}

std::size_t WalkSpec::position_bits() const {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n_states) ++k;
  return k;
}

WalkRegisters walk_registers(std::size_t position_bits) {
  WalkRegisters r;
  r.coin = 0;
  for (std::size_t j = 0; j < position_bits; ++j) r.position.push_back(2 * j + 1);
  for (std::size_t j = 0; j + 1 < position_bits; ++j) r.ancilla.push_back(2 * j + 2);
  r.n_qubits = 2 * position_bits;
  return r;
}

namespace {

Gate one(GateKind k, Qubit q) { return Gate{k, {q}, std::nullopt}; }
Gate cx(Qubit c, Qubit t) { return Gate{GateKind::CNOT, {c, t}, std::nullopt}; }

void append(std::vector<Gate>& out, const std::vector<Gate>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

}  // namespace

std::vector<Gate> toffoli(Qubit a, Qubit b, Qubit t) {
  using K = GateKind;
  return {one(K::H, t),   cx(b, t),       one(K::TDG, t), cx(a, t),       one(K::T, t),
          cx(b, t),       one(K::TDG, t), cx(a, t),       one(K::T, b),   one(K::T, t),
          one(K::H, t),   cx(a, b),       one(K::T, a),   one(K::TDG, b), cx(a, b)};
}

std::vector<Gate> generalized_cnot(std::span<const Qubit> controls, Qubit target,
                                   std::span<const Qubit> ancillas) {
  if (controls.empty()) throw std::invalid_argument("generalized CNOT needs at least one control");
  if (controls.size() == 1) return {cx(controls[0], target)};
  const std::size_t n = controls.size();
  if (ancillas.size() < n - 1) {
    throw std::invalid_argument(std::to_string(n) + " controls need " + std::to_string(n - 1) +
                                " ancillas, got " + std::to_string(ancillas.size()));
  }
  // Stage i writes AND(controls[0..i+1]) into ancillas[i].
  std::vector<std::vector<Gate>> stages;
  stages.push_back(toffoli(controls[0], controls[1], ancillas[0]));
  for (std::size_t i = 2; i < n; ++i) stages.push_back(toffoli(ancillas[i - 2], controls[i], ancillas[i - 1]));

  std::vector<Gate> out;
  for (const auto& s : stages) append(out, s);
  out.push_back(cx(ancillas[n - 2], target));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) append(out, *it);
  return out;
}

std::vector<Gate> generalized_cnot(std::size_t n_controls) {
  if (n_controls == 0) throw std::invalid_argument("generalized CNOT needs at least one control");
  std::vector<Qubit> controls;
  std::vector<Qubit> ancillas;
  for (Qubit q = 0; q < n_controls; ++q) controls.push_back(q);
  for (Qubit q = 0; q + 1 < n_controls; ++q) ancillas.push_back(n_controls + q);
  const Qubit target = n_controls == 1 ? 1 : 2 * n_controls - 1;
  return generalized_cnot(controls, target, ancillas);
}

std::vector<Gate> route_linear(const std::vector<Gate>& gates) {
  std::vector<Gate> out;
  auto swap = [&out](Qubit x, Qubit y) {
    out.push_back(cx(x, y));
    out.push_back(cx(y, x));
    out.push_back(cx(x, y));
  };
  for (const auto& g : gates) {
    if (g.kind != GateKind::CNOT) {
      out.push_back(g);
      continue;
    }
    const Qubit c = g.qubits[0];
    const Qubit t = g.qubits[1];
    const std::size_t dist = c > t ? c - t : t - c;
    if (dist <= 1) {
      out.push_back(g);
      continue;
    }
    // Walk the control's state to the neighbour of the target and back.
    std::vector<std::pair<Qubit, Qubit>> hops;
    Qubit pos = c;
    while ((pos > t ? pos - t : t - pos) > 1) {
      const Qubit next = pos < t ? pos + 1 : pos - 1;
      hops.emplace_back(pos, next);
      pos = next;
    }
    for (const auto& [x, y] : hops) swap(x, y);
    out.push_back(Gate{GateKind::CNOT, {pos, t}, g.duration_ns});
    for (auto it = hops.rbegin(); it != hops.rend(); ++it) swap(it->first, it->second);
  }
  return out;
}

namespace {

std::vector<Gate> increment(const WalkRegisters& r) {
  std::vector<Gate> out;
  const std::size_t k = r.position.size();
  for (std::size_t j = k; j-- > 0;) {
    std::vector<Qubit> controls{r.coin};
    controls.insert(controls.end(), r.position.begin(), r.position.begin() + static_cast<long>(j));
    append(out, generalized_cnot(controls, r.position[j], r.ancilla));
  }
  return out;
}

std::vector<Gate> flip_controls(const WalkRegisters& r) {
  std::vector<Gate> out{one(GateKind::X, r.coin)};
  for (Qubit q : r.position) out.push_back(one(GateKind::X, q));
  return out;
}

// Plain state-vector run; only used for the noiseless reference output.
std::vector<Complex> run_statevector(const Circuit& c) {
  std::vector<Complex> psi(std::size_t{1} << c.n_qubits(), Complex{0.0, 0.0});
  psi[0] = 1.0;
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::CNOT) {
      const std::size_t cb = std::size_t{1} << g.qubits[0];
      const std::size_t tb = std::size_t{1} << g.qubits[1];
      for (std::size_t i = 0; i < psi.size(); ++i) {
        if ((i & cb) && !(i & tb)) std::swap(psi[i], psi[i | tb]);
      }
    } else if (is_single_qubit_unitary(g.kind) && g.kind != GateKind::I) {
      const Matrix u = gate_matrix(g.kind);
      const std::size_t b = std::size_t{1} << g.qubits[0];
      for (std::size_t i = 0; i < psi.size(); ++i) {
        if (i & b) continue;
        const Complex a0 = psi[i];
        const Complex a1 = psi[i | b];
        psi[i] = u(0, 0) * a0 + u(0, 1) * a1;
        psi[i | b] = u(1, 0) * a0 + u(1, 1) * a1;
      }
    }
  }
  return psi;
}

}  // namespace

Circuit step_circuit(const WalkSpec& spec, WalkLayout layout) {
  spec.validate();
  const WalkRegisters r = walk_registers(spec.position_bits());
  std::vector<Gate> gates;
  for (std::size_t j = 0; j < r.position.size(); ++j) {
    if ((spec.initial_position >> j) & 1U) gates.push_back(one(GateKind::X, r.position[j]));
  }
  const std::vector<Gate> inc = increment(r);
  const std::vector<Gate> flips = flip_controls(r);
  for (std::size_t s = 0; s < spec.steps; ++s) {
    gates.push_back(one(GateKind::H, r.coin));
    append(gates, inc);
    append(gates, flips);
    append(gates, inc);
    append(gates, flips);
  }
  if (layout == WalkLayout::Linear) gates = route_linear(gates);
  gates.push_back(Gate{GateKind::MEASURE, r.position, std::nullopt});
  return Circuit(r.n_qubits, std::move(gates));
}

Distribution ideal_walk_distribution(const WalkSpec& spec) {
  const Circuit c = step_circuit(spec, WalkLayout::Logical);
  const auto psi = run_statevector(c);
  const auto& measured = c.measured();
  std::vector<double> marginal(std::size_t{1} << measured.size(), 0.0);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    Outcome o = 0;
    for (std::size_t j = 0; j < measured.size(); ++j) {
      o |= static_cast<Outcome>((i >> measured[j]) & 1U) << j;
    }
    marginal[o] += std::norm(psi[i]);
  }
  std::map<Outcome, double> probs;
  for (std::size_t o = 0; o < marginal.size(); ++o) {
    if (marginal[o] > 1e-15) probs.emplace(o, std::min(marginal[o], 1.0));
  }
  return Distribution(std::move(probs));
}

}  // namespace qnoise
