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

#include "qnoise/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qnoise {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::T: return "T";
    case GateKind::TDG: return "TDG";
    case GateKind::I: return "I";
    case GateKind::CNOT: return "CNOT";
    case GateKind::PREPARE: return "PREPARE";
    case GateKind::MEASURE: return "MEASURE";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (auto k : {GateKind::H, GateKind::X, GateKind::T, GateKind::TDG, GateKind::I,
                 GateKind::CNOT, GateKind::PREPARE, GateKind::MEASURE}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

bool is_single_qubit_unitary(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::T:
    case GateKind::TDG:
    case GateKind::I:
      return true;
    default:
      return false;
  }
}

bool is_unitary(GateKind kind) { return is_single_qubit_unitary(kind) || kind == GateKind::CNOT; }

Matrix gate_matrix(GateKind kind) {
  const double r = 1.0 / std::numbers::sqrt2;
  const Complex phase = std::polar(1.0, std::numbers::pi / 4.0);
  Matrix m = Matrix::Identity(2, 2);
  switch (kind) {
    case GateKind::H:
      m << r, r, r, -r;
      return m;
    case GateKind::X:
      m << 0.0, 1.0, 1.0, 0.0;
      return m;
    case GateKind::T:
      m(1, 1) = phase;
      return m;
    case GateKind::TDG:
      m(1, 1) = std::conj(phase);
      return m;
    case GateKind::I:
      return m;
    case GateKind::CNOT: {
      // local index = control + 2 * target; flip target when control is set.
      Matrix c = Matrix::Zero(4, 4);
      c(0, 0) = 1.0;
      c(2, 2) = 1.0;
      c(3, 1) = 1.0;
      c(1, 3) = 1.0;
      return c;
    }
    default:
      throw std::invalid_argument(std::string(to_string(kind)) + " has no unitary matrix");
  }
}

Circuit::Circuit(std::size_t n_qubits, std::vector<Gate> gates)
    : n_qubits_(n_qubits), gates_(std::move(gates)) {
  bool seen_other = false;
  bool seen_measure = false;
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    const std::string where = "gate " + std::to_string(i) + " (" + std::string(to_string(g.kind)) + ")";
    if (g.qubits.empty()) throw CircuitError(where + " has no operands");
    if (g.kind == GateKind::CNOT && g.qubits.size() != 2) {
      throw CircuitError(where + " needs exactly one control and one target");
    }
    if (is_single_qubit_unitary(g.kind) && g.qubits.size() != 1) {
      throw CircuitError(where + " takes exactly one operand");
    }
    for (std::size_t a = 0; a < g.qubits.size(); ++a) {
      if (g.qubits[a] >= n_qubits_) {
        throw CircuitError(where + " operand " + std::to_string(g.qubits[a]) +
                           " out of range for " + std::to_string(n_qubits_) + " qubit(s)");
      }
      for (std::size_t b = a + 1; b < g.qubits.size(); ++b) {
        if (g.qubits[a] == g.qubits[b]) throw CircuitError(where + " repeats an operand");
      }
    }
    if (g.duration_ns && !(*g.duration_ns >= 0.0)) {
      throw CircuitError(where + " has a negative duration");
    }
    if (seen_measure && g.kind != GateKind::MEASURE) {
      throw CircuitError(where + " follows a MEASURE; measurements must come last");
    }
    if (g.kind == GateKind::PREPARE && seen_other) {
      throw CircuitError(where + " follows other gates; PREPARE must come first");
    }
    if (g.kind == GateKind::MEASURE) {
      seen_measure = true;
      for (Qubit q : g.qubits) {
        if (std::find(measured_.begin(), measured_.end(), q) != measured_.end()) {
          throw CircuitError(where + " measures qubit " + std::to_string(q) + " twice");
        }
        measured_.push_back(q);
      }
    } else if (g.kind != GateKind::PREPARE) {
      seen_other = true;
    }
  }
}

std::vector<Qubit> Circuit::prepared() const {
  std::set<Qubit> qs;
  for (const auto& g : gates_) {
    if (g.kind == GateKind::PREPARE) qs.insert(g.qubits.begin(), g.qubits.end());
  }
  return {qs.begin(), qs.end()};
}

Architecture Architecture::linear(std::size_t n_qubits) {
  Architecture a{n_qubits, {}};
  for (Qubit q = 0; q + 1 < n_qubits; ++q) {
    a.coupling.insert({q, q + 1});
    a.coupling.insert({q + 1, q});
  }
  return a;
}

Architecture Architecture::full(std::size_t n_qubits) {
  Architecture a{n_qubits, {}};
  for (Qubit i = 0; i < n_qubits; ++i) {
    for (Qubit j = 0; j < n_qubits; ++j) {
      if (i != j) a.coupling.insert({i, j});
    }
  }
  return a;
}

void Architecture::check() const {
  for (const auto& [c, t] : coupling) {
    if (c == t) throw CircuitError("coupling has a self-loop on qubit " + std::to_string(c));
    if (c >= n_qubits || t >= n_qubits) {
      throw CircuitError("coupling pair (" + std::to_string(c) + "," + std::to_string(t) +
                         ") references a qubit outside the architecture");
    }
  }
}

std::vector<std::string> validate(const Circuit& circuit, const Architecture& arch) {
  std::vector<std::string> violations;
  if (circuit.n_qubits() > arch.n_qubits) {
    violations.push_back("circuit uses " + std::to_string(circuit.n_qubits()) +
                         " qubits but the architecture has " + std::to_string(arch.n_qubits));
  }
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind == GateKind::CNOT && !arch.allows(g.qubits[0], g.qubits[1])) {
      violations.push_back("gate " + std::to_string(i) + ": CNOT " + std::to_string(g.qubits[0]) +
                           " " + std::to_string(g.qubits[1]) + " is not a coupled pair");
    }
  }
  return violations;
}

double Schedule::makespan() const {
  double m = 0.0;
  for (double c : clock_ns) m = std::max(m, c);
  return m;
}

Schedule schedule(const Circuit& circuit) {
  Schedule s;
  s.clock_ns.assign(circuit.n_qubits(), 0.0);
  for (std::size_t i = 0; i < circuit.gates().size(); ++i) {
    const Gate& g = circuit.gates()[i];
    if (!g.duration_ns) {
      throw CircuitError("gate " + std::to_string(i) + " (" + std::string(to_string(g.kind)) +
                         ") has no resolved duration");
    }
    ScheduledGate sg;
    sg.duration_ns = *g.duration_ns;
    for (Qubit q : g.qubits) sg.start_ns = std::max(sg.start_ns, s.clock_ns[q]);
    for (Qubit q : g.qubits) {
      sg.idle_ns.push_back(sg.start_ns - s.clock_ns[q]);
      s.clock_ns[q] = sg.start_ns + sg.duration_ns;
    }
    s.gates.push_back(std::move(sg));
    s.operands.push_back(g.qubits);
  }
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_duration(std::string_view tok, std::size_t line_no) {
  double v = 0.0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !(v >= 0.0)) {
    throw CircuitError("line " + std::to_string(line_no) + ": bad duration '@" +
                       std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Circuit parse_circuit(std::string_view text, std::size_t min_qubits) {
  std::vector<Gate> gates;
  std::size_t n_qubits = min_qubits;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      const auto sp = line.find_first_of(" \t");
      tokens.push_back(line.substr(0, sp));
      line = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
    }
    const auto kind = parse_gate_kind(tokens.front());
    if (!kind) {
      throw CircuitError("line " + std::to_string(line_no) + ": unknown gate '" +
                         std::string(tokens.front()) + "'");
    }
    Gate g{*kind, {}, std::nullopt};
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      std::string_view tok = tokens[t];
      if (tok.front() == '@') {
        if (t + 1 != tokens.size()) {
          throw CircuitError("line " + std::to_string(line_no) + ": '@' duration must be last");
        }
        g.duration_ns = parse_duration(tok.substr(1), line_no);
        break;
      }
      if (const auto at = tok.find('@'); at != std::string_view::npos) {
        if (t + 1 != tokens.size()) {
          throw CircuitError("line " + std::to_string(line_no) + ": '@' duration must be last");
        }
        g.duration_ns = parse_duration(tok.substr(at + 1), line_no);
        tok = tok.substr(0, at);
      }
      Qubit q = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), q);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw CircuitError("line " + std::to_string(line_no) + ": bad qubit index '" +
                           std::string(tok) + "'");
      }
      g.qubits.push_back(q);
      n_qubits = std::max(n_qubits, q + 1);
    }
    gates.push_back(std::move(g));
  }
  try {
    return Circuit(n_qubits, std::move(gates));
  } catch (const CircuitError& e) {
    throw CircuitError(std::string("circuit text: ") + e.what());
  }
}

std::string to_text(const Circuit& circuit) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& g : circuit.gates()) {
    out << to_string(g.kind);
    for (Qubit q : g.qubits) out << ' ' << q;
    if (g.duration_ns) out << " @" << *g.duration_ns;
    out << '\n';
  }
  return out.str();
}

}  // namespace qnoise
