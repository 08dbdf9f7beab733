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

#include "qnoise/noise_model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <string>

#include "qnoise/channels.hpp"

namespace qnoise {

std::string_view to_string(ModelVariant v) {
  switch (v) {
    case ModelVariant::UNM: return "UNM";
    case ModelVariant::DSPAM: return "DSPAM";
    case ModelVariant::TRM: return "TRM";
    case ModelVariant::SDM: return "SDM";
    case ModelVariant::IDEAL: return "IDEAL";
  }
  return "?";
}

std::optional<ModelVariant> parse_model_variant(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (auto v : {ModelVariant::UNM, ModelVariant::DSPAM, ModelVariant::TRM, ModelVariant::SDM,
                 ModelVariant::IDEAL}) {
    if (to_string(v) == upper) return v;
  }
  return std::nullopt;
}

bool NoiseModel::has_depolarizing() const {
  return variant == ModelVariant::UNM || variant == ModelVariant::DSPAM;
}
bool NoiseModel::has_spam() const {
  return variant == ModelVariant::UNM || variant == ModelVariant::DSPAM;
}
bool NoiseModel::has_thermal() const {
  return variant == ModelVariant::UNM || variant == ModelVariant::TRM;
}

NoiseModel build_model(CalibrationData cal, Architecture arch, ModelVariant variant,
                       ControlThermal control) {
  cal.validate();
  arch.check();
  for (Qubit q = 0; q < arch.n_qubits; ++q) {
    if (!cal.qubits.contains(q)) {
      throw CalibrationError("calibration does not cover qubit " + std::to_string(q));
    }
    if (!cal.has_single_qubit_entry(q)) {
      throw CalibrationError("calibration has no single-qubit gate entry for qubit " +
                             std::to_string(q));
    }
  }
  for (const auto& [c, t] : arch.coupling) {
    if (!cal.cnot.contains(unordered(c, t))) {
      throw CalibrationError("calibration does not cover coupled pair (" + std::to_string(c) +
                             "," + std::to_string(t) + ")");
    }
  }
  NoiseModel model{variant, std::move(cal), std::move(arch), control, 0.0};
  if (variant == ModelVariant::SDM) {
    double sum = 0.0;
    for (const auto& [q, qc] : model.calibration.qubits) sum += model.calibration.single_qubit_rate(q);
    model.sdm_rate = model.calibration.qubits.empty()
                         ? 0.0
                         : sum / static_cast<double>(model.calibration.qubits.size());
  }
  return model;
}

Circuit with_durations(const Circuit& circuit, const CalibrationData& cal) {
  std::vector<Gate> gates = circuit.gates();
  for (auto& g : gates) {
    if (g.duration_ns) continue;
    switch (g.kind) {
      case GateKind::I:
      case GateKind::PREPARE:
      case GateKind::MEASURE:
        g.duration_ns = 0.0;
        break;
      case GateKind::CNOT:
        g.duration_ns = cal.cnot_gate(g.qubits[0], g.qubits[1]).duration_ns;
        break;
      default:
        g.duration_ns = cal.single_qubit_gate(g.kind, g.qubits[0]).duration_ns;
        break;
    }
  }
  return Circuit(circuit.n_qubits(), std::move(gates));
}

std::vector<double> idle_decay_accounting(const Schedule& sched, Qubit q) {
  std::vector<double> out;
  for (std::size_t i = 0; i < sched.gates.size(); ++i) {
    const auto& ops = sched.operands[i];
    for (std::size_t j = 0; j < ops.size(); ++j) {
      if (ops[j] == q) out.push_back(sched.gates[i].idle_ns[j] + sched.gates[i].duration_ns);
    }
  }
  return out;
}

namespace {

// Channels are rebuilt for every (qubit, interval) and (rate) pair that
// occurs; walk circuits repeat a handful of these many times.
class ChannelCache {
 public:
  explicit ChannelCache(const NoiseModel& model) : model_(model) {}

  const KrausChannel& depolarizing(double rate) {
    auto it = depolarizing_.find(rate);
    if (it == depolarizing_.end()) it = depolarizing_.emplace(rate, depolarizing_channel(rate)).first;
    return it->second;
  }

  const KrausChannel& spam(double rate) {
    auto it = spam_.find(rate);
    if (it == spam_.end()) it = spam_.emplace(rate, spam_channel(rate)).first;
    return it->second;
  }

  const KrausChannel& thermal(Qubit q, double interval_ns) {
    const auto key = std::pair{q, interval_ns};
    auto it = thermal_.find(key);
    if (it == thermal_.end()) {
      const auto& qc = model_.calibration.qubit(q);
      ThermalParams tp{qc.t1_us, qc.t2_us, interval_ns, model_.calibration.temperature_k, qc.freq_hz};
      it = thermal_.emplace(key, thermal_channel(tp)).first;
    }
    return it->second;
  }

 private:
  const NoiseModel& model_;
  std::map<double, KrausChannel> depolarizing_;
  std::map<double, KrausChannel> spam_;
  std::map<std::pair<Qubit, double>, KrausChannel> thermal_;
};

const KrausChannel& reset_channel() {
  static const KrausChannel reset = [] {
    Matrix k0 = Matrix::Zero(2, 2);
    Matrix k1 = Matrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k1(0, 1) = 1.0;
    return KrausChannel({k0, k1});
  }();
  return reset;
}

}  // namespace

DensityMatrix evolve(const Circuit& circuit, const NoiseModel& model) {
  if (const auto violations = validate(circuit, model.architecture); !violations.empty()) {
    std::string msg = "circuit does not fit the architecture:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw SimulationError(msg);
  }
  const Circuit timed = with_durations(circuit, model.calibration);
  const Schedule sched = schedule(timed);
  ChannelCache cache(model);
  DensityMatrix rho = pure_state(timed.n_qubits(), 0);

  auto thermal_step = [&](Qubit q, double interval_ns) {
    if (!model.has_thermal() || interval_ns <= 0.0) return;
    const std::array<Qubit, 1> target{q};
    rho.transform(cache.thermal(q, interval_ns), target);
  };
  auto depolarize = [&](Qubit q, double rate) {
    if (rate <= 0.0) return;
    const std::array<Qubit, 1> target{q};
    rho.transform(cache.depolarizing(rate), target);
  };
  auto spam_flip = [&](Qubit q, double rate) {
    if (!model.has_spam() || rate <= 0.0) return;
    const std::array<Qubit, 1> target{q};
    rho.transform(cache.spam(rate), target);
  };

  for (std::size_t i = 0; i < timed.gates().size(); ++i) {
    const Gate& g = timed.gates()[i];
    const ScheduledGate& sg = sched.gates[i];
    switch (g.kind) {
      case GateKind::PREPARE:
        for (std::size_t j = 0; j < g.qubits.size(); ++j) {
          const Qubit q = g.qubits[j];
          const std::array<Qubit, 1> target{q};
          rho.transform(reset_channel(), target);
          spam_flip(q, model.calibration.qubit(q).prep_error);
          thermal_step(q, sg.idle_ns[j] + sg.duration_ns);
        }
        break;
      case GateKind::MEASURE:
        for (std::size_t j = 0; j < g.qubits.size(); ++j) {
          const Qubit q = g.qubits[j];
          thermal_step(q, sg.idle_ns[j] + sg.duration_ns);
          spam_flip(q, model.calibration.qubit(q).readout_error);
        }
        break;
      case GateKind::CNOT: {
        rho.transform(gate_matrix(g.kind), g.qubits);
        const Qubit control = g.qubits[0];
        const Qubit target = g.qubits[1];
        if (model.has_depolarizing()) {
          depolarize(target, model.calibration.cnot_gate(control, target).error_rate);
        } else if (model.variant == ModelVariant::SDM) {
          depolarize(control, model.sdm_rate);
          depolarize(target, model.sdm_rate);
        }
        const double control_interval = model.control_thermal == ControlThermal::Duration
                                            ? sg.idle_ns[0] + sg.duration_ns
                                            : sg.idle_ns[0];
        thermal_step(control, control_interval);
        thermal_step(target, sg.idle_ns[1] + sg.duration_ns);
        break;
      }
      default: {
        const Qubit q = g.qubits[0];
        if (g.kind != GateKind::I) {
          rho.transform(gate_matrix(g.kind), g.qubits);
          if (model.has_depolarizing()) {
            depolarize(q, model.calibration.single_qubit_gate(g.kind, q).error_rate);
          } else if (model.variant == ModelVariant::SDM) {
            depolarize(q, model.sdm_rate);
          }
        }
        thermal_step(q, sg.idle_ns[0] + sg.duration_ns);
        break;
      }
    }
  }
  return rho;
}

Distribution simulate_exact(const Circuit& circuit, const NoiseModel& model) {
  if (circuit.measured().empty()) throw SimulationError("circuit measures no qubits");
  const DensityMatrix rho = evolve(circuit, model);
  return measure_distribution(rho, circuit.measured());
}

ShotCounts simulate_shots(const Circuit& circuit, const NoiseModel& model, std::uint64_t shots,
                          std::uint64_t seed) {
  return sample_shots(simulate_exact(circuit, model), shots, seed);
}

SimulationResult simulate(const Circuit& circuit, const NoiseModel& model, SimulationMode mode) {
  if (const auto* shots = std::get_if<ShotsMode>(&mode)) {
    return simulate_shots(circuit, model, shots->shots, shots->seed);
  }
  return simulate_exact(circuit, model);
}

}  // namespace qnoise
