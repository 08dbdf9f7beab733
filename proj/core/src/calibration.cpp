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

#include "qnoise/calibration.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qnoise {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const json& field(const json& obj, const char* key, const std::string& ctx) {
  if (!obj.is_object()) throw CalibrationError(ctx + " must be an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw CalibrationError("missing field '" + std::string(key) + "' in " + ctx);
  return *it;
}

double number(const json& obj, const char* key, const std::string& ctx) {
  const json& v = field(obj, key, ctx);
  if (!v.is_number()) throw CalibrationError("field '" + std::string(key) + "' in " + ctx + " must be a number");
  return v.get<double>();
}

Qubit qubit_id(const json& v, const std::string& ctx) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw CalibrationError(ctx + ": qubit ids must be non-negative integers");
  }
  return static_cast<Qubit>(v.get<long long>());
}

void check_rate(double r, const std::string& what) {
  if (!(r >= 0.0 && r <= 1.0)) {
    std::ostringstream msg;
    msg << what << " = " << r << " is outside [0, 1]";
    throw CalibrationError(msg.str());
  }
}

void check_nonnegative(double v, const std::string& what) {
  if (!(v >= 0.0)) {
    std::ostringstream msg;
    msg << what << " = " << v << " must be non-negative";
    throw CalibrationError(msg.str());
  }
}

}  // namespace

QubitPair unordered(Qubit a, Qubit b) { return {std::min(a, b), std::max(a, b)}; }

void CalibrationData::validate() const {
  check_nonnegative(temperature_k, "temperature_K");
  for (const auto& [q, c] : qubits) {
    const std::string id = "qubit " + std::to_string(q);
    if (!(c.t1_us > 0.0) || !(c.t2_us > 0.0)) {
      throw CalibrationError(id + ": T1_us and T2_us must be positive");
    }
    if (c.t2_us > 2.0 * c.t1_us) {
      std::ostringstream msg;
      msg << id << ": T2 = " << c.t2_us << " us violates T2(q) <= 2*T1(q) with T1 = " << c.t1_us
          << " us";
      throw CalibrationError(msg.str());
    }
    check_nonnegative(c.freq_hz, id + " freq_Hz");
    check_rate(c.readout_error, id + " readout_error");
    check_rate(c.prep_error, id + " prep_error");
  }
  for (const auto& [q, g] : generic_single_qubit) {
    check_rate(g.error_rate, "SQ gate on qubit " + std::to_string(q) + " error_rate");
    check_nonnegative(g.duration_ns, "SQ gate on qubit " + std::to_string(q) + " duration_ns");
  }
  for (const auto& [key, g] : single_qubit) {
    const std::string id =
        std::string(to_string(key.first)) + " gate on qubit " + std::to_string(key.second);
    check_rate(g.error_rate, id + " error_rate");
    check_nonnegative(g.duration_ns, id + " duration_ns");
  }
  for (const auto& [pair, g] : cnot) {
    const std::string id =
        "CNOT on (" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ")";
    check_rate(g.error_rate, id + " error_rate");
    check_nonnegative(g.duration_ns, id + " duration_ns");
  }
  for (const auto& [c, t] : coupling) {
    if (c == t) throw CalibrationError("coupling has a self-loop on qubit " + std::to_string(c));
  }
}

const QubitCalibration& CalibrationData::qubit(Qubit q) const {
  const auto it = qubits.find(q);
  if (it == qubits.end()) throw CalibrationError("no calibration for qubit " + std::to_string(q));
  return it->second;
}

GateCalibration CalibrationData::single_qubit_gate(GateKind kind, Qubit q) const {
  if (kind == GateKind::I) return {};
  if (const auto it = single_qubit.find({kind, q}); it != single_qubit.end()) return it->second;
  if (const auto it = generic_single_qubit.find(q); it != generic_single_qubit.end()) return it->second;
  throw CalibrationError("no calibration for " + std::string(to_string(kind)) + " on qubit " +
                         std::to_string(q));
}

GateCalibration CalibrationData::cnot_gate(Qubit a, Qubit b) const {
  const auto it = cnot.find(unordered(a, b));
  if (it == cnot.end()) {
    throw CalibrationError("no CNOT calibration for pair (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
  }
  return it->second;
}

bool CalibrationData::has_single_qubit_entry(Qubit q) const {
  if (generic_single_qubit.contains(q)) return true;
  return std::any_of(single_qubit.begin(), single_qubit.end(),
                     [q](const auto& kv) { return kv.first.second == q; });
}

double CalibrationData::single_qubit_rate(Qubit q) const {
  if (const auto it = generic_single_qubit.find(q); it != generic_single_qubit.end()) {
    return it->second.error_rate;
  }
  double sum = 0.0;
  int n = 0;
  for (const auto& [key, g] : single_qubit) {
    if (key.second == q) {
      sum += g.error_rate;
      ++n;
    }
  }
  if (n == 0) throw CalibrationError("no single-qubit gate calibration for qubit " + std::to_string(q));
  return sum / n;
}

Architecture CalibrationData::architecture() const {
  Architecture arch;
  std::size_t n = 0;
  for (const auto& [q, c] : qubits) n = std::max(n, q + 1);
  for (const auto& [c, t] : coupling) n = std::max({n, c + 1, t + 1});
  arch.n_qubits = n;
  arch.coupling.insert(coupling.begin(), coupling.end());
  return arch;
}

CalibrationData load_calibration(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CalibrationError(std::string("calibration is not valid JSON: ") + e.what());
  }
  CalibrationData cal;
  cal.temperature_k = number(doc, "temperature_K", "calibration");

  const json& qubits = field(doc, "qubits", "calibration");
  if (!qubits.is_array()) throw CalibrationError("'qubits' must be an array");
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    const std::string ctx = "qubits[" + std::to_string(i) + "]";
    const json& e = qubits[i];
    const Qubit id = qubit_id(field(e, "id", ctx), ctx);
    QubitCalibration c;
    c.t1_us = number(e, "T1_us", ctx);
    c.t2_us = number(e, "T2_us", ctx);
    c.freq_hz = number(e, "freq_Hz", ctx);
    c.readout_error = number(e, "readout_error", ctx);
    c.prep_error = number(e, "prep_error", ctx);
    if (!cal.qubits.emplace(id, c).second) {
      throw CalibrationError(ctx + ": duplicate qubit id " + std::to_string(id));
    }
  }

  const json& gates = field(doc, "gates", "calibration");
  if (!gates.is_array()) throw CalibrationError("'gates' must be an array");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const std::string ctx = "gates[" + std::to_string(i) + "]";
    const json& e = gates[i];
    const json& kind_v = field(e, "kind", ctx);
    if (!kind_v.is_string()) throw CalibrationError(ctx + ": 'kind' must be a string");
    const std::string kind = kind_v.get<std::string>();
    const json& qs = field(e, "qubits", ctx);
    if (!qs.is_array()) throw CalibrationError(ctx + ": 'qubits' must be an array");
    std::vector<Qubit> operands;
    for (const auto& q : qs) operands.push_back(qubit_id(q, ctx));
    GateCalibration g{number(e, "error_rate", ctx), number(e, "duration_ns", ctx)};

    if (kind == kGenericSingleQubitKind) {
      if (operands.size() != 1) throw CalibrationError(ctx + ": SQ entries take one qubit");
      if (!cal.generic_single_qubit.emplace(operands[0], g).second) {
        throw CalibrationError(ctx + ": duplicate SQ entry for qubit " + std::to_string(operands[0]));
      }
      continue;
    }
    const auto parsed = parse_gate_kind(kind);
    if (parsed == GateKind::CNOT) {
      if (operands.size() != 2 || operands[0] == operands[1]) {
        throw CalibrationError(ctx + ": CNOT entries take two distinct qubits");
      }
      if (!cal.cnot.emplace(unordered(operands[0], operands[1]), g).second) {
        throw CalibrationError(ctx + ": duplicate CNOT entry for pair (" +
                               std::to_string(operands[0]) + "," + std::to_string(operands[1]) + ")");
      }
      continue;
    }
    if (!parsed || !is_single_qubit_unitary(*parsed) || *parsed == GateKind::I) {
      throw CalibrationError(ctx + ": unsupported gate kind '" + kind + "'");
    }
    if (operands.size() != 1) throw CalibrationError(ctx + ": " + kind + " entries take one qubit");
    if (!cal.single_qubit.emplace(std::pair{*parsed, operands[0]}, g).second) {
      throw CalibrationError(ctx + ": duplicate " + kind + " entry for qubit " +
                             std::to_string(operands[0]));
    }
  }

  const json& coupling = field(doc, "coupling", "calibration");
  if (!coupling.is_array()) throw CalibrationError("'coupling' must be an array");
  for (std::size_t i = 0; i < coupling.size(); ++i) {
    const std::string ctx = "coupling[" + std::to_string(i) + "]";
    const json& p = coupling[i];
    if (!p.is_array() || p.size() != 2) throw CalibrationError(ctx + " must be a [control, target] pair");
    cal.coupling.emplace_back(qubit_id(p[0], ctx), qubit_id(p[1], ctx));
  }

  cal.validate();
  return cal;
}

CalibrationData load_calibration_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CalibrationError("cannot open calibration file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_calibration(buf.str());
}

std::string calibration_to_json(const CalibrationData& cal) {
  ordered_json doc;
  doc["temperature_K"] = cal.temperature_k;
  doc["qubits"] = ordered_json::array();
  for (const auto& [q, c] : cal.qubits) {
    ordered_json e;
    e["id"] = q;
    e["T1_us"] = c.t1_us;
    e["T2_us"] = c.t2_us;
    e["freq_Hz"] = c.freq_hz;
    e["readout_error"] = c.readout_error;
    e["prep_error"] = c.prep_error;
    doc["qubits"].push_back(std::move(e));
  }
  doc["gates"] = ordered_json::array();
  auto gate_entry = [](std::string_view kind, std::vector<Qubit> qs, const GateCalibration& g) {
    ordered_json e;
    e["kind"] = std::string(kind);
    e["qubits"] = std::move(qs);
    e["error_rate"] = g.error_rate;
    e["duration_ns"] = g.duration_ns;
    return e;
  };
  for (const auto& [q, g] : cal.generic_single_qubit) {
    doc["gates"].push_back(gate_entry(kGenericSingleQubitKind, {q}, g));
  }
  for (const auto& [key, g] : cal.single_qubit) {
    doc["gates"].push_back(gate_entry(to_string(key.first), {key.second}, g));
  }
  for (const auto& [pair, g] : cal.cnot) {
    doc["gates"].push_back(gate_entry("CNOT", {pair.first, pair.second}, g));
  }
  doc["coupling"] = ordered_json::array();
  for (const auto& [c, t] : cal.coupling) doc["coupling"].push_back({c, t});
  return doc.dump(2) + "\n";
}

CalibrationData uniform_calibration(const Architecture& arch, const UniformCalibration& v) {
  arch.check();
  CalibrationData cal;
  cal.temperature_k = v.temperature_k;
  for (Qubit q = 0; q < arch.n_qubits; ++q) {
    cal.qubits[q] = {v.t1_us, v.t2_us, v.freq_hz, v.readout_error, v.prep_error};
    cal.generic_single_qubit[q] = {v.single_qubit_error, v.single_qubit_duration_ns};
  }
  for (const auto& [c, t] : arch.coupling) {
    cal.coupling.emplace_back(c, t);
    cal.cnot[unordered(c, t)] = {v.two_qubit_error, v.two_qubit_duration_ns};
  }
  cal.validate();
  return cal;
}

CalibrationData fill_missing_pairs(CalibrationData cal, const Architecture& arch) {
  if (cal.cnot.empty()) throw CalibrationError("no CNOT calibration to average over");
  double rate = 0.0;
  double duration = 0.0;
  for (const auto& [pair, g] : cal.cnot) {
    rate += g.error_rate;
    duration += g.duration_ns;
  }
  const auto n = static_cast<double>(cal.cnot.size());
  const GateCalibration mean{rate / n, duration / n};
  for (const auto& [c, t] : arch.coupling) cal.cnot.try_emplace(unordered(c, t), mean);
  return cal;
}

}  // namespace qnoise
