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

#include "qnoise/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "qnoise/metrics.hpp"
#include "qnoise/noise_model.hpp"

namespace qnoise {

namespace {

constexpr double kMinTimeUs = 0.1;
constexpr double kMaxTimeUs = 1e5;

std::string pair_name(const QubitPair& p) {
  return "CNOT(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string qubit_name(const char* label, Qubit q) {
  return std::string(label) + "(" + std::to_string(q) + ")";
}

}  // namespace

Census census(const Circuit& circuit, const Architecture& arch) {
  std::set<Qubit> single;
  std::set<QubitPair> pairs;
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::CNOT) {
      if (!arch.allows(g.qubits[0], g.qubits[1])) {
        throw CircuitError("CNOT(" + std::to_string(g.qubits[0]) + "," +
                           std::to_string(g.qubits[1]) + ") is not coupled");
      }
      pairs.insert(unordered(g.qubits[0], g.qubits[1]));
    } else if (is_single_qubit_unitary(g.kind) && g.kind != GateKind::I) {
      single.insert(g.qubits[0]);
    }
  }
  Census c;
  c.single_qubits.assign(single.begin(), single.end());
  c.pairs.assign(pairs.begin(), pairs.end());
  c.measured = circuit.measured();
  c.prepared = circuit.prepared();
  return c;
}

GenomeLayout::GenomeLayout(const Circuit& circuit, const Architecture& arch, GenomeMode mode)
    : census_(qnoise::census(circuit, arch)), mode_(mode) {
  if (mode_ == GenomeMode::WithDecoherence) {
    for (Qubit q = 0; q < circuit.n_qubits(); ++q) thermal_qubits_.push_back(q);
  }
}

std::size_t GenomeLayout::size() const { return census_.total() + 2 * thermal_qubits_.size(); }

std::vector<std::string> GenomeLayout::names() const {
  std::vector<std::string> out;
  for (Qubit q : census_.single_qubits) out.push_back(qubit_name("Sq", q));
  for (const auto& p : census_.pairs) out.push_back(pair_name(p));
  for (Qubit q : census_.measured) out.push_back(qubit_name("M", q));
  for (Qubit q : census_.prepared) out.push_back(qubit_name("P", q));
  for (Qubit q : thermal_qubits_) {
    out.push_back(qubit_name("T1", q));
    out.push_back(qubit_name("T2", q));
  }
  return out;
}

Genome GenomeLayout::from_calibration(const CalibrationData& cal) const {
  Genome g;
  g.reserve(size());
  for (Qubit q : census_.single_qubits) g.push_back(cal.single_qubit_rate(q));
  for (const auto& p : census_.pairs) g.push_back(cal.cnot_gate(p.first, p.second).error_rate);
  for (Qubit q : census_.measured) g.push_back(cal.qubit(q).readout_error);
  for (Qubit q : census_.prepared) g.push_back(cal.qubit(q).prep_error);
  for (Qubit q : thermal_qubits_) {
    g.push_back(cal.qubit(q).t1_us);
    g.push_back(cal.qubit(q).t2_us);
  }
  return g;
}

CalibrationData GenomeLayout::apply(const Genome& genome, const CalibrationData& base) const {
  if (genome.size() != size()) {
    throw std::invalid_argument("genome has " + std::to_string(genome.size()) +
                                " genes, circuit census needs " + std::to_string(size()));
  }
  CalibrationData cal = base;
  std::size_t i = 0;
  for (Qubit q : census_.single_qubits) {
    const double v = genome[i++];
    if (auto it = cal.generic_single_qubit.find(q); it != cal.generic_single_qubit.end()) {
      it->second.error_rate = v;
    }
    for (auto& [key, entry] : cal.single_qubit) {
      if (key.second == q) entry.error_rate = v;
    }
  }
  for (const auto& p : census_.pairs) cal.cnot[p].error_rate = genome[i++];
  for (Qubit q : census_.measured) cal.qubits.at(q).readout_error = genome[i++];
  for (Qubit q : census_.prepared) cal.qubits.at(q).prep_error = genome[i++];
  for (Qubit q : thermal_qubits_) {
    cal.qubits.at(q).t1_us = genome[i++];
    cal.qubits.at(q).t2_us = genome[i++];
  }
  return cal;
}

void GenomeLayout::clamp(Genome& genome) const {
  const std::size_t rates = census_.total();
  for (std::size_t i = 0; i < rates && i < genome.size(); ++i) {
    genome[i] = std::clamp(genome[i], 0.0, 1.0);
  }
  for (std::size_t i = rates; i + 1 < genome.size(); i += 2) {
    genome[i] = std::clamp(genome[i], kMinTimeUs, kMaxTimeUs);
    genome[i + 1] = std::clamp(genome[i + 1], kMinTimeUs, kMaxTimeUs);
    genome[i + 1] = std::min(genome[i + 1], 2.0 * genome[i]);
  }
}

namespace {

double evaluate(const GenomeLayout& layout, const Genome& genome, const Circuit& circuit,
                const Architecture& arch, const CalibrationData& base, const Distribution& target) {
  const NoiseModel model = build_model(layout.apply(genome, base), arch, ModelVariant::UNM);
  return hellinger(simulate_exact(circuit, model), target);
}

}  // namespace

double fitness(const Genome& genome, const Circuit& circuit, const Architecture& arch,
               const CalibrationData& base, const Distribution& target, GenomeMode mode) {
  const GenomeLayout layout(circuit, arch, mode);
  return evaluate(layout, genome, circuit, arch, base, target);
}

void GAConfig::validate() const {
  if (population_size < 2) throw std::invalid_argument("population size must be at least 2");
  if (elite_count >= population_size) {
    throw std::invalid_argument("elite count must be below the population size");
  }
  if (tournament_size == 0) throw std::invalid_argument("tournament size must be positive");
  auto unit = [](double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument(std::string(what) + " must be in [0, 1]");
  };
  unit(mutation_rate, "mutation rate");
  unit(crossover_rate, "crossover rate");
  if (!(mutation_scale >= 0.0) || !(mutation_floor >= 0.0) || !(initial_spread >= 0.0)) {
    throw std::invalid_argument("mutation scale, floor and initial spread must be non-negative");
  }
}

namespace {

// Fills fit[i] for every index in `todo`. Results do not depend on the
// thread count since each slot is written by exactly one evaluation.
void evaluate_all(const std::vector<Genome>& pop, std::vector<double>& fit,
                  const std::vector<std::size_t>& todo, std::size_t threads,
                  const GenomeLayout& layout, const Circuit& circuit, const Architecture& arch,
                  const CalibrationData& base, const Distribution& target) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < todo.size(); k = next++) {
      try {
        fit[todo[k]] = evaluate(layout, pop[todo[k]], circuit, arch, base, target);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(threads, todo.size()));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

OptimizationResult optimize(const Circuit& circuit, const Architecture& arch,
                            const CalibrationData& base, const Distribution& target,
                            const GAConfig& cfg, GenomeMode mode) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const GenomeLayout layout(circuit, arch, mode);
  const std::size_t threads =
      cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  OptimizationResult result;
  result.parameter_names = layout.names();
  result.initial_genome = layout.from_calibration(base);

  const std::size_t P = cfg.population_size;
  std::vector<Genome> pop(P);
  pop[0] = result.initial_genome;
  for (std::size_t i = 1; i < P; ++i) {
    pop[i] = result.initial_genome;
    for (double& x : pop[i]) x += gauss(rng) * (cfg.initial_spread * std::abs(x) + cfg.mutation_floor);
    layout.clamp(pop[i]);
  }
  std::vector<double> fit(P);
  std::vector<std::size_t> all(P);
  std::iota(all.begin(), all.end(), 0);
  evaluate_all(pop, fit, all, threads, layout, circuit, arch, base, target);
  result.evaluations = P;
  result.initial_distance = fit[0];

  std::size_t best = static_cast<std::size_t>(std::min_element(fit.begin(), fit.end()) - fit.begin());
  result.best_genome = pop[best];
  result.best_distance = fit[best];
  result.history.push_back(result.best_distance);

  std::uniform_int_distribution<std::size_t> pick(0, P - 1);
  auto tournament = [&]() -> std::size_t {
    std::size_t winner = pick(rng);
    for (std::size_t k = 1; k < cfg.tournament_size; ++k) {
      const std::size_t c = pick(rng);
      if (fit[c] < fit[winner] || (fit[c] == fit[winner] && c < winner)) winner = c;
    }
    return winner;
  };

  for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
    std::vector<std::size_t> order(P);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fit[a] < fit[b]; });

    std::vector<Genome> next_pop;
    std::vector<double> next_fit;
    for (std::size_t e = 0; e < cfg.elite_count; ++e) {
      next_pop.push_back(pop[order[e]]);
      next_fit.push_back(fit[order[e]]);
    }
    std::vector<std::size_t> todo;
    while (next_pop.size() < P) {
      const Genome& a = pop[tournament()];
      const Genome& b = pop[tournament()];
      Genome child = a;
      if (unit(rng) < cfg.crossover_rate) {
        for (std::size_t i = 0; i < child.size(); ++i) {
          if (unit(rng) < 0.5) child[i] = b[i];
        }
      }
      for (double& x : child) {
        if (unit(rng) < cfg.mutation_rate) {
          x += gauss(rng) * (cfg.mutation_scale * std::abs(x) + cfg.mutation_floor);
        }
      }
      layout.clamp(child);
      todo.push_back(next_pop.size());
      next_pop.push_back(std::move(child));
      next_fit.push_back(0.0);
    }
    pop = std::move(next_pop);
    fit = std::move(next_fit);
    evaluate_all(pop, fit, todo, threads, layout, circuit, arch, base, target);
    result.evaluations += todo.size();

    best = static_cast<std::size_t>(std::min_element(fit.begin(), fit.end()) - fit.begin());
    if (fit[best] < result.best_distance) {
      result.best_distance = fit[best];
      result.best_genome = pop[best];
    }
    result.history.push_back(result.best_distance);
  }

  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

Genome perturb_rates(const GenomeLayout& layout, Genome genome, std::uint64_t seed, double low,
                     double high) {
  if (genome.size() != layout.size()) {
    throw std::invalid_argument("genome does not match the layout");
  }
  if (!(low > 0.0 && low <= high)) throw std::invalid_argument("need 0 < low <= high");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> factor(low, high);
  for (std::size_t i = 0; i < genome.size(); ++i) {
    if (layout.is_rate(i)) genome[i] *= factor(rng);
  }
  layout.clamp(genome);
  return genome;
}

std::string optimization_report(const OptimizationResult& result, const GAConfig& cfg) {
  using json = nlohmann::ordered_json;
  json report;
  report["initial_distance"] = result.initial_distance;
  report["final_distance"] = result.best_distance;
  report["percent_change"] =
      result.initial_distance > 0.0
          ? 100.0 * (result.best_distance - result.initial_distance) / result.initial_distance
          : 0.0;
  report["generations"] = cfg.generations;
  report["population"] = cfg.population_size;
  report["seed"] = cfg.seed;
  report["evaluations"] = result.evaluations;
  json params = json::array();
  for (std::size_t i = 0; i < result.parameter_names.size(); ++i) {
    params.push_back({{"name", result.parameter_names[i]},
                      {"initial", result.initial_genome[i]},
                      {"optimized", result.best_genome[i]}});
  }
  report["parameters"] = std::move(params);
  report["history"] = result.history;
  return report.dump(2) + "\n";
}

}  // namespace qnoise
