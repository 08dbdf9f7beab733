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

// Genetic-algorithm fit of noise parameters to a target distribution.
//
// The genome holds one depolarizing rate per qubit that carries single-qubit
// gates, one per CNOT pair, one readout rate per measured qubit and one
// preparation rate per prepared qubit, in that order. With decoherence
// enabled, T1 and T2 for every circuit qubit follow. Each gate type counts
// once per qubit or pair no matter how often it appears.

#ifndef QNOISE_OPTIMIZER_HPP
#define QNOISE_OPTIMIZER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qnoise/calibration.hpp"
#include "qnoise/circuit.hpp"
#include "qnoise/qstate.hpp"

namespace qnoise {

struct Census {
  std::vector<Qubit> single_qubits;
  std::vector<QubitPair> pairs;
  std::vector<Qubit> measured;
  std::vector<Qubit> prepared;

  std::size_t r_s() const { return single_qubits.size(); }
  std::size_t r_t() const { return pairs.size(); }
  std::size_t m() const { return measured.size(); }
  std::size_t s() const { return prepared.size(); }
  std::size_t total() const { return r_s() + r_t() + m() + s(); }
};

/// Throws CircuitError if a CNOT uses a pair the architecture does not couple.
Census census(const Circuit& circuit, const Architecture& arch);

enum class GenomeMode { RatesOnly, WithDecoherence };

using Genome = std::vector<double>;

class GenomeLayout {
 public:
  GenomeLayout(const Circuit& circuit, const Architecture& arch, GenomeMode mode);

  const Census& census() const { return census_; }
  GenomeMode mode() const { return mode_; }
  std::size_t size() const;
  /// Sq(q), CNOT(a,b), M(q), P(q), then T1(q), T2(q).
  std::vector<std::string> names() const;

  Genome from_calibration(const CalibrationData& cal) const;
  CalibrationData apply(const Genome& genome, const CalibrationData& base) const;
  /// Rates into [0, 1]; times into [0.1, 1e5] us, then T2 <= 2 T1.
  void clamp(Genome& genome) const;
  bool is_rate(std::size_t index) const { return index < census_.total(); }

 private:
  Census census_;
  GenomeMode mode_;
  std::vector<Qubit> thermal_qubits_;
};

/// Hellinger distance between the exact UNM output at `genome` and `target`.
/// Throws std::invalid_argument when the genome length does not match the
/// circuit's parameter census.
double fitness(const Genome& genome, const Circuit& circuit, const Architecture& arch,
               const CalibrationData& base, const Distribution& target,
               GenomeMode mode = GenomeMode::RatesOnly);

struct GAConfig {
  std::size_t population_size = 30;
  std::size_t generations = 50;
  std::size_t elite_count = 2;
  std::size_t tournament_size = 3;
  double mutation_rate = 0.15;
  double mutation_scale = 0.2;   // std-dev relative to the gene value
  double mutation_floor = 1e-4;  // absolute std-dev added on top
  double crossover_rate = 0.9;
  double initial_spread = 0.3;   // relative std-dev of the seeded population
  std::uint64_t seed = 0;
  std::size_t threads = 0;       // 0: hardware concurrency

  void validate() const;
};

struct OptimizationResult {
  std::vector<std::string> parameter_names;
  Genome initial_genome;
  double initial_distance = 0.0;
  Genome best_genome;
  double best_distance = 0.0;
  /// history[0] is the seeded population, then one entry per generation;
  /// best-so-far, so never increasing.
  std::vector<double> history;
  std::size_t evaluations = 0;
  double wall_time_s = 0.0;
};

OptimizationResult optimize(const Circuit& circuit, const Architecture& arch,
                            const CalibrationData& base, const Distribution& target,
                            const GAConfig& cfg, GenomeMode mode = GenomeMode::RatesOnly);

/// Multiplies every rate gene by an independent factor drawn uniformly from
/// [low, high], then clamps. Time genes are left alone.
Genome perturb_rates(const GenomeLayout& layout, Genome genome, std::uint64_t seed,
                     double low = 0.5, double high = 2.0);

/// JSON report: distances, per-generation history and a per-parameter
/// pre/post table. Deterministic for a given result (wall time excluded).
std::string optimization_report(const OptimizationResult& result, const GAConfig& cfg);

}  // namespace qnoise

#endif  // QNOISE_OPTIMIZER_HPP
