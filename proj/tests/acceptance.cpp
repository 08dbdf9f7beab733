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


// Acceptance checks. One PASS/FAIL line per criterion; exit status is
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "qnoise/channels.hpp"
#include "qnoise/cli.hpp"
#include "qnoise/metrics.hpp"
#include "qnoise/noise_model.hpp"
#include "qnoise/optimizer.hpp"
#include "qnoise/walks.hpp"
#include "test_util.hpp"

namespace {

using namespace qnoise;
namespace fs = std::filesystem;

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Limit in seconds; a criterion that passes but overruns its budget fails.
bool report(int id, const std::string& name, double limit_s, const std::function<Verdict()>& check) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict o{false, ""};
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    o.pass = false;
    o.detail += "; over time budget";
  }
  std::printf("[%s] criterion %d: %s (%s; %.2f s)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
              secs);
  std::fflush(stdout);
  return o.pass;
}

Verdict cptp_suite() {
  double worst = 0.0;
  std::size_t count = 0;
  auto note = [&](const KrausChannel& ch) {
    worst = std::max(worst, ch.completeness_error());
    ++count;
  };
  for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    note(depolarizing_channel(p));
    note(spam_channel(p));
  }
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double tg : {0.0, 50.0, 500.0}) {
    for (double theta : {0.0, 0.015, 0.1}) {
      for (int i = 0; i < 200; ++i) {
        const double t1 = 0.5 + 200.0 * u(rng);
        const ThermalParams tp{t1, 2.0 * t1 * u(rng) + 1e-6, tg, theta, 1e10 * u(rng)};
        note(thermal_channel(tp));
        note(choi_to_kraus(thermal_choi(thermal_probabilities(tp))));
      }
    }
  }
  return {worst <= 1e-10, std::to_string(count) + " channels, max error " + fmt("%.3g", worst)};
}

Verdict excitation() {
  const double w = excitation_weight(4.9801e9, 0.015);
  const double rel = std::abs(w / 1.44532e-14 - 1.0);
  return {rel <= 0.01, "w_e = " + fmt("%.6g", w) + ", relative deviation " + fmt("%.2e", rel)};
}

Verdict choi_oracle() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  const std::array<Qubit, 1> t{0};
  for (int c = 0; c < 50; ++c) {
    const double t1 = 1.0 + 150.0 * u(rng);
    const ThermalParams tp{t1, 2.0 * t1 * u(rng) + 1e-6, 5000.0 * u(rng), 0.0, 4e9 + 2e9 * u(rng)};
    const ChoiMatrix choi = thermal_choi(thermal_probabilities(tp));
    const KrausChannel ch = choi_to_kraus(choi);
    for (int s = 0; s < 20; ++s) {
      const DensityMatrix rho = testing::random_state(1, rng);
      worst = std::max(worst, testing::max_abs(apply_kraus(rho, ch, t).matrix() - apply_choi(rho, choi).matrix()));
    }
  }
  return {worst <= 1e-9, "50 Choi matrices x 20 states, max error " + fmt("%.3g", worst)};
}

NoiseModel linear_model(const Circuit& c, ModelVariant v, const UniformCalibration& values = {}) {
  const Architecture arch = Architecture::linear(c.n_qubits());
  return build_model(uniform_calibration(arch, values), arch, v);
}

Verdict ideal_walk() {
  const Circuit c4 = step_circuit({4, 1, 0});
  const Distribution d = simulate_exact(c4, linear_model(c4, ModelVariant::IDEAL));
  double err = std::abs(d[1] - 0.5) + std::abs(d[3] - 0.5);
  for (const auto& [o, p] : d) {
    if (o != 1 && o != 3) err += p;
  }
  bool ok = err <= 1e-12;
  double parity_mass = 0.0;
  for (std::size_t n : {4U, 8U, 16U}) {
    for (std::size_t steps : {1U, 3U}) {
      const Circuit c = step_circuit({n, steps, 0});
      const Distribution dn = simulate_exact(c, linear_model(c, ModelVariant::IDEAL));
      for (const auto& [o, p] : dn) {
        if (o % 2 == 0) parity_mass = std::max(parity_mass, p);
      }
    }
  }
  ok = ok && parity_mass <= 1e-10;
  std::string widths;
  const std::vector<std::pair<std::size_t, std::size_t>> table{{4, 4}, {8, 6}, {16, 8}, {32, 10}, {64, 12}};
  for (const auto& [n, w] : table) {
    const std::size_t got = step_circuit({n, 1, 0}).n_qubits();
    ok = ok && got == w;
    widths += (widths.empty() ? "" : ",") + std::to_string(got);
  }
  return {ok, "N=4 error " + fmt("%.2e", err) + ", max even mass " + fmt("%.2e", parity_mass) + ", widths " + widths};
}

Verdict zero_noise() {
  UniformCalibration v;
  v.single_qubit_error = v.two_qubit_error = v.readout_error = v.prep_error = 0.0;
  v.t1_us = v.t2_us = std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t n : {4U, 8U}) {
    const Circuit c = step_circuit({n, 1, 0});
    const Distribution a = simulate_exact(c, linear_model(c, ModelVariant::UNM, v));
    const Distribution b = simulate_exact(c, linear_model(c, ModelVariant::IDEAL));
    for (qnoise::Outcome o = 0; o < n; ++o) worst = std::max(worst, std::abs(a[o] - b[o]));
  }
  return {worst <= 1e-12, "max |UNM - IDEAL| " + fmt("%.2e", worst)};
}

Verdict sampling() {
  const Circuit c = step_circuit({4, 1, 0});
  const NoiseModel m = linear_model(c, ModelVariant::UNM);
  const Distribution exact = simulate_exact(c, m);
  const double h = hellinger(counts_to_distribution(simulate_shots(c, m, 100000, 20260101)), exact);
  return {h <= 0.01, "h(exact, 100000 shots) = " + fmt("%.4g", h)};
}

Verdict metric_axioms() {
  std::mt19937_64 rng(7);
  bool symmetric = true;
  bool in_range = true;
  double worst_triangle = -1.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 15);
    const Distribution p = testing::random_distribution(n, rng);
    const Distribution q = testing::random_distribution(n, rng);
    const Distribution r = testing::random_distribution(n + 1, rng);
    const double pq = hellinger(p, q);
    symmetric = symmetric && pq == hellinger(q, p);
    in_range = in_range && pq >= 0.0 && pq <= 1.0;
    worst_triangle = std::max(worst_triangle, hellinger(p, r) - pq - hellinger(q, r));
  }
  const bool ok = symmetric && in_range && worst_triangle <= 1e-12;
  return {ok, std::string("symmetric ") + (symmetric ? "yes" : "no") + ", in range " + (in_range ? "yes" : "no") +
                  ", max triangle excess " + fmt("%.2e", worst_triangle)};
}

Verdict parameter_census() {
  std::size_t totals[2];
  const std::size_t ns[2] = {4, 8};
  for (int i = 0; i < 2; ++i) {
    const Circuit c = step_circuit({ns[i], 1, 0});
    totals[i] = census(c, Architecture::linear(c.n_qubits())).total();
  }
  return {totals[0] == 9 && totals[1] == 14,
          "N=4 -> " + std::to_string(totals[0]) + ", N=8 -> " + std::to_string(totals[1])};
}

Verdict ga_self_calibration() {
  const Circuit c = step_circuit({4, 1, 0});
  const Architecture arch = Architecture::linear(c.n_qubits());
  const CalibrationData base = uniform_calibration(arch);
  const GenomeLayout layout(c, arch, GenomeMode::RatesOnly);
  const Genome perturbed = perturb_rates(layout, layout.from_calibration(base), 2026);
  const Distribution target = simulate_exact(c, build_model(layout.apply(perturbed, base), arch, ModelVariant::UNM));
  GAConfig cfg;
  cfg.generations = 50;
  cfg.population_size = 30;
  cfg.seed = 2026;
  const OptimizationResult r = optimize(c, arch, base, target, cfg);
  bool monotone = r.history.size() == cfg.generations + 1;
  for (std::size_t i = 1; i < r.history.size(); ++i) monotone = monotone && r.history[i] <= r.history[i - 1];
  const bool ok = monotone && r.best_distance <= 0.5 * r.initial_distance;
  return {ok, "HD " + fmt("%.4g", r.initial_distance) + " -> " + fmt("%.4g", r.best_distance) + " (" +
                  fmt("%.1f", 100.0 * (1.0 - r.best_distance / r.initial_distance)) + "% lower), history " +
                  (monotone ? "non-increasing" : "NOT monotone")};
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    files[fs::relative(e.path(), dir).string()] = s.str();
  }
  return files;
}

Verdict cli_determinism() {
  const fs::path root = fs::current_path() / "acceptance_output";
  std::map<std::string, std::string> runs[2];
  std::ostringstream sink;
  for (int i = 0; i < 2; ++i) {
    const fs::path dir = root / ("run" + std::to_string(i));
    fs::remove_all(dir);
    const std::string d = dir.string();
    const std::vector<std::vector<std::string>> commands{
        {"gen-calib", "--qubits", "6", "--out", d + "/calib"},
        {"walk", "--states", "8", "--calib", d + "/calib/calibration.json", "--shots", "100000", "--seed", "7",
         "--out", d + "/walk8"},
        {"walk", "--states", "4", "--model", "trm", "--shots", "2000", "--seed", "3", "--assume-full-connectivity",
         "--out", d + "/walk4"},
        {"compare", "--states", "4", "--out", d + "/compare"},
        {"optimize", "--states", "4", "--synthetic-target", "5", "--generations", "5", "--population", "12",
         "--seed", "9", "--out", d + "/optimize"},
    };
    for (const auto& cmd : commands) {
      if (cli::run(cmd, sink, sink) != 0) return {false, "command failed: " + cmd.front()};
    }
    runs[i] = snapshot(dir);
  }
  std::size_t differing = 0;
  for (const auto& [name, content] : runs[0]) {
    const auto it = runs[1].find(name);
    if (it == runs[1].end() || it->second != content) ++differing;
  }
  const bool ok = differing == 0 && runs[0].size() == runs[1].size() && !runs[0].empty();
  return {ok, std::to_string(runs[0].size()) + " files compared, " + std::to_string(differing) + " differ"};
}

}  // namespace

int main() {
  int failures = 0;
  failures += !report(1, "CPTP completeness over the parameter grid", 10.0, cptp_suite);
  failures += !report(2, "excitation weight reference value", 1.0, excitation);
  failures += !report(3, "Choi to Kraus conversion matches apply_choi", 30.0, choi_oracle);
  failures += !report(4, "ideal walk output, parity and workspace sizes", 120.0, ideal_walk);
  failures += !report(5, "zero-noise UNM equals IDEAL", 60.0, zero_noise);
  failures += !report(6, "shot sampling consistency", 60.0, sampling);
  failures += !report(7, "Hellinger metric axioms", 5.0, metric_axioms);
  failures += !report(8, "parameter census on a linear coupling", 10.0, parameter_census);
  failures += !report(9, "GA self-calibration on a synthetic target", 900.0, ga_self_calibration);
  failures += !report(10, "CLI output determinism", 300.0, cli_determinism);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
