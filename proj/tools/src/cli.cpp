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

#include "qnoise/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qnoise/calibration.hpp"
#include "qnoise/metrics.hpp"
#include "qnoise/noise_model.hpp"
#include "qnoise/optimizer.hpp"
#include "qnoise/walks.hpp"

namespace qnoise::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string distribution_csv(const Distribution& d) {
  std::string s = "outcome,probability\n";
  for (const auto& [o, p] : d) s += std::to_string(o) + "," + num(p) + "\n";
  return s;
}

std::string counts_csv(const ShotCounts& c) {
  std::string s = "outcome,count\n";
  for (const auto& [o, n] : c.counts) s += std::to_string(o) + "," + std::to_string(n) + "\n";
  return s;
}

std::string read_file(const fs::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(std::string("cannot open ") + what + " file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path path = dir / name;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << content) || !f.flush()) throw UsageError("cannot write " + path.string());
}

Distribution parse_distribution_csv(const std::string& text) {
  std::map<Outcome, double> probs;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw UsageError("target line " + std::to_string(lineno) + ": expected outcome,probability");
    const std::string a = line.substr(0, comma);
    const std::string b = line.substr(comma + 1);
    if (lineno == 1 && a == "outcome") continue;
    try {
      std::size_t used = 0;
      const Outcome o = std::stoull(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      const double p = std::stod(b);
      if (!probs.emplace(o, p).second) throw UsageError("target repeats outcome " + a);
    } catch (const std::logic_error&) {
      throw UsageError("target line " + std::to_string(lineno) + ": cannot parse '" + line + "'");
    }
  }
  return Distribution(std::move(probs));
}

// Options shared by the simulation commands.
struct Common {
  std::size_t states = 4;
  std::size_t steps = 1;
  std::size_t position = 0;
  std::string circuit_path;
  std::string model = "unm";
  std::string calib;
  std::uint64_t shots = 0;
  std::uint64_t seed = 1;
  bool exact = false;
  bool full = false;
  std::string control = "duration";
  std::string out;
};

void add_walk_flags(CLI::App* cmd, Common& o) {
  cmd->add_option("--states", o.states, "Number of walk positions N (power of two)");
  cmd->add_option("--steps", o.steps, "Walk steps");
  cmd->add_option("--position", o.position, "Initial walk position");
}

void add_model_flags(CLI::App* cmd, Common& o) {
  cmd->add_option("--calib", o.calib, "Calibration JSON (default: uniform averages on a line)");
  cmd->add_flag("--assume-full-connectivity", o.full,
                "All-to-all coupling; missing pairs take the mean CNOT calibration");
  cmd->add_option("--control-trc", o.control, "Thermal timing on CNOT controls")
      ->check(CLI::IsMember({"duration", "zero"}));
  cmd->add_option("--out", o.out, "Output directory");
}

struct Setup {
  CalibrationData cal;
  Architecture arch;
};

Setup make_setup(const Common& o, std::size_t n_qubits) {
  Setup s;
  if (!o.calib.empty()) {
    s.cal = load_calibration(read_file(o.calib, "calibration"));
    s.arch = s.cal.architecture();
    if (o.full) {
      s.arch = Architecture::full(std::max(s.arch.n_qubits, n_qubits));
      s.cal = fill_missing_pairs(std::move(s.cal), s.arch);
    }
  } else {
    s.arch = o.full ? Architecture::full(n_qubits) : Architecture::linear(n_qubits);
    s.cal = uniform_calibration(s.arch);
  }
  return s;
}

ModelVariant variant_of(const std::string& name) {
  const auto v = parse_model_variant(name);
  if (!v) throw UsageError("unknown model '" + name + "'");
  return *v;
}

ControlThermal control_of(const Common& o) {
  return o.control == "zero" ? ControlThermal::Zero : ControlThermal::Duration;
}

WalkSpec walk_spec(const Common& o) {
  WalkSpec spec{o.states, o.steps, o.position};
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

json census_json(const Census& c) {
  return json{{"single_qubit", c.r_s()}, {"two_qubit", c.r_t()}, {"measured", c.m()},
              {"prepared", c.s()},       {"total", c.total()}};
}

// Simulates `circuit` under the selected model and reports distances to the
// given references. Used by `walk` and `simulate`.
int run_experiment(const Common& o, const Circuit& circuit, const Distribution& ideal,
                   json summary, std::ostream& out) {
  const Setup setup = make_setup(o, circuit.n_qubits());
  const ModelVariant variant = variant_of(o.model);
  const NoiseModel model = build_model(setup.cal, setup.arch, variant, control_of(o));
  const Distribution uniform = uniform_distribution(std::size_t{1} << circuit.measured().size());

  const Distribution exact = simulate_exact(circuit, model);
  summary["model"] = std::string(to_string(variant));
  summary["qubits"] = circuit.n_qubits();
  summary["gates"] = circuit.gates().size();
  summary["census"] = census_json(census(circuit, setup.arch));
  summary["exact"] = {{"hellinger_to_ideal", hellinger(exact, ideal)},
                      {"hellinger_to_uniform", hellinger(exact, uniform)}};

  const bool sampled = o.shots > 0 && !o.exact;
  std::optional<ShotCounts> counts;
  if (sampled) {
    counts = simulate_shots(circuit, model, o.shots, o.seed);
    const Distribution empirical = counts_to_distribution(*counts);
    summary["shots"] = {{"shots", o.shots},
                        {"seed", o.seed},
                        {"hellinger_to_exact", hellinger(empirical, exact)},
                        {"hellinger_to_ideal", hellinger(empirical, ideal)},
                        {"hellinger_to_uniform", hellinger(empirical, uniform)}};
  }

  if (o.out.empty()) {
    out << (sampled ? counts_csv(*counts) : distribution_csv(exact));
    return kExitOk;
  }
  const fs::path dir = o.out;
  write_file(dir, "circuit.txt", to_text(circuit));
  write_file(dir, "distribution.csv", distribution_csv(exact));
  if (sampled) write_file(dir, "counts.csv", counts_csv(*counts));
  const std::string text = summary.dump(2) + "\n";
  write_file(dir, "summary.json", text);
  out << text;
  return kExitOk;
}

int cmd_walk(const Common& o, std::ostream& out) {
  const WalkSpec spec = walk_spec(o);
  const Circuit circuit = step_circuit(spec, o.full ? WalkLayout::Logical : WalkLayout::Linear);
  json summary;
  summary["command"] = "walk";
  summary["states"] = spec.n_states;
  summary["steps"] = spec.steps;
  summary["initial_position"] = spec.initial_position;
  summary["layout"] = o.full ? "logical" : "linear";
  return run_experiment(o, circuit, ideal_walk_distribution(spec), std::move(summary), out);
}

int cmd_simulate(const Common& o, std::ostream& out) {
  if (o.circuit_path.empty()) throw UsageError("simulate needs --circuit");
  const Circuit circuit = parse_circuit(read_file(o.circuit_path, "circuit"));
  const Setup setup = make_setup(o, circuit.n_qubits());
  const Distribution ideal =
      simulate_exact(circuit, build_model(setup.cal, setup.arch, ModelVariant::IDEAL));
  json summary;
  summary["command"] = "simulate";
  summary["circuit"] = fs::path(o.circuit_path).filename().string();
  return run_experiment(o, circuit, ideal, std::move(summary), out);
}

int cmd_compare(const Common& o, const std::vector<std::string>& models, std::ostream& out) {
  if (models.size() < 2) throw UsageError("compare needs at least two models");
  const WalkSpec spec = walk_spec(o);
  const Circuit circuit = step_circuit(spec, o.full ? WalkLayout::Logical : WalkLayout::Linear);
  const Setup setup = make_setup(o, circuit.n_qubits());

  std::vector<std::string> names;
  std::vector<Distribution> dists;
  for (const auto& m : models) {
    std::string lower = m;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "uniform") {
      names.emplace_back("UNIFORM");
      dists.push_back(uniform_distribution(spec.n_states));
      continue;
    }
    const ModelVariant v = variant_of(m);
    names.emplace_back(to_string(v));
    dists.push_back(simulate_exact(circuit, build_model(setup.cal, setup.arch, v, control_of(o))));
  }

  const std::size_t n = names.size();
  std::vector<std::vector<double>> h(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h[i][j] = hellinger(dists[i], dists[j]);
  }

  std::ostringstream table;
  table << std::left << std::setw(9) << "";
  for (const auto& name : names) table << std::right << std::setw(10) << name;
  table << "\n" << std::fixed << std::setprecision(6);
  for (std::size_t i = 0; i < n; ++i) {
    table << std::left << std::setw(9) << names[i];
    for (std::size_t j = 0; j < n; ++j) table << std::right << std::setw(10) << h[i][j];
    table << "\n";
  }
  out << table.str();

  if (!o.out.empty()) {
    std::string csv = "model";
    for (const auto& name : names) csv += "," + name;
    csv += "\n";
    json doc;
    doc["command"] = "compare";
    doc["states"] = spec.n_states;
    doc["steps"] = spec.steps;
    doc["models"] = names;
    doc["hellinger"] = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      csv += names[i];
      for (std::size_t j = 0; j < n; ++j) csv += "," + num(h[i][j]);
      csv += "\n";
      doc["hellinger"].push_back(h[i]);
    }
    write_file(o.out, "compare.csv", csv);
    write_file(o.out, "compare.json", doc.dump(2) + "\n");
  }
  return kExitOk;
}

struct OptimizeOpts {
  std::string target;
  std::optional<std::uint64_t> synthetic_seed;
  std::size_t generations = 50;
  std::size_t population = 30;
  std::string mode = "rates";
  std::size_t threads = 0;
};

int cmd_optimize(const Common& o, const OptimizeOpts& opt, std::ostream& out) {
  if (opt.target.empty() == !opt.synthetic_seed) {
    throw UsageError("optimize needs exactly one of --target or --synthetic-target");
  }
  Circuit circuit = o.circuit_path.empty()
                        ? step_circuit(walk_spec(o), o.full ? WalkLayout::Logical : WalkLayout::Linear)
                        : parse_circuit(read_file(o.circuit_path, "circuit"));
  const Setup setup = make_setup(o, circuit.n_qubits());
  const GenomeMode mode = opt.mode == "decoherence" ? GenomeMode::WithDecoherence : GenomeMode::RatesOnly;
  const GenomeLayout layout(circuit, setup.arch, mode);

  Distribution target;
  if (opt.synthetic_seed) {
    const Genome perturbed = perturb_rates(layout, layout.from_calibration(setup.cal), *opt.synthetic_seed);
    target = simulate_exact(circuit, build_model(layout.apply(perturbed, setup.cal), setup.arch,
                                                 ModelVariant::UNM));
  } else {
    target = parse_distribution_csv(read_file(opt.target, "target"));
    const Outcome limit = Outcome{1} << circuit.measured().size();
    for (const auto& [outcome, p] : target) {
      if (outcome >= limit) {
        throw std::invalid_argument("target outcome " + std::to_string(outcome) + " needs more than " +
                                    std::to_string(circuit.measured().size()) + " measured qubits");
      }
    }
  }

  GAConfig cfg;
  cfg.generations = opt.generations;
  cfg.population_size = opt.population;
  cfg.seed = o.seed;
  cfg.threads = opt.threads;
  const OptimizationResult result = optimize(circuit, setup.arch, setup.cal, target, cfg, mode);
  const std::string report = optimization_report(result, cfg);

  if (!o.out.empty()) {
    write_file(o.out, "report.json", report);
    write_file(o.out, "target.csv", distribution_csv(target));
    const Distribution best = simulate_exact(
        circuit, build_model(layout.apply(result.best_genome, setup.cal), setup.arch, ModelVariant::UNM));
    write_file(o.out, "best_distribution.csv", distribution_csv(best));
  }
  std::ostringstream s;
  s << "parameters      " << layout.size() << "\n"
    << "HD (pre)        " << num(result.initial_distance) << "\n"
    << "HD (post)       " << num(result.best_distance) << "\n"
    << "wall time (s)   " << std::fixed << std::setprecision(2) << result.wall_time_s << "\n";
  out << s.str();
  return kExitOk;
}

struct GenCalibOpts {
  std::size_t qubits = 4;
  std::string coupling = "linear";
};

int cmd_gen_calib(const GenCalibOpts& g, const std::string& out_dir, std::ostream& out) {
  if (g.qubits == 0) throw UsageError("--qubits must be positive");
  const Architecture arch = g.coupling == "full" ? Architecture::full(g.qubits) : Architecture::linear(g.qubits);
  const std::string text = calibration_to_json(uniform_calibration(arch)) + "\n";
  if (out_dir.empty()) {
    out << text;
  } else {
    write_file(out_dir, "calibration.json", text);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noisy density-matrix simulation of quantum walk circuits", "qnoise"};
  app.require_subcommand(1);

  Common o;
  std::vector<std::string> models{"unm", "dspam", "trm", "sdm", "ideal", "uniform"};
  OptimizeOpts opt;
  GenCalibOpts gen;
  std::string gen_out;
  std::uint64_t synthetic = 0;

  auto* walk = app.add_subcommand("walk", "Simulate a quantum walk");
  add_walk_flags(walk, o);
  add_model_flags(walk, o);
  walk->add_option("--model", o.model, "unm, dspam, trm, sdm or ideal");
  walk->add_option("--shots", o.shots, "Sample this many shots as well");
  walk->add_option("--seed", o.seed, "Sampling seed");
  walk->add_flag("--exact", o.exact, "Exact distribution only, even with --shots");

  auto* sim = app.add_subcommand("simulate", "Simulate a circuit file");
  sim->add_option("--circuit", o.circuit_path, "Circuit text file")->required();
  add_model_flags(sim, o);
  sim->add_option("--model", o.model, "unm, dspam, trm, sdm or ideal");
  sim->add_option("--shots", o.shots, "Sample this many shots as well");
  sim->add_option("--seed", o.seed, "Sampling seed");
  sim->add_flag("--exact", o.exact, "Exact distribution only, even with --shots");

  auto* compare = app.add_subcommand("compare", "Pairwise Hellinger distances between models");
  add_walk_flags(compare, o);
  add_model_flags(compare, o);
  compare->add_option("--models", models, "Models to compare (uniform allowed)")->delimiter(',');
  compare->add_option("--seed", o.seed, "Accepted for uniformity; exact mode uses no randomness");

  auto* optim = app.add_subcommand("optimize", "Fit noise parameters to a target distribution");
  add_walk_flags(optim, o);
  add_model_flags(optim, o);
  optim->add_option("--circuit", o.circuit_path, "Circuit text file instead of a walk");
  auto* target_opt = optim->add_option("--target", opt.target, "Target distribution CSV");
  auto* synth_opt = optim->add_option("--synthetic-target", synthetic,
                                      "Target from the model at rates scaled by U[0.5, 2] with this seed");
  target_opt->excludes(synth_opt);
  optim->add_option("--generations", opt.generations, "GA generations");
  optim->add_option("--population", opt.population, "GA population size");
  optim->add_option("--mode", opt.mode, "rates or decoherence")
      ->check(CLI::IsMember({"rates", "decoherence"}));
  optim->add_option("--seed", o.seed, "GA seed");
  optim->add_option("--threads", opt.threads, "Fitness threads (0: all cores)");

  auto* gencal = app.add_subcommand("gen-calib", "Write a template calibration file");
  gencal->add_option("--qubits", gen.qubits, "Number of qubits");
  gencal->add_option("--coupling", gen.coupling, "linear or full")->check(CLI::IsMember({"linear", "full"}));
  gencal->add_option("--out", gen_out, "Output directory (default: stdout)");

  std::vector<std::string> argv_store{"qnoise"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help(e.get_name() == "--help" ? "" : "", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  if (synth_opt->count() > 0) opt.synthetic_seed = synthetic;

  try {
    if (walk->parsed()) return cmd_walk(o, out);
    if (sim->parsed()) return cmd_simulate(o, out);
    if (compare->parsed()) return cmd_compare(o, models, out);
    if (optim->parsed()) return cmd_optimize(o, opt, out);
    if (gencal->parsed()) return cmd_gen_calib(gen, gen_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qnoise::cli
