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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qnoise/calibration.hpp"
#include "qnoise/cli.hpp"
#include "qnoise/metrics.hpp"
#include "qnoise/qstate.hpp"

namespace qnoise {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::current_path() / "cli_test_output" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

TEST(Cli, IdealWalkCsv) {
  const Result r = run({"walk", "--states", "4", "--steps", "1", "--model", "ideal"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, a, b, extra;
  std::getline(lines, header);
  std::getline(lines, a);
  std::getline(lines, b);
  EXPECT_EQ(header, "outcome,probability");
  EXPECT_EQ(a.substr(0, 2), "1,");
  EXPECT_NEAR(std::stod(a.substr(2)), 0.5, 1e-12);
  EXPECT_EQ(b.substr(0, 2), "3,");
  EXPECT_NEAR(std::stod(b.substr(2)), 0.5, 1e-12);
  EXPECT_FALSE(std::getline(lines, extra));
}

TEST(Cli, NonPowerOfTwoIsUsageError) {
  const Result r = run({"walk", "--states", "6"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("power of two"), std::string::npos);
}

TEST(Cli, BadFlagsAreUsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"walk", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"walk", "--model", "qiskit"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"walk", "--control-trc", "sometimes"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"walk", "--calib", "/nonexistent.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"compare", "--models", "unm"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, InvalidCalibrationIsFailure) {
  const fs::path dir = fresh_dir("bad_calib");
  CalibrationData cal = uniform_calibration(Architecture::linear(4));
  std::string text = calibration_to_json(cal);
  const auto pos = text.find("\"T2_us\": 56.01");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 14, "\"T2_us\": 500.0");
  write(dir / "cal.json", text);
  const Result r = run({"walk", "--calib", (dir / "cal.json").string()});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.err.find("T2"), std::string::npos);
}

TEST(Cli, UncoveredCircuitIsFailure) {
  const fs::path dir = fresh_dir("small_calib");
  write(dir / "cal.json", calibration_to_json(uniform_calibration(Architecture::linear(3))));
  EXPECT_EQ(run({"walk", "--calib", (dir / "cal.json").string()}).code, cli::kExitFailure);
}

TEST(Cli, GenCalibRoundTrips) {
  const fs::path dir = fresh_dir("gen_calib");
  ASSERT_EQ(run({"gen-calib", "--qubits", "6", "--out", dir.string()}).code, 0);
  const CalibrationData cal = load_calibration_file(dir / "calibration.json");
  EXPECT_EQ(cal.qubits.size(), 6U);
  EXPECT_DOUBLE_EQ(cal.cnot_gate(4, 5).error_rate, 3.17e-2);
  const Result stdout_run = run({"gen-calib", "--qubits", "2", "--coupling", "full"});
  EXPECT_NO_THROW(load_calibration(stdout_run.out));
}

TEST(Cli, WalkShotsWritesCountsAndSummary) {
  const fs::path dir = fresh_dir("walk8");
  ASSERT_EQ(run({"gen-calib", "--qubits", "6", "--out", dir.string()}).code, 0);
  const Result r = run({"walk", "--states", "8", "--steps", "1", "--model", "unm", "--calib",
                        (dir / "calibration.json").string(), "--shots", "100000", "--seed", "7", "--out",
                        (dir / "run").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* f : {"circuit.txt", "distribution.csv", "counts.csv", "summary.json"}) {
    EXPECT_TRUE(fs::exists(dir / "run" / f)) << f;
  }
  const auto summary = nlohmann::json::parse(slurp(dir / "run" / "summary.json"));
  EXPECT_LE(summary["shots"]["hellinger_to_exact"].get<double>(), 0.01);
  EXPECT_EQ(summary["census"]["total"].get<int>(), 14);
  EXPECT_GT(summary["exact"]["hellinger_to_ideal"].get<double>(), 0.0);
}

TEST(Cli, ExactFlagSuppressesSampling) {
  const fs::path dir = fresh_dir("exact");
  ASSERT_EQ(run({"walk", "--shots", "1000", "--exact", "--out", dir.string()}).code, 0);
  EXPECT_FALSE(fs::exists(dir / "counts.csv"));
  EXPECT_TRUE(fs::exists(dir / "distribution.csv"));
}

TEST(Cli, CompareZeroNoiseGivesZeroDistanceToIdeal) {
  const fs::path dir = fresh_dir("compare_zero");
  UniformCalibration v;
  v.single_qubit_error = v.two_qubit_error = v.readout_error = 0.0;
  v.single_qubit_duration_ns = v.two_qubit_duration_ns = 0.0;
  write(dir / "cal.json", calibration_to_json(uniform_calibration(Architecture::linear(4), v)));
  const Result r = run({"compare", "--states", "4", "--calib", (dir / "cal.json").string(), "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(slurp(dir / "compare.json"));
  const auto models = doc["models"].get<std::vector<std::string>>();
  const auto h = doc["hellinger"].get<std::vector<std::vector<double>>>();
  const auto ideal = static_cast<std::size_t>(std::find(models.begin(), models.end(), "IDEAL") - models.begin());
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (models[i] != "UNIFORM") {
      EXPECT_LE(h[i][ideal], 1e-7) << models[i];
    }
  }
}

TEST(Cli, CompareTableIsReproducible) {
  const Result a = run({"compare", "--states", "4"});
  const Result b = run({"compare", "--states", "4"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("UNIFORM"), std::string::npos);
  EXPECT_NE(a.out.find("0.541196"), std::string::npos);  // IDEAL vs UNIFORM
}

TEST(Cli, SimulateCircuitFile) {
  const fs::path dir = fresh_dir("simulate");
  write(dir / "bell.txt", "H 0\nCNOT 0 1\nMEASURE 0 1\n");
  const Result r = run({"simulate", "--circuit", (dir / "bell.txt").string(), "--model", "ideal"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream csv(r.out);
  std::string line;
  std::getline(csv, line);
  std::map<int, double> probs;
  while (std::getline(csv, line)) probs[std::stoi(line)] = std::stod(line.substr(line.find(',') + 1));
  ASSERT_EQ(probs.size(), 2U);
  EXPECT_NEAR(probs[0], 0.5, 1e-12);
  EXPECT_NEAR(probs[3], 0.5, 1e-12);
  write(dir / "bad.txt", "CNOT 0 2\nMEASURE 0\n");
  EXPECT_EQ(run({"simulate", "--circuit", (dir / "bad.txt").string()}).code, cli::kExitFailure);
}

TEST(Cli, OptimizeMissingTargetExitsTwo) {
  const Result r = run({"optimize", "--target", "/nonexistent/target.csv", "--generations", "1"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_EQ(run({"optimize", "--generations", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"optimize", "--target", "x.csv", "--synthetic-target", "1"}).code, cli::kExitUsage);
}

TEST(Cli, OptimizeAgainstTargetFile) {
  const fs::path dir = fresh_dir("optimize_target");
  ASSERT_EQ(run({"walk", "--states", "4", "--model", "unm", "--out", (dir / "walk").string()}).code, 0);
  const Result r = run({"optimize", "--states", "4", "--target", (dir / "walk" / "distribution.csv").string(),
                        "--generations", "3", "--population", "6", "--seed", "2", "--out", (dir / "opt").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = nlohmann::json::parse(slurp(dir / "opt" / "report.json"));
  EXPECT_LE(report["final_distance"].get<double>(), report["initial_distance"].get<double>());
  EXPECT_LE(report["initial_distance"].get<double>(), 1e-6);
  EXPECT_EQ(report["parameters"].size(), 9U);
  EXPECT_EQ(report["history"].size(), 4U);
}

TEST(Cli, OptimizeRejectsTargetWiderThanCircuit) {
  const fs::path dir = fresh_dir("optimize_wide");
  write(dir / "t.csv", "outcome,probability\n0,0.5\n9,0.5\n");
  const Result r = run({"optimize", "--target", (dir / "t.csv").string(), "--generations", "1"});
  EXPECT_EQ(r.code, cli::kExitFailure);
}

TEST(Cli, RepeatedRunsWriteIdenticalFiles) {
  const fs::path a = fresh_dir("repeat_a");
  const fs::path b = fresh_dir("repeat_b");
  for (const auto& dir : {a, b}) {
    ASSERT_EQ(run({"walk", "--states", "4", "--shots", "5000", "--seed", "11", "--out", dir.string()}).code, 0);
  }
  for (const char* f : {"circuit.txt", "distribution.csv", "counts.csv", "summary.json"}) {
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
}

}  // namespace
}  // namespace qnoise
