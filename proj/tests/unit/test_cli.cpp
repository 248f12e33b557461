// Copyright 2026 The djnmr Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

using djnmr::cli::CommandResult;
using djnmr::cli::run_capture;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::filesystem::path three_spin_config() {
  return write_temp("djnmr_cli_threespin.json", R"({
    "n_spins": 3,
    "shifts_hz": [300.0, 150.0, 0.0],
    "couplings_hz": {"1,2": 10.0, "1,3": 4.0, "2,3": 7.0}
  })");
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

std::string last_line(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line)) {
    if (!line.empty()) last = line;
  }
  return last;
}

}  // namespace

TEST_CASE("enumerate lists 72 rows for three qubits with a class footer") {
  CommandResult result = run_capture({"enumerate", "--n", "3"});
  CHECK(result.exit_code == 0);
  CHECK(count_lines(result.out) == 74);  // header + 72 rows + footer
  CHECK(last_line(result.out) ==
        "counts: total=72 NonEntangling=16 PartiallyEntangling=24 MaximallyEntangling=32");

  CommandResult csv = run_capture({"enumerate", "--n", "1", "--format", "csv"});
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("key,table,classification,entanglement\n", 0) == 0);
  CHECK(count_lines(csv.out) == 6);
}

TEST_CASE("enumerate rejects out-of-range n with exit code 2") {
  CommandResult result = run_capture({"enumerate", "--n", "0"});
  CHECK(result.exit_code == 2);
  CHECK(result.err.rfind("error:", 0) == 0);
  CHECK(run_capture({"enumerate", "--n", "4"}).exit_code == 2);
}

TEST_CASE("run prints the zero-state amplitude and the verdict") {
  CommandResult constant = run_capture({"run", "--n", "3", "--function", "U1"});
  CHECK(constant.exit_code == 0);
  CHECK(constant.out == "amplitude 1.000000, CONSTANT\n");

  CommandResult balanced = run_capture({"run", "--n", "3", "--function", "U6"});
  CHECK(balanced.exit_code == 0);
  CHECK(balanced.out == "amplitude 0.000000, BALANCED\n");

  CommandResult by_key = run_capture({"run", "--n", "2", "--function", "6"});
  CHECK(by_key.out == "amplitude 0.000000, BALANCED\n");
}

TEST_CASE("run rejects undecidable and unknown functions") {
  CommandResult neither = run_capture({"run", "--n", "2", "--function", "1"});
  CHECK(neither.exit_code == 2);
  CHECK(neither.err.find("neither constant nor balanced") != std::string::npos);

  CHECK(run_capture({"run", "--n", "2", "--function", "U9"}).exit_code == 2);
  CHECK(run_capture({"run", "--n", "2", "--function", "999"}).exit_code == 2);
  CHECK(run_capture({"run", "--n", "2", "--function", "x"}).exit_code == 2);
}

TEST_CASE("classify reports classification, entanglement, and partition") {
  CommandResult result = run_capture({"classify", "--n", "3", "--function", "U6"});
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "function: 00011110 (key 30)\n"
        "classification: BALANCED\n"
        "entanglement: PartiallyEntangling\n"
        "partition: {1}{2,3}\n");

  CommandResult neither = run_capture({"classify", "--n", "2", "--function", "1"});
  CHECK(neither.exit_code == 0);
  CHECK(neither.out == "function: 0001 (key 1)\nclassification: NEITHER\n");
}

TEST_CASE("compile emits the three-line composite program for a linear function") {
  auto config = three_spin_config();
  CommandResult result = run_capture(
      {"compile", "--config", config.string(), "--function", "U2", "--mode", "composite"});
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "PULSE 1 -x 90\n"
        "PULSE 1 y 180\n"
        "PULSE 1 x 90\n");
}

TEST_CASE("compile --verify reports PASS at the documented threshold") {
  auto config = three_spin_config();
  CommandResult result = run_capture(
      {"compile", "--config", config.string(), "--function", "U6", "--verify"});
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("# fidelity 1.000000000000\n") != std::string::npos);
  CHECK(result.out.find("# verify PASS\n") != std::string::npos);

  CommandResult neither = run_capture(
      {"compile", "--config", config.string(), "--function", "11", "--verify"});
  CHECK(neither.exit_code == 2);

  CommandResult missing = run_capture(
      {"compile", "--config", "/nonexistent.json", "--function", "U1"});
  CHECK(missing.exit_code == 2);
}

TEST_CASE("simulate writes the spectrum CSV and prints verdict and operators") {
  auto config = three_spin_config();
  std::filesystem::path csv = std::filesystem::temp_directory_path() / "djnmr_cli_u6.csv";
  CommandResult result = run_capture({"simulate", "--config", config.string(), "--function",
                                      "U6", "--out", csv.string(), "--ops"});
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("-1.000000 I1x\n") != std::string::npos);
  CHECK(result.out.find("+1.000000 2I2xI3z\n") != std::string::npos);
  CHECK(result.out.find("+1.000000 2I2zI3x\n") != std::string::npos);
  CHECK(last_line(result.out) == "BALANCED");

  std::ifstream in(csv);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(count_lines(buf.str()) == 13);  // header + 12 lines

  CommandResult verdict = run_capture({"spectrum-verdict", "--in", csv.string()});
  CHECK(verdict.exit_code == 0);
  CHECK(verdict.out == "BALANCED\n");
  std::filesystem::remove(csv);
}

TEST_CASE("simulate of U9 lists the three-spin antiphase term") {
  auto config = three_spin_config();
  std::filesystem::path csv = std::filesystem::temp_directory_path() / "djnmr_cli_u9.csv";
  CommandResult result = run_capture({"simulate", "--config", config.string(), "--function",
                                      "U9", "--out", csv.string(), "--ops"});
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("4I1zI2xI3z\n") != std::string::npos);
  CHECK(last_line(result.out) == "BALANCED");
  std::filesystem::remove(csv);
}

TEST_CASE("identical invocations produce identical bytes") {
  auto config = three_spin_config();
  std::filesystem::path csv = std::filesystem::temp_directory_path() / "djnmr_cli_det.csv";
  auto invoke = [&]() {
    CommandResult r = run_capture({"simulate", "--config", config.string(), "--function", "U9",
                                   "--out", csv.string(), "--ops"});
    std::ifstream in(csv);
    std::stringstream buf;
    buf << in.rdbuf();
    return r.out + "|" + buf.str();
  };
  std::string first = invoke();
  std::string second = invoke();
  CHECK(first == second);
  std::filesystem::remove(csv);

  CommandResult a = run_capture({"enumerate", "--n", "3"});
  CommandResult b = run_capture({"enumerate", "--n", "3"});
  CHECK(a.out == b.out);
}

TEST_CASE("spectrum-verdict rejects malformed csv input") {
  auto bad = write_temp("djnmr_cli_bad.csv", "not,a,spectrum\n1,2,3\n");
  CommandResult result = run_capture({"spectrum-verdict", "--in", bad.string()});
  CHECK(result.exit_code == 2);
  CHECK(result.err.rfind("error:", 0) == 0);
  CHECK(run_capture({"spectrum-verdict", "--in", "/nonexistent.csv"}).exit_code == 2);
}

TEST_CASE("usage errors and the version banner") {
  CHECK(run_capture({"frobnicate"}).exit_code == 2);
  CHECK(run_capture({"run", "--n", "3"}).exit_code == 2);  // missing --function

  CommandResult version = run_capture({"--version"});
  CHECK(version.exit_code == 0);
  CHECK(version.out == "0.1.0\n");

  CommandResult help = run_capture({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("enumerate") != std::string::npos);
}
