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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "djnmr/entangle.hpp"
#include "djnmr/experiment.hpp"
#include "djnmr/version.hpp"

namespace djnmr::cli {

namespace {

using oracles::BooleanFunction;
using oracles::Classification;

BooleanFunction resolve_function(int n, const std::string& token) {
  if (token.empty()) throw ValidationError("empty function selector");
  if (token[0] == 'U' || token[0] == 'u') {
    for (const oracles::CanonicalOperator& op : oracles::canonical_operators(n)) {
      if (op.name.size() == token.size() &&
          std::equal(op.name.begin(), op.name.end(), token.begin(),
                     [](char a, char b) { return std::toupper(a) == std::toupper(b); })) {
        return op.oracle.function();
      }
    }
    throw ValidationError("unknown canonical operator '" + token + "' for n=" +
                          std::to_string(n));
  }
  std::uint64_t key = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), key);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ValidationError("function selector '" + token +
                          "' is neither a truth-table integer nor a canonical name");
  }
  return BooleanFunction::from_key(n, key);
}

nmr::ZMode parse_mode(const std::string& mode) {
  if (mode == "ideal") return nmr::ZMode::Ideal;
  if (mode == "composite") return nmr::ZMode::Composite;
  throw ValidationError("mode must be 'ideal' or 'composite'");
}

void require_decision(const BooleanFunction& f) {
  if (oracles::classify(f) == Classification::Neither) {
    throw ValidationError("function " + f.table_string() + " is neither constant nor balanced");
  }
}

void cmd_enumerate(int n, const std::string& format, std::ostream& out) {
  if (format != "table" && format != "csv") {
    throw ValidationError("format must be 'table' or 'csv'");
  }
  std::vector<oracles::BooleanFunction> functions = oracles::enumerate_functions(n);
  std::map<entangle::EntanglementKind, int> counts;

  bool csv = format == "csv";
  int table_width = std::max(5, 1 << n);
  char buf[160];
  if (csv) {
    out << "key,table,classification,entanglement\n";
  } else {
    std::snprintf(buf, sizeof(buf), "%5s  %-*s  %-14s  %s\n", "key", table_width, "table",
                  "classification", "entanglement");
    out << buf;
  }
  for (const BooleanFunction& f : functions) {
    entangle::EntanglementClass cls =
        entangle::finest_factorization(oracles::build_phase_oracle(f));
    ++counts[cls.kind];
    if (csv) {
      out << f.key() << ',' << f.table_string() << ',' << to_string(classify(f)) << ','
          << to_string(cls.kind) << '\n';
    } else {
      std::snprintf(buf, sizeof(buf), "%5llu  %-*s  %-14s  %s\n",
                    static_cast<unsigned long long>(f.key()), table_width,
                    f.table_string().c_str(), to_string(classify(f)), to_string(cls.kind));
      out << buf;
    }
  }
  std::snprintf(buf, sizeof(buf),
                "%stotal=%zu NonEntangling=%d PartiallyEntangling=%d MaximallyEntangling=%d\n",
                csv ? "# " : "counts: ", functions.size(),
                counts[entangle::EntanglementKind::NonEntangling],
                counts[entangle::EntanglementKind::PartiallyEntangling],
                counts[entangle::EntanglementKind::MaximallyEntangling]);
  out << buf;
}

void cmd_run(int n, const std::string& token, std::ostream& out) {
  BooleanFunction f = resolve_function(n, token);
  require_decision(f);
  oracles::DeutschJozsaRun result = oracles::run_dj(f);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "amplitude %.6f, %s\n",
                std::abs(result.verdict.zero_state_amplitude),
                result.verdict.kind == oracles::VerdictKind::Constant ? "CONSTANT" : "BALANCED");
  out << buf;
}

void cmd_classify(int n, const std::string& token, std::ostream& out) {
  BooleanFunction f = resolve_function(n, token);
  Classification c = classify(f);
  out << "function: " << f.table_string() << " (key " << f.key() << ")\n";
  out << "classification: " << to_string(c) << '\n';
  if (c != Classification::Neither) {
    entangle::EntanglementClass cls =
        entangle::finest_factorization(oracles::build_phase_oracle(f));
    out << "entanglement: " << to_string(cls.kind) << '\n';
    out << "partition: " << cls.finest_partition.to_string() << '\n';
  }
}

void cmd_compile(const std::string& config, const std::string& token, const std::string& mode,
                 bool verify, std::ostream& out) {
  nmr::SpinSystem sys = nmr::load_spin_system(config);
  BooleanFunction f = resolve_function(sys.n_spins(), token);
  nmr::ZMode zmode = parse_mode(mode);
  nmr::PulseSequence seq = nmr::compile_oracle(sys, f, zmode);
  out << nmr::format_sequence(seq);
  if (verify) {
    nmr::VerificationReport report =
        nmr::verify_sequence(sys, seq, oracles::build_phase_oracle(f), zmode);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "# fidelity %.12f\n# fidelity-local-z %.12f\n# verify %s\n",
                  report.fidelity, report.fidelity_local_z, report.pass ? "PASS" : "FAIL");
    out << buf;
  }
}

void cmd_simulate(const std::string& config, const std::string& token, const std::string& mode,
                  const std::string& out_path, bool ops, std::ostream& out, std::ostream& err) {
  nmr::SpinSystem sys = nmr::load_spin_system(config);
  BooleanFunction f = resolve_function(sys.n_spins(), token);
  nmr::ExperimentResult result = nmr::run_experiment(sys, f, parse_mode(mode));

  std::ofstream file(out_path);
  if (!file) throw ValidationError("cannot write spectrum file '" + out_path + "'");
  file << nmr::spectrum_to_csv(result.spectrum);
  file.close();

  for (const std::string& warning : result.spectrum.warnings) {
    err << "warning: " << warning << '\n';
  }
  if (ops) {
    for (const nmr::ProductOperatorTerm& term :
         nmr::product_operator_decomposition(result.rho_final)) {
      out << nmr::format_term(term) << '\n';
    }
  }
  out << to_string(nmr::spectral_verdict(result.spectrum).kind) << '\n';
}

void cmd_spectrum_verdict(const std::string& in_path, std::ostream& out) {
  std::ifstream file(in_path);
  if (!file) throw ValidationError("cannot open spectrum file '" + in_path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  nmr::StickSpectrum spectrum = nmr::spectrum_from_csv(buf.str());
  out << to_string(nmr::spectral_verdict(spectrum).kind) << '\n';
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deutsch-Jozsa simulator with an NMR product-operator back end"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(0, 1);

  int n = 0;
  std::string function, config, format = "table", mode = "ideal", out_path, in_path;
  bool verify = false, ops = false;

  CLI::App* c_enumerate = app.add_subcommand("enumerate", "List all constant and balanced functions");
  c_enumerate->add_option("--n", n, "qubit count (1..3)")->required();
  c_enumerate->add_option("--format", format, "table|csv");

  CLI::App* c_run = app.add_subcommand("run", "Single-query constant/balanced verdict");
  c_run->add_option("--n", n, "qubit count (1..3)")->required();
  c_run->add_option("--function", function, "truth-table integer or canonical name (U1..)")
      ->required();

  CLI::App* c_classify = app.add_subcommand("classify", "Classification and entangling power");
  c_classify->add_option("--n", n, "qubit count (1..3)")->required();
  c_classify->add_option("--function", function, "truth-table integer or canonical name")
      ->required();

  CLI::App* c_compile = app.add_subcommand("compile", "Compile a function to a pulse program");
  c_compile->add_option("--config", config, "spin-system JSON file")->required();
  c_compile->add_option("--function", function, "truth-table integer or canonical name")
      ->required();
  c_compile->add_option("--mode", mode, "ideal|composite");
  c_compile->add_flag("--verify", verify, "verify the compiled propagator against the oracle");

  CLI::App* c_simulate = app.add_subcommand("simulate", "Run the spin-system experiment");
  c_simulate->add_option("--config", config, "spin-system JSON file")->required();
  c_simulate->add_option("--function", function, "truth-table integer or canonical name")
      ->required();
  c_simulate->add_option("--mode", mode, "ideal|composite");
  c_simulate->add_option("--out", out_path, "spectrum CSV output path")->required();
  c_simulate->add_flag("--ops", ops, "print the product-operator decomposition");

  CLI::App* c_verdict = app.add_subcommand("spectrum-verdict", "Verdict from a spectrum CSV");
  c_verdict->add_option("--in", in_path, "spectrum CSV path")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (c_enumerate->parsed()) {
      cmd_enumerate(n, format, out);
    } else if (c_run->parsed()) {
      cmd_run(n, function, out);
    } else if (c_classify->parsed()) {
      cmd_classify(n, function, out);
    } else if (c_compile->parsed()) {
      cmd_compile(config, function, mode, verify, out);
    } else if (c_simulate->parsed()) {
      cmd_simulate(config, function, mode, out_path, ops, out, err);
    } else if (c_verdict->parsed()) {
      cmd_spectrum_verdict(in_path, out);
    } else {
      out << app.help();
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

CommandResult run_capture(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(std::move(args), out, err);
  return CommandResult{code, out.str(), err.str()};
}

}  // namespace djnmr::cli
