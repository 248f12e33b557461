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

#ifndef DJNMR_ORACLES_HPP
#define DJNMR_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "djnmr/boolean_function.hpp"
#include "djnmr/qcore.hpp"

namespace djnmr::oracles {

/// Diagonal ±1 unitary with signs[x] = (-1)^{f(x)}. A global -1 factor is
/// part of the sign vector (it is the oracle of the complement function).
class PhaseOracle {
 public:
  PhaseOracle(int n_qubits, std::vector<std::int8_t> signs);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return 1 << n_qubits_; }
  const std::vector<std::int8_t>& signs() const { return signs_; }
  int sign(int x) const { return signs_[static_cast<std::size_t>(x)]; }

  qcore::Operator to_operator() const;

  /// The Boolean function this oracle encodes: f(x) = (1 - sign(x)) / 2.
  BooleanFunction function() const;

  bool operator==(const PhaseOracle& other) const = default;

 private:
  int n_qubits_;
  std::vector<std::int8_t> signs_;
};

PhaseOracle build_phase_oracle(const BooleanFunction& f);

/// Sign-vector Kronecker product; left factor = more significant qubits.
PhaseOracle kron(const PhaseOracle& a, const PhaseOracle& b);

/// (n+1)-qubit permutation |x>|y> -> |x>|y XOR f(x)>, ancilla least
/// significant. Rejects Neither-classified f and n+1 > 4.
qcore::Operator build_ancilla_oracle(const BooleanFunction& f);

enum class VerdictKind { Constant, Balanced };

struct Verdict {
  VerdictKind kind;
  qcore::Complex zero_state_amplitude;
};

struct DeutschJozsaRun {
  qcore::StateVector final_state;
  Verdict verdict;
};

/// Single-query run: H^n U_f H^n |0..0>, verdict from the |0..0> amplitude
/// (threshold 0.5; the exact values are 1 and 0).
DeutschJozsaRun run_dj(const BooleanFunction& f);

struct CanonicalOperator {
  std::string name;                       // "U1", "U2", ...
  PhaseOracle oracle;                     // includes any global -1 factor
  Classification label;                   // Constant or Balanced
  std::optional<std::string> negated_of;  // set when this is -1 times an earlier entry
};

/// The named operators for n qubits: U1..U4 (n=1), U1..U8 (n=2),
/// U1..U9 (n=3), recovered numerically from their operator expressions.
std::vector<CanonicalOperator> canonical_operators(int n_qubits);

}  // namespace djnmr::oracles

#endif  // DJNMR_ORACLES_HPP
