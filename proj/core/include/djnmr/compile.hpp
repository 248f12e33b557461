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

#ifndef DJNMR_COMPILE_HPP
#define DJNMR_COMPILE_HPP

#include "djnmr/boolean_function.hpp"
#include "djnmr/oracles.hpp"
#include "djnmr/propagator.hpp"

// Lowering of phase oracles to pulse programs.
//
// The function's algebraic normal form drives the compilation (constant
// terms are a global phase and drop out):
//   - linear term x_k          ->  ZPULSE k 180
//   - quadratic term x_i x_j   ->  ZPULSE i -90, ZPULSE j -90, then a
//     net-flip-free echo of total coupling evolution 1/(2 J_ij):
//     DELAY 1/4J(i,j), PULSE i,j x 180, DELAY 1/4J(i,j), PULSE i,j x 180,
//     followed by z-rotations on spectator spins compensating their shift
//     evolution over the echo.
// The echo refocuses the pair's shifts and its couplings to spectators; the
// double pi pulses leave no spin-flip residue, so every gadget's propagator
// is diagonal and gadget order is immaterial.
//
// Every constant or balanced function on up to 3 bits has ANF degree <= 2
// (its top ANF coefficient is the popcount parity), so this lowering covers
// the full census; degree > 2 raises UnsupportedFunctionError.

namespace djnmr::nmr {

/// Compile f into a pulse program whose propagator is global-phase-equal to
/// build_phase_oracle(f). Composite mode expands every ZPULSE.
PulseSequence compile_oracle(const SpinSystem& sys, const oracles::BooleanFunction& f,
                             ZMode mode = ZMode::Ideal);

/// ANF-level entry point (also used to exercise the degree guard directly).
PulseSequence compile_from_anf(const SpinSystem& sys,
                               const oracles::AlgebraicNormalForm& anf, ZMode mode,
                               std::string name);

struct VerificationReport {
  double fidelity;          // |tr(target† U)| / 2^n
  double fidelity_local_z;  // maximized over per-spin z phase freedom
  double threshold;
  bool pass;                // fidelity >= 1 - threshold
};

/// Compile the sequence and compare against the target oracle, reporting
/// both the strict fidelity and the fidelity up to single-spin z phases.
VerificationReport verify_sequence(const SpinSystem& sys, const PulseSequence& seq,
                                   const oracles::PhaseOracle& target, ZMode mode,
                                   double tol = 1e-9);

}  // namespace djnmr::nmr

#endif  // DJNMR_COMPILE_HPP
