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

#ifndef DJNMR_PROPAGATOR_HPP
#define DJNMR_PROPAGATOR_HPP

#include <vector>

#include "djnmr/pulse.hpp"
#include "djnmr/qcore.hpp"

// Propagators under the conventions:
//   - active rotations U = exp(-i * angle * sum_k I_axis^k), I_a = sigma_a/2;
//   - weak-coupling Hamiltonian (Hz) H = sum_i shift_i Iz^i
//                                      + sum_{i<j} J_ij Iz^i Iz^j,
//     free evolution U(t) = exp(-i 2pi t H);
//   - a sequence propagator composes right-to-left in time:
//     U = U_N ... U_2 U_1 with element 1 applied first.

namespace djnmr::nmr {

/// How ZPULSE elements are realized when compiling a sequence.
enum class ZMode { Ideal, Composite };

/// Hard-pulse rotation on a spin set. Axes z/-z are rejected unless
/// allow_z is set (ideal z-rotations; composite_z is the pulsed route).
qcore::Operator rotation_propagator(const SpinSystem& sys, const std::vector<int>& spins,
                                    Axis axis, double angle_rad, bool allow_z = false);

/// Free evolution for `seconds` under the weak-coupling Hamiltonian.
qcore::Operator delay_propagator(const SpinSystem& sys, double seconds);

/// Composite z-rotation: (theta)_z realized as the time-ordered pulses
/// (pi/2)_{-x}, (theta)_y, (pi/2)_x, whose propagator is exactly
/// exp(-i theta Iz). (The conventional operator-product notation lists the
/// same three factors in reverse.)
PulseSequence composite_z(const SpinSystem& sys, int spin, double theta_rad);

/// Rewrite every ZPULSE into its composite three-pulse realization.
PulseSequence expand_composite_z(const PulseSequence& seq);

/// Compile a sequence to its propagator, realizing ZPULSE per `mode`.
qcore::Operator sequence_propagator(const SpinSystem& sys, const PulseSequence& seq,
                                    ZMode mode = ZMode::Ideal);

}  // namespace djnmr::nmr

#endif  // DJNMR_PROPAGATOR_HPP
