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

#ifndef DJNMR_PULSE_HPP
#define DJNMR_PULSE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "djnmr/spin_system.hpp"

// Pulse-program representation and its line-oriented text form:
//
//   PULSE <spin-list> <axis> <angle-deg>     e.g.  PULSE 2,3 x 180
//   DELAY <seconds | k/mJ(i,j)>              e.g.  DELAY 1/2J(2,3)
//   ZPULSE <spin> <angle-deg>                expands per mode (ideal | composite)
//   # comment
//
// Elements are in time order: the first element is applied first. Pulses
// are instantaneous; all angles lie in (-2pi, 2pi].

namespace djnmr::nmr {

enum class Axis { X, MinusX, Y, MinusY, Z, MinusZ };

const char* axis_token(Axis axis);
Axis axis_from_token(const std::string& token);
/// +1 for x/y/z, -1 for the negated axes.
int axis_sign(Axis axis);

struct HardPulse {
  std::vector<int> spins;  // ascending, no duplicates
  Axis axis;
  double angle_rad;
};

/// A z-rotation whose realization (ideal or composite) is chosen when the
/// sequence is compiled to a propagator.
struct ZPulse {
  int spin;
  double angle_rad;
};

/// Rational symbolic delay (k/m) * 1/J(i,j).
struct SymbolicDelay {
  int numerator;
  int denominator;
  int spin_i;  // i < j
  int spin_j;
};

struct Delay {
  std::optional<double> seconds;
  std::optional<SymbolicDelay> symbolic;
};

using PulseElement = std::variant<HardPulse, ZPulse, Delay>;

struct PulseSequence {
  std::string name;
  std::vector<PulseElement> elements;
};

/// Parse the DSL against a target spin system. Throws ParseError with the
/// 1-based line number on syntax errors, unknown spins, or references to
/// absent couplings.
PulseSequence parse_sequence(const std::string& text, const SpinSystem& sys,
                             std::string name = "");

/// Render back to DSL text (one line per element, trailing newline).
std::string format_sequence(const PulseSequence& seq);

/// Resolve a delay to seconds. Symbolic delays require a nonzero coupling;
/// the result must be finite and >= 0.
double resolve_delay(const SpinSystem& sys, const Delay& delay);

namespace detail {
/// Shared element validation (angle range, spin bounds, delay sanity).
void validate_element(const PulseElement& element, const SpinSystem& sys);
}  // namespace detail

}  // namespace djnmr::nmr

#endif  // DJNMR_PULSE_HPP
