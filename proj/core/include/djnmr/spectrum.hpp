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

#ifndef DJNMR_SPECTRUM_HPP
#define DJNMR_SPECTRUM_HPP

#include <string>
#include <vector>

#include "djnmr/boolean_function.hpp"
#include "djnmr/density.hpp"
#include "djnmr/spin_system.hpp"

namespace djnmr::nmr {

/// One first-order multiplet line of one spin.
///
/// partner_config holds the z states of the other spins in ascending spin
/// order (leftmost bit = lowest-numbered partner, 0 = |0> = m +1/2); its
/// string form is e.g. "01", or "-" when the system has a single spin.
struct SpectralLine {
  int spin;
  double frequency_hz;
  qcore::Complex amplitude;
  unsigned partner_config;
  std::string partner_config_string(int n_spins) const;
};

struct StickSpectrum {
  int n_spins = 0;
  std::vector<SpectralLine> lines;        // sorted by spin, then frequency
  std::vector<std::string> warnings;      // degenerate-frequency reports
};

/// One line per (spin, partner configuration): amplitude <p|rho|q> where p,q
/// differ only in the observed spin (q has it in |0>), frequency
/// shift_i + sum_j J_ij m_j.
StickSpectrum render_spectrum(const DensityOperator& rho, const SpinSystem& sys);

/// CSV with header "spin,frequency_hz,amp_real,amp_imag,partner_config",
/// frequencies and amplitudes to six decimals.
std::string spectrum_to_csv(const StickSpectrum& spectrum);

StickSpectrum spectrum_from_csv(const std::string& text);

struct SpectralVerdict {
  oracles::Classification kind;  // Constant or Balanced
  double min_in_phase;           // smallest in-phase component over all lines
};

/// Constant iff every line is in phase with the constant-function reference,
/// whose lines are real and positive under this simulator's conventions
/// (thermal Iz taken through the (90°)_y preparation); the in-phase
/// component is therefore Re(amplitude).
SpectralVerdict spectral_verdict(const StickSpectrum& spectrum);

}  // namespace djnmr::nmr

#endif  // DJNMR_SPECTRUM_HPP
