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

#ifndef DJNMR_SPIN_SYSTEM_HPP
#define DJNMR_SPIN_SYSTEM_HPP

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "djnmr/errors.hpp"

namespace djnmr::nmr {

/// Weakly coupled spin-1/2 system: per-spin resonance offsets (Hz), scalar
/// couplings J_ij (Hz, keyed i<j), and thermal polarization weights.
class SpinSystem {
 public:
  SpinSystem(int n_spins, std::vector<double> shifts_hz,
             std::map<std::pair<int, int>, double> couplings_hz,
             std::vector<double> weights = {});

  int n_spins() const { return n_spins_; }
  double shift_hz(int spin) const;
  /// Symmetric lookup; 0.0 when the pair is not listed.
  double coupling_hz(int i, int j) const;
  double weight(int spin) const;
  const std::map<std::pair<int, int>, double>& couplings() const { return couplings_; }

 private:
  void check_spin(int spin) const;

  int n_spins_;
  std::vector<double> shifts_hz_;
  std::map<std::pair<int, int>, double> couplings_;
  std::vector<double> weights_;
};

/// Parse the JSON config document:
///   {"n_spins": 3, "shifts_hz": [...], "couplings_hz": {"1,2": 10.0, ...},
///    "weights": [...]}        (weights optional; unknown keys rejected)
SpinSystem spin_system_from_json(const std::string& json_text);

SpinSystem load_spin_system(const std::filesystem::path& path);

}  // namespace djnmr::nmr

#endif  // DJNMR_SPIN_SYSTEM_HPP
