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

#include "djnmr/experiment.hpp"

#include <numbers>

namespace djnmr::nmr {

ExperimentResult run_experiment(const SpinSystem& sys, const oracles::BooleanFunction& f,
                                ZMode mode) {
  PulseSequence sequence = compile_oracle(sys, f, mode);

  std::vector<int> all_spins;
  for (int s = 1; s <= sys.n_spins(); ++s) all_spins.push_back(s);
  qcore::Operator prep =
      rotation_propagator(sys, all_spins, Axis::Y, std::numbers::pi / 2);

  DensityOperator rho = thermal_state(sys);
  rho = evolve(rho, prep);
  rho = evolve(rho, sequence_propagator(sys, sequence, mode));

  StickSpectrum spectrum = render_spectrum(rho, sys);
  return ExperimentResult{std::move(sequence), std::move(rho), std::move(spectrum)};
}

}  // namespace djnmr::nmr
