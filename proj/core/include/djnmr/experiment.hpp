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

#ifndef DJNMR_EXPERIMENT_HPP
#define DJNMR_EXPERIMENT_HPP

#include "djnmr/compile.hpp"
#include "djnmr/spectrum.hpp"

namespace djnmr::nmr {

struct ExperimentResult {
  PulseSequence sequence;
  DensityOperator rho_final;
  StickSpectrum spectrum;
};

/// Full single-query run on the spin system: thermal deviation state, a
/// non-selective (90°)_y preparation pulse on all spins, then the compiled
/// oracle sequence. Detection reads the transverse magnetization directly;
/// the closing transform and the read-out pulse cancel and are not applied.
ExperimentResult run_experiment(const SpinSystem& sys, const oracles::BooleanFunction& f,
                                ZMode mode = ZMode::Ideal);

}  // namespace djnmr::nmr

#endif  // DJNMR_EXPERIMENT_HPP
