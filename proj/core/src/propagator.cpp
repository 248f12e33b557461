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

#include "djnmr/propagator.hpp"

#include <cmath>
#include <numbers>
#include <set>

namespace djnmr::nmr {

namespace {

using qcore::Complex;
using qcore::Matrix;

constexpr double kPi = std::numbers::pi;

Matrix axis_generator(Axis axis) {
  switch (axis) {
    case Axis::X:
    case Axis::MinusX:
      return qcore::pauli_x();
    case Axis::Y:
    case Axis::MinusY:
      return qcore::pauli_y();
    default:
      return qcore::pauli_z();
  }
}

/// exp(-i angle sigma_a / 2) = cos(angle/2) I - i sin(angle/2) sigma_a
Matrix single_spin_rotation(Axis axis, double angle_rad) {
  double half = axis_sign(axis) * angle_rad / 2.0;
  return std::cos(half) * qcore::identity2() -
         Complex(0, 1) * std::sin(half) * axis_generator(axis);
}

}  // namespace

qcore::Operator rotation_propagator(const SpinSystem& sys, const std::vector<int>& spins,
                                    Axis axis, double angle_rad, bool allow_z) {
  if ((axis == Axis::Z || axis == Axis::MinusZ) && !allow_z) {
    throw ValidationError(
        "rotation_propagator: hard pulses are transverse; use composite_z or the ideal flag");
  }
  if (spins.empty()) throw ValidationError("rotation_propagator: empty spin set");
  std::set<int> selected;
  for (int s : spins) {
    if (s < 1 || s > sys.n_spins()) {
      throw ValidationError("unknown spin " + std::to_string(s));
    }
    if (!selected.insert(s).second) {
      throw ValidationError("duplicate spin " + std::to_string(s));
    }
  }

  // Terms on distinct spins commute, so the exponential factorizes spinwise.
  Matrix r = single_spin_rotation(axis, angle_rad);
  qcore::Operator out(1, selected.contains(1) ? r : qcore::identity2());
  for (int s = 2; s <= sys.n_spins(); ++s) {
    out = qcore::kron(out, qcore::Operator(1, selected.contains(s) ? r : qcore::identity2()));
  }
  return out;
}

qcore::Operator delay_propagator(const SpinSystem& sys, double seconds) {
  if (!std::isfinite(seconds) || seconds < 0) {
    throw ValidationError("delay duration must be finite and >= 0");
  }
  int n = sys.n_spins();
  Eigen::Index dim = Eigen::Index{1} << n;
  Matrix u = Matrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    // Iz eigenvalue +1/2 for |0>, -1/2 for |1>.
    double energy = 0.0;
    for (int i = 1; i <= n; ++i) {
      double mi = qcore::qubit_bit(static_cast<int>(x), i, n) ? -0.5 : 0.5;
      energy += sys.shift_hz(i) * mi;
      for (int j = i + 1; j <= n; ++j) {
        double mj = qcore::qubit_bit(static_cast<int>(x), j, n) ? -0.5 : 0.5;
        energy += sys.coupling_hz(i, j) * mi * mj;
      }
    }
    u(x, x) = std::exp(Complex(0, -2.0 * kPi * seconds * energy));
  }
  return qcore::Operator(n, std::move(u));
}

PulseSequence composite_z(const SpinSystem& sys, int spin, double theta_rad) {
  if (spin < 1 || spin > sys.n_spins()) {
    throw ValidationError("unknown spin " + std::to_string(spin));
  }
  PulseSequence seq;
  seq.name = "composite_z";
  seq.elements = {
      HardPulse{{spin}, Axis::MinusX, kPi / 2},
      HardPulse{{spin}, Axis::Y, theta_rad},
      HardPulse{{spin}, Axis::X, kPi / 2},
  };
  for (const PulseElement& e : seq.elements) detail::validate_element(e, sys);
  return seq;
}

PulseSequence expand_composite_z(const PulseSequence& seq) {
  PulseSequence out;
  out.name = seq.name;
  for (const PulseElement& element : seq.elements) {
    if (const auto* z = std::get_if<ZPulse>(&element)) {
      out.elements.emplace_back(HardPulse{{z->spin}, Axis::MinusX, kPi / 2});
      out.elements.emplace_back(HardPulse{{z->spin}, Axis::Y, z->angle_rad});
      out.elements.emplace_back(HardPulse{{z->spin}, Axis::X, kPi / 2});
    } else {
      out.elements.push_back(element);
    }
  }
  return out;
}

qcore::Operator sequence_propagator(const SpinSystem& sys, const PulseSequence& seq,
                                    ZMode mode) {
  if (mode == ZMode::Composite) {
    return sequence_propagator(sys, expand_composite_z(seq), ZMode::Ideal);
  }
  qcore::Operator u = qcore::Operator::identity(sys.n_spins());
  for (const PulseElement& element : seq.elements) {
    detail::validate_element(element, sys);
    qcore::Operator step = [&]() {
      if (const auto* pulse = std::get_if<HardPulse>(&element)) {
        // Explicit z-axis PULSE lines are ideal rotations in either mode.
        return rotation_propagator(sys, pulse->spins, pulse->axis, pulse->angle_rad,
                                   /*allow_z=*/true);
      }
      if (const auto* z = std::get_if<ZPulse>(&element)) {
        return rotation_propagator(sys, {z->spin}, Axis::Z, z->angle_rad, /*allow_z=*/true);
      }
      return delay_propagator(sys, resolve_delay(sys, std::get<Delay>(element)));
    }();
    u = qcore::Operator(sys.n_spins(), step.matrix() * u.matrix());
  }
  return u;
}

}  // namespace djnmr::nmr
