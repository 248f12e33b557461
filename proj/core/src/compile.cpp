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

#include "djnmr/compile.hpp"

#include <cmath>
#include <numbers>

namespace djnmr::nmr {

namespace {

using qcore::Complex;

constexpr double kPi = std::numbers::pi;

/// Shift phase accumulated by a spectator over the echo, reduced to [-pi, pi].
double spectator_compensation(double shift_hz, double tau_seconds) {
  double turns = shift_hz * tau_seconds;
  double frac = turns - std::round(turns);
  return -2.0 * kPi * frac;
}

void emit_quadratic_gadget(const SpinSystem& sys, int i, int j,
                           std::vector<PulseElement>& elements) {
  double coupling = sys.coupling_hz(i, j);
  if (coupling == 0.0) {
    throw ValidationError("compile_oracle: term x" + std::to_string(i) + "x" +
                          std::to_string(j) + " needs a nonzero coupling J(" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
  }
  elements.emplace_back(ZPulse{i, -kPi / 2});
  elements.emplace_back(ZPulse{j, -kPi / 2});
  Delay quarter{.seconds = std::nullopt,
                .symbolic = SymbolicDelay{1, 4, std::min(i, j), std::max(i, j)}};
  elements.emplace_back(quarter);
  elements.emplace_back(HardPulse{{std::min(i, j), std::max(i, j)}, Axis::X, kPi});
  elements.emplace_back(quarter);
  elements.emplace_back(HardPulse{{std::min(i, j), std::max(i, j)}, Axis::X, kPi});

  double tau = 1.0 / (2.0 * coupling);
  for (int k = 1; k <= sys.n_spins(); ++k) {
    if (k == i || k == j) continue;
    double theta = spectator_compensation(sys.shift_hz(k), tau);
    if (std::abs(theta) > 1e-15) {
      elements.emplace_back(ZPulse{k, theta});
    }
  }
}

}  // namespace

PulseSequence compile_from_anf(const SpinSystem& sys,
                               const oracles::AlgebraicNormalForm& anf, ZMode mode,
                               std::string name) {
  if (anf.degree > 2) {
    throw UnsupportedFunctionError(
        "compile_oracle: algebraic normal form of degree " + std::to_string(anf.degree) +
        " is not compilable with pairwise couplings");
  }
  PulseSequence seq;
  seq.name = std::move(name);
  for (const auto& [i, j] : anf.quadratic) {
    emit_quadratic_gadget(sys, i, j, seq.elements);
  }
  for (int k : anf.linear) {
    seq.elements.emplace_back(ZPulse{k, kPi});
  }
  if (mode == ZMode::Composite) {
    seq = expand_composite_z(seq);
  }
  for (const PulseElement& e : seq.elements) detail::validate_element(e, sys);
  return seq;
}

PulseSequence compile_oracle(const SpinSystem& sys, const oracles::BooleanFunction& f,
                             ZMode mode) {
  if (f.n_bits() != sys.n_spins()) {
    throw ValidationError("compile_oracle: function arity does not match the spin system");
  }
  if (oracles::classify(f) == oracles::Classification::Neither) {
    throw ValidationError("compile_oracle: function is neither constant nor balanced");
  }
  return compile_from_anf(sys, oracles::algebraic_normal_form(f), mode,
                          "f_" + f.table_string());
}

VerificationReport verify_sequence(const SpinSystem& sys, const PulseSequence& seq,
                                   const oracles::PhaseOracle& target, ZMode mode,
                                   double tol) {
  if (target.n_qubits() != sys.n_spins()) {
    throw ValidationError("verify_sequence: oracle arity does not match the spin system");
  }
  qcore::Operator u = sequence_propagator(sys, seq, mode);
  qcore::Operator t = target.to_operator();
  double strict = qcore::global_phase_equal(t, u, tol).fidelity;

  // Fidelity up to per-spin z phases: maximize |sum_x m_x prod_k z_k^{x_k}|
  // over unit-modulus z_k, with m = diag(target† U), by coordinate ascent.
  int n = sys.n_spins();
  Eigen::Index dim = u.dim();
  qcore::Vector m = (t.matrix().adjoint() * u.matrix()).diagonal();
  std::vector<Complex> z(static_cast<std::size_t>(n), Complex(1, 0));
  auto phased = [&](Eigen::Index x) {
    Complex p = m(x);
    for (int k = 1; k <= n; ++k) {
      if (qcore::qubit_bit(static_cast<int>(x), k, n)) p *= z[static_cast<std::size_t>(k - 1)];
    }
    return p;
  };
  double best = 0.0;
  for (int pass = 0; pass < 32; ++pass) {
    for (int k = 1; k <= n; ++k) {
      // Split the phased sum into the parts without / with spin k's factor.
      Complex a(0, 0), b(0, 0);
      for (Eigen::Index x = 0; x < dim; ++x) {
        Complex p = phased(x);
        if (qcore::qubit_bit(static_cast<int>(x), k, n)) {
          b += p / z[static_cast<std::size_t>(k - 1)];
        } else {
          a += p;
        }
      }
      if (std::abs(a) > 1e-15 && std::abs(b) > 1e-15) {
        z[static_cast<std::size_t>(k - 1)] = (a / std::abs(a)) * (std::conj(b) / std::abs(b));
      }
    }
    Complex total(0, 0);
    for (Eigen::Index x = 0; x < dim; ++x) total += phased(x);
    double value = std::abs(total) / static_cast<double>(dim);
    if (value <= best + 1e-15) {
      best = std::max(best, value);
      break;
    }
    best = value;
  }
  double relaxed = std::max(best, strict);

  return VerificationReport{strict, relaxed, tol, strict >= 1.0 - tol};
}

}  // namespace djnmr::nmr
