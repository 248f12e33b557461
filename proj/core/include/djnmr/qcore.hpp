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

#ifndef DJNMR_QCORE_HPP
#define DJNMR_QCORE_HPP

#include <complex>

#include <Eigen/Dense>

#include "djnmr/errors.hpp"

// Dense complex linear algebra for up to four qubits.
//
// Basis convention: basis index x encodes the bit string x1..xn with
// qubit 1 as the most significant bit, i.e. |x1 x2 .. xn>.
// All values are immutable after construction; every function here is pure.

namespace djnmr::qcore {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 4;
inline constexpr double kDefaultTol = 1e-9;

/// Bit of `qubit` (1-based, qubit 1 most significant) in basis index `index`.
inline int qubit_bit(int index, int qubit, int n_qubits) {
  return (index >> (n_qubits - qubit)) & 1;
}

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix identity2();

/// A 2^n x 2^n complex matrix acting on n qubits. Entries must be finite.
class Operator {
 public:
  Operator(int n_qubits, Matrix entries);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

  /// max|U†U - I| <= tol
  bool is_unitary(double tol = 1e-10) const;

  static Operator identity(int n_qubits);

 private:
  int n_qubits_;
  Matrix entries_;
};

/// A normalized n-qubit state, 1 <= n <= 4. |sum |a|^2 - 1| <= 1e-10.
class StateVector {
 public:
  StateVector(int n_qubits, Vector amplitudes);

  static StateVector basis(int n_qubits, int index);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex amplitude(int index) const { return amplitudes_(index); }

 private:
  int n_qubits_;
  Vector amplitudes_;
};

/// Kronecker product; the left factor holds the more significant qubits.
/// Multi-factor products are assembled as a left fold: ((a ⊗ b) ⊗ c) ...
Operator kron(const Operator& a, const Operator& b);

/// n-fold Hadamard transform with entries ±2^{-n/2}, 1 <= n <= 4.
Operator hadamard_n(int n);

struct PhaseComparison {
  double fidelity;  // |tr(a†b)| / 2^n
  bool equal;       // fidelity >= 1 - tol
};

/// Compare two equal-dimension operators up to a global phase.
PhaseComparison global_phase_equal(const Operator& a, const Operator& b,
                                   double tol = kDefaultTol);

/// u * psi. The caller guarantees u is unitary; the result is re-validated
/// against the state-norm invariant.
StateVector apply(const Operator& u, const StateVector& psi);

}  // namespace djnmr::qcore

#endif  // DJNMR_QCORE_HPP
