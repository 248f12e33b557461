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

#include "djnmr/qcore.hpp"

#include <cmath>
#include <string>

namespace djnmr::qcore {

namespace {

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw ValidationError(std::string(what) + ": entries must be finite");
  }
}

Eigen::Index pow2(int n) { return Eigen::Index{1} << n; }

}  // namespace

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix identity2() { return Matrix::Identity(2, 2); }

Operator::Operator(int n_qubits, Matrix entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {
  if (n_qubits_ < 1) {
    throw ValidationError("Operator: n_qubits must be >= 1");
  }
  if (entries_.rows() != pow2(n_qubits_) || entries_.cols() != pow2(n_qubits_)) {
    throw ValidationError("Operator: entries must be 2^n x 2^n");
  }
  require_finite(entries_, "Operator");
}

bool Operator::is_unitary(double tol) const {
  Matrix d = entries_.adjoint() * entries_ - Matrix::Identity(dim(), dim());
  return d.cwiseAbs().maxCoeff() <= tol;
}

Operator Operator::identity(int n_qubits) {
  Eigen::Index d = pow2(n_qubits);
  return Operator(n_qubits, Matrix::Identity(d, d));
}

StateVector::StateVector(int n_qubits, Vector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits_ < 1 || n_qubits_ > kMaxQubits) {
    throw ValidationError("StateVector: n_qubits must be in 1..4");
  }
  if (amplitudes_.size() != pow2(n_qubits_)) {
    throw ValidationError("StateVector: amplitude count must be 2^n");
  }
  if (!amplitudes_.allFinite()) {
    throw ValidationError("StateVector: amplitudes must be finite");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > 1e-10) {
    throw ValidationError("StateVector: state must be normalized");
  }
}

StateVector StateVector::basis(int n_qubits, int index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("StateVector: n_qubits must be in 1..4");
  }
  Eigen::Index d = pow2(n_qubits);
  if (index < 0 || index >= d) {
    throw ValidationError("StateVector: basis index out of range");
  }
  Vector v = Vector::Zero(d);
  v(index) = 1.0;
  return StateVector(n_qubits, std::move(v));
}

Operator kron(const Operator& a, const Operator& b) {
  const Matrix& am = a.matrix();
  const Matrix& bm = b.matrix();
  Eigen::Index ra = am.rows(), rb = bm.rows();
  Matrix out(ra * rb, ra * rb);
  for (Eigen::Index i = 0; i < ra; ++i) {
    for (Eigen::Index j = 0; j < ra; ++j) {
      out.block(i * rb, j * rb, rb, rb) = am(i, j) * bm;
    }
  }
  return Operator(a.n_qubits() + b.n_qubits(), std::move(out));
}

Operator hadamard_n(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("hadamard_n: n must be in 1..4");
  }
  Matrix h1(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h1 << s, s, s, -s;
  Operator h(1, h1);
  Operator out = h;
  for (int k = 1; k < n; ++k) {
    out = kron(out, h);
  }
  return out;
}

PhaseComparison global_phase_equal(const Operator& a, const Operator& b, double tol) {
  if (a.dim() != b.dim()) {
    throw ValidationError("global_phase_equal: dimension mismatch");
  }
  double fidelity = std::abs((a.matrix().adjoint() * b.matrix()).trace()) /
                    static_cast<double>(a.dim());
  return PhaseComparison{fidelity, fidelity >= 1.0 - tol};
}

StateVector apply(const Operator& u, const StateVector& psi) {
  if (u.dim() != psi.dim()) {
    throw ValidationError("apply: dimension mismatch");
  }
  return StateVector(psi.n_qubits(), u.matrix() * psi.amplitudes());
}

}  // namespace djnmr::qcore
