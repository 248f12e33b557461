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

#include <bit>

#include "doctest.h"
#include "../testutil.hpp"

using namespace djnmr;
using qcore::Complex;
using qcore::Matrix;
using qcore::Operator;
using qcore::StateVector;

namespace {

Operator sigma_z_op() { return Operator(1, qcore::pauli_z()); }
Operator sigma_x_op() { return Operator(1, qcore::pauli_x()); }

}  // namespace

TEST_CASE("kron identity case") {
  Operator i1 = Operator::identity(1);
  Operator result = qcore::kron(i1, i1);
  CHECK(result.n_qubits() == 2);
  CHECK(testutil::max_abs_diff(result.matrix(), Matrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("kron of sigma_z factors is the parity diagonal") {
  Operator zz = qcore::kron(sigma_z_op(), sigma_z_op());
  Matrix expected = Matrix::Zero(4, 4);
  expected.diagonal() << 1, -1, -1, 1;
  CHECK(testutil::max_abs_diff(zz.matrix(), expected) == 0.0);
}

TEST_CASE("H tensor H on |00> gives the uniform superposition") {
  Operator hh = qcore::kron(qcore::hadamard_n(1), qcore::hadamard_n(1));
  StateVector psi = qcore::apply(hh, StateVector::basis(2, 0));
  for (int x = 0; x < 4; ++x) {
    CHECK(std::abs(psi.amplitude(x) - Complex(0.5, 0)) < 1e-15);
  }
}

TEST_CASE("kron dimensions multiply and association order is exact for sign matrices") {
  Operator a = sigma_z_op();
  Operator b = Operator::identity(1);
  Operator c = sigma_x_op();
  Operator left = qcore::kron(qcore::kron(a, b), c);
  Operator right = qcore::kron(a, qcore::kron(b, c));
  CHECK(left.dim() == 8);
  // ±1/0 entries multiply exactly, so both association orders agree bitwise.
  CHECK(testutil::max_abs_diff(left.matrix(), right.matrix()) == 0.0);

  Operator h = qcore::hadamard_n(1);
  Operator hl = qcore::kron(qcore::kron(h, h), h);
  Operator hr = qcore::kron(h, qcore::kron(h, h));
  CHECK(testutil::max_abs_diff(hl.matrix(), hr.matrix()) == 0.0);
}

TEST_CASE("kron associativity for random unitaries within float slack") {
  std::mt19937 rng(7);
  Operator a(1, testutil::random_unitary(2, rng));
  Operator b(1, testutil::random_unitary(2, rng));
  Operator c(1, testutil::random_unitary(2, rng));
  Operator left = qcore::kron(qcore::kron(a, b), c);
  Operator right = qcore::kron(a, qcore::kron(b, c));
  CHECK(testutil::max_abs_diff(left.matrix(), right.matrix()) < 1e-15);
}

TEST_CASE("hadamard_n(1) matches the one-qubit transform and squares to identity") {
  Operator h = qcore::hadamard_n(1);
  const double s = 1.0 / std::sqrt(2.0);
  Matrix expected(2, 2);
  expected << s, s, s, -s;
  CHECK(testutil::max_abs_diff(h.matrix(), expected) < 1e-15);

  Matrix h2 = h.matrix() * h.matrix();
  CHECK(testutil::max_abs_diff(h2, Matrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("hadamard_n(2) entry at row |01> col |11> is -1/2") {
  Operator h = qcore::hadamard_n(2);
  CHECK(std::abs(h.matrix()(0b01, 0b11) - Complex(-0.5, 0)) < 1e-15);
}

TEST_CASE("hadamard_n sign structure is (-1)^{x·y} for every n") {
  for (int n = 1; n <= 4; ++n) {
    Operator h = qcore::hadamard_n(n);
    double scale = std::pow(2.0, -n / 2.0);
    for (int x = 0; x < h.dim(); ++x) {
      for (int y = 0; y < h.dim(); ++y) {
        double sign = std::popcount(static_cast<unsigned>(x & y)) % 2 ? -1.0 : 1.0;
        CHECK(std::abs(h.matrix()(x, y) - Complex(sign * scale, 0)) < 1e-14);
      }
    }
  }
}

TEST_CASE("hadamard_n is unitary and self-inverse for all supported n") {
  for (int n = 1; n <= 4; ++n) {
    Operator h = qcore::hadamard_n(n);
    CHECK(h.is_unitary(1e-12));
    Matrix sq = h.matrix() * h.matrix();
    CHECK(testutil::max_abs_diff(sq, Matrix::Identity(h.dim(), h.dim())) <= 1e-12);
  }
  CHECK_THROWS_AS(qcore::hadamard_n(0), ValidationError);
  CHECK_THROWS_AS(qcore::hadamard_n(5), ValidationError);
}

TEST_CASE("global_phase_equal fidelity values") {
  std::mt19937 rng(11);
  Operator u(2, testutil::random_unitary(4, rng));
  Operator minus_u(2, Matrix(-u.matrix()));

  auto same = qcore::global_phase_equal(u, u, 0.0);
  CHECK(same.fidelity == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(same.equal);

  auto negated = qcore::global_phase_equal(u, minus_u, 1e-12);
  CHECK(negated.fidelity == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(negated.equal);

  auto orthogonal = qcore::global_phase_equal(sigma_z_op(), sigma_x_op(), 1e-12);
  CHECK(orthogonal.fidelity == doctest::Approx(0.0).epsilon(1e-14));
  CHECK_FALSE(orthogonal.equal);

  CHECK_THROWS_AS(qcore::global_phase_equal(u, sigma_z_op(), 1e-9), ValidationError);
}

TEST_CASE("global_phase_equal behaves as an equivalence relation") {
  std::mt19937 rng(13);
  const double tol = 1e-9;
  Matrix base = testutil::random_unitary(4, rng);
  Matrix herm = testutil::random_complex(4, 4, rng);
  herm = Matrix((herm + herm.adjoint()) / 2.0);
  herm /= herm.cwiseAbs().maxCoeff();

  // b and c sit within tol/2 of a and of each other up to phases.
  Complex i(0, 1);
  Matrix a = base;
  Matrix b = std::exp(i * 0.7) * (testutil::matrix_exp(i * 1e-6 * herm) * base);
  Matrix c = std::exp(i * 2.1) * (testutil::matrix_exp(i * 2e-6 * herm) * base);
  Operator oa(2, a), ob(2, b), oc(2, c);

  CHECK(qcore::global_phase_equal(oa, oa, 0.0).equal);  // reflexive
  auto ab = qcore::global_phase_equal(oa, ob, tol / 2);
  auto ba = qcore::global_phase_equal(ob, oa, tol / 2);
  CHECK(ab.fidelity == doctest::Approx(ba.fidelity).epsilon(1e-13));  // symmetric
  auto bc = qcore::global_phase_equal(ob, oc, tol / 2);
  REQUIRE(ab.equal);
  REQUIRE(bc.equal);
  CHECK(qcore::global_phase_equal(oa, oc, tol).equal);  // transitive at tol
}

TEST_CASE("apply identity and Hadamard actions") {
  StateVector zero = StateVector::basis(1, 0);
  StateVector same = qcore::apply(Operator::identity(1), zero);
  CHECK(std::abs(same.amplitude(0) - Complex(1, 0)) < 1e-15);

  StateVector plus = qcore::apply(qcore::hadamard_n(1), zero);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(plus.amplitude(0) - Complex(s, 0)) < 1e-15);
  CHECK(std::abs(plus.amplitude(1) - Complex(s, 0)) < 1e-15);
}

TEST_CASE("apply sigma_z on qubit 1 flips the sign of |10>") {
  Operator zi = qcore::kron(sigma_z_op(), Operator::identity(1));
  StateVector psi = qcore::apply(zi, StateVector::basis(2, 0b10));
  CHECK(std::abs(psi.amplitude(0b10) - Complex(-1, 0)) < 1e-15);
}

TEST_CASE("apply preserves the norm for random unitaries") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    Eigen::Index dim = Eigen::Index{1} << n;
    Operator u(n, testutil::random_unitary(dim, rng));
    StateVector psi(n, testutil::random_state(dim, rng));
    StateVector out = qcore::apply(u, psi);
    CHECK(std::abs(out.amplitudes().squaredNorm() - 1.0) <= 1e-10);
  }
  CHECK_THROWS_AS(qcore::apply(Operator::identity(2), StateVector::basis(1, 0)),
                  ValidationError);
}

TEST_CASE("StateVector and Operator validation") {
  qcore::Vector bad(2);
  bad << 0.5, 0.5;  // squared norm 1/2
  CHECK_THROWS_AS(StateVector(1, bad), ValidationError);

  qcore::Vector nan(2);
  nan << std::nan(""), 1.0;
  CHECK_THROWS_AS(StateVector(1, nan), ValidationError);

  CHECK_THROWS_AS(StateVector::basis(1, 2), ValidationError);
  CHECK_THROWS_AS(StateVector::basis(0, 0), ValidationError);

  CHECK_THROWS_AS(Operator(2, Matrix::Identity(2, 2)), ValidationError);
  Matrix inf = Matrix::Identity(2, 2);
  inf(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Operator(1, inf), ValidationError);

  CHECK(Operator::identity(2).is_unitary());
  Matrix notu = Matrix::Identity(2, 2) * 2.0;
  CHECK_FALSE(Operator(1, notu).is_unitary());
}
