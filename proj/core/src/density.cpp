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

#include "djnmr/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace djnmr::nmr {

namespace {

using qcore::Complex;
using qcore::Matrix;

Matrix label_matrix(SpinLabel label) {
  switch (label) {
    case SpinLabel::E: return qcore::identity2();
    case SpinLabel::Ix: return 0.5 * qcore::pauli_x();
    case SpinLabel::Iy: return 0.5 * qcore::pauli_y();
    case SpinLabel::Iz: return 0.5 * qcore::pauli_z();
  }
  throw ValidationError("bad spin label");
}

char label_axis(SpinLabel label) {
  switch (label) {
    case SpinLabel::Ix: return 'x';
    case SpinLabel::Iy: return 'y';
    case SpinLabel::Iz: return 'z';
    default: return 'e';
  }
}

}  // namespace

DensityOperator::DensityOperator(int n_spins, Matrix matrix)
    : n_spins_(n_spins), matrix_(std::move(matrix)) {
  if (n_spins_ < 1 || n_spins_ > 3) {
    throw ValidationError("DensityOperator: n_spins must be in 1..3");
  }
  Eigen::Index d = Eigen::Index{1} << n_spins_;
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw ValidationError("DensityOperator: matrix must be 2^n x 2^n");
  }
  if (!matrix_.allFinite()) {
    throw ValidationError("DensityOperator: entries must be finite");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ValidationError("DensityOperator: matrix must be Hermitian");
  }
  if (std::abs(matrix_.trace()) > 1e-9) {
    throw ValidationError("DensityOperator: deviation matrix must be traceless");
  }
}

DensityOperator thermal_state(const SpinSystem& sys) {
  int n = sys.n_spins();
  Eigen::Index dim = Eigen::Index{1} << n;
  Matrix rho = Matrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    double value = 0.0;
    for (int i = 1; i <= n; ++i) {
      value += sys.weight(i) * (qcore::qubit_bit(static_cast<int>(x), i, n) ? -0.5 : 0.5);
    }
    rho(x, x) = value;
  }
  return DensityOperator(n, std::move(rho));
}

DensityOperator evolve(const DensityOperator& rho, const qcore::Operator& u) {
  if (u.dim() != rho.dim()) {
    throw ValidationError("evolve: dimension mismatch");
  }
  return DensityOperator(rho.n_spins(), u.matrix() * rho.matrix() * u.matrix().adjoint());
}

qcore::Matrix term_operator(const std::vector<SpinLabel>& labels) {
  if (labels.empty()) throw ValidationError("term_operator: empty label list");
  int q = 0;
  Matrix out = label_matrix(labels[0]);
  for (std::size_t k = 1; k < labels.size(); ++k) {
    const Matrix f = label_matrix(labels[k]);
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block(i * 2, j * 2, 2, 2) = out(i, j) * f;
      }
    }
    out = std::move(next);
  }
  for (SpinLabel l : labels) {
    if (l != SpinLabel::E) ++q;
  }
  return std::ldexp(1.0, q - 1) * out;  // 2^{q-1}, 0.5 for the identity string
}

std::string ProductOperatorTerm::basis_string() const {
  int q = 0;
  for (SpinLabel l : labels) {
    if (l != SpinLabel::E) ++q;
  }
  std::string s;
  if (q == 0) return "E";
  if (q >= 2) s += std::to_string(1 << (q - 1));
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] == SpinLabel::E) continue;
    s += 'I';
    s += std::to_string(k + 1);
    s += label_axis(labels[k]);
  }
  return s;
}

std::vector<ProductOperatorTerm> product_operator_decomposition(const DensityOperator& rho,
                                                                double threshold) {
  int n = rho.n_spins();
  double norm = std::ldexp(1.0, n - 2);  // tr(B^2) = 2^{n-2} for every string
  std::vector<ProductOperatorTerm> terms;

  int total = 1;
  for (int k = 0; k < n; ++k) total *= 4;
  // Lexicographic enumeration, spin-major, E < Ix < Iy < Iz.
  for (int code = 0; code < total; ++code) {
    std::vector<SpinLabel> labels(static_cast<std::size_t>(n));
    int c = code;
    for (int k = n - 1; k >= 0; --k) {
      labels[static_cast<std::size_t>(k)] = static_cast<SpinLabel>(c & 3);
      c >>= 2;
    }
    Complex raw = (rho.matrix() * term_operator(labels)).trace();
    double coeff = raw.real() / norm;
    if (std::abs(coeff) >= threshold) {
      terms.push_back(ProductOperatorTerm{coeff, std::move(labels)});
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const ProductOperatorTerm& a, const ProductOperatorTerm& b) {
                     auto weight = [](const ProductOperatorTerm& t) {
                       int q = 0;
                       for (SpinLabel l : t.labels) {
                         if (l != SpinLabel::E) ++q;
                       }
                       return q;
                     };
                     return weight(a) < weight(b);
                   });
  return terms;
}

std::string format_term(const ProductOperatorTerm& term) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%+.6f", term.coefficient);
  return std::string(buf) + " " + term.basis_string();
}

}  // namespace djnmr::nmr
