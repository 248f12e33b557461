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

#ifndef DJNMR_DENSITY_HPP
#define DJNMR_DENSITY_HPP

#include <string>
#include <vector>

#include "djnmr/qcore.hpp"
#include "djnmr/spin_system.hpp"

namespace djnmr::nmr {

/// Traceless deviation density matrix (the identity part of the thermal
/// state is dropped). Hermitian within 1e-10.
class DensityOperator {
 public:
  DensityOperator(int n_spins, qcore::Matrix matrix);

  int n_spins() const { return n_spins_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const qcore::Matrix& matrix() const { return matrix_; }

 private:
  int n_spins_;
  qcore::Matrix matrix_;
};

/// Thermal-equilibrium deviation: sum_i weight_i Iz^i.
DensityOperator thermal_state(const SpinSystem& sys);

/// U rho U†.
DensityOperator evolve(const DensityOperator& rho, const qcore::Operator& u);

enum class SpinLabel : std::uint8_t { E, Ix, Iy, Iz };

/// One term of a product-operator decomposition. A term with q non-identity
/// labels stands for 2^{q-1} times the product of the labeled single-spin
/// operators; its coefficient is tr(rho * B) / 2^{n-2} for that normalized
/// string B.
struct ProductOperatorTerm {
  double coefficient;
  std::vector<SpinLabel> labels;  // one per spin

  /// Canonical text such as "I1x", "2I2xI3z", "4I1zI2xI3z".
  std::string basis_string() const;
};

/// Matrix of the normalized basis string for the given labels.
qcore::Matrix term_operator(const std::vector<SpinLabel>& labels);

/// Complete decomposition over all 4^n strings; terms with |c| below the
/// threshold are suppressed. Ordered by number of non-identity labels, then
/// lexicographically (E < Ix < Iy < Iz, spin-major).
std::vector<ProductOperatorTerm> product_operator_decomposition(const DensityOperator& rho,
                                                                double threshold = 1e-9);

/// "-1.000000 I1x" style rendering (signed, six decimals).
std::string format_term(const ProductOperatorTerm& term);

}  // namespace djnmr::nmr

#endif  // DJNMR_DENSITY_HPP
