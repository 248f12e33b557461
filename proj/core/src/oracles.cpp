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

#include "djnmr/oracles.hpp"

#include <cmath>
#include <utility>

namespace djnmr::oracles {

namespace {

using qcore::Matrix;

void require_decision_function(const BooleanFunction& f, const char* where) {
  if (classify(f) == Classification::Neither) {
    throw ValidationError(std::string(where) + ": function is neither constant nor balanced");
  }
}

/// Extract a ±1 sign vector from the diagonal of an operator expression.
PhaseOracle oracle_from_diagonal(int n, const Matrix& m) {
  std::vector<std::int8_t> signs(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index x = 0; x < m.rows(); ++x) {
    double re = m(x, x).real();
    if (std::abs(m(x, x).imag()) > 1e-12 || std::abs(std::abs(re) - 1.0) > 1e-12) {
      throw ValidationError("canonical operator diagonal is not a sign vector");
    }
    signs[static_cast<std::size_t>(x)] = re > 0 ? 1 : -1;
  }
  return PhaseOracle(n, std::move(signs));
}

Matrix kron_chain(const std::vector<Matrix>& factors) {
  Matrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    Matrix next(out.rows() * factors[k].rows(), out.cols() * factors[k].cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block(i * factors[k].rows(), j * factors[k].cols(),
                   factors[k].rows(), factors[k].cols()) = out(i, j) * factors[k];
      }
    }
    out = std::move(next);
  }
  return out;
}

// z_mask selects which of the n single-spin factors is sigma_z (bit n-j for
// spin j, matching the basis-index layout).
Matrix zstring(int n, unsigned z_mask) {
  std::vector<Matrix> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    factors.push_back((z_mask >> (n - j)) & 1 ? qcore::pauli_z() : qcore::identity2());
  }
  return kron_chain(factors);
}

}  // namespace

PhaseOracle::PhaseOracle(int n_qubits, std::vector<std::int8_t> signs)
    : n_qubits_(n_qubits), signs_(std::move(signs)) {
  if (n_qubits_ < 1 || n_qubits_ > qcore::kMaxQubits) {
    throw ValidationError("PhaseOracle: n_qubits must be in 1..4");
  }
  if (signs_.size() != static_cast<std::size_t>(1) << n_qubits_) {
    throw ValidationError("PhaseOracle: sign vector must have 2^n entries");
  }
  for (std::int8_t s : signs_) {
    if (s != 1 && s != -1) throw ValidationError("PhaseOracle: signs must be +1 or -1");
  }
}

qcore::Operator PhaseOracle::to_operator() const {
  Matrix m = Matrix::Zero(dim(), dim());
  for (int x = 0; x < dim(); ++x) m(x, x) = static_cast<double>(sign(x));
  return qcore::Operator(n_qubits_, std::move(m));
}

BooleanFunction PhaseOracle::function() const {
  std::vector<std::uint8_t> table(signs_.size());
  for (std::size_t x = 0; x < signs_.size(); ++x) {
    table[x] = signs_[x] < 0 ? 1 : 0;
  }
  return BooleanFunction(n_qubits_, std::move(table));
}

PhaseOracle build_phase_oracle(const BooleanFunction& f) {
  require_decision_function(f, "build_phase_oracle");
  std::vector<std::int8_t> signs(static_cast<std::size_t>(f.domain_size()));
  for (int x = 0; x < f.domain_size(); ++x) {
    signs[static_cast<std::size_t>(x)] = f.value(x) ? -1 : 1;
  }
  return PhaseOracle(f.n_bits(), std::move(signs));
}

PhaseOracle kron(const PhaseOracle& a, const PhaseOracle& b) {
  std::vector<std::int8_t> signs(static_cast<std::size_t>(a.dim()) * b.dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) {
      signs[static_cast<std::size_t>(i * b.dim() + j)] =
          static_cast<std::int8_t>(a.sign(i) * b.sign(j));
    }
  }
  return PhaseOracle(a.n_qubits() + b.n_qubits(), std::move(signs));
}

qcore::Operator build_ancilla_oracle(const BooleanFunction& f) {
  require_decision_function(f, "build_ancilla_oracle");
  int n = f.n_bits();
  if (n + 1 > qcore::kMaxQubits) {
    throw ValidationError("build_ancilla_oracle: n+1 qubits exceeds the 4-qubit limit");
  }
  Eigen::Index d = Eigen::Index{1} << (n + 1);
  Matrix m = Matrix::Zero(d, d);
  for (int x = 0; x < f.domain_size(); ++x) {
    for (int y = 0; y < 2; ++y) {
      m(x * 2 + (y ^ f.value(x)), x * 2 + y) = 1.0;
    }
  }
  return qcore::Operator(n + 1, std::move(m));
}

DeutschJozsaRun run_dj(const BooleanFunction& f) {
  require_decision_function(f, "run_dj");
  int n = f.n_bits();
  qcore::Operator h = qcore::hadamard_n(n);
  qcore::StateVector psi = qcore::StateVector::basis(n, 0);
  psi = qcore::apply(h, psi);
  psi = qcore::apply(build_phase_oracle(f).to_operator(), psi);
  psi = qcore::apply(h, psi);
  qcore::Complex amp = psi.amplitude(0);
  Verdict verdict{std::abs(amp) > 0.5 ? VerdictKind::Constant : VerdictKind::Balanced, amp};
  return DeutschJozsaRun{std::move(psi), verdict};
}

std::vector<CanonicalOperator> canonical_operators(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 3) {
    throw ValidationError("canonical_operators: n must be in 1..3");
  }

  std::vector<std::pair<Matrix, Classification>> defs;
  const auto C = Classification::Constant;
  const auto B = Classification::Balanced;
  int n = n_qubits;

  if (n == 1) {
    defs = {{zstring(1, 0b0), C}, {-zstring(1, 0b0), C},
            {zstring(1, 0b1), B}, {-zstring(1, 0b1), B}};
  } else if (n == 2) {
    defs = {{zstring(2, 0b00), C}, {zstring(2, 0b10), B},
            {zstring(2, 0b01), B}, {zstring(2, 0b11), B}};
    std::size_t base = defs.size();
    for (std::size_t i = 0; i < base; ++i) {
      defs.emplace_back(-defs[i].first, defs[i].second);
    }
  } else {
    // Two-spin bracket (1/2)(II + zI + Iz - zz) over the qubits in pair_mask,
    // combined with sigma_z on the remaining qubit.
    auto pair_bracket = [&](unsigned z_spin_mask, unsigned pair_mask) {
      unsigned hi = 0, lo = 0;
      for (int j = 1; j <= n; ++j) {
        if ((pair_mask >> (n - j)) & 1) {
          if (!hi) hi = 1u << (n - j);
          else lo = 1u << (n - j);
        }
      }
      Matrix bracket = 0.5 * (zstring(n, 0) + zstring(n, hi) + zstring(n, lo) -
                              zstring(n, hi | lo));
      return Matrix(zstring(n, z_spin_mask) * bracket);
    };
    defs = {
        {zstring(3, 0b000), C},
        {zstring(3, 0b100), B},
        {zstring(3, 0b001), B},
        {zstring(3, 0b110), B},
        {zstring(3, 0b111), B},
        {pair_bracket(0b100, 0b011), B},
        {pair_bracket(0b010, 0b101), B},
        {pair_bracket(0b001, 0b110), B},
        {Matrix(0.5 * (zstring(3, 0b100) + zstring(3, 0b001) -
                       zstring(3, 0b110) + zstring(3, 0b011))),
         B},
    };
  }

  std::vector<CanonicalOperator> out;
  out.reserve(defs.size());
  for (std::size_t i = 0; i < defs.size(); ++i) {
    PhaseOracle oracle = oracle_from_diagonal(n, defs[i].first);
    std::optional<std::string> negated_of;
    for (std::size_t k = 0; k < out.size(); ++k) {
      bool negated = true;
      for (int x = 0; x < oracle.dim(); ++x) {
        if (out[k].oracle.sign(x) != -oracle.sign(x)) {
          negated = false;
          break;
        }
      }
      if (negated) {
        negated_of = out[k].name;
        break;
      }
    }
    out.push_back(CanonicalOperator{"U" + std::to_string(i + 1), std::move(oracle),
                                    defs[i].second, std::move(negated_of)});
  }
  return out;
}

}  // namespace djnmr::oracles
