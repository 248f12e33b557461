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

#ifndef DJNMR_BOOLEAN_FUNCTION_HPP
#define DJNMR_BOOLEAN_FUNCTION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "djnmr/errors.hpp"

namespace djnmr::oracles {

enum class Classification { Constant, Balanced, Neither };

const char* to_string(Classification c);

/// Truth table of f : {0,1}^n -> {0,1}, n in 1..3.
///
/// Inputs use the same bit convention as basis indices: input x has bit x1
/// most significant. The identity key is the table read as a binary number
/// with f(0) as the most significant bit, so table "0001" has key 1.
class BooleanFunction {
 public:
  BooleanFunction(int n_bits, std::vector<std::uint8_t> truth_table);

  static BooleanFunction from_key(int n_bits, std::uint64_t key);

  int n_bits() const { return n_bits_; }
  int domain_size() const { return 1 << n_bits_; }
  int value(int x) const { return table_[static_cast<std::size_t>(x)]; }
  const std::vector<std::uint8_t>& truth_table() const { return table_; }

  std::uint64_t key() const;
  std::string table_string() const;  // e.g. "0001"
  int popcount() const;

  bool operator==(const BooleanFunction& other) const = default;

 private:
  int n_bits_;
  std::vector<std::uint8_t> table_;
};

/// Constant / Balanced / Neither by the popcount rule. Neither is a value,
/// not an error.
Classification classify(const BooleanFunction& f);

/// All constant and balanced functions on n bits, ordered by truth-table
/// key ascending. Count is C(2^n, 2^{n-1}) + 2.
std::vector<BooleanFunction> enumerate_functions(int n_bits);

/// XOR-of-monomials form. Variables are qubit indices (1-based).
struct AlgebraicNormalForm {
  bool constant_term = false;
  std::vector<int> linear;                       // ascending
  std::vector<std::pair<int, int>> quadratic;    // (i,j) with i<j, ascending
  int degree = 0;                                // of the highest monomial present
};

AlgebraicNormalForm algebraic_normal_form(const BooleanFunction& f);

}  // namespace djnmr::oracles

#endif  // DJNMR_BOOLEAN_FUNCTION_HPP
