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

#include "djnmr/boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace djnmr::oracles {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Constant: return "CONSTANT";
    case Classification::Balanced: return "BALANCED";
    case Classification::Neither: return "NEITHER";
  }
  return "?";
}

BooleanFunction::BooleanFunction(int n_bits, std::vector<std::uint8_t> truth_table)
    : n_bits_(n_bits), table_(std::move(truth_table)) {
  if (n_bits_ < 1 || n_bits_ > 3) {
    throw ValidationError("BooleanFunction: n_bits must be in 1..3");
  }
  if (table_.size() != static_cast<std::size_t>(1) << n_bits_) {
    throw ValidationError("BooleanFunction: truth table must have 2^n entries");
  }
  for (std::uint8_t v : table_) {
    if (v > 1) throw ValidationError("BooleanFunction: table entries must be 0 or 1");
  }
}

BooleanFunction BooleanFunction::from_key(int n_bits, std::uint64_t key) {
  if (n_bits < 1 || n_bits > 3) {
    throw ValidationError("BooleanFunction: n_bits must be in 1..3");
  }
  int size = 1 << n_bits;
  if (key >= (std::uint64_t{1} << size)) {
    throw ValidationError("BooleanFunction: key out of range for n_bits");
  }
  std::vector<std::uint8_t> table(static_cast<std::size_t>(size));
  for (int x = 0; x < size; ++x) {
    table[static_cast<std::size_t>(x)] =
        static_cast<std::uint8_t>((key >> (size - 1 - x)) & 1);
  }
  return BooleanFunction(n_bits, std::move(table));
}

std::uint64_t BooleanFunction::key() const {
  std::uint64_t key = 0;
  for (std::uint8_t v : table_) key = (key << 1) | v;
  return key;
}

std::string BooleanFunction::table_string() const {
  std::string s;
  s.reserve(table_.size());
  for (std::uint8_t v : table_) s.push_back(v ? '1' : '0');
  return s;
}

int BooleanFunction::popcount() const {
  return std::accumulate(table_.begin(), table_.end(), 0);
}

Classification classify(const BooleanFunction& f) {
  int pop = f.popcount();
  int size = f.domain_size();
  if (pop == 0 || pop == size) return Classification::Constant;
  if (pop == size / 2) return Classification::Balanced;
  return Classification::Neither;
}

std::vector<BooleanFunction> enumerate_functions(int n_bits) {
  if (n_bits < 1 || n_bits > 3) {
    throw ValidationError("enumerate_functions: n_bits must be in 1..3");
  }
  std::vector<BooleanFunction> out;
  std::uint64_t key_count = std::uint64_t{1} << (1 << n_bits);
  for (std::uint64_t key = 0; key < key_count; ++key) {
    int pop = std::popcount(key);
    int size = 1 << n_bits;
    if (pop == 0 || pop == size || pop == size / 2) {
      out.push_back(BooleanFunction::from_key(n_bits, key));
    }
  }
  return out;
}

AlgebraicNormalForm algebraic_normal_form(const BooleanFunction& f) {
  int n = f.n_bits();
  int size = f.domain_size();
  // Moebius transform over the input bits; coeff[m] is the coefficient of
  // the monomial whose variable set is encoded by mask m (same bit layout
  // as basis indices).
  std::vector<std::uint8_t> coeff(static_cast<std::size_t>(size));
  for (int x = 0; x < size; ++x) coeff[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(f.value(x));
  for (int b = 0; b < n; ++b) {
    for (int m = 0; m < size; ++m) {
      if (m & (1 << b)) {
        coeff[static_cast<std::size_t>(m)] ^= coeff[static_cast<std::size_t>(m ^ (1 << b))];
      }
    }
  }

  AlgebraicNormalForm anf;
  anf.constant_term = coeff[0] != 0;
  for (int m = 1; m < size; ++m) {
    if (!coeff[static_cast<std::size_t>(m)]) continue;
    int deg = std::popcount(static_cast<unsigned>(m));
    anf.degree = std::max(anf.degree, deg);
    if (deg == 1) {
      // mask bit (n - j) corresponds to variable j
      for (int j = 1; j <= n; ++j) {
        if (m == (1 << (n - j))) anf.linear.push_back(j);
      }
    } else if (deg == 2) {
      std::vector<int> vars;
      for (int j = 1; j <= n; ++j) {
        if (m & (1 << (n - j))) vars.push_back(j);
      }
      anf.quadratic.emplace_back(vars[0], vars[1]);
    }
  }
  std::sort(anf.linear.begin(), anf.linear.end());
  std::sort(anf.quadratic.begin(), anf.quadratic.end());
  return anf;
}

}  // namespace djnmr::oracles
