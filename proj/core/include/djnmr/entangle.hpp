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

#ifndef DJNMR_ENTANGLE_HPP
#define DJNMR_ENTANGLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "djnmr/oracles.hpp"

// Entangling-power classification of phase oracles by exact tensor
// factorization of their ±1 sign vectors. All tests are integer-exact;
// no numerical thresholds are involved.

namespace djnmr::entangle {

/// Disjoint qubit blocks covering {1..n}; each block ascending, blocks
/// ordered by smallest element.
struct QubitPartition {
  std::vector<std::vector<int>> blocks;

  bool all_singletons() const;
  std::string to_string() const;  // "{1}{2,3}"

  bool operator==(const QubitPartition& other) const = default;
};

enum class EntanglementKind { NonEntangling, PartiallyEntangling, MaximallyEntangling };

const char* to_string(EntanglementKind kind);

struct EntanglementClass {
  EntanglementKind kind;
  QubitPartition finest_partition;
};

/// True iff the sign vector, reshaped over (subset, complement), has rank 1:
/// every 2x2 minor of the ±1 matrix vanishes. Symmetric in the bipartition.
bool factorizes_over(const oracles::PhaseOracle& oracle, const std::vector<int>& subset);

/// Finest partition by recursive bipartition splitting; a block splits
/// whenever some bipartition of it factorizes.
EntanglementClass finest_factorization(const oracles::PhaseOracle& oracle);

struct ClassCensus {
  // truth-table keys per kind, ascending
  std::map<EntanglementKind, std::vector<std::uint64_t>> members;

  int count(EntanglementKind kind) const;
  int total() const;
};

/// Classify every enumerated constant/balanced function on n bits.
ClassCensus census_by_class(int n_bits);

}  // namespace djnmr::entangle

#endif  // DJNMR_ENTANGLE_HPP
