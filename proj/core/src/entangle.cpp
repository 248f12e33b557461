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

#include "djnmr/entangle.hpp"

#include <algorithm>
#include <bit>

namespace djnmr::entangle {

namespace {

// Blocks are bitmasks with bit (j-1) for qubit j.
std::vector<int> mask_to_qubits(unsigned mask, int n) {
  std::vector<int> out;
  for (int j = 1; j <= n; ++j) {
    if (mask & (1u << (j - 1))) out.push_back(j);
  }
  return out;
}

// Compose a basis index from the assignments of a qubit subset and its
// complement. `sub_bits` orders the subset's qubits ascending, first qubit
// most significant; likewise for the complement.
int compose_index(const std::vector<int>& subset, int sub_bits,
                  const std::vector<int>& complement, int comp_bits, int n) {
  int x = 0;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    int bit = (sub_bits >> (subset.size() - 1 - k)) & 1;
    x |= bit << (n - subset[k]);
  }
  for (std::size_t k = 0; k < complement.size(); ++k) {
    int bit = (comp_bits >> (complement.size() - 1 - k)) & 1;
    x |= bit << (n - complement[k]);
  }
  return x;
}

bool factorizes_over_masks(const oracles::PhaseOracle& oracle, unsigned subset_mask) {
  int n = oracle.n_qubits();
  std::vector<int> subset = mask_to_qubits(subset_mask, n);
  std::vector<int> complement =
      mask_to_qubits(~subset_mask & ((1u << n) - 1), n);
  int rows = 1 << subset.size();
  int cols = 1 << complement.size();

  // M[r][c] = signs[x]; rank 1 over ±1 entries iff every 2x2 minor vanishes.
  std::vector<int> m(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m[static_cast<std::size_t>(r) * cols + c] =
          oracle.sign(compose_index(subset, r, complement, c, n));
    }
  }
  for (int a = 0; a < rows; ++a) {
    for (int b = a + 1; b < rows; ++b) {
      for (int c = 0; c < cols; ++c) {
        for (int d = c + 1; d < cols; ++d) {
          int lhs = m[static_cast<std::size_t>(a) * cols + c] *
                    m[static_cast<std::size_t>(b) * cols + d];
          int rhs = m[static_cast<std::size_t>(a) * cols + d] *
                    m[static_cast<std::size_t>(b) * cols + c];
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool QubitPartition::all_singletons() const {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const std::vector<int>& b) { return b.size() == 1; });
}

std::string QubitPartition::to_string() const {
  std::string s;
  for (const auto& block : blocks) {
    s += '{';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(block[k]);
    }
    s += '}';
  }
  return s;
}

const char* to_string(EntanglementKind kind) {
  switch (kind) {
    case EntanglementKind::NonEntangling: return "NonEntangling";
    case EntanglementKind::PartiallyEntangling: return "PartiallyEntangling";
    case EntanglementKind::MaximallyEntangling: return "MaximallyEntangling";
  }
  return "?";
}

bool factorizes_over(const oracles::PhaseOracle& oracle, const std::vector<int>& subset) {
  int n = oracle.n_qubits();
  unsigned mask = 0;
  for (int q : subset) {
    if (q < 1 || q > n) throw ValidationError("factorizes_over: qubit index out of range");
    unsigned bit = 1u << (q - 1);
    if (mask & bit) throw ValidationError("factorizes_over: duplicate qubit in subset");
    mask |= bit;
  }
  unsigned full = (1u << n) - 1;
  if (mask == 0 || mask == full) {
    throw ValidationError("factorizes_over: subset must be a nonempty proper subset");
  }
  return factorizes_over_masks(oracle, mask);
}

EntanglementClass finest_factorization(const oracles::PhaseOracle& oracle) {
  int n = oracle.n_qubits();
  std::vector<unsigned> blocks{(1u << n) - 1};

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < blocks.size() && !changed; ++i) {
      unsigned block = blocks[i];
      if (std::popcount(block) < 2) continue;
      unsigned low = block & (~block + 1);
      // Proper submasks containing the block's lowest bit; each bipartition
      // of the block is visited once.
      for (unsigned s = (block - 1) & block; s; s = (s - 1) & block) {
        if (!(s & low)) continue;
        if (factorizes_over_masks(oracle, s)) {
          blocks[i] = s;
          blocks.push_back(block & ~s);
          changed = true;
          break;
        }
      }
    }
  }

  QubitPartition partition;
  std::sort(blocks.begin(), blocks.end(),
            [](unsigned a, unsigned b) { return (a & (~a + 1)) < (b & (~b + 1)); });
  for (unsigned block : blocks) {
    partition.blocks.push_back(mask_to_qubits(block, n));
  }

  EntanglementKind kind;
  if (partition.all_singletons()) {
    kind = EntanglementKind::NonEntangling;
  } else if (partition.blocks.size() == 1) {
    kind = EntanglementKind::MaximallyEntangling;
  } else {
    kind = EntanglementKind::PartiallyEntangling;
  }
  return EntanglementClass{kind, std::move(partition)};
}

int ClassCensus::count(EntanglementKind kind) const {
  auto it = members.find(kind);
  return it == members.end() ? 0 : static_cast<int>(it->second.size());
}

int ClassCensus::total() const {
  int sum = 0;
  for (const auto& [kind, keys] : members) sum += static_cast<int>(keys.size());
  return sum;
}

ClassCensus census_by_class(int n_bits) {
  ClassCensus census;
  for (const oracles::BooleanFunction& f : oracles::enumerate_functions(n_bits)) {
    EntanglementClass cls = finest_factorization(oracles::build_phase_oracle(f));
    census.members[cls.kind].push_back(f.key());
  }
  for (auto& [kind, keys] : census.members) std::sort(keys.begin(), keys.end());
  return census;
}

}  // namespace djnmr::entangle
