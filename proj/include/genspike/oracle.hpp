// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Brute-force spike oracle: enumerates every partition of E(M) into pairs
// and tests each one against the enumerated circuit and cocircuit families.
// It shares no search or pruning code with recognize_spike.

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "genspike/certificate.hpp"
#include "genspike/matroid.hpp"
#include "genspike/subset.hpp"

namespace genspike {

inline constexpr int kOracleLimit = 12;

struct OracleResult {
  std::uint64_t partitions_scanned = 0;
  std::vector<SpikeCertificate> certificates;  // in enumeration order
};

namespace detail {

class PairPartitionEnumerator {
 public:
  template <class F>
  void run(SubsetMask ground, F&& visit) {
    current_.clear();
    recurse(ground, visit);
  }

 private:
  template <class F>
  void recurse(SubsetMask left, F& visit) {
    if (left == 0) {
      visit(current_);
      return;
    }
    const int a = lowest_element(left);
    for (int b = a + 1; b < kMaskBits; ++b) {
      if (!contains(left, b)) continue;
      current_.push_back(bit(a) | bit(b));
      recurse(left & ~(bit(a) | bit(b)), visit);
      current_.pop_back();
    }
  }

  std::vector<SubsetMask> current_;
};

}  // namespace detail

/// All (s,t)-spike certificates of M, in the order the partitions are
/// enumerated (smallest uncovered element paired with increasing partners).
inline OracleResult spike_oracle(const Matroid& m, int s, int t, int limit = kOracleLimit) {
  if (s < 1 || t < 1) throw ParameterError("spike parameters s and t must be positive");
  if (m.size() > limit) {
    throw ParameterError("oracle limited to n <= " + std::to_string(limit));
  }
  OracleResult out;
  if (m.size() % 2 != 0) return out;
  const CircuitFamily cs = circuits(m);
  const CircuitFamily cocs = cocircuits(m);
  const std::unordered_set<SubsetMask> circuit_set(cs.begin(), cs.end());
  const std::unordered_set<SubsetMask> cocircuit_set(cocs.begin(), cocs.end());

  auto every_union_in = [](const std::vector<SubsetMask>& pairs, int k,
                           const std::unordered_set<SubsetMask>& family) {
    const int order = static_cast<int>(pairs.size());
    std::vector<int> pick(static_cast<std::size_t>(order), 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
      SubsetMask u = 0;
      for (int i = 0; i < order; ++i) {
        if (pick[static_cast<std::size_t>(i)]) u |= pairs[static_cast<std::size_t>(i)];
      }
      if (family.count(u) == 0) return false;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return true;
  };

  detail::PairPartitionEnumerator().run(m.ground(), [&](const std::vector<SubsetMask>& pairs) {
    ++out.partitions_scanned;
    const int order = static_cast<int>(pairs.size());
    if (order < std::max(s, t)) return;
    if (every_union_in(pairs, s, circuit_set) && every_union_in(pairs, t, cocircuit_set)) {
      out.certificates.push_back(SpikeCertificate{s, t, PairPartition(pairs)});
    }
  });
  return out;
}

}  // namespace genspike
