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

// Subsets of a small ground set {0, ..., n-1} as 32-bit masks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "genspike/error.hpp"

namespace genspike {

/// Bit i set <=> element i is in the subset.
using SubsetMask = std::uint32_t;

inline constexpr int kMaskBits = 32;

constexpr SubsetMask bit(int i) noexcept { return SubsetMask{1} << i; }

constexpr SubsetMask full_mask(int n) noexcept {
  return n >= kMaskBits ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1;
}

constexpr int popcount(SubsetMask x) noexcept { return std::popcount(x); }

constexpr bool contains(SubsetMask set, int e) noexcept { return (set >> e) & 1u; }

constexpr bool is_subset(SubsetMask a, SubsetMask b) noexcept { return (a & ~b) == 0; }

constexpr int lowest_element(SubsetMask x) noexcept { return std::countr_zero(x); }

inline SubsetMask mask_of(std::initializer_list<int> elements) {
  SubsetMask m = 0;
  for (int e : elements) m |= bit(e);
  return m;
}

inline SubsetMask mask_of(const std::vector<int>& elements) {
  SubsetMask m = 0;
  for (int e : elements) m |= bit(e);
  return m;
}

/// Elements of `x` in increasing order.
inline std::vector<int> elements_of(SubsetMask x) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(x)));
  while (x != 0) {
    out.push_back(lowest_element(x));
    x &= x - 1;
  }
  return out;
}

/// Strict lexicographic order on the sorted index lists of two subsets.
inline bool lex_less(SubsetMask a, SubsetMask b) {
  while (a != 0 && b != 0) {
    const int ea = lowest_element(a);
    const int eb = lowest_element(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// Order used by circuit families: by size, then by numeric value.
inline bool size_then_value_less(SubsetMask a, SubsetMask b) {
  const int pa = popcount(a);
  const int pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

/// "0,3,5"; the empty set prints as "-".
inline std::string join_elements(SubsetMask x, char sep = ',') {
  if (x == 0) return "-";
  std::string out;
  for (int e : elements_of(x)) {
    if (!out.empty()) out += sep;
    out += std::to_string(e);
  }
  return out;
}

/// Calls `f(mask)` for every k-subset of {0..n-1}, in lexicographic order of
/// the sorted index lists. Stops early if `f` returns false.
template <class F>
bool for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    SubsetMask m = 0;
    for (int i : idx) m |= bit(i);
    if (!f(m)) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

/// Calls `f(sub)` for every submask of `set`, including 0 and `set` itself.
template <class F>
void for_each_submask(SubsetMask set, F&& f) {
  SubsetMask sub = set;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & set;
  }
}

/// Spreads the low bits of `compact` onto the positions listed in `positions`
/// (bit i of `compact` lands on positions[i]).
inline SubsetMask expand_bits(SubsetMask compact, const std::vector<int>& positions) {
  SubsetMask out = 0;
  for (std::size_t i = 0; compact != 0; ++i, compact >>= 1) {
    if (compact & 1u) out |= bit(positions[i]);
  }
  return out;
}

}  // namespace genspike
