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

// Built-in instances.

#include <string>
#include <vector>

#include "genspike/construct.hpp"
#include "genspike/error.hpp"
#include "genspike/matroid.hpp"
#include "genspike/subset.hpp"

namespace genspike::corpus {

/// Edges of K4 on vertices 1..4, in the order 12 13 14 23 24 34.
inline const std::vector<std::pair<int, int>>& k4_edges() {
  static const std::vector<std::pair<int, int>> edges{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  return edges;
}

/// M(K4): four triangles and three 4-cycles.
inline std::vector<SubsetMask> k4_circuits() {
  return {
      mask_of({0, 1, 3}), mask_of({0, 2, 4}), mask_of({1, 2, 5}), mask_of({3, 4, 5}),
      mask_of({0, 2, 3, 5}), mask_of({0, 1, 4, 5}), mask_of({1, 2, 3, 4}),
  };
}

inline Matroid k4() { return from_circuits(6, k4_circuits()); }

/// Rank 3: two disjoint four-point lines {a,b,c,d} = {0,1,2,3} and
/// {w,x,y,z} = {4,5,6,7}.
inline std::vector<SubsetMask> two_lines_circuits() {
  std::vector<SubsetMask> out;
  const SubsetMask l1 = mask_of({0, 1, 2, 3});
  const SubsetMask l2 = mask_of({4, 5, 6, 7});
  for (SubsetMask line : {l1, l2}) {
    for_each_submask(line, [&](SubsetMask x) {
      if (popcount(x) == 3) out.push_back(x);
    });
  }
  for_each_submask(l1, [&](SubsetMask a) {
    if (popcount(a) != 2) return;
    for_each_submask(l2, [&](SubsetMask b) {
      if (popcount(b) == 2) out.push_back(a | b);
    });
  });
  return out;
}

inline Matroid two_lines() { return from_circuits(8, two_lines_circuits()); }

/// Names accepted by `by_name`.
inline std::vector<std::string> names() {
  return {"k4", "two-lines", "u<r>_<n>", "spike11_<m>"};
}

/// "k4", "two-lines", "u2_4" (U_{2,4}), "spike11_3".
inline Matroid by_name(const std::string& name) {
  if (name == "k4") return k4();
  if (name == "two-lines") return two_lines();
  auto two_ints = [&](std::size_t prefix, int& a, int& b) {
    const std::size_t us = name.find('_', prefix);
    if (us == std::string::npos) return false;
    try {
      std::size_t used = 0;
      a = std::stoi(name.substr(prefix, us - prefix), &used);
      if (used != us - prefix) return false;
      b = std::stoi(name.substr(us + 1), &used);
      return used == name.size() - us - 1;
    } catch (const std::exception&) {
      return false;
    }
  };
  if (name.rfind("spike11_", 0) == 0) {
    try {
      std::size_t used = 0;
      const int m = std::stoi(name.substr(8), &used);
      if (used == name.size() - 8) return spike_11(m).matroid;
    } catch (const std::logic_error&) {
    }
  }
  int r = 0;
  int n = 0;
  if (name.size() > 1 && name[0] == 'u' && two_ints(1, r, n)) return uniform(r, n);
  throw ParameterError("unknown corpus instance '" + name + "'");
}

}  // namespace genspike::corpus
