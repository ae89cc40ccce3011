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

// Exact small-matroid engine. A matroid is stored as its full rank table,
// one byte per subset of the ground set, so every query is a lookup or a
// linear scan over subsets.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genspike/error.hpp"
#include "genspike/subset.hpp"

namespace genspike {

inline constexpr int kDefaultElementCap = 22;
/// Largest cap accepted by set_element_cap (a 256 MiB table).
inline constexpr int kHardElementCap = 28;

namespace detail {
inline std::atomic<int>& element_cap_storage() {
  static std::atomic<int> cap{kDefaultElementCap};
  return cap;
}
}  // namespace detail

/// Current ground-set size limit for every constructor.
inline int element_cap() { return detail::element_cap_storage().load(std::memory_order_relaxed); }

inline void set_element_cap(int cap) {
  if (cap < 0 || cap > kHardElementCap) {
    throw ParameterError("element cap must lie in [0, " + std::to_string(kHardElementCap) +
                         "], got " + std::to_string(cap));
  }
  detail::element_cap_storage().store(cap, std::memory_order_relaxed);
}

inline void require_within_cap(int n) {
  if (n < 0) throw ParameterError("negative ground set size");
  if (n > element_cap()) {
    throw ParameterError("ground set size " + std::to_string(n) + " exceeds cap " +
                         std::to_string(element_cap()));
  }
}

class Matroid {
 public:
  /// Rank table of size 2^n, entry X is r(X). No axiom checking; see validate().
  static Matroid from_rank_table(int n, std::vector<std::uint8_t> table) {
    require_within_cap(n);
    if (table.size() != (std::size_t{1} << n)) {
      throw ParameterError("rank table must have 2^n entries");
    }
    return Matroid(n, std::move(table));
  }

  int size() const noexcept { return n_; }
  SubsetMask ground() const noexcept { return full_mask(n_); }
  int rank() const noexcept { return table_.back(); }
  int rank(SubsetMask x) const noexcept { return table_[x]; }
  int corank() const noexcept { return n_ - rank(); }
  std::span<const std::uint8_t> rank_table() const noexcept { return table_; }

  bool is_independent(SubsetMask x) const noexcept { return rank(x) == popcount(x); }
  bool is_spanning(SubsetMask x) const noexcept { return rank(x) == rank(); }

  SubsetMask closure(SubsetMask x) const noexcept {
    const int rx = rank(x);
    SubsetMask cl = x;
    for (int e = 0; e < n_; ++e) {
      if (!contains(x, e) && rank(x | bit(e)) == rx) cl |= bit(e);
    }
    return cl;
  }

  bool is_flat(SubsetMask x) const noexcept {
    const int rx = rank(x);
    for (int e = 0; e < n_; ++e) {
      if (!contains(x, e) && rank(x | bit(e)) == rx) return false;
    }
    return true;
  }

  /// r(X) = |X| - 1 and every one-element deletion is independent.
  bool is_circuit(SubsetMask x) const noexcept {
    const int k = popcount(x);
    if (k == 0 || rank(x) != k - 1) return false;
    for (SubsetMask rest = x; rest != 0; rest &= rest - 1) {
      if (rank(x & ~(rest & -rest)) != k - 1) return false;
    }
    return true;
  }

  /// E - X is a hyperplane.
  bool is_cocircuit(SubsetMask x) const noexcept {
    if (x == 0 || !is_subset(x, ground())) return false;
    const SubsetMask h = ground() & ~x;
    if (rank(h) != rank() - 1) return false;
    for (SubsetMask rest = x; rest != 0; rest &= rest - 1) {
      if (rank(h | (rest & -rest)) != rank()) return false;
    }
    return true;
  }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {}

  int n_;
  std::vector<std::uint8_t> table_;
};

/// Minimal dependent sets (or minimal codependent sets), sorted by
/// (size, numeric value).
struct CircuitFamily {
  std::vector<SubsetMask> sets;

  std::size_t size() const noexcept { return sets.size(); }
  bool empty() const noexcept { return sets.empty(); }
  auto begin() const noexcept { return sets.begin(); }
  auto end() const noexcept { return sets.end(); }
  bool contains(SubsetMask x) const {
    return std::binary_search(sets.begin(), sets.end(), x, size_then_value_less);
  }
  friend bool operator==(const CircuitFamily&, const CircuitFamily&) = default;
};

enum class Axiom { kTableShape, kNormalization, kBounded, kUnitIncrease, kSubmodularity };

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kTableShape: return "table-shape";
    case Axiom::kNormalization: return "normalization";
    case Axiom::kBounded: return "bounded";
    case Axiom::kUnitIncrease: return "unit-increase";
    case Axiom::kSubmodularity: return "submodularity";
  }
  return "?";
}

struct Violation {
  Axiom axiom;
  std::vector<SubsetMask> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// Exhaustive check of r(0)=0, r(X)<=|X|, unit increase and local
/// submodularity. Stops collecting after `max_violations` entries.
inline ValidationReport validate(const Matroid& m, std::size_t max_violations = 64) {
  ValidationReport report;
  auto add = [&](Axiom a, std::vector<SubsetMask> w) {
    if (report.violations.size() < max_violations) report.violations.push_back({a, std::move(w)});
    return report.violations.size() < max_violations;
  };
  const int n = m.size();
  const SubsetMask e_all = m.ground();
  if (m.rank(0) != 0 && !add(Axiom::kNormalization, {0})) return report;
  for (SubsetMask x = 0;; ++x) {
    const int rx = m.rank(x);
    if (rx > popcount(x) && !add(Axiom::kBounded, {x})) return report;
    for (int e = 0; e < n; ++e) {
      if (contains(x, e)) continue;
      const SubsetMask xe = x | bit(e);
      const int rxe = m.rank(xe);
      if ((rxe < rx || rxe > rx + 1) && !add(Axiom::kUnitIncrease, {x, xe})) return report;
      for (int f = e + 1; f < n; ++f) {
        if (contains(x, f)) continue;
        const SubsetMask xf = x | bit(f);
        if (rxe + m.rank(xf) < m.rank(xe | xf) + rx &&
            !add(Axiom::kSubmodularity, {x, xe, xf})) {
          return report;
        }
      }
    }
    if (x == e_all) break;
  }
  return report;
}

/// U_{r,n}: r(X) = min(|X|, r).
inline Matroid uniform(int r, int n) {
  require_within_cap(n);
  if (r < 0 || r > n) {
    throw ParameterError("uniform matroid needs 0 <= r <= n, got r=" + std::to_string(r) +
                         " n=" + std::to_string(n));
  }
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (std::size_t x = 0; x < table.size(); ++x) {
    table[x] = static_cast<std::uint8_t>(std::min(popcount(static_cast<SubsetMask>(x)), r));
  }
  return Matroid::from_rank_table(n, std::move(table));
}

namespace detail {
template <class Pred>
CircuitFamily collect_sorted(const Matroid& m, Pred&& pred) {
  CircuitFamily fam;
  const SubsetMask e_all = m.ground();
  for (SubsetMask x = 1; x != 0 && x <= e_all; ++x) {
    if (pred(x)) fam.sets.push_back(x);
    if (x == e_all) break;
  }
  std::sort(fam.sets.begin(), fam.sets.end(), size_then_value_less);
  return fam;
}
}  // namespace detail

inline CircuitFamily circuits(const Matroid& m) {
  return detail::collect_sorted(m, [&](SubsetMask x) { return m.is_circuit(x); });
}

inline CircuitFamily cocircuits(const Matroid& m) {
  return detail::collect_sorted(m, [&](SubsetMask x) { return m.is_cocircuit(x); });
}

/// All flats in increasing numeric order.
inline std::vector<SubsetMask> flats(const Matroid& m) {
  std::vector<SubsetMask> out;
  for (SubsetMask x = 0;; ++x) {
    if (m.is_flat(x)) out.push_back(x);
    if (x == m.ground()) break;
  }
  return out;
}

/// Rebuilds a matroid from its circuits. For each X the rank is the size of
/// the independent set grown greedily through X in increasing element order,
/// which is exact for matroids; anything non-matroidal is caught afterwards.
inline Matroid from_circuits(int n, const std::vector<SubsetMask>& input) {
  require_within_cap(n);
  const SubsetMask e_all = full_mask(n);
  for (std::size_t i = 0; i < input.size(); ++i) {
    const SubsetMask c = input[i];
    if (c == 0) throw InvalidCircuitsError("empty circuit", {c});
    if (!is_subset(c, e_all)) {
      throw InvalidCircuitsError("circuit uses an element outside the ground set", {c});
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (is_subset(c, input[j]) || is_subset(input[j], c)) {
        throw InvalidCircuitsError(input[j] == c ? "duplicate circuit" : "comparable circuits",
                                   {input[j], c});
      }
    }
  }

  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> dependent(size, 0);
  for (SubsetMask c : input) dependent[c] = 1;
  for (int e = 0; e < n; ++e) {
    for (std::size_t x = 0; x < size; ++x) {
      if ((x >> e) & 1u) dependent[x] |= dependent[x ^ bit(e)];
    }
  }

  std::vector<std::uint8_t> table(size);
  for (std::size_t x = 0; x < size; ++x) {
    SubsetMask indep = 0;
    int r = 0;
    for (SubsetMask rest = static_cast<SubsetMask>(x); rest != 0; rest &= rest - 1) {
      const SubsetMask cand = indep | (rest & -rest);
      if (!dependent[cand]) {
        indep = cand;
        ++r;
      }
    }
    table[x] = static_cast<std::uint8_t>(r);
  }
  Matroid m = Matroid::from_rank_table(n, std::move(table));

  ValidationReport report = validate(m, 1);
  if (!report.passed()) {
    throw InvalidCircuitsError(std::string("circuits violate the matroid axioms (") +
                                   axiom_name(report.violations.front().axiom) + ")",
                               report.violations.front().witness);
  }
  std::vector<SubsetMask> sorted = input;
  std::sort(sorted.begin(), sorted.end(), size_then_value_less);
  const CircuitFamily rebuilt = circuits(m);
  if (rebuilt.sets != sorted) {
    for (SubsetMask c : sorted) {
      if (!rebuilt.contains(c)) {
        throw InvalidCircuitsError("listed set is not a circuit of the generated matroid", {c});
      }
    }
    for (SubsetMask c : rebuilt) {
      if (!std::binary_search(sorted.begin(), sorted.end(), c, size_then_value_less)) {
        throw InvalidCircuitsError("generated matroid has an unlisted circuit", {c});
      }
    }
  }
  return m;
}

/// r*(X) = |X| + r(E - X) - r(E).
inline Matroid dual(const Matroid& m) {
  const SubsetMask e_all = m.ground();
  std::vector<std::uint8_t> table(std::size_t{1} << m.size());
  for (std::size_t x = 0; x < table.size(); ++x) {
    const SubsetMask xm = static_cast<SubsetMask>(x);
    table[x] = static_cast<std::uint8_t>(popcount(xm) + m.rank(e_all & ~xm) - m.rank());
  }
  return Matroid::from_rank_table(m.size(), std::move(table));
}

/// A minor together with the old -> new element map (-1 for removed elements).
struct Minor {
  Matroid matroid;
  std::vector<int> index_map;

  SubsetMask transport(SubsetMask old_set) const {
    SubsetMask out = 0;
    for (int e : elements_of(old_set)) {
      if (index_map[static_cast<std::size_t>(e)] >= 0) out |= bit(index_map[static_cast<std::size_t>(e)]);
    }
    return out;
  }
};

namespace detail {
/// Keeps `kept` (re-indexed in increasing order) and sets
/// r'(Y) = r(Y ∪ base) - r(base).
inline Minor reindexed_minor(const Matroid& m, SubsetMask kept, SubsetMask base) {
  const std::vector<int> positions = elements_of(kept);
  const int k = static_cast<int>(positions.size());
  std::vector<int> index_map(static_cast<std::size_t>(m.size()), -1);
  for (int i = 0; i < k; ++i) index_map[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])] = i;

  const std::size_t size = std::size_t{1} << k;
  std::vector<SubsetMask> old_of(size, 0);
  std::vector<std::uint8_t> table(size);
  const int rb = m.rank(base);
  for (std::size_t y = 0; y < size; ++y) {
    if (y != 0) {
      const int low = std::countr_zero(static_cast<SubsetMask>(y));
      old_of[y] = old_of[y & (y - 1)] | bit(positions[static_cast<std::size_t>(low)]);
    }
    table[y] = static_cast<std::uint8_t>(m.rank(old_of[y] | base) - rb);
  }
  return Minor{Matroid::from_rank_table(k, std::move(table)), std::move(index_map)};
}

inline void require_inside(const Matroid& m, SubsetMask x, const char* what) {
  if (!is_subset(x, m.ground())) {
    throw ParameterError(std::string(what) + " uses elements outside the ground set");
  }
}
}  // namespace detail

/// M \ D.
inline Minor delete_elements(const Matroid& m, SubsetMask d) {
  detail::require_inside(m, d, "deletion set");
  return detail::reindexed_minor(m, m.ground() & ~d, 0);
}

/// M / T.
inline Minor contract_elements(const Matroid& m, SubsetMask t) {
  detail::require_inside(m, t, "contraction set");
  return detail::reindexed_minor(m, m.ground() & ~t, t);
}

/// M restricted to X (with X re-indexed).
inline Minor restrict_to(const Matroid& m, SubsetMask x) {
  detail::require_inside(m, x, "restriction set");
  return detail::reindexed_minor(m, x, 0);
}

/// M1 ⊕ M2 with the elements of M2 shifted above those of M1.
inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  require_within_cap(n);
  const SubsetMask low = a.ground();
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (std::size_t x = 0; x < table.size(); ++x) {
    const SubsetMask xm = static_cast<SubsetMask>(x);
    table[x] = static_cast<std::uint8_t>(a.rank(xm & low) + b.rank(xm >> a.size()));
  }
  return Matroid::from_rank_table(n, std::move(table));
}

/// λ(X) = r(X) + r(E - X) - r(M).
inline int connectivity(const Matroid& m, SubsetMask x) {
  return m.rank(x) + m.rank(m.ground() & ~x) - m.rank();
}

/// A Tutte j-separation (P, E - P): λ(P) < j <= min(|P|, |E - P|).
struct Separation {
  SubsetMask side;
  int order;
};

struct ConnectivityResult {
  bool connected;
  std::optional<Separation> witness;
  explicit operator bool() const noexcept { return connected; }
};

/// True iff M has no j-separation for any j < k. The witness is the first
/// separating side in numeric order, with j = λ(P) + 1.
inline ConnectivityResult is_k_connected(const Matroid& m, int k) {
  if (k < 2) throw ParameterError("connectivity order k must be at least 2");
  const int n = m.size();
  const SubsetMask e_all = m.ground();
  for (SubsetMask p = 0;; ++p) {
    const int small = std::min(popcount(p), n - popcount(p));
    const int lam = connectivity(m, p);
    if (lam + 1 <= small && lam + 1 < k) return {false, Separation{p, lam + 1}};
    if (p == e_all) break;
  }
  return {true, std::nullopt};
}

}  // namespace genspike
