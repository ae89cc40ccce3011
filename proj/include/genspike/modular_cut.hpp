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

// Modular cuts and the single-element extensions they determine.
//
// A modular cut of M is a family of flats that is closed upward and contains
// F1 ∩ F2 whenever it contains a modular pair F1, F2, i.e. one with
// r(F1) + r(F2) = r(F1 ∪ F2) + r(F1 ∩ F2). Extending by the cut adds an
// element e with e ∈ cl(X) exactly when cl(X) is in the cut.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "genspike/error.hpp"
#include "genspike/matroid.hpp"
#include "genspike/subset.hpp"

namespace genspike {

/// A modular cut stored by its minimal members; the rest of the cut is every
/// flat of the host containing one of them.
class ModularCut {
 public:
  ModularCut(const Matroid& host, std::vector<SubsetMask> generators)
      : host_size_(host.size()), host_rank_(host.rank()), generators_(minimal(std::move(generators))) {
    for (SubsetMask g : generators_) {
      if (!is_subset(g, host.ground())) throw ParameterError("cut member outside the ground set");
    }
  }

  static ModularCut free_cut(const Matroid& host) { return ModularCut(host, {host.ground()}); }
  static ModularCut empty_cut(const Matroid& host) { return ModularCut(host, {}); }

  const std::vector<SubsetMask>& generators() const noexcept { return generators_; }
  int host_size() const noexcept { return host_size_; }
  int host_rank() const noexcept { return host_rank_; }

  bool matches(const Matroid& m) const noexcept {
    return m.size() == host_size_ && m.rank() == host_rank_;
  }

  /// Whether the flat F is in the cut.
  bool contains_flat(SubsetMask flat) const {
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](SubsetMask g) { return is_subset(g, flat); });
  }

  /// All cut members in increasing numeric order.
  std::vector<SubsetMask> members(const Matroid& m) const {
    std::vector<SubsetMask> out;
    for (SubsetMask f : flats(m)) {
      if (contains_flat(f)) out.push_back(f);
    }
    return out;
  }

 private:
  static std::vector<SubsetMask> minimal(std::vector<SubsetMask> sets) {
    std::sort(sets.begin(), sets.end(), size_then_value_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<SubsetMask> out;
    for (SubsetMask s : sets) {
      if (std::none_of(out.begin(), out.end(), [&](SubsetMask o) { return is_subset(o, s); })) {
        out.push_back(s);
      }
    }
    return out;
  }

  int host_size_;
  int host_rank_;
  std::vector<SubsetMask> generators_;
};

enum class CutDefect { kNone, kNotAFlat, kNotUpwardClosed, kModularIntersection };

inline const char* cut_defect_name(CutDefect d) {
  switch (d) {
    case CutDefect::kNone: return "none";
    case CutDefect::kNotAFlat: return "not-a-flat";
    case CutDefect::kNotUpwardClosed: return "not-upward-closed";
    case CutDefect::kModularIntersection: return "modular-intersection";
  }
  return "?";
}

/// Result of a modular-cut check. Witnesses by defect:
///   not-a-flat:           {member, cl(member)}
///   not-upward-closed:    {member, unlisted flat containing it}
///   modular-intersection: {F1, F2, F1 ∩ F2}
struct CutCheck {
  bool holds = true;
  CutDefect defect = CutDefect::kNone;
  std::vector<SubsetMask> witness;
  explicit operator bool() const noexcept { return holds; }
};

namespace detail {
inline CutCheck check_modular_pairs(const Matroid& m, const std::vector<SubsetMask>& members,
                                    const std::vector<std::uint8_t>& in_cut) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    const SubsetMask f1 = members[i];
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const SubsetMask f2 = members[j];
      const SubsetMask meet = f1 & f2;
      if (in_cut[meet]) continue;
      if (m.rank(f1) + m.rank(f2) == m.rank(f1 | f2) + m.rank(meet)) {
        return {false, CutDefect::kModularIntersection, {f1, f2, meet}};
      }
    }
  }
  return {};
}
}  // namespace detail

/// Checks an explicitly listed family: every member must be a flat, every
/// flat containing a member must be listed, and listed modular pairs must
/// have listed intersections.
inline CutCheck is_modular_cut(const Matroid& m, const std::vector<SubsetMask>& family) {
  std::vector<std::uint8_t> listed(std::size_t{1} << m.size(), 0);
  for (SubsetMask f : family) {
    if (!is_subset(f, m.ground())) throw ParameterError("cut member outside the ground set");
    if (!m.is_flat(f)) return {false, CutDefect::kNotAFlat, {f, m.closure(f)}};
    listed[f] = 1;
  }
  std::vector<SubsetMask> members;
  for (SubsetMask f : flats(m)) {
    if (listed[f]) {
      members.push_back(f);
      continue;
    }
    for (SubsetMask g : family) {
      if (is_subset(g, f)) return {false, CutDefect::kNotUpwardClosed, {g, f}};
    }
  }
  return detail::check_modular_pairs(m, members, listed);
}

/// A cut stored by generators is upward closed by construction; this checks
/// that the generators are flats and that modular pairs meet inside the cut.
inline CutCheck is_modular_cut(const Matroid& m, const ModularCut& cut) {
  if (!cut.matches(m)) throw ParameterError("modular cut belongs to a different matroid");
  for (SubsetMask g : cut.generators()) {
    if (!m.is_flat(g)) return {false, CutDefect::kNotAFlat, {g, m.closure(g)}};
  }
  const std::vector<SubsetMask> members = cut.members(m);
  std::vector<std::uint8_t> in_cut(std::size_t{1} << m.size(), 0);
  for (SubsetMask f : members) in_cut[f] = 1;
  return detail::check_modular_pairs(m, members, in_cut);
}

/// The single-element extension M +_cut e; e takes index n.
/// r'(X) = r(X) and r'(X + e) = r(X) + [cl(X) not in the cut].
inline Matroid extend_by_modular_cut(const Matroid& m, const ModularCut& cut) {
  const int n = m.size();
  require_within_cap(n + 1);
  if (CutCheck check = is_modular_cut(m, cut); !check) {
    throw ParameterError(std::string("not a modular cut (") + cut_defect_name(check.defect) + ")");
  }
  const std::size_t half = std::size_t{1} << n;
  std::vector<std::uint8_t> table(half * 2);
  for (std::size_t x = 0; x < half; ++x) {
    const SubsetMask xm = static_cast<SubsetMask>(x);
    const int r = m.rank(xm);
    table[x] = static_cast<std::uint8_t>(r);
    table[x | half] = static_cast<std::uint8_t>(r + (cut.contains_flat(m.closure(xm)) ? 0 : 1));
  }
  return Matroid::from_rank_table(n + 1, std::move(table));
}

/// Extension by the cut {E(M)}: e lies in cl(X) only for spanning X.
inline Matroid free_extension(const Matroid& m) {
  return extend_by_modular_cut(m, ModularCut::free_cut(m));
}

}  // namespace genspike
