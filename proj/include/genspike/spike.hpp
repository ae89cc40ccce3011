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

// The (s,u,t,v)-property, echidnas and coechidnas, and (s,t)-spike
// recognition.
//
// A t-echidna is an ordered list of disjoint pairs ("spines") such that the
// union of any t of them is a circuit; a t-coechidna is a t-echidna of the
// dual. An (s,t)-spike is a matroid whose ground set is partitioned into
// pairs ("arms") forming an s-echidna and a t-coechidna.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "genspike/certificate.hpp"
#include "genspike/counterexample.hpp"
#include "genspike/error.hpp"
#include "genspike/matroid.hpp"
#include "genspike/subset.hpp"

namespace genspike {

enum class SetKind { kCircuit, kCocircuit };

inline const char* set_kind_name(SetKind k) {
  return k == SetKind::kCircuit ? "circuit" : "cocircuit";
}

struct PropertyReport {
  bool holds = true;
  std::optional<SubsetMask> failing_subset;
  std::optional<SetKind> missing_kind;
  explicit operator bool() const noexcept { return holds; }
};

namespace detail {

/// First k-subset, in lexicographic order, lying in no `size`-element member
/// of `family`.
inline std::optional<SubsetMask> first_uncovered(int n, int k, const CircuitFamily& family,
                                                 int size) {
  std::vector<std::uint8_t> covered(std::size_t{1} << n, 0);
  for (SubsetMask c : family) {
    if (popcount(c) != size) continue;
    for_each_submask(c, [&](SubsetMask sub) {
      if (popcount(sub) == k) covered[sub] = 1;
    });
  }
  std::optional<SubsetMask> first;
  for_each_k_subset(n, k, [&](SubsetMask x) {
    if (covered[x]) return true;
    first = x;
    return false;
  });
  return first;
}

inline bool is_coindependent(const Matroid& m, SubsetMask x) {
  return m.rank(m.ground() & ~x) == m.rank();
}

}  // namespace detail

/// Every s-subset lies in a u-element circuit and every t-subset lies in a
/// v-element cocircuit. On failure reports the lexicographically first bad
/// subset, checking the circuit side first.
inline PropertyReport has_property(const Matroid& m, int s, int u, int t, int v) {
  if (s < 1 || s > u || t < 1 || t > v) {
    throw ParameterError("property parameters need 1 <= s <= u and 1 <= t <= v");
  }
  if (s > m.size() || t > m.size()) {
    throw ParameterError("property parameters s and t may not exceed the ground set size");
  }
  if (auto bad = detail::first_uncovered(m.size(), s, circuits(m), u)) {
    return {false, bad, SetKind::kCircuit};
  }
  if (auto bad = detail::first_uncovered(m.size(), t, cocircuits(m), v)) {
    return {false, bad, SetKind::kCocircuit};
  }
  return {};
}

inline PropertyReport has_spike_property(const Matroid& m, int s, int t) {
  return has_property(m, s, 2 * s, t, 2 * t);
}

/// First union of k pairs (in lexicographic order of index sets) that is not
/// a circuit of M, or of M* when `co` is set.
inline std::optional<SubsetMask> first_non_circuit_union(const Matroid& m,
                                                         const PairPartition& p, int k,
                                                         bool co) {
  if (!is_subset(p.covered(), m.ground())) {
    throw ParameterError("partition uses elements outside the ground set");
  }
  if (k < 1 || k > p.order()) {
    throw ParameterError("echidna order k must lie in [1, number of pairs]");
  }
  std::optional<SubsetMask> bad;
  for_each_k_subset(p.order(), k, [&](SubsetMask idx) {
    const SubsetMask u = p.arm_union(idx);
    if (co ? m.is_cocircuit(u) : m.is_circuit(u)) return true;
    bad = u;
    return false;
  });
  return bad;
}

/// True iff the union of every k pairs is a circuit (of M*, when `co` is set).
inline bool is_echidna(const Matroid& m, const PairPartition& p, int k, bool co = false) {
  return !first_non_circuit_union(m, p, k, co).has_value();
}

enum class CheckStatus { kPass, kFail, kNotApplicable };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotApplicable: return "na";
  }
  return "?";
}

/// One named check with an optional witness mask.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::optional<SubsetMask> witness = std::nullopt;
  std::optional<int> expected = std::nullopt;
  std::optional<int> actual = std::nullopt;
  std::string detail = {};

  bool failed() const noexcept { return status == CheckStatus::kFail; }
};

/// `check=<name> status=<pass|fail|na> witness=<mask-or-dash>`, followed by
/// `expected=` / `actual=` when the check compares numbers.
inline std::string format_check(const CheckResult& c) {
  std::string out = "check=" + c.name + " status=" + status_name(c.status) + " witness=" +
                    (c.witness ? std::to_string(*c.witness) : std::string("-"));
  if (c.expected) out += " expected=" + std::to_string(*c.expected);
  if (c.actual) out += " actual=" + std::to_string(*c.actual);
  return out;
}

/// The basic certificate invariants: the pairs cover E(M), there are at least
/// max{s,t} of them, and they form an s-echidna and a t-coechidna.
inline CheckResult check_certificate(const Matroid& m, const SpikeCertificate& cert) {
  CheckResult r{"certificate"};
  auto fail = [&](std::optional<SubsetMask> w, std::string why) {
    r.status = CheckStatus::kFail;
    r.witness = w;
    r.detail = std::move(why);
    return r;
  };
  if (cert.s < 1 || cert.t < 1) return fail(std::nullopt, "s and t must be positive");
  if (cert.partition.covered() != m.ground()) {
    return fail(cert.partition.covered() ^ m.ground(), "pairs do not partition the ground set");
  }
  if (cert.order() < std::max(cert.s, cert.t)) {
    return fail(std::nullopt, "order below max{s,t}");
  }
  if (auto bad = first_non_circuit_union(m, cert.partition, cert.s, false)) {
    return fail(bad, "union of s arms is not a circuit");
  }
  if (auto bad = first_non_circuit_union(m, cert.partition, cert.t, true)) {
    return fail(bad, "union of t arms is not a cocircuit");
  }
  return r;
}

namespace detail {

class SpikeSearch {
 public:
  SpikeSearch(const Matroid& m, int s, int t) : m_(m), s_(s), t_(t) {}

  std::optional<SpikeCertificate> run() {
    chosen_.clear();
    if (!dfs(m_.ground())) return std::nullopt;
    return SpikeCertificate{s_, t_, PairPartition(chosen_)};
  }

 private:
  SubsetMask union_of(SubsetMask idx) const {
    SubsetMask u = 0;
    for (SubsetMask rest = idx; rest != 0; rest &= rest - 1) {
      u |= chosen_[static_cast<std::size_t>(lowest_element(rest))];
    }
    return u;
  }

  // Can `pair` join the pairs chosen so far without breaking either condition?
  bool consistent(SubsetMask pair) const {
    const int have = static_cast<int>(chosen_.size());
    SubsetMask all = pair;
    for (SubsetMask q : chosen_) all |= q;
    if (have + 1 < s_ && !m_.is_independent(all)) return false;
    if (have + 1 < t_ && !is_coindependent(m_, all)) return false;
    bool ok = true;
    if (have + 1 >= s_) {
      for_each_k_subset(have, s_ - 1, [&](SubsetMask idx) {
        ok = m_.is_circuit(union_of(idx) | pair);
        return ok;
      });
      if (!ok) return false;
    }
    if (have + 1 >= t_) {
      for_each_k_subset(have, t_ - 1, [&](SubsetMask idx) {
        ok = m_.is_cocircuit(union_of(idx) | pair);
        return ok;
      });
    }
    return ok;
  }

  bool dfs(SubsetMask uncovered) {
    if (uncovered == 0) return true;
    const int a = lowest_element(uncovered);
    for (SubsetMask rest = uncovered & ~bit(a); rest != 0; rest &= rest - 1) {
      const SubsetMask pair = bit(a) | (rest & -rest);
      if (!consistent(pair)) continue;
      chosen_.push_back(pair);
      if (dfs(uncovered & ~pair)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Matroid& m_;
  int s_;
  int t_;
  std::vector<SubsetMask> chosen_;
};

}  // namespace detail

/// Complete search for an (s,t)-spike certificate. Pairs are formed by
/// matching the smallest uncovered element with each later element in turn,
/// so the first certificate found is the lexicographically least one.
inline std::optional<SpikeCertificate> recognize_spike(const Matroid& m, int s, int t) {
  if (s < 1 || t < 1) throw ParameterError("spike parameters s and t must be positive");
  const int n = m.size();
  if (n % 2 != 0 || n < 2 * std::max(s, t)) return std::nullopt;
  return detail::SpikeSearch(m, s, t).run();
}

/// Given the (s,2s,t,2t)-property and an s-echidna of order >= s+2t-1, the
/// echidna is also a t-coechidna. Returns whether that holds here; a false
/// result has already been written out as a counterexample.
inline bool verify_coechidna_implication(const Matroid& m, const PairPartition& p, int s, int t) {
  if (s < 1 || t < 1) throw ParameterError("s and t must be positive");
  if (2 * s > m.size() || 2 * t > m.size() || !has_spike_property(m, s, t)) {
    throw HypothesisError("(s,2s,t,2t)-property", "M lacks the property for s=" +
                                                      std::to_string(s) + " t=" + std::to_string(t));
  }
  if (p.order() < s + 2 * t - 1) {
    throw HypothesisError("order >= s+2t-1", "partition has " + std::to_string(p.order()) +
                                                 " pairs, needs " + std::to_string(s + 2 * t - 1));
  }
  if (!is_echidna(m, p, s)) throw HypothesisError("s-echidna", "partition is not an s-echidna");
  if (is_echidna(m, p, t, true)) return true;
  write_counterexample("coechidna-implication", m,
                       "s=" + std::to_string(s) + " t=" + std::to_string(t), &p);
  return false;
}

/// Grows an s-echidna of large enough order to a full (s,t)-spike
/// certificate. Each round takes the smallest uncovered z, finds the first
/// element z' for which z, z' and the first s-1 spines form a 2s-element
/// circuit, and appends {z, z'}.
inline SpikeCertificate extend_echidna(const Matroid& m, const PairPartition& partial, int s,
                                       int t) {
  if (s < 1 || t < 1) throw ParameterError("s and t must be positive");
  if (2 * s > m.size() || 2 * t > m.size() || !has_spike_property(m, s, t)) {
    throw HypothesisError("(s,2s,t,2t)-property", "M lacks the property for s=" +
                                                      std::to_string(s) + " t=" + std::to_string(t));
  }
  const int threshold = std::max({s + 2 * t - 1, 2 * s + t - 1, 3 * s + t - 3});
  if (partial.order() < threshold) {
    throw HypothesisError("order >= max{s+2t-1, 2s+t-1, 3s+t-3}",
                          "partial echidna has " + std::to_string(partial.order()) +
                              " pairs, needs " + std::to_string(threshold));
  }
  if (!is_echidna(m, partial, s)) {
    throw HypothesisError("s-echidna", "partial partition is not an s-echidna");
  }

  PairPartition p = partial;
  const std::string params = "s=" + std::to_string(s) + " t=" + std::to_string(t);
  while (p.covered() != m.ground()) {
    const SubsetMask uncovered = m.ground() & ~p.covered();
    const int z = lowest_element(uncovered);
    SubsetMask base = 0;
    for (int i = 0; i < s - 1; ++i) base |= p[i];
    std::optional<int> partner;
    for (int e = 0; e < m.size(); ++e) {
      if (e == z || contains(base, e)) continue;
      if (m.is_circuit(base | bit(z) | bit(e))) {
        partner = e;
        break;
      }
    }
    if (!partner || contains(p.covered(), *partner)) {
      raise_counterexample("echidna-extension", m,
                           params + (partner ? " partner-already-covered" : " no-circuit") +
                               " z=" + std::to_string(z),
                           &p);
    }
    p.append(bit(z) | bit(*partner));
    if (!is_echidna(m, p, s) || !is_echidna(m, p, t, true)) {
      raise_counterexample("echidna-extension", m, params + " extended-partition-invalid", &p);
    }
  }
  return SpikeCertificate{s, t, p};
}

/// For a matroid with the (s,2s,t,2t)-property: every X of rank < s is
/// independent, and every X of rank s restricts to U_{s,|X|} with |X| < s+2t.
/// A false result has already been written out as a counterexample.
inline bool check_low_rank_property(const Matroid& m, int s, int t) {
  if (s < 1 || t < 1) throw ParameterError("s and t must be positive");
  if (2 * s > m.size() || 2 * t > m.size() || !has_spike_property(m, s, t)) {
    throw HypothesisError("(s,2s,t,2t)-property", "M lacks the property for s=" +
                                                      std::to_string(s) + " t=" + std::to_string(t));
  }
  auto holds_at = [&](SubsetMask x) {
    const int r = m.rank(x);
    if (r < s) return m.is_independent(x);
    if (r > s) return true;
    if (popcount(x) >= s + 2 * t) return false;
    bool uniform_pattern = true;
    for_each_submask(x, [&](SubsetMask y) {
      if (m.rank(y) != std::min(popcount(y), s)) uniform_pattern = false;
    });
    return uniform_pattern;
  };
  for (SubsetMask x = 0;; ++x) {
    if (!holds_at(x)) {
      write_counterexample("low-rank-sets", m,
                           "s=" + std::to_string(s) + " t=" + std::to_string(t) +
                               " witness=" + std::to_string(x));
      return false;
    }
    if (x == m.ground()) break;
  }
  return true;
}

}  // namespace genspike
