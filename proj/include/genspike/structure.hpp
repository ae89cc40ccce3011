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

// Closed-form structure of an (s,t)-spike of order m and an exhaustive
// verifier that compares a certified instance against it.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "genspike/certificate.hpp"
#include "genspike/counterexample.hpp"
#include "genspike/matroid.hpp"
#include "genspike/spike.hpp"

namespace genspike {

/// r(A_J) for |J| = j arms.
constexpr int spike_arm_rank(int s, int t, int m, int j) {
  if (j < s) return 2 * j;
  if (j <= m - t + 1) return s + j - 1;
  return m + s - t;
}

/// λ(A_J) for |J| = j arms, using the smaller side of (J, [m] - J).
constexpr int spike_arm_connectivity(int s, int t, int m, int j) {
  const int small = std::min(j, m - j);
  if (small <= t - 1) return spike_arm_rank(s, t, m, small);
  if (small <= m - s) return small < s ? t + small - 1 : s + t - 2;
  return m - s + t;
}

constexpr int spike_rank(int s, int t, int m) { return m + s - t; }
constexpr int spike_corank(int s, int t, int m) { return m - s + t; }

enum class CircuitClause {
  kUnionOfArms,  // C is the union of exactly s arms
  kSpread,       // C meets >= m-(t-2) arms and contains fewer than s of them
};

/// The clauses a circuit satisfies; a spike circuit satisfies exactly one.
struct CircuitClassification {
  bool union_of_arms = false;
  bool spread = false;
  bool exactly_one() const noexcept { return union_of_arms != spread; }
};

inline CircuitClassification classify_circuit(const SpikeCertificate& cert, SubsetMask c) {
  const int m = cert.order();
  const int inside = cert.partition.pairs_inside(c);
  const int meeting = cert.partition.pairs_meeting(c);
  CircuitClassification out;
  out.union_of_arms = inside == cert.s && meeting == cert.s;
  out.spread = meeting >= m - (cert.t - 2) && inside < cert.s;
  return out;
}

struct StructureReport {
  std::vector<CheckResult> checks;
  std::optional<std::string> artifact;  // set when some check failed

  bool passed() const noexcept {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed(); });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

/// Runs every structural check whose order hypothesis holds for the
/// certificate, each over all relevant subsets. Checks whose hypotheses on m
/// fail are reported as not applicable.
inline StructureReport verify_spike_structure(const Matroid& m, const SpikeCertificate& cert) {
  if (CheckResult basic = check_certificate(m, cert); basic.failed()) {
    throw HypothesisError("certificate", basic.detail);
  }
  const int s = cert.s;
  const int t = cert.t;
  const int order = cert.order();
  const PairPartition& arms = cert.partition;
  StructureReport report;

  auto numeric = [](std::string name, int expected, int actual) {
    CheckResult c{std::move(name)};
    c.expected = expected;
    c.actual = actual;
    c.status = expected == actual ? CheckStatus::kPass : CheckStatus::kFail;
    return c;
  };
  auto na = [](std::string name, std::string why) {
    CheckResult c{std::move(name), CheckStatus::kNotApplicable};
    c.detail = std::move(why);
    return c;
  };

  {
    CheckResult c{"order-bound"};
    c.expected = s + t - 1;
    c.actual = order;
    c.status = order >= s + t - 1 ? CheckStatus::kPass : CheckStatus::kFail;
    report.checks.push_back(c);
  }
  report.checks.push_back(numeric("rank", spike_rank(s, t, order), m.rank()));
  report.checks.push_back(numeric("dual-rank", spike_corank(s, t, order), m.corank()));

  {
    CheckResult c{"circuit-classification"};
    for (SubsetMask circ : circuits(m)) {
      if (!classify_circuit(cert, circ).exactly_one()) {
        c.status = CheckStatus::kFail;
        c.witness = circ;
        break;
      }
    }
    report.checks.push_back(c);
  }

  const SubsetMask all_indices = full_mask(order);
  {
    CheckResult c{"rank-function"};
    for (SubsetMask j = 0;; ++j) {
      const SubsetMask aj = arms.arm_union(j);
      if (m.rank(aj) != spike_arm_rank(s, t, order, popcount(j))) {
        c.status = CheckStatus::kFail;
        c.witness = aj;
        break;
      }
      if (j == all_indices) break;
    }
    report.checks.push_back(c);
  }
  {
    CheckResult c{"lambda-table"};
    for (SubsetMask j = 0;; ++j) {
      const SubsetMask aj = arms.arm_union(j);
      if (connectivity(m, aj) != spike_arm_connectivity(s, t, order, popcount(j))) {
        c.status = CheckStatus::kFail;
        c.witness = aj;
        break;
      }
      if (j == all_indices) break;
    }
    report.checks.push_back(c);
  }

  const int lo = std::min(s, t);
  const int hi = std::max(s, t);
  if (order >= 3 * hi - 2) {
    CheckResult c{"small-set-lambda"};
    for (int k = 0; k <= 2 * lo - 1 && !c.failed(); ++k) {
      for_each_k_subset(m.size(), k, [&](SubsetMask x) {
        if (connectivity(m, x) == k) return true;
        c.status = CheckStatus::kFail;
        c.witness = x;
        return false;
      });
    }
    report.checks.push_back(c);
  } else {
    report.checks.push_back(na("small-set-lambda", "needs m >= 3max{s,t}-2"));
  }

  if (lo >= 2 && order >= std::max(3 * s + t, s + 3 * t) - 4) {
    CheckResult c{"connectivity"};
    c.expected = 2 * lo - 1;
    const ConnectivityResult conn = is_k_connected(m, 2 * lo - 1);
    if (!conn.connected) {
      c.status = CheckStatus::kFail;
      c.witness = conn.witness->side;
      c.actual = conn.witness->order;
    }
    report.checks.push_back(c);
  } else {
    report.checks.push_back(
        na("connectivity", lo < 2 ? "needs min{s,t} >= 2" : "needs m >= max{3s+t,s+3t}-4"));
  }

  if (!report.passed()) {
    std::string failed;
    for (const auto& c : report.checks) {
      if (c.failed()) failed += " " + c.name;
    }
    report.artifact = write_counterexample(
        "spike-structure", m, "s=" + std::to_string(s) + " t=" + std::to_string(t) + " failed:" + failed,
        &arms);
  }
  return report;
}

}  // namespace genspike
