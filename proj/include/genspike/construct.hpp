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

// Spike constructions.
//
// Every (s,t)-spike of order m >= s+t is reached from the (1,1)-spike of order
// m (m parallel pairs) by t-1 elementary quotients, each raising t, followed
// by s-1 elementary lifts, each raising s. A quotient extends by an element
// e that avoids the closure of every hyperplane complementary to t arms and
// then contracts e; a lift is a quotient of the dual, dualized back. The tip
// extension and `untip` run the lift backwards.

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "genspike/certificate.hpp"
#include "genspike/counterexample.hpp"
#include "genspike/error.hpp"
#include "genspike/matroid.hpp"
#include "genspike/modular_cut.hpp"
#include "genspike/spike.hpp"

namespace genspike {

/// A matroid with a certificate for it.
struct CertifiedSpike {
  Matroid matroid;
  SpikeCertificate certificate;
};

enum class BuildOp { kQuotient, kLift };

struct BuildStep {
  BuildOp op;
  int s;  // parameters after the step
  int t;
  int rank;
  std::string blocker;
};

struct BuildTrace {
  int order = 0;
  std::vector<BuildStep> steps;
};

/// Trace lines:
///   initial m=<m> s=1 t=1 rank=<m>
///   step <k> op=<quotient|lift> s=<s'> t=<t'> rank=<r> blocker=<name>
inline void write_trace(std::ostream& out, const BuildTrace& trace) {
  out << "initial m=" << trace.order << " s=1 t=1 rank=" << trace.order << "\n";
  int k = 1;
  for (const BuildStep& s : trace.steps) {
    out << "step " << k++ << " op=" << (s.op == BuildOp::kQuotient ? "quotient" : "lift")
        << " s=" << s.s << " t=" << s.t << " rank=" << s.rank << " blocker=" << s.blocker << "\n";
  }
}

inline std::string to_text(const BuildTrace& trace) {
  std::ostringstream os;
  write_trace(os, trace);
  return os.str();
}

/// Direct sum of m copies of U_{1,2}, with the summands as arms.
inline CertifiedSpike spike_11(int m) {
  if (m < 1) throw ParameterError("spike order must be at least 1");
  require_within_cap(2 * m);
  Matroid mat = uniform(1, 2);
  for (int i = 1; i < m; ++i) mat = direct_sum(mat, uniform(1, 2));
  PairPartition arms;
  for (int i = 0; i < m; ++i) arms.append(bit(2 * i) | bit(2 * i + 1));
  return {std::move(mat), SpikeCertificate{1, 1, std::move(arms)}};
}

namespace detail {

inline void require_valid_certificate(const Matroid& m, const SpikeCertificate& cert) {
  if (CheckResult c = check_certificate(m, cert); c.failed()) {
    throw HypothesisError("valid (s,t)-spike certificate", c.detail);
  }
}

inline std::string spike_params(const SpikeCertificate& c) {
  return "s=" + std::to_string(c.s) + " t=" + std::to_string(c.t) + " m=" + std::to_string(c.order());
}

}  // namespace detail

/// First union of t arms C* whose complementary hyperplane has e in its
/// closure under `blocker`, if any.
inline std::optional<SubsetMask> first_unblocked_cocircuit(const Matroid& m,
                                                           const SpikeCertificate& cert,
                                                           const ModularCut& blocker) {
  std::optional<SubsetMask> bad;
  for_each_k_subset(cert.order(), cert.t, [&](SubsetMask idx) {
    const SubsetMask cocircuit = cert.partition.arm_union(idx);
    if (!blocker.contains_flat(m.closure(m.ground() & ~cocircuit))) return true;
    bad = cocircuit;
    return false;
  });
  return bad;
}

/// (M + e) / e for an extension whose e blocks every union-of-t-arms
/// cocircuit. Without a blocker the free extension is used. The result is
/// certified as an (s, t+1)-spike on the same arms.
inline CertifiedSpike quotient_step(const Matroid& m, const SpikeCertificate& cert,
                                    const std::optional<ModularCut>& blocker = std::nullopt) {
  detail::require_valid_certificate(m, cert);
  if (cert.order() < cert.s + cert.t) {
    throw HypothesisError("order m >= s+t", "order " + std::to_string(cert.order()) + " < " +
                                                std::to_string(cert.s + cert.t));
  }
  const ModularCut cut = blocker.value_or(ModularCut::free_cut(m));
  if (blocker) {
    if (CutCheck check = is_modular_cut(m, cut); !check) {
      throw HypothesisError("blocker is a modular cut", cut_defect_name(check.defect));
    }
    if (cut.generators().empty()) {
      throw HypothesisError("e is not a coloop of M+e", "the empty cut adds a coloop");
    }
    if (auto bad = first_unblocked_cocircuit(m, cert, cut)) {
      throw HypothesisError("e blocks each union-of-t-arms cocircuit",
                            "cocircuit {" + join_elements(*bad) + "} is not blocked");
    }
  }
  const Matroid extended = extend_by_modular_cut(m, cut);
  Matroid quotient = contract_elements(extended, bit(m.size())).matroid;
  SpikeCertificate next{cert.s, cert.t + 1, cert.partition};
  if (CheckResult c = check_certificate(quotient, next); c.failed()) {
    raise_counterexample("quotient-step", m, detail::spike_params(cert) + " " + c.detail,
                         &cert.partition);
  }
  return {std::move(quotient), std::move(next)};
}

/// The dual of quotient_step: certified as an (s+1, t)-spike on the same arms.
inline CertifiedSpike lift_step(const Matroid& m, const SpikeCertificate& cert) {
  detail::require_valid_certificate(m, cert);
  if (cert.order() < cert.s + cert.t) {
    throw HypothesisError("order m >= s+t", "order " + std::to_string(cert.order()) + " < " +
                                                std::to_string(cert.s + cert.t));
  }
  CertifiedSpike d = quotient_step(dual(m), dual_certificate(cert));
  return {dual(d.matroid), dual_certificate(d.certificate)};
}

/// An (s,t)-spike of order m: t-1 free quotients of the (1,1)-spike of order
/// m, then s-1 lifts.
inline std::tuple<Matroid, SpikeCertificate, BuildTrace> build_spike(int s, int t, int m) {
  if (s < 1 || t < 1) throw ParameterError("spike parameters s and t must be positive");
  if (m < s + t) {
    throw HypothesisError("order m >= s+t", "requested m=" + std::to_string(m) +
                                                " with s+t=" + std::to_string(s + t));
  }
  require_within_cap(2 * m);
  CertifiedSpike cur = spike_11(m);
  BuildTrace trace{m, {}};
  for (int i = 1; i < t; ++i) {
    cur = quotient_step(cur.matroid, cur.certificate);
    trace.steps.push_back({BuildOp::kQuotient, cur.certificate.s, cur.certificate.t,
                           cur.matroid.rank(), "free"});
  }
  for (int i = 1; i < s; ++i) {
    cur = lift_step(cur.matroid, cur.certificate);
    trace.steps.push_back({BuildOp::kLift, cur.certificate.s, cur.certificate.t,
                           cur.matroid.rank(), "free"});
  }
  return {std::move(cur.matroid), std::move(cur.certificate), std::move(trace)};
}

/// The cut of flats containing at least s-1 arms, generated by the unions of
/// s-1 arms.
inline ModularCut tip_cut(const Matroid& m, const SpikeCertificate& cert) {
  if (cert.s < 2) {
    throw HypothesisError("s >= 2", "with s=1 every flat contains s-1 arms");
  }
  std::vector<SubsetMask> gens;
  for_each_k_subset(cert.order(), cert.s - 1, [&](SubsetMask idx) {
    gens.push_back(cert.partition.arm_union(idx));
    return true;
  });
  return ModularCut(m, std::move(gens));
}

/// Largest ground set on which tip_extension re-checks its closure property.
inline constexpr int kTipCheckLimit = 16;

/// M+ with a new element e (index n) such that, for every flat F of M,
/// e ∈ cl(F) iff F contains at least s-1 arms. For arbitrary X the test is on
/// cl_M(X): a spanning set with no full arm still spans e.
inline Matroid tip_extension(const Matroid& m, const SpikeCertificate& cert) {
  detail::require_valid_certificate(m, cert);
  const ModularCut cut = tip_cut(m, cert);
  if (CutCheck check = is_modular_cut(m, cut); !check) {
    raise_counterexample("tip-cut", m, detail::spike_params(cert) + " defect=" + cut_defect_name(check.defect),
                         &cert.partition);
  }
  Matroid plus = extend_by_modular_cut(m, cut);
  if (m.size() <= kTipCheckLimit) {
    const SubsetMask e = bit(m.size());
    for (SubsetMask x = 0;; ++x) {
      const bool spans_e = plus.rank(x | e) == plus.rank(x);
      if (spans_e != (cert.partition.pairs_inside(m.closure(x)) >= cert.s - 1)) {
        raise_counterexample("tip-extension", m,
                             detail::spike_params(cert) + " witness=" + std::to_string(x),
                             &cert.partition);
      }
      if (x == m.ground()) break;
    }
  }
  return plus;
}

/// tip_extension followed by contracting the tip: an (s-1, t)-spike on the
/// same arms.
inline CertifiedSpike untip(const Matroid& m, const SpikeCertificate& cert) {
  if (cert.s < 2) throw HypothesisError("s >= 2", "cannot untip an (s,t)-spike with s=1");
  Matroid plus = tip_extension(m, cert);
  Matroid result = contract_elements(plus, bit(m.size())).matroid;
  SpikeCertificate next{cert.s - 1, cert.t, cert.partition};
  if (CheckResult c = check_certificate(result, next); c.failed()) {
    raise_counterexample("untip", m, detail::spike_params(cert) + " " + c.detail, &cert.partition);
  }
  return {std::move(result), std::move(next)};
}

}  // namespace genspike
