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


// Acceptance suite: one PASS/FAIL line per criterion. The exit status is
// zero only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "genspike/genspike.hpp"
#include "test_support.hpp"

namespace {

using namespace genspike;

// Tolerances. Every comparison below is exact except the grid runtime.
constexpr double kGridSecondsLimit = 60.0;
constexpr int kMaxGridOrder = 8;
constexpr int kOracleCorpusMinimum = 20;
constexpr int kOracleMaxElements = 10;

struct Built {
  int s, t, m;
  Matroid matroid;
  SpikeCertificate cert;
};

// Spikes for (s,t) in {1,2,3}^2, s+t <= m <= min(8, cap/2); filled by the
// grid criterion and reused by later ones.
std::vector<Built> g_grid;

const Built* grid_spike(int s, int t, int m) {
  for (const Built& b : g_grid) {
    if (b.s == s && b.t == t && b.m == m) return &b;
  }
  return nullptr;
}

class Suite {
 public:
  void run(const std::string& name, const std::function<std::string(bool&)>& body) {
    bool ok = true;
    std::string detail;
    try {
      detail = body(ok);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    failed_ += ok ? 0 : 1;
  }
  int failed() const { return failed_; }

 private:
  int failed_ = 0;
};

std::string triple(int s, int t, int m) {
  return "(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(m) + ")";
}

std::string construction_grid(bool& ok) {
  const auto start = std::chrono::steady_clock::now();
  const int max_order = std::min(kMaxGridOrder, element_cap() / 2);
  int count = 0;
  std::string first_bad;
  for (int s = 1; s <= 3; ++s) {
    for (int t = 1; t <= 3; ++t) {
      for (int m = s + t; m <= max_order; ++m) {
        auto [mat, cert, trace] = build_spike(s, t, m);
        bool good = mat.size() == 2 * m && mat.rank() == m + s - t && validate(mat).passed();
        const auto found = recognize_spike(mat, s, t);
        good = good && found.has_value() && has_spike_property(mat, s, t).holds;
        if (!good && first_bad.empty()) first_bad = triple(s, t, m);
        ok = ok && good;
        g_grid.push_back({s, t, m, std::move(mat), std::move(cert)});
        ++count;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= kGridSecondsLimit) ok = false;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d spikes up to n=%d in %.2fs (limit %.0fs)%s%s", count,
                2 * max_order, secs, kGridSecondsLimit, first_bad.empty() ? "" : ", first bad ",
                first_bad.c_str());
  return buf;
}

std::string lambda_table(bool& ok) {
  int checked = 0;
  for (auto [s, t] : {std::pair{2, 3}, std::pair{3, 2}}) {
    const auto [m, cert, trace] = build_spike(s, t, 7);
    for (SubsetMask j = 0; j < (SubsetMask{1} << 7); ++j) {
      const SubsetMask aj = cert.partition.arm_union(j);
      // λ straight from the rank table.
      const int lam = m.rank(aj) + m.rank(m.ground() & ~aj) - m.rank();
      if (lam != spike_arm_connectivity(s, t, 7, popcount(j))) {
        ok = false;
        return "mismatch at " + triple(s, t, 7) + " J=" + join_elements(j);
      }
      ++checked;
    }
  }
  return std::to_string(checked) + " index sets, zero tolerance";
}

std::string circuit_classification(bool& ok) {
  int spikes = 0;
  long total = 0;
  for (const Built& b : g_grid) {
    if (b.matroid.size() > 14) continue;
    ++spikes;
    for (SubsetMask c : circuits(b.matroid)) {
      ++total;
      if (!classify_circuit(b.cert, c).exactly_one()) {
        ok = false;
        return "circuit {" + join_elements(c) + "} of " + triple(b.s, b.t, b.m);
      }
    }
  }
  return std::to_string(total) + " circuits over " + std::to_string(spikes) + " spikes";
}

std::string three_connectivity(bool& ok) {
  const Matroid a = std::get<0>(build_spike(2, 2, 4));
  const Matroid b = std::get<0>(build_spike(2, 3, 7));
  const bool a3 = is_k_connected(a, 3).connected;
  const bool b3 = is_k_connected(b, 3).connected;
  int small = 0;
  bool lam_ok = true;
  for (int k = 0; k <= 3 && lam_ok; ++k) {
    for_each_k_subset(b.size(), k, [&](SubsetMask x) {
      ++small;
      lam_ok = genspike::connectivity(b, x) == k;
      return lam_ok;
    });
  }
  ok = a3 && b3 && lam_ok;
  return std::string("(2,2,4) 3-connected=") + (a3 ? "yes" : "no") +
         ", (2,3,7) 3-connected=" + (b3 ? "yes" : "no") + ", lambda(X)=|X| on " +
         std::to_string(small) + " sets |X|<=3: " + (lam_ok ? "yes" : "no");
}

std::string coechidna_implication(bool& ok) {
  int count = 0;
  for (const Built& b : g_grid) {
    if (b.m < b.s + 2 * b.t - 1) continue;
    ++count;
    if (!verify_coechidna_implication(b.matroid, b.cert.partition, b.s, b.t)) {
      ok = false;
      return "fails on " + triple(b.s, b.t, b.m);
    }
  }
  if (count == 0) ok = false;
  return std::to_string(count) + " spikes with m >= s+2t-1";
}

std::string factory_round_trips(bool& ok) {
  int untips = 0;
  for (int t : {2, 3}) {
    for (int m : {5, 6, 7}) {
      const Built* b = grid_spike(2, t, m);
      if (b == nullptr) {
        ok = false;
        return "missing " + triple(2, t, m);
      }
      const CertifiedSpike u = untip(b->matroid, b->cert);
      const auto found = recognize_spike(u.matroid, 1, t);
      if (!found) {
        ok = false;
        return "untip of " + triple(2, t, m) + " not a (1,t)-spike";
      }
      ++untips;
    }
  }
  int duals = 0;
  for (const Built& b : g_grid) {
    const auto found = recognize_spike(dual(b.matroid), b.t, b.s);
    if (!found || found->partition != b.cert.partition) {
      ok = false;
      return "dual of " + triple(b.s, b.t, b.m) + " not recognized with the same arms";
    }
    ++duals;
  }
  return std::to_string(untips) + " untips, " + std::to_string(duals) + " duals";
}

std::vector<std::pair<std::string, Matroid>> oracle_corpus(int& perturbed) {
  std::vector<std::pair<std::string, Matroid>> out;
  for (int n = 2; n <= kOracleMaxElements; n += 2) {
    for (int r = 0; r <= n; r += (n <= 4 ? 1 : 2)) out.emplace_back("U" + std::to_string(r) + "," + std::to_string(n), uniform(r, n));
  }
  out.emplace_back("M(K4)", corpus::k4());
  out.emplace_back("two-lines", corpus::two_lines());
  out.emplace_back("U1,2+U1,2", direct_sum(uniform(1, 2), uniform(1, 2)));
  out.emplace_back("U2,4+U1,2", direct_sum(uniform(2, 4), uniform(1, 2)));
  out.emplace_back("M(K4)+U1,2", direct_sum(corpus::k4(), uniform(1, 2)));
  out.emplace_back("U1,3+U2,3", direct_sum(uniform(1, 3), uniform(2, 3)));
  for (const Built& b : g_grid) {
    if (b.matroid.size() <= kOracleMaxElements) out.emplace_back("spike" + triple(b.s, b.t, b.m), b.matroid);
  }
  perturbed = 0;
  for (auto [s, t] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2},
                      std::pair{1, 3}}) {
    const auto [m, cert, trace] = build_spike(s, t, s + t);
    out.emplace_back("relaxed" + triple(s, t, s + t),
                     testing::relax(m, cert.partition.arm_union(full_mask(s))));
    ++perturbed;
  }
  return out;
}

std::string oracle_equivalence(bool& ok) {
  int perturbed = 0;
  const auto corpus = oracle_corpus(perturbed);
  if (static_cast<int>(corpus.size()) < kOracleCorpusMinimum) ok = false;
  int queries = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& [name, m] = corpus[i];
    const bool is_perturbed = i + static_cast<std::size_t>(perturbed) >= corpus.size();
    if (!validate(m).passed()) {
      ok = false;
      return name + " is not a matroid";
    }
    for (int s = 1; s <= 3; ++s) {
      for (int t = 1; t <= 3; ++t) {
        const auto fast = recognize_spike(m, s, t);
        const OracleResult slow = spike_oracle(m, s, t);
        ++queries;
        const bool agree = fast.has_value() == !slow.certificates.empty() &&
                           (!fast || *fast == slow.certificates.front());
        if (!agree) {
          ok = false;
          return "disagreement on " + name + " s=" + std::to_string(s) + " t=" + std::to_string(t);
        }
      }
    }
    if (is_perturbed) {
      const int s = name[8] - '0';
      const int t = name[10] - '0';
      if (recognize_spike(m, s, t) || !spike_oracle(m, s, t).certificates.empty()) {
        ok = false;
        return name + " accepted as an (s,t)-spike";
      }
    }
  }
  return std::to_string(corpus.size()) + " matroids (" + std::to_string(perturbed) +
         " perturbed, all rejected), " + std::to_string(queries) + " (s,t) queries";
}

std::string known_instance(bool& ok) {
  const Matroid k4 = from_circuits(6, corpus::k4_circuits());
  const auto cert = recognize_spike(k4, 2, 2);
  ok = cert && cert->order() == 3 && k4.rank() == 3 && k4.rank() == cert->order() + 2 - 2 &&
       cert->order() == 2 + 2 - 1 && verify_spike_structure(k4, *cert).passed();
  return cert ? "order " + std::to_string(cert->order()) + " rank " + std::to_string(k4.rank()) +
                    " arms " + [&] {
                      std::string a;
                      for (SubsetMask p : cert->partition.pairs()) a += "{" + join_elements(p) + "}";
                      return a;
                    }()
              : std::string("not recognized");
}

std::string small_case(bool& ok) {
  const Matroid u14 = uniform(1, 4);
  const bool u14_ok = has_property(u14, 1, 2, 2, 4).holds && recognize_spike(u14, 1, 2).has_value();
  int perturbed = 0;
  auto corpus = oracle_corpus(perturbed);
  testing::MatroidGenerator gen(2026);
  for (int i = 0; i < 400; ++i) corpus.emplace_back("random" + std::to_string(i), gen.next(10));
  int with_property = 0;
  for (const auto& [name, m] : corpus) {
    if (m.size() < 2) continue;
    if (!has_property(m, 1, 2, 2, 4).holds) continue;
    ++with_property;
    if (!recognize_spike(m, 1, 2)) {
      ok = false;
      return name + " has the (1,2,2,4)-property but is not a (1,2)-spike";
    }
  }
  ok = ok && u14_ok;
  return std::string("U1,4 ") + (u14_ok ? "recognized" : "NOT recognized") + "; " +
         std::to_string(with_property) + " of " + std::to_string(corpus.size()) +
         " corpus matroids have the property, all recognized";
}

std::string modular_cut_control(bool& ok) {
  const Matroid lines = corpus::two_lines();
  const SubsetMask ab = mask_of({0, 1});
  const SubsetMask cd = mask_of({2, 3});
  const SubsetMask wx = mask_of({4, 5});
  const bool pair_rejected = !is_modular_cut(lines, {ab}).holds;
  const bool echidna_rejected = !is_modular_cut(lines, ModularCut(lines, {ab, wx})).holds;
  const auto cuts = testing::all_modular_cuts(lines);
  int separating = 0;
  const SubsetMask e = bit(lines.size());
  for (const auto& family : cuts) {
    const Matroid ext = extend_by_modular_cut(lines, ModularCut(lines, family));
    const bool in_ab = ext.rank(ab | e) == ext.rank(ab);
    const bool in_cd = ext.rank(cd | e) == ext.rank(cd);
    if (in_ab && !in_cd) ++separating;
  }
  ok = pair_rejected && echidna_rejected && separating == 0 && !cuts.empty();
  return std::string("cut from {a,b} rejected=") + (pair_rejected ? "yes" : "no") +
         ", from {a,b},{w,x} rejected=" + (echidna_rejected ? "yes" : "no") + "; " +
         std::to_string(cuts.size()) + " modular cuts, " + std::to_string(separating) +
         " put e in cl{a,b} but not cl{c,d}";
}

}  // namespace

int main() {
  testing::scratch_dir("acceptance-cx");
  ::setenv("GENSPIKE_COUNTEREXAMPLE_DIR",
           (std::filesystem::temp_directory_path() / "genspike-test-acceptance-cx").c_str(), 0);
  Suite suite;
  suite.run("construction-grid", construction_grid);
  suite.run("lambda-table", lambda_table);
  suite.run("circuit-classification", circuit_classification);
  suite.run("connectivity", three_connectivity);
  suite.run("coechidna-implication", coechidna_implication);
  suite.run("factory-round-trips", factory_round_trips);
  suite.run("oracle-equivalence", oracle_equivalence);
  suite.run("known-instance-k4", known_instance);
  suite.run("small-case-1t", small_case);
  suite.run("modular-cut-negative-control", modular_cut_control);
  std::printf("%d criteria failed\n", suite.failed());
  return suite.failed() == 0 ? 0 : 1;
}
