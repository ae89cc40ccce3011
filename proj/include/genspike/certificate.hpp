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

// Pair partitions (spines of an echidna, arms of a spike) and spike
// certificates, plus the certificate text form:
//
//   spike s=<s> t=<t>
//   <a> <b>             (one arm per line)

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "genspike/error.hpp"
#include "genspike/subset.hpp"
#include "genspike/text_format.hpp"

namespace genspike {

/// Ordered list of pairwise disjoint 2-element subsets.
class PairPartition {
 public:
  PairPartition() = default;

  explicit PairPartition(std::vector<SubsetMask> pairs) {
    for (SubsetMask p : pairs) append(p);
  }

  static PairPartition from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    PairPartition out;
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= kMaskBits || b >= kMaskBits) {
        throw ParameterError("pair element out of range");
      }
      out.append(bit(a) | bit(b));
    }
    return out;
  }

  void append(SubsetMask pair) {
    if (popcount(pair) != 2) throw ParameterError("pair {" + join_elements(pair) + "} does not have two elements");
    if ((pair & covered_) != 0) throw ParameterError("pair {" + join_elements(pair) + "} overlaps an earlier pair");
    pairs_.push_back(pair);
    covered_ |= pair;
  }

  const std::vector<SubsetMask>& pairs() const noexcept { return pairs_; }
  int order() const noexcept { return static_cast<int>(pairs_.size()); }
  SubsetMask covered() const noexcept { return covered_; }
  SubsetMask operator[](int i) const { return pairs_[static_cast<std::size_t>(i)]; }

  /// A_J: union of the pairs whose indices are in the mask `index_set`.
  SubsetMask arm_union(SubsetMask index_set) const {
    SubsetMask u = 0;
    for (SubsetMask rest = index_set; rest != 0; rest &= rest - 1) {
      u |= pairs_[static_cast<std::size_t>(lowest_element(rest))];
    }
    return u;
  }

  /// Number of pairs contained in X / meeting X.
  int pairs_inside(SubsetMask x) const {
    int k = 0;
    for (SubsetMask p : pairs_) k += is_subset(p, x) ? 1 : 0;
    return k;
  }
  int pairs_meeting(SubsetMask x) const {
    int k = 0;
    for (SubsetMask p : pairs_) k += (p & x) != 0 ? 1 : 0;
    return k;
  }

  friend bool operator==(const PairPartition&, const PairPartition&) = default;

 private:
  std::vector<SubsetMask> pairs_;
  SubsetMask covered_ = 0;
};

/// A pair partition claimed to be an s-echidna and a t-coechidna covering E(M).
struct SpikeCertificate {
  int s = 1;
  int t = 1;
  PairPartition partition;

  int order() const noexcept { return partition.order(); }
  friend bool operator==(const SpikeCertificate&, const SpikeCertificate&) = default;
};

/// The same partition read as a certificate for the dual matroid.
inline SpikeCertificate dual_certificate(const SpikeCertificate& c) {
  return SpikeCertificate{c.t, c.s, c.partition};
}

inline void write_certificate(std::ostream& out, const SpikeCertificate& c) {
  out << "spike s=" << c.s << " t=" << c.t << "\n";
  for (SubsetMask p : c.partition.pairs()) out << join_elements(p, ' ') << "\n";
}

inline std::string to_text(const SpikeCertificate& c) {
  std::ostringstream os;
  write_certificate(os, c);
  return os.str();
}

inline SpikeCertificate read_certificate(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!detail::next_line(in, line, line_no)) throw ParseError(1, "empty certificate");
  auto toks = detail::split_spaces(line);
  if (toks.size() != 3 || toks[0] != "spike" || toks[1].substr(0, 2) != "s=" ||
      toks[2].substr(0, 2) != "t=") {
    throw ParseError(line_no, "expected 'spike s=<s> t=<t>'");
  }
  SpikeCertificate cert;
  cert.s = detail::parse_int(toks[1].substr(2), line_no, "s");
  cert.t = detail::parse_int(toks[2].substr(2), line_no, "t");
  if (cert.s < 1 || cert.t < 1) throw ParseError(line_no, "s and t must be positive");
  while (detail::next_line(in, line, line_no)) {
    if (line.empty()) continue;
    toks = detail::split_spaces(line);
    if (toks.size() != 2) throw ParseError(line_no, "expected an arm '<a> <b>'");
    const int a = detail::parse_int(toks[0], line_no, "arm element");
    const int b = detail::parse_int(toks[1], line_no, "arm element");
    if (a < 0 || b < 0 || a >= kMaskBits || b >= kMaskBits || a == b) {
      throw ParseError(line_no, "invalid arm");
    }
    try {
      cert.partition.append(bit(a) | bit(b));
    } catch (const ParameterError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return cert;
}

inline SpikeCertificate parse_certificate(const std::string& text) {
  std::istringstream is(text);
  return read_certificate(is);
}

inline SpikeCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_certificate(in);
}

inline void save_certificate(const std::string& path, const SpikeCertificate& c) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_certificate(out, c);
}

}  // namespace genspike
