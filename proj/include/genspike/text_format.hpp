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

// The "matroid v1" text format:
//
//   matroid v1
//   n <int>
//   rank <int>          (optional, cross-checked on read)
//   circuits
//   <i0> <i1> ...       (one circuit per line, strictly increasing, 0-based)
//   end
//
// Writers emit circuits sorted by size, then lexicographically.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "genspike/error.hpp"
#include "genspike/matroid.hpp"
#include "genspike/subset.hpp"

namespace genspike {

namespace detail {

inline std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const std::size_t j = line.find(' ', i);
    const std::size_t end = j == std::string_view::npos ? line.size() : j;
    out.push_back(line.substr(i, end - i));
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return out;
}

inline int parse_int(std::string_view tok, int line_no, const char* what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, std::string("expected an integer for ") + what + ", got '" +
                                  std::string(tok) + "'");
  }
  return v;
}

/// Reads one line and strips a trailing CR; returns false at EOF.
inline bool next_line(std::istream& in, std::string& line, int& line_no) {
  if (!std::getline(in, line)) return false;
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace detail

inline void write_matroid(std::ostream& out, const Matroid& m) {
  std::vector<SubsetMask> cs = circuits(m).sets;
  std::stable_sort(cs.begin(), cs.end(), [](SubsetMask a, SubsetMask b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    return pa != pb ? pa < pb : lex_less(a, b);
  });
  out << "matroid v1\n";
  out << "n " << m.size() << "\n";
  out << "rank " << m.rank() << "\n";
  out << "circuits\n";
  for (SubsetMask c : cs) out << join_elements(c, ' ') << "\n";
  out << "end\n";
}

inline std::string to_text(const Matroid& m) {
  std::ostringstream os;
  write_matroid(os, m);
  return os.str();
}

inline Matroid read_matroid(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto expect_line = [&](const char* what) {
    if (!detail::next_line(in, line, line_no)) {
      throw ParseError(line_no + 1, std::string("unexpected end of input, expected ") + what);
    }
  };

  expect_line("header");
  if (line != "matroid v1") throw ParseError(line_no, "expected 'matroid v1'");

  expect_line("'n <int>'");
  auto toks = detail::split_spaces(line);
  if (toks.size() != 2 || toks[0] != "n") throw ParseError(line_no, "expected 'n <int>'");
  const int n = detail::parse_int(toks[1], line_no, "n");
  if (n < 0) throw ParseError(line_no, "n must be non-negative");
  if (n > element_cap()) {
    throw ParseError(line_no, "n=" + std::to_string(n) + " exceeds the element cap " +
                                  std::to_string(element_cap()));
  }

  expect_line("'rank <int>' or 'circuits'");
  int declared_rank = -1;
  if (line.rfind("rank ", 0) == 0) {
    toks = detail::split_spaces(line);
    if (toks.size() != 2) throw ParseError(line_no, "expected 'rank <int>'");
    declared_rank = detail::parse_int(toks[1], line_no, "rank");
    expect_line("'circuits'");
  }
  if (line != "circuits") throw ParseError(line_no, "expected 'circuits'");

  std::vector<SubsetMask> cs;
  std::vector<int> lines_of;
  bool ended = false;
  while (detail::next_line(in, line, line_no)) {
    if (line == "end") {
      ended = true;
      break;
    }
    if (line.empty()) throw ParseError(line_no, "empty circuit line");
    SubsetMask c = 0;
    int prev = -1;
    for (std::string_view tok : detail::split_spaces(line)) {
      const int e = detail::parse_int(tok, line_no, "element index");
      if (e <= prev) throw ParseError(line_no, "indices must be strictly increasing");
      if (e >= n) throw ParseError(line_no, "index " + std::to_string(e) + " out of range");
      c |= bit(e);
      prev = e;
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (cs[i] == c) throw ParseError(line_no, "duplicate circuit (first on line " + std::to_string(lines_of[i]) + ")");
      if (is_subset(cs[i], c) || is_subset(c, cs[i])) {
        throw ParseError(line_no, "circuit comparable with line " + std::to_string(lines_of[i]));
      }
    }
    cs.push_back(c);
    lines_of.push_back(line_no);
  }
  if (!ended) throw ParseError(line_no + 1, "missing 'end'");
  while (detail::next_line(in, line, line_no)) {
    if (!line.empty()) throw ParseError(line_no, "content after 'end'");
  }

  Matroid m = [&] {
    try {
      return from_circuits(n, cs);
    } catch (const InvalidCircuitsError& e) {
      throw ParseError(line_no, std::string("not a matroid: ") + e.what());
    }
  }();
  if (declared_rank >= 0 && declared_rank != m.rank()) {
    throw ParseError(line_no, "declared rank " + std::to_string(declared_rank) +
                                  " but circuits give rank " + std::to_string(m.rank()));
  }
  return m;
}

inline Matroid parse_matroid(const std::string& text) {
  std::istringstream is(text);
  return read_matroid(is);
}

inline Matroid load_matroid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_matroid(in);
}

inline void save_matroid(const std::string& path, const Matroid& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_matroid(out, m);
}

}  // namespace genspike
