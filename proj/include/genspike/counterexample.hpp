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

// Instances that contradict a proven statement are written to disk before the
// caller reports failure. Files go to $GENSPIKE_COUNTEREXAMPLE_DIR, or to
// <tmp>/genspike-counterexamples when the variable is unset.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

#include "genspike/certificate.hpp"
#include "genspike/error.hpp"
#include "genspike/matroid.hpp"
#include "genspike/text_format.hpp"

namespace genspike {

inline std::filesystem::path counterexample_dir() {
  if (const char* env = std::getenv("GENSPIKE_COUNTEREXAMPLE_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return std::filesystem::temp_directory_path() / "genspike-counterexamples";
}

/// Writes `<dir>/<claim>-<stamp>.mtx` and a matching `.params` file holding
/// `params` and the partition, if any. Returns the .mtx path.
inline std::string write_counterexample(std::string_view claim, const Matroid& m,
                                        const std::string& params,
                                        const PairPartition* partition = nullptr) {
  static std::atomic<unsigned> counter{0};
  const auto dir = counterexample_dir();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto stamp = std::chrono::system_clock::now().time_since_epoch().count();
  const std::string stem = std::string(claim) + "-" + std::to_string(stamp) + "-" +
                           std::to_string(counter.fetch_add(1));
  const auto mtx = dir / (stem + ".mtx");
  {
    std::ofstream out(mtx);
    write_matroid(out, m);
  }
  std::ofstream out(dir / (stem + ".params"));
  out << "claim=" << claim << "\n" << params << "\n";
  if (partition != nullptr) {
    for (SubsetMask p : partition->pairs()) out << join_elements(p, ' ') << "\n";
  }
  return mtx.string();
}

[[noreturn]] inline void raise_counterexample(std::string_view claim, const Matroid& m,
                                              const std::string& params,
                                              const PairPartition* partition = nullptr) {
  const std::string path = write_counterexample(claim, m, params, partition);
  throw CounterexampleError(std::string(claim) + " violated: " + params, path);
}

}  // namespace genspike
