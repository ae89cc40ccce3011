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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genspike {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Out-of-range or inconsistent arguments (including the ground-set cap).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A circuit list that does not define a matroid.
class InvalidCircuitsError : public Error {
 public:
  InvalidCircuitsError(const std::string& what, std::vector<std::uint32_t> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::uint32_t> witness_;
};

/// A named hypothesis of a construction or structural claim does not hold for the input.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : Error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Malformed text input.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A computation contradicted a proven statement. The offending instance was
/// written to `artifact_path()` before this was thrown.
class CounterexampleError : public Error {
 public:
  CounterexampleError(const std::string& what, std::string artifact_path)
      : Error(what + " (instance saved to " + artifact_path + ")"),
        artifact_path_(std::move(artifact_path)) {}
  const std::string& artifact_path() const noexcept { return artifact_path_; }

 private:
  std::string artifact_path_;
};

}  // namespace genspike
