// Copyright 2026 The sppt developers
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

#include <stdexcept>
#include <string>

namespace sppt {

enum class ErrorKind {
  NotSquare,
  NotHermitian,
  NotPSD,
  NotUnitary,
  NotDensityMatrix,
  NotCommutingFamily,
  NotSuperSPPT,
  DimensionMismatch,
  OutOfRange,
  InvalidProbability,
  MalformedFactor,
  RangeViolation,
  ConvergenceFailure,
  DiagonalizationFailure,
  ParseError,
  Internal,
};

/// Single exception type carrying a machine-readable kind plus a message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors caused by bad caller input (as opposed to numerical
  /// breakdown inside an algorithm). Used by the CLI to pick exit codes.
  bool is_input_error() const noexcept {
    switch (kind_) {
      case ErrorKind::ConvergenceFailure:
      case ErrorKind::DiagonalizationFailure:
      case ErrorKind::Internal:
        return false;
      default:
        return true;
    }
  }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

[[noreturn]] inline void throw_error(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

}  // namespace sppt
