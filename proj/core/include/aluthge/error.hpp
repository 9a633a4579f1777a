// Copyright 2026 The Aluthge Authors
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
#include <string_view>

namespace aluthge {

enum class ErrorKind {
  kNonSquare,
  kNonHermitian,
  kNonFinite,
  kNegativeEigenvalue,
  kConvergenceFailure,
  kShapeMismatch,
  kNotCommuting,
  kSizeGuard,
  kNumericalFailure,
  kGenericityFailure,
  kNegativeHomology,
  kInvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Input/validation problems as opposed to numerical breakdown.
  bool is_input_error() const noexcept {
    switch (kind_) {
      case ErrorKind::kNonSquare:
      case ErrorKind::kNonHermitian:
      case ErrorKind::kNonFinite:
      case ErrorKind::kShapeMismatch:
      case ErrorKind::kNotCommuting:
      case ErrorKind::kSizeGuard:
      case ErrorKind::kInvalidArgument:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

class NotCommutingError : public Error {
 public:
  NotCommutingError(double residual, int first, int second)
      : Error(ErrorKind::kNotCommuting,
              "commutator residual " + std::to_string(residual) +
                  " for pair (" + std::to_string(first) + ", " +
                  std::to_string(second) + ")"),
        residual_(residual),
        first_(first),
        second_(second) {}

  double residual() const noexcept { return residual_; }
  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }

 private:
  double residual_;
  int first_;
  int second_;
};

}  // namespace aluthge
