// Copyright 2026 The csskit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSSKIT_ERROR_HPP
#define CSSKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace csskit {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  ShapeMismatch,
  DimensionMismatch,
  TraceNotOne,
  NotPSD,
  NonFinite,
  UnknownName,
  InvalidArgument,
  LengthMismatch,
  MaxIterationsExceeded,
  InvalidCss,
  DegenerateInput,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by validate(); carries every violated invariant, not just the first.
class ValidationError : public Error {
 public:
  ValidationError(std::vector<ErrorKind> violations, const std::string& what);

  const std::vector<ErrorKind>& violations() const noexcept { return violations_; }
  bool has(ErrorKind kind) const noexcept;

 private:
  std::vector<ErrorKind> violations_;
};

}  // namespace csskit

#endif  // CSSKIT_ERROR_HPP
