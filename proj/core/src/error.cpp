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
#include "csskit/error.hpp"

#include <algorithm>

namespace csskit {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case ErrorKind::InvalidCss: return "InvalidCss";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

ValidationError::ValidationError(std::vector<ErrorKind> violations, const std::string& what)
    : Error(violations.empty() ? ErrorKind::InvalidArgument : violations.front(), what),
      violations_(std::move(violations)) {}

bool ValidationError::has(ErrorKind kind) const noexcept {
  return std::find(violations_.begin(), violations_.end(), kind) != violations_.end();
}

}  // namespace csskit
