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
#ifndef CSSKIT_STATE_IO_HPP
#define CSSKIT_STATE_IO_HPP

// State files are JSON:
//
//   {"dims": [d0, d1, ...], "matrix": [[[re, im], ...], ...]}
//
// Rows are listed in order; every entry is a [re, im] pair. Doubles are
// written with round-trip precision so write -> read is exact.

#include <filesystem>
#include <string>
#include <string_view>

#include "csskit/states.hpp"

namespace csskit {

/// Throws Error(Parse) naming the offending field, or ValidationError when the
/// matrix parses but is not a density matrix.
DensityMatrix parse_state_json(std::string_view text);

std::string state_to_json(const DensityMatrix& rho, int indent = -1);

DensityMatrix read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho);

}  // namespace csskit

#endif  // CSSKIT_STATE_IO_HPP
