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

#ifndef CSSKIT_CONFIG_HPP
#define CSSKIT_CONFIG_HPP

#include <optional>

namespace csskit {

/// Global "is it zero" tolerance used for ranks, PSD checks and sign tests.
inline constexpr double kZeroTol = 1e-9;

/// Tolerance on ||m - m^dagger||_HS when an operator must be Hermitian.
inline constexpr double kHermitianTol = 1e-10;

/// Tolerance on |Tr(rho) - 1| when validating a density matrix.
inline constexpr double kTraceTol = 1e-10;

/// Default termination threshold on |N_i| for the closest-separable-state loop.
inline constexpr double kCssTol = 1e-12;

/// Jacobi sweeps stop when the off-diagonal Frobenius mass drops below this
/// (relative to max(1, ||A||_F)).
inline constexpr double kJacobiOffTol = 1e-12;

/// Name of the environment variable that overrides the default CSS tolerance.
inline constexpr const char* kToleranceEnvVar = "CSSKIT_TOL";

/// Reads CSSKIT_TOL. Returns nullopt when unset; throws csskit::Error when the
/// value is not a positive finite real.
std::optional<double> tolerance_from_env();

}  // namespace csskit

#endif  // CSSKIT_CONFIG_HPP
