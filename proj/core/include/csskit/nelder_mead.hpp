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
#ifndef CSSKIT_NELDER_MEAD_HPP
#define CSSKIT_NELDER_MEAD_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace csskit {

struct NelderMeadOptions {
  std::size_t max_evals = 2000;  ///< hard cap, the start point included
  double initial_step = 0.5;
  /// Stop when the spread of simplex values and the simplex diameter both
  /// fall below these.
  double f_tol = 1e-13;
  double x_tol = 1e-10;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  std::size_t evals = 0;
  bool converged = false;
};

/// Minimizes f with the standard reflection/expansion/contraction/shrink
/// coefficients (1, 2, 1/2, 1/2). Never calls f more than max_evals times.
NelderMeadResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> x0, const NelderMeadOptions& options);

}  // namespace csskit

#endif  // CSSKIT_NELDER_MEAD_HPP
