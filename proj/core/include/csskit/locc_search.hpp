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
#ifndef CSSKIT_LOCC_SEARCH_HPP
#define CSSKIT_LOCC_SEARCH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "csskit/channels.hpp"

namespace csskit {

inline constexpr std::size_t kLoccParams = 32;
inline constexpr double kViolationTol = 1e-8;

/// Local dilation with U_AC = exp(i sum a[0..16) L) and U_BD = exp(i sum a[16..32) L)
/// on a two-qubit system and two-qubit environment.
ChannelSpec local_dilation_from_params(const DensityMatrix& env, std::span<const double> params);

/// g(a) = min_hsd of the dilated output state.
/// min_hsd of the dilated output. When the solver's fixed point is not a
/// state, returns its distance instead and sets *invalid_css.
double locc_objective(const DensityMatrix& rho, const DensityMatrix& env,
                      std::span<const double> params, bool* invalid_css = nullptr);

struct LoccSearchConfig {
  std::size_t restarts = 20;
  std::size_t evals = 2000;   ///< objective evaluations per restart
  double initial_step = 0.5;  ///< Nelder-Mead simplex edge
  double start_scale = 1.0;   ///< std-dev of random restart points
  std::size_t jobs = 1;
};

struct LoccSearchReport {
  std::uint64_t seed = 0;
  std::size_t restarts = 0;
  std::size_t evals = 0;
  double baseline_min_hsd = 0.0;
  double best_value = 0.0;
  std::vector<double> best_params;
  std::vector<double> best_output_spectrum;  ///< PT spectrum of the best output
  bool violation = false;
  std::size_t invalid_css_evals = 0;  ///< objective calls that hit InvalidCss
};

/// Maximizes g over the 32 parameters. Restart 0 starts at a = 0 (identity
/// channel); restart k > 0 starts at a Gaussian point drawn from stream k.
/// When Nelder-Mead converges before the budget is spent, the rest goes to
/// Gaussian random search around the incumbent.
LoccSearchReport locc_search(const DensityMatrix& rho, const DensityMatrix& env,
                             const LoccSearchConfig& config, std::uint64_t seed);

}  // namespace csskit

#endif  // CSSKIT_LOCC_SEARCH_HPP
