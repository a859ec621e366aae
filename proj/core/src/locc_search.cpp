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
#include "csskit/locc_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "csskit/css_solver.hpp"
#include "csskit/error.hpp"
#include "csskit/metrics.hpp"
#include "csskit/nelder_mead.hpp"
#include "csskit/parallel.hpp"

namespace csskit {
namespace {

const GellMannBasis& two_qubit_basis() {
  static const GellMannBasis basis = gell_mann(4);
  return basis;
}

void require_two_qubits(const DensityMatrix& state, const char* what) {
  if (state.dims() != Dims{2, 2})
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must have dims [2,2]");
}

double solver_distance(const DensityMatrix& state, bool* invalid_css) {
  if (invalid_css) *invalid_css = false;
  try {
    return min_hsd(state, Bipartition::first_vs_rest(2));
  } catch (const InvalidCssError& e) {
    if (invalid_css) *invalid_css = true;
    return hs_distance_sq(state.matrix(), e.candidate());
  }
}

struct RestartOutcome {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> params;
  std::size_t invalid_css_evals = 0;
};

}  // namespace

ChannelSpec local_dilation_from_params(const DensityMatrix& env, std::span<const double> params) {
  if (params.size() != kLoccParams)
    throw Error(ErrorKind::LengthMismatch, "locc dilation: expected 32 parameters");
  require_two_qubits(env, "environment");
  const auto& basis = two_qubit_basis();
  return ChannelSpec::from_dilation(Dilation{{2, 2},
                                             env,
                                             unitary_from_params(params.subspan(0, 16), basis),
                                             unitary_from_params(params.subspan(16, 16), basis)});
}

double locc_objective(const DensityMatrix& rho, const DensityMatrix& env, std::span<const double> params,
                      bool* invalid_css) {
  return solver_distance(apply_dilation(rho, local_dilation_from_params(env, params)), invalid_css);
}

LoccSearchReport locc_search(const DensityMatrix& rho, const DensityMatrix& env,
                             const LoccSearchConfig& config, std::uint64_t seed) {
  require_two_qubits(rho, "input state");
  require_two_qubits(env, "environment");
  if (config.evals < 1 || config.restarts < 1)
    throw Error(ErrorKind::InvalidArgument, "locc_search: budget must be >= 1");
  const auto cut = Bipartition::first_vs_rest(2);

  LoccSearchReport report;
  report.seed = seed;
  report.restarts = config.restarts;
  report.evals = config.evals;
  bool baseline_invalid = false;
  report.baseline_min_hsd = solver_distance(rho, &baseline_invalid);
  report.invalid_css_evals = baseline_invalid ? 1 : 0;

  std::vector<RestartOutcome> outcomes(config.restarts);
  parallel_for(config.restarts, config.jobs, [&](std::size_t r) {
    std::size_t invalid = 0;
    const auto objective = [&](std::span<const double> a) {
      bool flagged = false;
      const double value = locc_objective(rho, env, a, &flagged);
      invalid += flagged ? 1 : 0;
      return -value;
    };
    Rng rng(seed, r);
    std::vector<double> start(kLoccParams, 0.0);
    if (r > 0)
      for (auto& x : start) x = config.start_scale * rng.normal();

    NelderMeadOptions nm;
    nm.max_evals = config.evals;
    nm.initial_step = config.initial_step;
    auto result = nelder_mead_minimize(objective, start, nm);

    // Spend whatever the simplex left over on a shrinking Gaussian search.
    double step = config.initial_step;
    std::vector<double> trial(kLoccParams);
    for (std::size_t used = result.evals; used < config.evals; ++used) {
      for (std::size_t k = 0; k < kLoccParams; ++k) trial[k] = result.x[k] + step * rng.normal();
      const double value = objective(trial);
      if (value < result.f) {
        result.f = value;
        result.x = trial;
      } else {
        step = std::max(step * 0.97, 1e-6);
      }
    }
    outcomes[r] = {-result.f, std::move(result.x), invalid};
  });

  const auto best = std::max_element(outcomes.begin(), outcomes.end(), [](const auto& a, const auto& b) {
    return a.value < b.value;
  });
  for (const auto& o : outcomes) report.invalid_css_evals += o.invalid_css_evals;
  report.best_value = best->value;
  report.best_params = best->params;
  const auto out = apply_dilation(rho, local_dilation_from_params(env, report.best_params));
  report.best_output_spectrum = pt_spectrum_report(out, cut).spectrum;
  report.violation = report.best_value > report.baseline_min_hsd + kViolationTol;
  return report;
}

}  // namespace csskit
