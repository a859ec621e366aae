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
#include "csskit/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "csskit/error.hpp"

namespace csskit {

NelderMeadResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> x0, const NelderMeadOptions& options) {
  if (x0.empty()) throw Error(ErrorKind::InvalidArgument, "nelder_mead: empty start point");
  if (options.max_evals < 1) throw Error(ErrorKind::InvalidArgument, "nelder_mead: budget must be >= 1");
  const std::size_t n = x0.size();

  NelderMeadResult best;
  best.f = std::numeric_limits<double>::infinity();
  const auto eval = [&](const std::vector<double>& x) -> std::optional<double> {
    if (best.evals >= options.max_evals) return std::nullopt;
    ++best.evals;
    const double value = f(x);
    if (value < best.f) {
      best.f = value;
      best.x = x;
    }
    return value;
  };

  std::vector<std::vector<double>> simplex{x0};
  std::vector<double> values;
  if (auto v = eval(x0)) values.push_back(*v);
  else return best;
  for (std::size_t i = 0; i < n; ++i) {
    auto x = x0;
    x[i] += options.initial_step;
    const auto v = eval(x);
    if (!v) return best;
    simplex.push_back(std::move(x));
    values.push_back(*v);
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n);
  const auto along = [&](const std::vector<double>& from, double coef) {
    for (std::size_t k = 0; k < n; ++k) trial[k] = centroid[k] + coef * (from[k] - centroid[k]);
    return trial;
  };

  while (best.evals < options.max_evals) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    const auto lo = order.front();
    const auto hi = order.back();
    const auto second = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        diameter = std::max(diameter, std::abs(simplex[i][k] - simplex[lo][k]));
    if (values[hi] - values[lo] <= options.f_tol && diameter <= options.x_tol) {
      best.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != hi)
        for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);

    const auto reflected = along(simplex[hi], -1.0);
    const auto fr = eval(reflected);
    if (!fr) break;
    if (*fr < values[lo]) {
      const auto expanded = along(simplex[hi], -2.0);
      const auto fe = eval(expanded);
      if (!fe) break;
      if (*fe < *fr) {
        simplex[hi] = expanded;
        values[hi] = *fe;
      } else {
        simplex[hi] = reflected;
        values[hi] = *fr;
      }
      continue;
    }
    if (*fr < values[second]) {
      simplex[hi] = reflected;
      values[hi] = *fr;
      continue;
    }
    const bool outside = *fr < values[hi];
    const auto contracted = outside ? along(reflected, 0.5) : along(simplex[hi], 0.5);
    const auto fc = eval(contracted);
    if (!fc) break;
    if (outside ? *fc <= *fr : *fc < values[hi]) {
      simplex[hi] = contracted;
      values[hi] = *fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == lo) continue;
      for (std::size_t k = 0; k < n; ++k)
        simplex[i][k] = simplex[lo][k] + 0.5 * (simplex[i][k] - simplex[lo][k]);
      const auto v = eval(simplex[i]);
      if (!v) return best;
      values[i] = *v;
    }
  }
  return best;
}

}  // namespace csskit
