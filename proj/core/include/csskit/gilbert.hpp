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
#ifndef CSSKIT_GILBERT_HPP
#define CSSKIT_GILBERT_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "csskit/states.hpp"

namespace csskit {

struct GilbertRecord {
  std::size_t iter = 0;
  double distance_sq_upper = 0.0;
  double commutator_hs = 0.0;  ///< ||[rho^T_B, sigma_k^T_B]||_HS
};

struct GilbertTrace {
  std::vector<GilbertRecord> records;  ///< one per iteration, after the update
  DensityMatrix sigma;                 ///< final separable approximant
};

enum class GilbertMode {
  /// sigma <- sigma + t (pi - sigma) only; converges like 1/k.
  Plain,
  /// Keeps sigma as a weighted set of at most d^2 + 1 product states,
  /// moves weight pairwise from the least to the most aligned one (starting
  /// with pi) and slides each stored state along one alternating update.
  Pairwise,
};

struct GilbertOptions {
  std::size_t iters = 2000;
  std::size_t restarts = 5;            ///< random starts of the product-state search
  std::size_t alternating_rounds = 20; ///< per start
  GilbertMode mode = GilbertMode::Pairwise;
  /// Extra pairwise steps among the stored atoms after each oracle call
  /// (Pairwise mode only).
  std::size_t corrections = 10;
  std::uint64_t seed = 0;
};

/// Upper bound on the squared distance to the separable set across `cut`.
///
/// sigma starts at the maximally mixed state. Each iteration picks a product
/// pure state pi that (approximately) maximizes Tr[pi (rho - sigma)] by
/// alternating top-eigenvector updates of the two factors, then moves
/// sigma <- sigma + t (pi - sigma) with the exact line-search step clamped
/// to [0, 1] (Plain mode). Pairwise mode keeps the decomposition of sigma
/// and instead moves weight onto pi from its least aligned atom; every step
/// is an exact line search, so distance_sq_upper never increases.
GilbertTrace gilbert_css(const DensityMatrix& rho, const Bipartition& cut,
                         const GilbertOptions& options);

GilbertTrace gilbert_css(const DensityMatrix& rho, const Bipartition& cut, std::size_t iters,
                         std::size_t restarts, std::uint64_t seed);

/// ||ab - ba||_HS. Throws ShapeMismatch.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trailing moving average: out[k] = mean(values[max(0, k-window+1) .. k]).
std::vector<double> moving_average(std::span<const double> values, std::size_t window);

/// Writes "iter,distance_sq_upper,commutator_hs" plus one row per record.
void write_trace_csv(std::ostream& out, const GilbertTrace& trace);

}  // namespace csskit

#endif  // CSSKIT_GILBERT_HPP
