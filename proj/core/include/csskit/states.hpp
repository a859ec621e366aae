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
#ifndef CSSKIT_STATES_HPP
#define CSSKIT_STATES_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "csskit/linalg.hpp"
#include "csskit/rng.hpp"

namespace csskit {

/// A validated quantum state: Hermitian, unit trace, PSD (min eigenvalue
/// >= -kZeroTol), with a subsystem dimension list whose product matches the
/// matrix size. Only obtainable through validate().
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(mat_.rows()); }

 private:
  DensityMatrix(ComplexMatrix mat, Dims dims) : mat_(std::move(mat)), dims_(std::move(dims)) {}
  friend DensityMatrix validate(ComplexMatrix m, Dims dims);

  ComplexMatrix mat_;
  Dims dims_;
};

/// Checks every invariant and throws ValidationError listing all violations
/// (NotHermitian, TraceNotOne, NotPSD, DimensionMismatch, NonFinite).
/// The stored matrix is the Hermitian part of m.
DensityMatrix validate(ComplexMatrix m, Dims dims);

/// Split of the subsystems into side A and its complement, side B.
class Bipartition {
 public:
  /// side_a must be nonempty, in range and leave a nonempty side B.
  static Bipartition from_side_a(std::vector<std::size_t> side_a, std::size_t n_subsystems);

  /// Subsystem 0 against the rest.
  static Bipartition first_vs_rest(std::size_t n_subsystems);

  const std::vector<std::size_t>& side_a() const noexcept { return side_a_; }
  const std::vector<std::size_t>& side_b() const noexcept { return side_b_; }
  std::size_t n_subsystems() const noexcept { return side_a_.size() + side_b_.size(); }

  /// {prod dims over side A, prod dims over side B}.
  Dims bipartite_dims(const Dims& dims) const;

  /// Subsystem order that puts side A first, then side B.
  std::vector<std::size_t> grouping_order() const;

 private:
  Bipartition(std::vector<std::size_t> a, std::vector<std::size_t> b)
      : side_a_(std::move(a)), side_b_(std::move(b)) {}

  std::vector<std::size_t> side_a_;
  std::vector<std::size_t> side_b_;
};

/// Partial transpose on side B of the cut.
ComplexMatrix partial_transpose(const DensityMatrix& rho, const Bipartition& cut);

/// (|00> + |11>)/sqrt(2), dims [2,2].
DensityMatrix bell_state();
/// (|000> + |111>)/sqrt(2), dims [2,2,2].
DensityMatrix ghz_state();
/// (|001> + |010> + |100>)/sqrt(3), dims [2,2,2].
DensityMatrix w_state();
/// p * bell + (1 - p) * I/4, p in [0, 1].
DensityMatrix werner_state(double p);
DensityMatrix max_mixed_state(const Dims& dims);

/// Accepts "bell", "ghz", "w", "werner:<p>" (p may be a fraction such as
/// 1/3), "max_mixed:<d0>x<d1>x...".
/// Throws UnknownName otherwise.
DensityMatrix named_state(std::string_view name);

/// Haar-random unit vector (normalized complex Gaussian).
Eigen::VectorXcd random_pure_vector(std::size_t d, Rng& rng);

/// rho = G G^dagger / Tr(G G^dagger), G square Ginibre (Hilbert-Schmidt measure).
DensityMatrix random_state(const Dims& dims, Rng& rng);
DensityMatrix random_state(const Dims& dims, std::uint64_t seed);

/// |a><a| (x) |b><b| (x) ... with each factor Haar random.
DensityMatrix random_product_pure(const Dims& dims, Rng& rng);
DensityMatrix random_product_pure(const Dims& dims, std::uint64_t seed);

/// rho_0 (x) rho_1 (x) ... with each factor an independent random_state.
DensityMatrix random_product_mixed(const Dims& dims, Rng& rng);

/// Pure state that is a product across the cut (each side may itself be a
/// composite system), returned in the original subsystem order.
DensityMatrix random_cut_product_pure(const Dims& dims, const Bipartition& cut, Rng& rng);

}  // namespace csskit

#endif  // CSSKIT_STATES_HPP
