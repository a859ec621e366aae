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
#ifndef CSSKIT_CHANNELS_HPP
#define CSSKIT_CHANNELS_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "csskit/rng.hpp"
#include "csskit/states.hpp"

namespace csskit {

/// Environment dilation of a two-party channel:
///
///   rho_AB -> Tr_CD[(U_AC (x) U_BD)(rho_AB (x) env_CD)(U_AC (x) U_BD)^dagger]
///
/// u_ac acts on A (x) C in that factor order, u_bd on B (x) D.
struct Dilation {
  Dims system_dims;  ///< {dA, dB}
  DensityMatrix env; ///< on C (x) D, env.dims() == {dC, dD}
  ComplexMatrix u_ac;
  ComplexMatrix u_bd;
};

/// A CPTP map given either by Kraus operators or by a dilation. The
/// constructors check completeness / unitarity.
class ChannelSpec {
 public:
  /// Throws InvalidArgument unless sum K^dagger K = I within 1e-9.
  static ChannelSpec from_kraus(std::vector<ComplexMatrix> kraus);

  /// Throws DimensionMismatch / InvalidArgument (non-unitary within 1e-10).
  static ChannelSpec from_dilation(Dilation dilation);

  bool is_kraus() const noexcept { return std::holds_alternative<std::vector<ComplexMatrix>>(rep_); }
  bool is_dilation() const noexcept { return std::holds_alternative<Dilation>(rep_); }

  const std::vector<ComplexMatrix>& kraus() const { return std::get<std::vector<ComplexMatrix>>(rep_); }
  const Dilation& dilation() const { return std::get<Dilation>(rep_); }

  std::size_t input_dim() const;

 private:
  explicit ChannelSpec(std::variant<std::vector<ComplexMatrix>, Dilation> rep) : rep_(std::move(rep)) {}

  std::variant<std::vector<ComplexMatrix>, Dilation> rep_;
};

/// Hermitian basis of d x d matrices: symmetric (|j><k| + |k><j|),
/// antisymmetric i(|k><j| - |j><k|) for j < k, the traceless diagonal
/// ladder normalized to Tr(L^2) = 2, and finally the identity.
struct GellMannBasis {
  std::size_t d = 0;
  std::vector<ComplexMatrix> matrices;  ///< d^2 entries, identity last
};

GellMannBasis gell_mann(std::size_t d);

/// exp(i sum a_k L_k). Throws LengthMismatch unless a.size() == d^2.
ComplexMatrix unitary_from_params(std::span<const double> a, const GellMannBasis& basis);

ComplexMatrix apply_kraus(std::span<const ComplexMatrix> kraus, const ComplexMatrix& x);

/// Applies either representation to an arbitrary operator.
ComplexMatrix apply_channel(const ChannelSpec& channel, const ComplexMatrix& x);

/// Runs the dilation on rho_AB and validates the output state.
DensityMatrix apply_dilation(const DensityMatrix& rho_ab, const ChannelSpec& spec);

/// Kraus operators sqrt(p_m) (I (x) <i|) U (I (x) |psi_m>) over the env
/// eigen-decomposition sum p_m |psi_m><psi_m| (zero-weight terms dropped).
/// Kraus form passes through unchanged.
ChannelSpec kraus_from_dilation(const ChannelSpec& spec);

/// d x d swap unitary on two equal-dimension factors.
ComplexMatrix swap_unitary(std::size_t d);

/// Phi(x) = Tr(x) I / d.
ChannelSpec completely_depolarizing(std::size_t d);

/// c[l][j] = sum_i |<f_l| K_i |e_j>|^2 with {e_j} the eigenbasis of x and
/// {f_l} the eigenbasis of Phi(x), both in decreasing eigenvalue order.
struct TransitionMatrix {
  RealMatrix c;
  std::vector<double> input_spectrum;
  std::vector<double> output_spectrum;
  /// max_l |output_spectrum[l] - (C input_spectrum)[l]|
  double spectral_residual = 0.0;
  /// Set when either spectrum has a gap below 1e-8; the eigenbasis is then
  /// not unique but the spectral identity still holds.
  bool degenerate_basis_warning = false;

  std::vector<double> row_sums() const;
  std::vector<double> column_sums() const;
};

TransitionMatrix transition_matrix(const ComplexMatrix& x, const ChannelSpec& channel);

struct MajorizationReport {
  bool majorized = false;
  /// sum_{i<=k} lambda_i - sum_{i<=k} sigma_i for k = 1..n-1 (decreasing order)
  std::vector<double> prefix_slack;
  /// sum of the k smallest sigma minus the k smallest lambda
  std::vector<double> tail_slack;
  double total_gap = 0.0;
};

/// Is sigma majorized by lambda? Inputs are sorted internally.
MajorizationReport majorization_check(std::span<const double> sigma, std::span<const double> lambda,
                                      double tol = 1e-9);

/// Mixture of k global unitaries on C^d with Dirichlet(1) weights.
ChannelSpec random_unital_channel(std::size_t d, std::size_t k, Rng& rng);
ChannelSpec random_unital_channel(std::size_t d, std::size_t k, std::uint64_t seed);

/// Mixture of k local unitaries U_0 (x) U_1 (x) ... on the given factors.
/// These are LOCC and unital.
ChannelSpec random_local_unital_channel(const Dims& dims, std::size_t k, Rng& rng);

/// Unitary with Gaussian Gell-Mann coefficients (scale 1).
ComplexMatrix random_unitary(const GellMannBasis& basis, Rng& rng);

}  // namespace csskit

#endif  // CSSKIT_CHANNELS_HPP
