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
#ifndef CSSKIT_METRICS_HPP
#define CSSKIT_METRICS_HPP

#include "csskit/states.hpp"

namespace csskit {

/// Partial-transpose spectrum summary.
struct SpectrumReport {
  std::vector<double> spectrum;  ///< decreasing
  double neg_sum = 0.0;          ///< sum of |negative eigenvalues|
  double neg_sq_sum = 0.0;       ///< sum of squared negative eigenvalues
  std::size_t pos_rank = 0;      ///< eigenvalues > kZeroTol
};

SpectrumReport pt_spectrum_report(const DensityMatrix& rho, const Bipartition& cut);

/// Sum of |negative eigenvalues| of rho^T_B.
double negativity(const DensityMatrix& rho, const Bipartition& cut);

/// Tr(|rho^T_B| - rho^T_B) = 2 * negativity().
double paper_negativity(const DensityMatrix& rho, const Bipartition& cut);

/// neg_sum^2 / pos_rank + neg_sq_sum. Never exceeds min_hsd; equal to it
/// whenever the first shift does not push another eigenvalue negative.
double lower_bound(const DensityMatrix& rho, const Bipartition& cut);

/// Both normalizations of the bound and both routes to the rank.
struct LowerBoundDiagnostic {
  double half_difference_form = 0.0;  ///< built from (|X| - X)/2; what lower_bound returns
  double full_difference_form = 0.0;  ///< built from |X| - X; four times the above
  std::size_t pos_rank_spectral = 0;
  std::size_t pos_rank_matrix = 0;    ///< rank(X + |X|)
  bool rank_mismatch = false;
};

LowerBoundDiagnostic lower_bound_diagnostic(const DensityMatrix& rho, const Bipartition& cut);

struct WitnessOperator {
  ComplexMatrix w;
  double norm_check = 0.0;  ///< ||css - rho||_HS
};

/// W = (css - rho - Tr[css (css - rho)] I) / ||css - rho||_HS.
/// Throws DegenerateInput when ||css - rho||^2 <= 1e-12.
WitnessOperator build_witness(const DensityMatrix& rho, const DensityMatrix& css);

/// Tr(W sigma). Throws ShapeMismatch, or NotHermitian when the imaginary
/// residual exceeds 1e-10.
double eval_witness(const WitnessOperator& w, const DensityMatrix& sigma);

}  // namespace csskit

#endif  // CSSKIT_METRICS_HPP
