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
#include "csskit/metrics.hpp"

#include <cmath>

#include "csskit/config.hpp"
#include "csskit/error.hpp"

namespace csskit {

SpectrumReport pt_spectrum_report(const DensityMatrix& rho, const Bipartition& cut) {
  SpectrumReport report;
  report.spectrum = herm_eig(partial_transpose(rho, cut)).spectrum();
  for (double x : report.spectrum) {
    if (x < -kZeroTol) {
      report.neg_sum += -x;
      report.neg_sq_sum += x * x;
    }
  }
  report.pos_rank = rank_with_tol(report.spectrum, kZeroTol);
  return report;
}

double negativity(const DensityMatrix& rho, const Bipartition& cut) {
  return pt_spectrum_report(rho, cut).neg_sum;
}

double paper_negativity(const DensityMatrix& rho, const Bipartition& cut) {
  const ComplexMatrix x = partial_transpose(rho, cut);
  return (matrix_abs(x) - x).trace().real();
}

double lower_bound(const DensityMatrix& rho, const Bipartition& cut) {
  const auto report = pt_spectrum_report(rho, cut);
  if (report.neg_sum == 0.0 || report.pos_rank == 0) return 0.0;
  return report.neg_sum * report.neg_sum / static_cast<double>(report.pos_rank) + report.neg_sq_sum;
}

LowerBoundDiagnostic lower_bound_diagnostic(const DensityMatrix& rho, const Bipartition& cut) {
  const ComplexMatrix x = partial_transpose(rho, cut);
  const ComplexMatrix absolute = matrix_abs(x);
  const ComplexMatrix gap = absolute - x;  // twice the negative part

  LowerBoundDiagnostic diag;
  diag.pos_rank_spectral = pt_spectrum_report(rho, cut).pos_rank;
  diag.pos_rank_matrix = rank_with_tol(herm_eig(0.5 * (x + absolute)).spectrum(), kZeroTol);
  diag.rank_mismatch = diag.pos_rank_spectral != diag.pos_rank_matrix;

  const auto bound = [&](const ComplexMatrix& part) {
    if (diag.pos_rank_matrix == 0) return 0.0;
    const double tr = part.trace().real();
    return tr * tr / static_cast<double>(diag.pos_rank_matrix) + part.squaredNorm();
  };
  diag.half_difference_form = bound(0.5 * gap);
  diag.full_difference_form = bound(gap);
  return diag;
}

WitnessOperator build_witness(const DensityMatrix& rho, const DensityMatrix& css) {
  if (rho.dim() != css.dim()) throw Error(ErrorKind::ShapeMismatch, "build_witness: dimensions differ");
  const ComplexMatrix diff = css.matrix() - rho.matrix();
  const double dist_sq = diff.squaredNorm();
  if (dist_sq <= 1e-12)
    throw Error(ErrorKind::DegenerateInput, "build_witness: state is (numerically) separable");
  const double norm = std::sqrt(dist_sq);
  const auto n = static_cast<Eigen::Index>(rho.dim());
  const double offset = (css.matrix() * diff).trace().real();
  ComplexMatrix w = (diff - offset * ComplexMatrix::Identity(n, n)) / norm;
  w = 0.5 * (w + w.adjoint()).eval();
  return {std::move(w), norm};
}

double eval_witness(const WitnessOperator& w, const DensityMatrix& sigma) {
  if (w.w.rows() != static_cast<Eigen::Index>(sigma.dim()))
    throw Error(ErrorKind::ShapeMismatch, "eval_witness: dimensions differ");
  const Complex value = (w.w * sigma.matrix()).trace();
  if (std::abs(value.imag()) > 1e-10)
    throw Error(ErrorKind::NotHermitian, "eval_witness: complex expectation value");
  return value.real();
}

}  // namespace csskit
