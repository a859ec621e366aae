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
#ifndef CSSKIT_CSS_SOLVER_HPP
#define CSSKIT_CSS_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csskit/config.hpp"
#include "csskit/error.hpp"
#include "csskit/states.hpp"

namespace csskit {

/// What the returned state is guaranteed to be. PPT coincides with
/// separability only for 2x2 and 2x3 cuts; elsewhere the result is the
/// closest PPT state.
enum class CssLabel { SeparableCertified, PptOnly };

const char* to_string(CssLabel label) noexcept;

/// One pass of the spectral loop.
struct IterationRecord {
  std::vector<double> spectrum_in;  ///< spectrum of the iterate, decreasing
  double n = 0.0;                   ///< 1 - Tr(positive part)
  std::size_t r = 0;                ///< rank of the positive part
  double shift = 0.0;               ///< n / r; zero on the terminating pass
};

struct CssResult {
  DensityMatrix css;
  double distance_sq = 0.0;
  std::vector<IterationRecord> iterations;
  CssLabel label = CssLabel::PptOnly;
};

/// Raised when the loop finishes but the partially transposed fixed point is
/// not a valid density matrix. The candidate is kept for diagnosis.
class InvalidCssError : public Error {
 public:
  InvalidCssError(ComplexMatrix candidate, double min_eigenvalue,
                  std::vector<IterationRecord> iterations);

  const ComplexMatrix& candidate() const noexcept { return candidate_; }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }
  const std::vector<IterationRecord>& iterations() const noexcept { return iterations_; }

 private:
  ComplexMatrix candidate_;
  double min_eigenvalue_;
  std::vector<IterationRecord> iterations_;
};

/// Closest separable (2x2, 2x3) or closest PPT state across `cut`.
///
/// Starting from X = rho^T_B the loop replaces X by its positive part P,
/// stops when N = 1 - Tr P satisfies |N| <= tol and otherwise shifts
/// X = P + (N / rank P) I with the full identity. At most dim(rho) passes.
///
/// Throws MaxIterationsExceeded or InvalidCssError.
CssResult closest_separable(const DensityMatrix& rho, const Bipartition& cut,
                            double tol = kCssTol);

/// Squared Hilbert-Schmidt distance from rho to its closest separable/PPT state.
double min_hsd(const DensityMatrix& rho, const Bipartition& cut);

enum class CaseId {
  Separable,
  TwoByTwoA,
  TwoByTwoB,
  TwoByThreeOneNegA,
  TwoByThreeOneNegB,
  TwoByThreeTwoNegA,
  TwoByThreeTwoNegB,
  Other,
};

const char* to_string(CaseId id) noexcept;

struct CaseFormulaResult {
  CaseId case_id = CaseId::Other;
  std::optional<double> distance_sq;  ///< absent iff case_id == Other
};

/// Closed-form minimum distance from the partial-transpose spectrum.
/// `bipartite_dims` is {dA, dB}; only 2x2 and 2x3 (either order) have
/// formulas, everything else is Other. Deeper shift cascades, and spectra
/// with zero eigenvalues, are also Other.
CaseFormulaResult case_formula(std::span<const double> spectrum,
                               std::span<const std::size_t> bipartite_dims);

struct VerificationReport {
  double commutator_hs = 0.0;
  double css_min_eigenvalue = 0.0;
  double css_pt_min_eigenvalue = 0.0;
  CaseFormulaResult formula;
  std::optional<double> formula_gap;
  /// Largest Tr[(rho - css)(tau - css)] over the separable probes tau; a
  /// positive value means distance decreases along that direction.
  double worst_descent = 0.0;
  std::size_t probes = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Post-hoc checks on a solver result: commutation of rho^T_B and css^T_B,
/// css PSD and PPT, agreement with case_formula, and a first-order
/// optimality probe along `probes` random product directions.
VerificationReport verify_result(const DensityMatrix& rho, const Bipartition& cut,
                                 const CssResult& result, std::uint64_t seed = 0,
                                 std::size_t probes = 100);

}  // namespace csskit

#endif  // CSSKIT_CSS_SOLVER_HPP
