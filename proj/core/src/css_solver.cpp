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
#include "csskit/css_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "csskit/error.hpp"

namespace csskit {
namespace {

bool is_certifiable(const Dims& bipartite) {
  const auto lo = std::min(bipartite[0], bipartite[1]);
  const auto hi = std::max(bipartite[0], bipartite[1]);
  return lo == 2 && (hi == 2 || hi == 3);
}

std::string describe(const std::vector<IterationRecord>& iterations) {
  std::ostringstream out;
  out << iterations.size() << " pass(es)";
  if (!iterations.empty()) out << ", last N = " << iterations.back().n;
  return out.str();
}

}  // namespace

const char* to_string(CssLabel label) noexcept {
  return label == CssLabel::SeparableCertified ? "separable-certified" : "ppt-only";
}

const char* to_string(CaseId id) noexcept {
  switch (id) {
    case CaseId::Separable: return "separable";
    case CaseId::TwoByTwoA: return "2x2-A";
    case CaseId::TwoByTwoB: return "2x2-B";
    case CaseId::TwoByThreeOneNegA: return "2x3-1neg-A";
    case CaseId::TwoByThreeOneNegB: return "2x3-1neg-B";
    case CaseId::TwoByThreeTwoNegA: return "2x3-2neg-A";
    case CaseId::TwoByThreeTwoNegB: return "2x3-2neg-B";
    case CaseId::Other: return "other";
  }
  return "other";
}

InvalidCssError::InvalidCssError(ComplexMatrix candidate, double min_eigenvalue,
                                 std::vector<IterationRecord> iterations)
    : Error(ErrorKind::InvalidCss,
            "fixed point is not a valid density matrix (min eigenvalue " +
                std::to_string(min_eigenvalue) + ", " + describe(iterations) + ")"),
      candidate_(std::move(candidate)),
      min_eigenvalue_(min_eigenvalue),
      iterations_(std::move(iterations)) {}

CssResult closest_separable(const DensityMatrix& rho, const Bipartition& cut, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "closest_separable: tol must be positive");
  const Dims bipartite = cut.bipartite_dims(rho.dims());
  const auto& side_b = cut.side_b();
  const auto dim = static_cast<Eigen::Index>(rho.dim());
  const ComplexMatrix identity = ComplexMatrix::Identity(dim, dim);

  std::vector<IterationRecord> iterations;
  ComplexMatrix iterate = partial_transpose(rho, cut);
  ComplexMatrix positive;
  bool done = false;
  for (Eigen::Index pass = 0; pass < dim && !done; ++pass) {
    const auto eig = herm_eig(iterate);
    const ComplexMatrix absolute = spectral_apply(eig, [](double x) { return std::abs(x); });
    positive = 0.5 * (absolute + iterate);
    positive = 0.5 * (positive + positive.adjoint()).eval();

    IterationRecord record;
    record.spectrum_in = eig.spectrum();
    record.r = rank_with_tol(herm_eig(positive).spectrum(), kZeroTol);
    record.n = 1.0 - positive.trace().real();
    if (std::abs(record.n) <= tol) {
      done = true;
    } else {
      if (record.r == 0)
        throw Error(ErrorKind::InvalidArgument, "closest_separable: positive part vanished");
      record.shift = record.n / static_cast<double>(record.r);
      iterate = positive + record.shift * identity;
    }
    iterations.push_back(std::move(record));
  }
  if (!done)
    throw Error(ErrorKind::MaxIterationsExceeded,
                "closest_separable: no fixed point within " + std::to_string(dim) + " passes");

  ComplexMatrix candidate = partial_transpose(positive, rho.dims(), std::span<const std::size_t>(side_b));
  const double lowest = min_eigenvalue(candidate);
  if (lowest < -kZeroTol) throw InvalidCssError(std::move(candidate), lowest, std::move(iterations));

  std::optional<DensityMatrix> css;
  try {
    css = validate(candidate, rho.dims());
  } catch (const ValidationError&) {
    throw InvalidCssError(std::move(candidate), lowest, std::move(iterations));
  }
  const double distance = hs_distance_sq(rho.matrix(), css->matrix());
  return CssResult{std::move(*css), distance, std::move(iterations),
                   is_certifiable(bipartite) ? CssLabel::SeparableCertified : CssLabel::PptOnly};
}

double min_hsd(const DensityMatrix& rho, const Bipartition& cut) {
  return closest_separable(rho, cut).distance_sq;
}

CaseFormulaResult case_formula(std::span<const double> spectrum,
                               std::span<const std::size_t> bipartite_dims) {
  const CaseFormulaResult other{CaseId::Other, std::nullopt};
  if (bipartite_dims.size() != 2) return other;
  const auto lo = std::min(bipartite_dims[0], bipartite_dims[1]);
  const auto hi = std::max(bipartite_dims[0], bipartite_dims[1]);
  if (lo != 2 || (hi != 2 && hi != 3) || spectrum.size() != lo * hi) return other;

  std::vector<double> s(spectrum.begin(), spectrum.end());
  std::sort(s.begin(), s.end(), std::greater<>());
  double total = 0.0;
  for (double x : s) total += x;
  if (std::abs(total - 1.0) > kZeroTol) return other;

  const auto negatives = std::count_if(s.begin(), s.end(), [](double x) { return x < -kZeroTol; });
  const auto zeros = std::count_if(s.begin(), s.end(), [](double x) { return std::abs(x) <= kZeroTol; });
  if (negatives == 0) return {CaseId::Separable, 0.0};
  if (zeros > 0) return other;

  const auto sq = [](double x) { return x * x; };
  const std::size_t n = s.size();

  if (hi == 2 && negatives == 1) {
    const double m = -s[3];
    const double shift = -m / 3.0;
    if (s[2] + shift >= 0.0) return {CaseId::TwoByTwoA, sq(m) / 3.0 + sq(m)};
    const double second = (s[2] + shift) / 2.0;
    if (s[1] + shift + second >= 0.0)
      return {CaseId::TwoByTwoB, sq(m - s[2]) / 2.0 + sq(s[2]) + sq(m)};
    return other;
  }
  if (hi == 3 && negatives == 1) {
    const double m = -s[n - 1];
    const double l5 = s[4];
    const double shift = -m / 5.0;
    if (l5 + shift >= 0.0) return {CaseId::TwoByThreeOneNegA, sq(m) / 5.0 + sq(m)};
    const double second = (l5 + shift) / 4.0;
    if (s[3] + shift + second >= 0.0)
      return {CaseId::TwoByThreeOneNegB, sq(m - l5) / 4.0 + sq(l5) + sq(m)};
    return other;
  }
  if (hi == 3 && negatives == 2) {
    const double m5 = -s[4];
    const double m6 = -s[5];
    const double l4 = s[3];
    const double shift = -(m5 + m6) / 4.0;
    if (l4 + shift >= 0.0)
      return {CaseId::TwoByThreeTwoNegA, sq(m5 + m6) / 4.0 + sq(m5) + sq(m6)};
    const double second = (l4 + shift) / 3.0;
    if (s[2] + shift + second >= 0.0)
      return {CaseId::TwoByThreeTwoNegB, sq(m5 + m6 - l4) / 3.0 + sq(l4) + sq(m5) + sq(m6)};
    return other;
  }
  return other;
}

VerificationReport verify_result(const DensityMatrix& rho, const Bipartition& cut,
                                 const CssResult& result, std::uint64_t seed, std::size_t probes) {
  VerificationReport report;
  const auto fail = [&](const std::string& what) { report.failures.push_back(what); };

  const ComplexMatrix rho_pt = partial_transpose(rho, cut);
  const ComplexMatrix css_pt = partial_transpose(result.css, cut);
  const ComplexMatrix commutator = rho_pt * css_pt - css_pt * rho_pt;
  report.commutator_hs = commutator.norm();
  if (report.commutator_hs > 1e-8) fail("commutator ||[rho^T, css^T]||_HS = " + std::to_string(report.commutator_hs));

  report.css_min_eigenvalue = min_eigenvalue(result.css.matrix());
  if (report.css_min_eigenvalue < -kZeroTol) fail("css is not PSD");
  report.css_pt_min_eigenvalue = min_eigenvalue(css_pt);
  if (report.css_pt_min_eigenvalue < -kZeroTol) fail("css is not PPT");

  const double actual = hs_distance_sq(rho.matrix(), result.css.matrix());
  if (std::abs(actual - result.distance_sq) > 1e-10) fail("recorded distance_sq disagrees with the css");

  const auto bipartite = cut.bipartite_dims(rho.dims());
  report.formula = case_formula(herm_eig(rho_pt).spectrum(), bipartite);
  if (report.formula.distance_sq) {
    report.formula_gap = std::abs(actual - *report.formula.distance_sq);
    if (*report.formula_gap > 1e-9)
      fail(std::string("distance disagrees with the ") + to_string(report.formula.case_id) +
           " formula by " + std::to_string(*report.formula_gap));
  }

  Rng rng(seed);
  const ComplexMatrix residual = rho.matrix() - result.css.matrix();
  report.worst_descent = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < probes; ++k) {
    const auto tau = random_cut_product_pure(rho.dims(), cut, rng);
    const double slope = (residual * (tau.matrix() - result.css.matrix())).trace().real();
    report.worst_descent = std::max(report.worst_descent, slope);
  }
  report.probes = probes;
  if (probes > 0 && report.worst_descent > kZeroTol)
    fail("a separable direction decreases the distance (slope " + std::to_string(report.worst_descent) + ")");
  return report;
}

}  // namespace csskit
