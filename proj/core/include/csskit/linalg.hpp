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
#ifndef CSSKIT_LINALG_HPP
#define CSSKIT_LINALG_HPP

// Dense complex linear algebra for small operators (dimension <= ~64).
//
// Composite index convention: subsystem 0 is the leftmost tensor factor and
// composite indices are row-major, i.e. for dims (d0, d1, ..., d{n-1})
//
//   i = i0 * (d1 * ... * d{n-1}) + i1 * (d2 * ... * d{n-1}) + ... + i{n-1}
//
// kron(a, b) follows the same convention, so kron(rho_0, rho_1) has dims
// (d0, d1). Every routine below that takes a dimension list uses this layout.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace csskit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Dims = std::vector<std::size_t>;

/// Eigenvalues sorted in decreasing order; column k of `vectors` belongs to
/// `values[k]`. `vectors` is unitary.
struct HermitianEigen {
  Eigen::VectorXd values;
  ComplexMatrix vectors;

  std::vector<double> spectrum() const;
};

/// Cyclic complex Jacobi. Throws NotHermitian when ||m - m^dagger||_HS exceeds
/// kHermitianTol, NoConvergence after 100*d^2 sweeps.
HermitianEigen herm_eig(const ComplexMatrix& m);

/// Rebuilds V diag(f(lambda)) V^dagger from an eigendecomposition.
template <class F>
ComplexMatrix spectral_apply(const HermitianEigen& eig, F&& f) {
  const auto n = eig.values.size();
  Eigen::VectorXcd mapped(n);
  for (Eigen::Index k = 0; k < n; ++k) mapped(k) = Complex(f(eig.values(k)));
  return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

/// sqrt(m^dagger m) for Hermitian m, i.e. V diag(|lambda|) V^dagger.
ComplexMatrix matrix_abs(const ComplexMatrix& m);

/// exp(i h) computed spectrally.
ComplexMatrix unitary_from_hermitian(const ComplexMatrix& h);

/// Tr[(a - b)^dagger (a - b)] = sum |a_ij - b_ij|^2. Never square-rooted.
double hs_distance_sq(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||m||_HS (Frobenius norm).
double hs_norm(const ComplexMatrix& m);

/// ||m - m^dagger||_HS.
double hermiticity_defect(const ComplexMatrix& m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transposes the tensor factor `subsystem`. Involutive.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const Dims& dims,
                                std::size_t subsystem);

/// Transposes every listed tensor factor.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const Dims& dims,
                                std::span<const std::size_t> subsystems);

/// Traces out every subsystem not in `keep`. The kept factors stay in their
/// original relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m, const Dims& dims,
                            std::span<const std::size_t> keep);

/// Reorders tensor factors: factor k of the result is factor order[k] of m.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, const Dims& dims,
                                 std::span<const std::size_t> order);

/// Number of entries strictly greater than tol. tol must be positive.
std::size_t rank_with_tol(std::span<const double> eigs, double tol);

std::size_t dims_product(const Dims& dims);

}  // namespace csskit

#endif  // CSSKIT_LINALG_HPP
