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
#include "csskit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "csskit/config.hpp"
#include "csskit/error.hpp"

namespace csskit {
namespace {

double off_diagonal_norm_sq(const ComplexMatrix& a) {
  double off = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) off += std::norm(a(i, j));
  return off;
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": matrix is not square");
}

// Decodes a composite index into per-subsystem digits (subsystem 0 leftmost).
void decode(std::size_t index, const Dims& dims, std::vector<std::size_t>& digits) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
}

std::size_t encode(const std::vector<std::size_t>& digits, const Dims& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
  return index;
}

void check_dims(const ComplexMatrix& m, const Dims& dims, const char* what) {
  require_square(m, what);
  if (dims.empty() || dims_product(dims) != static_cast<std::size_t>(m.rows()))
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": product of dims does not match matrix size " +
                    std::to_string(m.rows()));
}

void check_subsystem(std::size_t s, const Dims& dims, const char* what) {
  if (s >= dims.size())
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": subsystem index " + std::to_string(s) + " out of range");
}

}  // namespace

std::vector<double> HermitianEigen::spectrum() const {
  return {values.data(), values.data() + values.size()};
}

std::size_t dims_product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m, "hermiticity_defect");
  return (m - m.adjoint()).norm();
}

HermitianEigen herm_eig(const ComplexMatrix& m) {
  require_square(m, "herm_eig");
  if (!m.allFinite()) throw Error(ErrorKind::NonFinite, "herm_eig: non-finite entry");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol)
    throw Error(ErrorKind::NotHermitian,
                "herm_eig: ||m - m^dagger||_HS = " + std::to_string(defect));

  const Eigen::Index n = m.rows();
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double threshold = kJacobiOffTol * std::max(1.0, a.norm());
  const std::size_t max_sweeps = 100 * static_cast<std::size_t>(n * n);

  bool converged = n < 2;
  for (std::size_t sweep = 0; !converged && sweep < max_sweeps; ++sweep) {
    if (std::sqrt(off_diagonal_norm_sq(a)) < threshold) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double r = std::abs(g);
        if (r == 0.0) continue;
        // Phase-rotate column q so the (p,q) entry is real, then apply the
        // real symmetric Jacobi rotation that annihilates it.
        const Complex phase = std::conj(g) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * phase;
        const Complex jqq = c * phase;

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged && std::sqrt(off_diagonal_norm_sq(a)) >= threshold)
    throw Error(ErrorKind::NoConvergence, "herm_eig: Jacobi sweep cap reached");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() > a(y, y).real(); });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src).real();
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

ComplexMatrix matrix_abs(const ComplexMatrix& m) {
  return spectral_apply(herm_eig(m), [](double x) { return std::abs(x); });
}

ComplexMatrix unitary_from_hermitian(const ComplexMatrix& h) {
  const auto eig = herm_eig(h);
  const auto n = eig.values.size();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) phases(k) = std::polar(1.0, eig.values(k));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

double hs_distance_sq(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::ShapeMismatch, "hs_distance_sq: shapes differ");
  return (a - b).squaredNorm();
}

double hs_norm(const ComplexMatrix& m) { return m.norm(); }

double min_eigenvalue(const ComplexMatrix& m) {
  const auto eig = herm_eig(m);
  return eig.values(eig.values.size() - 1);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const Dims& dims, std::size_t subsystem) {
  const std::size_t one[] = {subsystem};
  return partial_transpose(m, dims, std::span<const std::size_t>(one));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const Dims& dims,
                                std::span<const std::size_t> subsystems) {
  check_dims(m, dims, "partial_transpose");
  std::vector<bool> flip(dims.size(), false);
  for (auto s : subsystems) {
    check_subsystem(s, dims, "partial_transpose");
    flip[s] = true;
  }
  const auto n = static_cast<std::size_t>(m.rows());
  ComplexMatrix out(m.rows(), m.cols());
  std::vector<std::size_t> row(dims.size()), col(dims.size());
  for (std::size_t r = 0; r < n; ++r) {
    decode(r, dims, row);
    for (std::size_t c = 0; c < n; ++c) {
      decode(c, dims, col);
      auto rr = row;
      auto cc = col;
      for (std::size_t k = 0; k < dims.size(); ++k)
        if (flip[k]) std::swap(rr[k], cc[k]);
      out(static_cast<Eigen::Index>(encode(rr, dims)), static_cast<Eigen::Index>(encode(cc, dims))) =
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const Dims& dims,
                            std::span<const std::size_t> keep) {
  check_dims(m, dims, "partial_trace");
  std::vector<bool> kept(dims.size(), false);
  for (auto s : keep) {
    check_subsystem(s, dims, "partial_trace");
    if (kept[s]) throw Error(ErrorKind::DimensionMismatch, "partial_trace: duplicate subsystem");
    kept[s] = true;
  }
  Dims kept_dims;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (kept[k]) kept_dims.push_back(dims[k]);
  const std::size_t out_dim = kept_dims.empty() ? 1 : dims_product(kept_dims);

  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(out_dim),
                                          static_cast<Eigen::Index>(out_dim));
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::size_t> row(dims.size()), col(dims.size());
  std::vector<std::size_t> row_keep(kept_dims.size()), col_keep(kept_dims.size());
  for (std::size_t r = 0; r < n; ++r) {
    decode(r, dims, row);
    for (std::size_t c = 0; c < n; ++c) {
      decode(c, dims, col);
      bool diagonal_in_traced = true;
      std::size_t j = 0;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (kept[k]) {
          row_keep[j] = row[k];
          col_keep[j] = col[k];
          ++j;
        } else if (row[k] != col[k]) {
          diagonal_in_traced = false;
          break;
        }
      }
      if (!diagonal_in_traced) continue;
      const std::size_t rk = kept_dims.empty() ? 0 : encode(row_keep, kept_dims);
      const std::size_t ck = kept_dims.empty() ? 0 : encode(col_keep, kept_dims);
      out(static_cast<Eigen::Index>(rk), static_cast<Eigen::Index>(ck)) +=
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, const Dims& dims,
                                 std::span<const std::size_t> order) {
  check_dims(m, dims, "permute_subsystems");
  if (order.size() != dims.size())
    throw Error(ErrorKind::DimensionMismatch, "permute_subsystems: order has wrong length");
  std::vector<bool> seen(dims.size(), false);
  Dims new_dims(dims.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    check_subsystem(order[k], dims, "permute_subsystems");
    if (seen[order[k]]) throw Error(ErrorKind::DimensionMismatch, "permute_subsystems: not a permutation");
    seen[order[k]] = true;
    new_dims[k] = dims[order[k]];
  }
  const auto n = static_cast<std::size_t>(m.rows());
  ComplexMatrix out(m.rows(), m.cols());
  std::vector<std::size_t> row(dims.size()), col(dims.size());
  std::vector<std::size_t> new_row(dims.size()), new_col(dims.size());
  for (std::size_t r = 0; r < n; ++r) {
    decode(r, dims, row);
    for (std::size_t k = 0; k < order.size(); ++k) new_row[k] = row[order[k]];
    const auto nr = static_cast<Eigen::Index>(encode(new_row, new_dims));
    for (std::size_t c = 0; c < n; ++c) {
      decode(c, dims, col);
      for (std::size_t k = 0; k < order.size(); ++k) new_col[k] = col[order[k]];
      out(nr, static_cast<Eigen::Index>(encode(new_col, new_dims))) =
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

std::size_t rank_with_tol(std::span<const double> eigs, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "rank_with_tol: tol must be positive");
  return static_cast<std::size_t>(
      std::count_if(eigs.begin(), eigs.end(), [tol](double x) { return x > tol; }));
}

}  // namespace csskit
