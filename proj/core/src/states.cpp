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
#include "csskit/states.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "csskit/config.hpp"
#include "csskit/error.hpp"

namespace csskit {

DensityMatrix validate(ComplexMatrix m, Dims dims) {
  std::vector<ErrorKind> violations;
  std::ostringstream msg;
  const auto note = [&](ErrorKind kind, const std::string& text) {
    violations.push_back(kind);
    if (msg.tellp() > 0) msg << "; ";
    msg << to_string(kind) << " (" << text << ")";
  };

  if (m.rows() != m.cols() || m.rows() == 0) {
    note(ErrorKind::DimensionMismatch, "matrix must be square and nonempty");
    throw ValidationError(std::move(violations), msg.str());
  }
  if (!m.allFinite()) {
    note(ErrorKind::NonFinite, "matrix has NaN or Inf entries");
    throw ValidationError(std::move(violations), msg.str());
  }
  if (dims.empty() || std::find(dims.begin(), dims.end(), std::size_t{0}) != dims.end() ||
      dims_product(dims) != static_cast<std::size_t>(m.rows())) {
    note(ErrorKind::DimensionMismatch,
         "product of dims does not equal matrix dimension " + std::to_string(m.rows()));
  }
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) note(ErrorKind::NotHermitian, "||m - m^dagger||_HS = " + std::to_string(defect));
  ComplexMatrix herm = 0.5 * (m + m.adjoint());
  const double trace = herm.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) note(ErrorKind::TraceNotOne, "trace = " + std::to_string(trace));
  if (defect <= kHermitianTol) {
    const double lowest = min_eigenvalue(herm);
    if (lowest < -kZeroTol) note(ErrorKind::NotPSD, "min eigenvalue = " + std::to_string(lowest));
  }
  if (!violations.empty()) throw ValidationError(std::move(violations), msg.str());
  return DensityMatrix(std::move(herm), std::move(dims));
}

Bipartition Bipartition::from_side_a(std::vector<std::size_t> side_a, std::size_t n_subsystems) {
  std::sort(side_a.begin(), side_a.end());
  if (side_a.empty()) throw Error(ErrorKind::InvalidArgument, "bipartition: side A is empty");
  if (std::adjacent_find(side_a.begin(), side_a.end()) != side_a.end())
    throw Error(ErrorKind::InvalidArgument, "bipartition: duplicate subsystem in side A");
  if (side_a.back() >= n_subsystems)
    throw Error(ErrorKind::DimensionMismatch, "bipartition: subsystem index out of range");
  std::vector<std::size_t> side_b;
  for (std::size_t k = 0; k < n_subsystems; ++k)
    if (!std::binary_search(side_a.begin(), side_a.end(), k)) side_b.push_back(k);
  if (side_b.empty()) throw Error(ErrorKind::InvalidArgument, "bipartition: side B is empty");
  return Bipartition(std::move(side_a), std::move(side_b));
}

Bipartition Bipartition::first_vs_rest(std::size_t n_subsystems) {
  return from_side_a({0}, n_subsystems);
}

Dims Bipartition::bipartite_dims(const Dims& dims) const {
  if (dims.size() != n_subsystems())
    throw Error(ErrorKind::DimensionMismatch, "bipartition does not match the number of subsystems");
  std::size_t da = 1, db = 1;
  for (auto k : side_a_) da *= dims[k];
  for (auto k : side_b_) db *= dims[k];
  return {da, db};
}

std::vector<std::size_t> Bipartition::grouping_order() const {
  std::vector<std::size_t> order(side_a_);
  order.insert(order.end(), side_b_.begin(), side_b_.end());
  return order;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const Bipartition& cut) {
  if (cut.n_subsystems() != rho.dims().size())
    throw Error(ErrorKind::DimensionMismatch, "bipartition does not match the number of subsystems");
  return partial_transpose(rho.matrix(), rho.dims(), std::span<const std::size_t>(cut.side_b()));
}

namespace {

DensityMatrix pure_projector(const Eigen::VectorXcd& psi, Dims dims) {
  return validate(psi * psi.adjoint(), std::move(dims));
}

}  // namespace

DensityMatrix bell_state() {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return pure_projector(psi, {2, 2});
}

DensityMatrix ghz_state() {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
  psi(0) = psi(7) = 1.0 / std::sqrt(2.0);
  return pure_projector(psi, {2, 2, 2});
}

DensityMatrix w_state() {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
  psi(1) = psi(2) = psi(4) = 1.0 / std::sqrt(3.0);
  return pure_projector(psi, {2, 2, 2});
}

DensityMatrix werner_state(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "werner: p must lie in [0, 1]");
  ComplexMatrix m = p * bell_state().matrix() + (1.0 - p) * ComplexMatrix::Identity(4, 4) / 4.0;
  return validate(std::move(m), {2, 2});
}

DensityMatrix max_mixed_state(const Dims& dims) {
  const auto n = static_cast<Eigen::Index>(dims_product(dims));
  return validate(ComplexMatrix::Identity(n, n) / static_cast<double>(n), dims);
}

DensityMatrix named_state(std::string_view name) {
  const auto colon = name.find(':');
  const auto head = name.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
  const auto fail = [&] {
    return Error(ErrorKind::UnknownName, "unknown state '" + std::string(name) + "'");
  };
  if (colon == std::string_view::npos) {
    if (head == "bell") return bell_state();
    if (head == "ghz") return ghz_state();
    if (head == "w") return w_state();
    throw fail();
  }
  if (head == "werner") {
    const auto parse = [&](std::string_view text) {
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || ptr != text.data() + text.size()) throw fail();
      return value;
    };
    const auto slash = arg.find('/');
    if (slash == std::string_view::npos) return werner_state(parse(arg));
    const double den = parse(arg.substr(slash + 1));
    if (den == 0.0) throw fail();
    return werner_state(parse(arg.substr(0, slash)) / den);
  }
  if (head == "max_mixed") {
    Dims dims;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      const auto next = std::min(arg.find('x', pos), arg.size());
      std::size_t d = 0;
      const auto [ptr, ec] = std::from_chars(arg.data() + pos, arg.data() + next, d);
      if (ec != std::errc{} || ptr != arg.data() + next || d == 0) throw fail();
      dims.push_back(d);
      pos = next + 1;
    }
    return max_mixed_state(dims);
  }
  throw fail();
}

Eigen::VectorXcd random_pure_vector(std::size_t d, Rng& rng) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(d));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = rng.complex_normal();
  return v / v.norm();
}

DensityMatrix random_state(const Dims& dims, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dims_product(dims));
  ComplexMatrix g(n, n);
  // Column-major fill keeps the draw order fixed: g(0,0), g(1,0), ...
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = rng.complex_normal();
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate(std::move(rho), dims);
}

DensityMatrix random_state(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_state(dims, rng);
}

DensityMatrix random_product_pure(const Dims& dims, Rng& rng) {
  ComplexMatrix product = ComplexMatrix::Ones(1, 1);
  for (auto d : dims) {
    const auto v = random_pure_vector(d, rng);
    product = kron(product, v * v.adjoint());
  }
  return validate(std::move(product), dims);
}

DensityMatrix random_product_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_product_pure(dims, rng);
}

DensityMatrix random_product_mixed(const Dims& dims, Rng& rng) {
  ComplexMatrix product = ComplexMatrix::Ones(1, 1);
  for (auto d : dims) product = kron(product, random_state({d}, rng).matrix());
  return validate(std::move(product), dims);
}

DensityMatrix random_cut_product_pure(const Dims& dims, const Bipartition& cut, Rng& rng) {
  const auto bd = cut.bipartite_dims(dims);
  const auto a = random_pure_vector(bd[0], rng);
  const auto b = random_pure_vector(bd[1], rng);
  const ComplexMatrix grouped = kron(a * a.adjoint(), b * b.adjoint());
  const auto order = cut.grouping_order();
  Dims grouped_dims;
  for (auto k : order) grouped_dims.push_back(dims[k]);
  // Invert the grouping permutation to return to the original factor order.
  std::vector<std::size_t> inverse(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) inverse[order[k]] = k;
  return validate(permute_subsystems(grouped, grouped_dims, inverse), dims);
}

}  // namespace csskit
