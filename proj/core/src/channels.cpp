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
#include "csskit/channels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "csskit/error.hpp"

namespace csskit {
namespace {

constexpr double kCompletenessTol = 1e-9;
constexpr double kUnitaryTol = 1e-10;
constexpr double kDegenerateGap = 1e-8;

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

// U_AC (x) U_BD reordered from factor order (A, C, B, D) to (A, B, C, D).
ComplexMatrix total_unitary(const Dilation& dil) {
  const Dims acbd = {dil.system_dims[0], dil.env.dims()[0], dil.system_dims[1], dil.env.dims()[1]};
  const std::size_t order[] = {0, 2, 1, 3};
  return permute_subsystems(kron(dil.u_ac, dil.u_bd), acbd, order);
}

Dims dilation_dims(const Dilation& dil) {
  return {dil.system_dims[0], dil.system_dims[1], dil.env.dims()[0], dil.env.dims()[1]};
}

double min_gap(const std::vector<double>& sorted) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < sorted.size(); ++k) gap = std::min(gap, sorted[k - 1] - sorted[k]);
  return gap;
}

std::vector<double> sorted_desc(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

ChannelSpec ChannelSpec::from_kraus(std::vector<ComplexMatrix> kraus) {
  if (kraus.empty()) throw Error(ErrorKind::InvalidArgument, "channel: empty Kraus list");
  const auto in = kraus.front().cols();
  const auto out = kraus.front().rows();
  ComplexMatrix completeness = ComplexMatrix::Zero(in, in);
  for (const auto& k : kraus) {
    if (k.cols() != in || k.rows() != out)
      throw Error(ErrorKind::ShapeMismatch, "channel: Kraus operators have different shapes");
    completeness += k.adjoint() * k;
  }
  const double defect = (completeness - ComplexMatrix::Identity(in, in)).norm();
  if (defect > kCompletenessTol)
    throw Error(ErrorKind::InvalidArgument,
                "channel: sum K^dagger K deviates from identity by " + std::to_string(defect));
  return ChannelSpec(std::move(kraus));
}

ChannelSpec ChannelSpec::from_dilation(Dilation dilation) {
  if (dilation.system_dims.size() != 2 || dilation.env.dims().size() != 2)
    throw Error(ErrorKind::DimensionMismatch, "dilation: system and environment must both be bipartite");
  const auto ac = static_cast<Eigen::Index>(dilation.system_dims[0] * dilation.env.dims()[0]);
  const auto bd = static_cast<Eigen::Index>(dilation.system_dims[1] * dilation.env.dims()[1]);
  if (dilation.u_ac.rows() != ac || dilation.u_ac.cols() != ac || dilation.u_bd.rows() != bd ||
      dilation.u_bd.cols() != bd)
    throw Error(ErrorKind::DimensionMismatch, "dilation: unitary sizes do not match dA*dC and dB*dD");
  if (unitarity_defect(dilation.u_ac) > kUnitaryTol || unitarity_defect(dilation.u_bd) > kUnitaryTol)
    throw Error(ErrorKind::InvalidArgument, "dilation: interaction is not unitary");
  return ChannelSpec(std::move(dilation));
}

std::size_t ChannelSpec::input_dim() const {
  if (is_kraus()) return static_cast<std::size_t>(kraus().front().cols());
  return dims_product(dilation().system_dims);
}

GellMannBasis gell_mann(std::size_t d) {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "gell_mann: d must be >= 2");
  const auto n = static_cast<Eigen::Index>(d);
  GellMannBasis basis;
  basis.d = d;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(j, k) = m(k, j) = 1.0;
      basis.matrices.push_back(std::move(m));
    }
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(k, j) = Complex(0.0, 1.0);
      m(j, k) = Complex(0.0, -1.0);
      basis.matrices.push_back(std::move(m));
    }
  for (Eigen::Index l = 1; l < n; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    for (Eigen::Index j = 0; j < l; ++j) m(j, j) = scale;
    m(l, l) = -scale * static_cast<double>(l);
    basis.matrices.push_back(std::move(m));
  }
  basis.matrices.push_back(ComplexMatrix::Identity(n, n));
  return basis;
}

ComplexMatrix unitary_from_params(std::span<const double> a, const GellMannBasis& basis) {
  if (a.size() != basis.matrices.size())
    throw Error(ErrorKind::LengthMismatch, "unitary_from_params: expected " +
                                               std::to_string(basis.matrices.size()) + " coefficients");
  const auto n = static_cast<Eigen::Index>(basis.d);
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < a.size(); ++k) h += a[k] * basis.matrices[k];
  return unitary_from_hermitian(h);
}

ComplexMatrix apply_kraus(std::span<const ComplexMatrix> kraus, const ComplexMatrix& x) {
  if (kraus.empty()) throw Error(ErrorKind::InvalidArgument, "apply_kraus: empty Kraus list");
  if (kraus.front().cols() != x.rows() || x.rows() != x.cols())
    throw Error(ErrorKind::ShapeMismatch, "apply_kraus: operator does not match channel input");
  ComplexMatrix out = ComplexMatrix::Zero(kraus.front().rows(), kraus.front().rows());
  for (const auto& k : kraus) out.noalias() += k * x * k.adjoint();
  return out;
}

ComplexMatrix apply_channel(const ChannelSpec& channel, const ComplexMatrix& x) {
  if (channel.is_kraus()) return apply_kraus(channel.kraus(), x);
  const auto& dil = channel.dilation();
  if (x.rows() != static_cast<Eigen::Index>(dims_product(dil.system_dims)) || x.rows() != x.cols())
    throw Error(ErrorKind::DimensionMismatch, "apply_channel: operator does not match system dims");
  const ComplexMatrix u = total_unitary(dil);
  const ComplexMatrix joint = u * kron(x, dil.env.matrix()) * u.adjoint();
  const std::size_t keep[] = {0, 1};
  return partial_trace(joint, dilation_dims(dil), keep);
}

DensityMatrix apply_dilation(const DensityMatrix& rho_ab, const ChannelSpec& spec) {
  if (!spec.is_dilation()) throw Error(ErrorKind::InvalidArgument, "apply_dilation: channel is not a dilation");
  if (rho_ab.dims() != spec.dilation().system_dims)
    throw Error(ErrorKind::DimensionMismatch, "apply_dilation: state dims do not match the dilation");
  ComplexMatrix out = apply_channel(spec, rho_ab.matrix());
  return validate(std::move(out), rho_ab.dims());
}

ChannelSpec kraus_from_dilation(const ChannelSpec& spec) {
  if (spec.is_kraus()) return spec;
  const auto& dil = spec.dilation();
  const auto sys = static_cast<Eigen::Index>(dims_product(dil.system_dims));
  const auto env = static_cast<Eigen::Index>(dil.env.dim());
  const ComplexMatrix u = total_unitary(dil);
  const ComplexMatrix id = ComplexMatrix::Identity(sys, sys);
  const auto env_eig = herm_eig(dil.env.matrix());

  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index m = 0; m < env_eig.values.size(); ++m) {
    const double p = env_eig.values(m);
    if (p <= 1e-14) continue;
    const ComplexMatrix inject = kron(id, env_eig.vectors.col(m));
    for (Eigen::Index i = 0; i < env; ++i) {
      const ComplexMatrix project = kron(id, Eigen::VectorXcd::Unit(env, i));
      ComplexMatrix k = std::sqrt(p) * project.adjoint() * u * inject;
      if (k.norm() > 1e-14) kraus.push_back(std::move(k));
    }
  }
  return ChannelSpec::from_kraus(std::move(kraus));
}

ComplexMatrix swap_unitary(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix s = ComplexMatrix::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) s(j * n + i, i * n + j) = 1.0;
  return s;
}

ChannelSpec completely_depolarizing(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(j, k) = 1.0 / std::sqrt(static_cast<double>(d));
      kraus.push_back(std::move(m));
    }
  return ChannelSpec::from_kraus(std::move(kraus));
}

std::vector<double> TransitionMatrix::row_sums() const {
  std::vector<double> out(static_cast<std::size_t>(c.rows()));
  for (Eigen::Index l = 0; l < c.rows(); ++l) out[static_cast<std::size_t>(l)] = c.row(l).sum();
  return out;
}

std::vector<double> TransitionMatrix::column_sums() const {
  std::vector<double> out(static_cast<std::size_t>(c.cols()));
  for (Eigen::Index j = 0; j < c.cols(); ++j) out[static_cast<std::size_t>(j)] = c.col(j).sum();
  return out;
}

TransitionMatrix transition_matrix(const ComplexMatrix& x, const ChannelSpec& channel) {
  const ChannelSpec kraus_form = kraus_from_dilation(channel);
  const auto& kraus = kraus_form.kraus();
  const auto in = herm_eig(x);
  ComplexMatrix y = apply_kraus(kraus, x);
  y = 0.5 * (y + y.adjoint()).eval();
  const auto out = herm_eig(y);

  TransitionMatrix tm;
  tm.input_spectrum = in.spectrum();
  tm.output_spectrum = out.spectrum();
  tm.c = RealMatrix::Zero(y.rows(), x.rows());
  for (const auto& k : kraus) tm.c += (out.vectors.adjoint() * k * in.vectors).cwiseAbs2();

  const Eigen::VectorXd predicted = tm.c * in.values;
  tm.spectral_residual = (out.values - predicted).cwiseAbs().maxCoeff();
  tm.degenerate_basis_warning =
      min_gap(tm.input_spectrum) < kDegenerateGap || min_gap(tm.output_spectrum) < kDegenerateGap;
  return tm;
}

MajorizationReport majorization_check(std::span<const double> sigma, std::span<const double> lambda,
                                      double tol) {
  MajorizationReport report;
  if (sigma.size() != lambda.size() || sigma.empty()) return report;
  const auto s = sorted_desc(sigma);
  const auto l = sorted_desc(lambda);
  const std::size_t n = s.size();

  double ps = 0.0, pl = 0.0;
  bool ok = true;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    ps += s[k];
    pl += l[k];
    report.prefix_slack.push_back(pl - ps);
    ok = ok && pl - ps >= -tol;
  }
  double ts = 0.0, tl = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    ts += s[n - 1 - k];
    tl += l[n - 1 - k];
    report.tail_slack.push_back(ts - tl);
  }
  report.total_gap = std::abs(std::accumulate(s.begin(), s.end(), 0.0) - std::accumulate(l.begin(), l.end(), 0.0));
  report.majorized = ok && report.total_gap <= tol;
  return report;
}

ComplexMatrix random_unitary(const GellMannBasis& basis, Rng& rng) {
  std::vector<double> a(basis.matrices.size());
  for (auto& x : a) x = rng.normal();
  return unitary_from_params(a, basis);
}

namespace {

std::vector<double> dirichlet_weights(std::size_t k, Rng& rng) {
  std::vector<double> w(k);
  for (auto& x : w) x = -std::log(rng.uniform());
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  return w;
}

ChannelSpec mixture_of_unitaries(std::size_t k, Rng& rng, const std::function<ComplexMatrix(Rng&)>& draw) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "random unital channel: k must be >= 1");
  std::vector<ComplexMatrix> unitaries;
  for (std::size_t i = 0; i < k; ++i) unitaries.push_back(draw(rng));
  const auto weights = dirichlet_weights(k, rng);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < k; ++i) kraus.push_back(std::sqrt(weights[i]) * unitaries[i]);
  return ChannelSpec::from_kraus(std::move(kraus));
}

}  // namespace

ChannelSpec random_unital_channel(std::size_t d, std::size_t k, Rng& rng) {
  const auto basis = gell_mann(d);
  return mixture_of_unitaries(k, rng, [&](Rng& r) { return random_unitary(basis, r); });
}

ChannelSpec random_unital_channel(std::size_t d, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return random_unital_channel(d, k, rng);
}

ChannelSpec random_local_unital_channel(const Dims& dims, std::size_t k, Rng& rng) {
  std::vector<GellMannBasis> bases;
  for (auto d : dims) bases.push_back(gell_mann(d));
  return mixture_of_unitaries(k, rng, [&](Rng& r) {
    ComplexMatrix u = ComplexMatrix::Ones(1, 1);
    for (const auto& b : bases) u = kron(u, random_unitary(b, r));
    return u;
  });
}

}  // namespace csskit
