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
#include "csskit/gilbert.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>

#include <Eigen/SVD>

#include "csskit/error.hpp"
#include "csskit/rng.hpp"

namespace csskit {
namespace {

struct ProductCandidate {
  Eigen::VectorXcd a;
  Eigen::VectorXcd b;
  double value = -std::numeric_limits<double>::infinity();
};

// <b| D |b> on side A, as a dA x dA matrix.
ComplexMatrix contract_b(const ComplexMatrix& d, const Eigen::VectorXcd& b, Eigen::Index da) {
  const ComplexMatrix lift = kron(ComplexMatrix::Identity(da, da), b);
  return lift.adjoint() * d * lift;
}

// <a| D |a> on side B, as a dB x dB matrix.
ComplexMatrix contract_a(const ComplexMatrix& d, const Eigen::VectorXcd& a, Eigen::Index db) {
  const ComplexMatrix lift = kron(a, ComplexMatrix::Identity(db, db));
  return lift.adjoint() * d * lift;
}

// Alternating maximization of <ab| D |ab> over unit vectors a, b.
ProductCandidate best_product(const ComplexMatrix& d, Eigen::Index da, Eigen::Index db,
                              const GilbertOptions& options, Rng& rng) {
  ProductCandidate best;
  for (std::size_t start = 0; start < std::max<std::size_t>(options.restarts, 1); ++start) {
    ProductCandidate current;
    current.b = random_pure_vector(static_cast<std::size_t>(db), rng);
    double previous = -std::numeric_limits<double>::infinity();
    for (std::size_t round = 0; round < options.alternating_rounds; ++round) {
      auto eig_a = herm_eig(contract_b(d, current.b, da));
      current.a = eig_a.vectors.col(0);
      auto eig_b = herm_eig(contract_a(d, current.a, db));
      current.b = eig_b.vectors.col(0);
      current.value = eig_b.values(0);
      if (current.value - previous < 1e-15) break;
      previous = current.value;
    }
    if (current.value > best.value) best = std::move(current);
  }
  return best;
}

// Real coordinates of a Hermitian matrix: diagonal, then Re and Im of the
// strict upper triangle.
Eigen::VectorXd hermitian_coordinates(const ComplexMatrix& m) {
  const auto n = m.rows();
  Eigen::VectorXd out(n * n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) out(k++) = m(i, i).real();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      out(k++) = m(i, j).real();
      out(k++) = m(i, j).imag();
    }
  }
  return out;
}

// The first n^2 + 1 unit-trace atoms are linearly dependent. Shifting their
// weights along the dependency leaves the mixture unchanged and zeroes at
// least one weight. Returns false if no usable dependency was found.
template <typename AtomVector>
bool drop_dependent_atom(AtomVector& atoms, Eigen::Index n) {
  const Eigen::Index count = n * n + 1;
  Eigen::MatrixXd coords(n * n, count);
  for (Eigen::Index k = 0; k < count; ++k)
    coords.col(k) = hermitian_coordinates(atoms[static_cast<std::size_t>(k)].m);
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(coords, Eigen::ComputeFullV);
  const Eigen::VectorXd c = svd.matrixV().col(count - 1);
  double theta = std::numeric_limits<double>::infinity();
  Eigen::Index pivot = -1;
  for (Eigen::Index k = 0; k < count; ++k) {
    if (c(k) <= 1e-12) continue;
    const double ratio = atoms[static_cast<std::size_t>(k)].w / c(k);
    if (ratio < theta) {
      theta = ratio;
      pivot = k;
    }
  }
  if (pivot < 0) return false;
  for (Eigen::Index k = 0; k < count; ++k)
    atoms[static_cast<std::size_t>(k)].w = std::max(0.0, atoms[static_cast<std::size_t>(k)].w - theta * c(k));
  atoms[static_cast<std::size_t>(pivot)].w = 0.0;
  return true;
}

}  // namespace

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw Error(ErrorKind::ShapeMismatch, "commutator_norm: shapes differ");
  return (a * b - b * a).norm();
}

GilbertTrace gilbert_css(const DensityMatrix& rho, const Bipartition& cut,
                         const GilbertOptions& options) {
  if (options.iters < 1) throw Error(ErrorKind::InvalidArgument, "gilbert_css: iters must be >= 1");
  const auto order = cut.grouping_order();
  const Dims bipartite = cut.bipartite_dims(rho.dims());
  const auto da = static_cast<Eigen::Index>(bipartite[0]);
  const auto db = static_cast<Eigen::Index>(bipartite[1]);
  const auto n = da * db;

  // Work with side A as the left factor and side B as the right one.
  const ComplexMatrix target = permute_subsystems(rho.matrix(), rho.dims(), order);
  const ComplexMatrix target_pt = partial_transpose(target, bipartite, 1);
  ComplexMatrix sigma = ComplexMatrix::Identity(n, n) / static_cast<double>(n);

  // sigma is kept as a convex combination of atoms (the initial maximally
  // mixed state plus every product state the oracle has returned).
  struct Atom {
    ComplexMatrix m;
    double w;
    Eigen::VectorXcd a, b;  // empty for the initial mixed atom
  };
  std::vector<Atom> atoms{{sigma, 1.0, {}, {}}};
  const auto rebuild = [&] {
    sigma.setZero();
    for (const auto& atom : atoms) sigma += atom.w * atom.m;
  };
  const auto overlap = [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.cwiseProduct(b.transpose()).sum().real();
  };
  const auto projector = [](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    return kron(a * a.adjoint(), b * b.adjoint());
  };
  // Exact line search along a pairwise direction, moving at most `cap`.
  const auto pairwise = [&](const ComplexMatrix& up, const ComplexMatrix& down, double cap) {
    const ComplexMatrix step = up - down;
    const double denom = step.squaredNorm();
    if (denom <= 0.0) return 0.0;
    const double t = std::clamp(overlap(target - sigma, step) / denom, 0.0, cap);
    sigma += t * step;
    return t;
  };

  Rng rng(options.seed);
  std::vector<GilbertRecord> records;
  records.reserve(options.iters);
  for (std::size_t iter = 1; iter <= options.iters; ++iter) {
    const ComplexMatrix residual = target - sigma;
    auto candidate = best_product(residual, da, db, options, rng);
    ComplexMatrix pi = projector(candidate.a, candidate.b);

    if (options.mode == GilbertMode::Plain || atoms.size() == 1) {
      const ComplexMatrix step = pi - sigma;
      const double denom = step.squaredNorm();
      if (denom > 0.0) {
        const double t =
            std::clamp((candidate.value - overlap(residual, sigma)) / denom, 0.0, 1.0);
        for (auto& atom : atoms) atom.w *= 1.0 - t;
        atoms.push_back({std::move(pi), t, std::move(candidate.a), std::move(candidate.b)});
        sigma += t * step;
      }
    } else {
      atoms.push_back({std::move(pi), 0.0, std::move(candidate.a), std::move(candidate.b)});
      for (std::size_t pass = 0; pass <= options.corrections; ++pass) {
        // Pairwise step from the least aligned atom to the most aligned one;
        // the first pass always targets the fresh oracle atom.
        const ComplexMatrix r = target - sigma;
        std::size_t up = atoms.size() - 1, down = 0;
        double up_score = overlap(r, atoms[up].m);
        double down_score = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < atoms.size(); ++k) {
          const double score = overlap(r, atoms[k].m);
          if (pass > 0 && score > up_score) {
            up_score = score;
            up = k;
          }
          if (atoms[k].w > 0.0 && score < down_score) {
            down_score = score;
            down = k;
          }
        }
        if (up == down || up_score <= down_score) break;
        const double t = pairwise(atoms[up].m, atoms[down].m, atoms[down].w);
        atoms[up].w += t;
        atoms[down].w -= t;
      }
      // Slide each atom towards the best product state reachable by one
      // alternating update from its own factors. The whole weight moves when
      // that still lowers the distance; otherwise the atom splits.
      const std::size_t count = atoms.size();
      for (std::size_t k = 0; k < count; ++k) {
        if (atoms[k].a.size() == 0 || atoms[k].w <= 0.0) continue;
        const ComplexMatrix r = target - sigma;
        Eigen::VectorXcd a = herm_eig(contract_b(r, atoms[k].b, da)).vectors.col(0);
        Eigen::VectorXcd b = herm_eig(contract_a(r, a, db)).vectors.col(0);
        ComplexMatrix moved = projector(a, b);
        const ComplexMatrix step = moved - atoms[k].m;
        const double denom = step.squaredNorm();
        if (denom <= 0.0) continue;
        const double best = overlap(r, step) / denom;
        const double w = atoms[k].w;
        if (best <= 0.0) continue;
        if (w <= 2.0 * best) {
          sigma += w * step;
          atoms[k] = {std::move(moved), w, std::move(a), std::move(b)};
        } else {
          sigma += best * step;
          atoms[k].w -= best;
          atoms.push_back({std::move(moved), best, std::move(a), std::move(b)});
        }
      }
    }
    std::erase_if(atoms, [](const Atom& atom) { return atom.w <= 1e-15; });
    if (options.mode != GilbertMode::Plain) {
      while (atoms.size() > static_cast<std::size_t>(n * n + 1)) {
        std::partial_sort(atoms.begin(), atoms.begin() + n * n + 1, atoms.end(),
                          [](const Atom& x, const Atom& y) { return x.w < y.w; });
        if (!drop_dependent_atom(atoms, n)) break;
        std::erase_if(atoms, [](const Atom& atom) { return atom.w <= 0.0; });
      }
    }
    if (iter % 256 == 0) rebuild();

    const ComplexMatrix sigma_pt = partial_transpose(sigma, bipartite, 1);
    records.push_back({iter, hs_distance_sq(target, sigma), commutator_norm(target_pt, sigma_pt)});
  }

  std::vector<std::size_t> inverse(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) inverse[order[k]] = k;
  Dims grouped_dims;
  for (auto k : order) grouped_dims.push_back(rho.dims()[k]);
  sigma = 0.5 * (sigma + sigma.adjoint()).eval();
  sigma /= sigma.trace().real();
  return {std::move(records), validate(permute_subsystems(sigma, grouped_dims, inverse), rho.dims())};
}

GilbertTrace gilbert_css(const DensityMatrix& rho, const Bipartition& cut, std::size_t iters,
                         std::size_t restarts, std::uint64_t seed) {
  GilbertOptions options;
  options.iters = iters;
  options.restarts = restarts;
  options.seed = seed;
  return gilbert_css(rho, cut, options);
}

std::vector<double> moving_average(std::span<const double> values, std::size_t window) {
  if (window == 0) throw Error(ErrorKind::InvalidArgument, "moving_average: window must be >= 1");
  std::vector<double> out(values.size());
  double running = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    running += values[k];
    if (k >= window) running -= values[k - window];
    out[k] = running / static_cast<double>(std::min(k + 1, window));
  }
  return out;
}

void write_trace_csv(std::ostream& out, const GilbertTrace& trace) {
  const auto old_precision = out.precision();
  out << "iter,distance_sq_upper,commutator_hs\n" << std::setprecision(17);
  for (const auto& r : trace.records)
    out << r.iter << ',' << r.distance_sq_upper << ',' << r.commutator_hs << '\n';
  out.precision(old_precision);
}

}  // namespace csskit
