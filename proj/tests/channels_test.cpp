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
#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "csskit/channels.hpp"
#include "csskit/error.hpp"
#include "csskit/locc_search.hpp"
#include "csskit/metrics.hpp"
#include "csskit/nelder_mead.hpp"
#include "support/oracles.hpp"

namespace csskit {
namespace {

TEST(GellMann, OrthogonalAndHermitian) {
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto basis = gell_mann(d);
    ASSERT_EQ(basis.matrices.size(), d * d);
    const auto n = static_cast<Eigen::Index>(d);
    EXPECT_LE((basis.matrices.back() - ComplexMatrix::Identity(n, n)).norm(), 1e-15);
    for (std::size_t j = 0; j < d * d; ++j) {
      const auto& lj = basis.matrices[j];
      EXPECT_LE(hermiticity_defect(lj), 1e-15);
      if (j + 1 < d * d) {
        EXPECT_NEAR(std::abs(lj.trace()), 0.0, 1e-14);
        EXPECT_NEAR(oracle::trace_product(lj, lj), 2.0, 1e-14);
      }
      for (std::size_t k = 0; k < j; ++k)
        EXPECT_NEAR(std::abs((lj * basis.matrices[k]).trace()), 0.0, 1e-14) << d << ' ' << j << ' ' << k;
    }
  }
}

TEST(UnitaryFromParams, UnitaryAndExamples) {
  const auto basis = gell_mann(2);
  std::vector<double> zero(4, 0.0);
  EXPECT_LE((unitary_from_params(zero, basis) - ComplexMatrix::Identity(2, 2)).norm(), 1e-15);
  std::vector<double> phase{0, 0, 0, 0.3};
  EXPECT_LE((unitary_from_params(phase, basis) - std::exp(oracle::Complex(0, 0.3)) * ComplexMatrix::Identity(2, 2))
                .norm(),
            1e-14);
  Rng rng(401);
  const auto basis4 = gell_mann(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(16);
    for (auto& x : a) x = 2 * rng.normal();
    const auto u = unitary_from_params(a, basis4);
    ASSERT_LE((u.adjoint() * u - ComplexMatrix::Identity(4, 4)).norm(), 1e-12);
    ComplexMatrix h = ComplexMatrix::Zero(4, 4);
    for (std::size_t k = 0; k < 16; ++k) h += a[k] * basis4.matrices[k];
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    Eigen::VectorXcd phases(4);
    for (Eigen::Index k = 0; k < 4; ++k) phases(k) = std::exp(oracle::Complex(0, es.eigenvalues()(k)));
    const ComplexMatrix reference = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    ASSERT_LE((u - reference).norm(), 1e-11);
  }
  try {
    unitary_from_params(std::vector<double>(3, 0.0), basis);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
}

TEST(ChannelSpec, ConstructionChecks) {
  EXPECT_THROW(ChannelSpec::from_kraus({ComplexMatrix::Identity(2, 2) * 0.5}), Error);
  const auto ok = ChannelSpec::from_kraus({oracle::pauli_x()});
  EXPECT_TRUE(ok.is_kraus());
  EXPECT_EQ(ok.input_dim(), 2u);
  ComplexMatrix bad = ComplexMatrix::Identity(4, 4);
  bad(0, 0) = 2.0;
  EXPECT_THROW(ChannelSpec::from_dilation(
                   Dilation{{2, 2}, max_mixed_state({2, 2}), bad, ComplexMatrix::Identity(4, 4)}),
               Error);
  try {
    ChannelSpec::from_dilation(
        Dilation{{2, 2}, max_mixed_state({2, 2}), ComplexMatrix::Identity(6, 6), ComplexMatrix::Identity(4, 4)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Dilation, IdentityAndSwap) {
  Rng rng(403);
  const auto rho = random_state({2, 2}, rng);
  const auto env = random_state({2, 2}, rng);
  const auto identity = ChannelSpec::from_dilation(
      Dilation{{2, 2}, env, ComplexMatrix::Identity(4, 4), ComplexMatrix::Identity(4, 4)});
  EXPECT_LE((apply_dilation(rho, identity).matrix() - rho.matrix()).norm(), 1e-12);

  // Swapping A with C and B with D hands back the environment.
  const auto swap = ChannelSpec::from_dilation(Dilation{{2, 2}, env, swap_unitary(2), swap_unitary(2)});
  EXPECT_LE((apply_dilation(rho, swap).matrix() - env.matrix()).norm(), 1e-12);

  const auto product_env = random_product_mixed({2, 2}, rng);
  const auto half = ChannelSpec::from_dilation(
      Dilation{{2, 2}, product_env, swap_unitary(2), ComplexMatrix::Identity(4, 4)});
  const ComplexMatrix expected =
      oracle::kron(oracle::trace_b(product_env.matrix(), 2, 2),
                   partial_trace(rho.matrix(), {2, 2}, std::vector<std::size_t>{1}));
  EXPECT_LE((apply_dilation(rho, half).matrix() - expected).norm(), 1e-12);
}

TEST(Dilation, KrausFormAgrees) {
  Rng rng(405);
  const auto basis = gell_mann(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = random_state({2, 2}, rng);
    const auto env = trial % 2 ? random_state({2, 2}, rng) : random_product_mixed({2, 2}, rng);
    const auto spec = ChannelSpec::from_dilation(
        Dilation{{2, 2}, env, random_unitary(basis, rng), random_unitary(basis, rng)});
    const auto kraus = kraus_from_dilation(spec);
    ASSERT_TRUE(kraus.is_kraus());
    ComplexMatrix completeness = ComplexMatrix::Zero(4, 4);
    for (const auto& k : kraus.kraus()) completeness += k.adjoint() * k;
    ASSERT_LE((completeness - ComplexMatrix::Identity(4, 4)).norm(), 1e-10);
    ASSERT_LE((apply_channel(kraus, rho.matrix()) - apply_dilation(rho, spec).matrix()).norm(), 1e-10);
    ASSERT_LE((apply_channel(spec, rho.matrix()) - apply_dilation(rho, spec).matrix()).norm(), 1e-10);
  }
}

TEST(TransitionMatrix, UnitaryChannelGivesPermutation) {
  Rng rng(407);
  const auto basis = gell_mann(3);
  const auto rho = random_state({3}, rng);
  const auto u = random_unitary(basis, rng);
  const auto t = transition_matrix(rho.matrix(), ChannelSpec::from_kraus({u}));
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < 3; ++j) EXPECT_NEAR(t.c(i, j), i == j ? 1.0 : 0.0, 1e-9);
  }
  EXPECT_LE(t.spectral_residual, 1e-12);
}

TEST(TransitionMatrix, DepolarizingIsUniform) {
  const auto rho = random_state({4}, 3);
  const auto t = transition_matrix(rho.matrix(), completely_depolarizing(4));
  EXPECT_TRUE(t.degenerate_basis_warning);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) EXPECT_NEAR(t.c(i, j), 0.25, 1e-12);
  for (double x : t.output_spectrum) EXPECT_NEAR(x, 0.25, 1e-12);
}

TEST(TransitionMatrix, UnitalChannelsAreDoublyStochastic) {
  Rng rng(409);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = trial % 2 ? 4 : 6;
    const auto x = random_state({d}, rng).matrix() - ComplexMatrix::Identity(static_cast<Eigen::Index>(d),
                                                                              static_cast<Eigen::Index>(d)) *
                                                         (0.5 / static_cast<double>(d));
    const auto channel = random_unital_channel(d, 1 + trial % 5, rng);
    const auto t = transition_matrix(x, channel);
    for (double s : t.row_sums()) ASSERT_NEAR(s, 1.0, 1e-10);
    for (double s : t.column_sums()) ASSERT_NEAR(s, 1.0, 1e-10);
    ASSERT_GE(t.c.minCoeff(), -1e-14);
    ASSERT_LE(t.spectral_residual, 1e-10);
    ASSERT_TRUE(majorization_check(t.output_spectrum, t.input_spectrum).majorized);
    ASSERT_TRUE(oracle::majorized(t.output_spectrum, t.input_spectrum, 1e-9));
  }
}

TEST(Majorization, Examples) {
  const std::vector<double> uniform{0.25, 0.25, 0.25, 0.25}, pure{1, 0, 0, 0}, mid{0.5, 0.5, 0, 0};
  EXPECT_TRUE(majorization_check(uniform, pure).majorized);
  EXPECT_TRUE(majorization_check(mid, pure).majorized);
  EXPECT_FALSE(majorization_check(pure, mid).majorized);
  EXPECT_TRUE(majorization_check(mid, mid).majorized);
  const std::vector<double> scrambled{0, 0.5, 0, 0.5};
  EXPECT_TRUE(majorization_check(scrambled, mid).majorized);
  const auto report = majorization_check(uniform, pure);
  ASSERT_EQ(report.prefix_slack.size(), 3u);
  EXPECT_NEAR(report.prefix_slack[0], 0.75, 1e-15);
  EXPECT_NEAR(report.total_gap, 0.0, 1e-15);
  const std::vector<double> heavier{1.0, 0.5};
  const std::vector<double> lighter{0.5, 0.5};
  EXPECT_FALSE(majorization_check(heavier, lighter).majorized);
}

TEST(Majorization, AgreesWithOracle) {
  oracle::Sampler s(411);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> x(5), y(5);
    for (auto& v : x) v = s.uniform();
    for (auto& v : y) v = s.uniform();
    const double sx = std::accumulate(x.begin(), x.end(), 0.0), sy = std::accumulate(y.begin(), y.end(), 0.0);
    for (auto& v : x) v /= sx;
    for (auto& v : y) v /= sy;
    ASSERT_EQ(majorization_check(x, y).majorized, oracle::majorized(x, y, 1e-9));
  }
}

TEST(LocalUnitalChannel, IsLocalAndUnital) {
  Rng rng(413);
  for (int trial = 0; trial < 50; ++trial) {
    const auto channel = random_local_unital_channel({2, 3}, 3, rng);
    ASSERT_LE((apply_channel(channel, ComplexMatrix::Identity(6, 6)) - ComplexMatrix::Identity(6, 6)).norm(), 1e-12);
    const auto product = random_product_pure({2, 3}, rng);
    const auto out = validate(apply_channel(channel, product.matrix()), {2, 3});
    ASSERT_LE(negativity(out, Bipartition::first_vs_rest(2)), 1e-12);
  }
}

TEST(NelderMead, FindsQuadraticMinimumAndHonoursBudget) {
  std::size_t calls = 0;
  const auto f = [&](std::span<const double> x) {
    ++calls;
    return (x[0] - 1) * (x[0] - 1) + 10 * (x[1] + 2) * (x[1] + 2);
  };
  NelderMeadOptions opt;
  opt.max_evals = 5000;
  const auto result = nelder_mead_minimize(f, {0.0, 0.0}, opt);
  EXPECT_NEAR(result.x[0], 1.0, 1e-5);
  EXPECT_NEAR(result.x[1], -2.0, 1e-5);
  EXPECT_TRUE(result.converged);
  EXPECT_EQ(calls, result.evals);

  calls = 0;
  opt.max_evals = 17;
  const auto capped = nelder_mead_minimize(f, {5.0, 5.0}, opt);
  EXPECT_LE(calls, 17u);
  EXPECT_EQ(capped.evals, calls);
  EXPECT_LE(capped.f, f(std::vector<double>{5.0, 5.0}));
}

TEST(LoccSearch, BaselineAndDeterminism) {
  const auto env = werner_state(1.0 / 3.0);
  LoccSearchConfig config;
  config.restarts = 2;
  config.evals = 1;
  const auto report = locc_search(bell_state(), env, config, 5);
  EXPECT_NEAR(report.baseline_min_hsd, 1.0 / 3.0, 1e-12);
  EXPECT_FALSE(report.violation);
  EXPECT_EQ(report.best_params.size(), kLoccParams);
  // The first restart starts at the identity dilation, which keeps the state.
  EXPECT_NEAR(report.best_value, 1.0 / 3.0, 1e-12);

  config.evals = 60;
  const auto a = locc_search(bell_state(), env, config, 5);
  config.jobs = 2;
  const auto b = locc_search(bell_state(), env, config, 5);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.best_params, b.best_params);
  EXPECT_LE(a.best_value, a.baseline_min_hsd + kViolationTol);

  std::vector<double> params(kLoccParams, 0.0);
  EXPECT_NEAR(locc_objective(bell_state(), env, params), 1.0 / 3.0, 1e-12);
  EXPECT_THROW(locc_objective(bell_state(), env, std::vector<double>(3, 0.0)), Error);
  EXPECT_THROW(locc_search(max_mixed_state({2, 3}), env, config, 5), Error);
}

TEST(LoccSearch, ObjectiveFallsBackToTheFixedPointDistance) {
  // Sample 1038 of seed 2 has a fixed point with a negative eigenvalue.
  Rng rng(2);
  for (int k = 0; k < 1038; ++k) random_state({2, 2}, rng);
  const auto rho = random_state({2, 2}, rng);
  bool invalid = false;
  const double value = locc_objective(rho, werner_state(0.0), std::vector<double>(kLoccParams, 0.0), &invalid);
  EXPECT_TRUE(invalid);
  EXPECT_NEAR(value, oracle::simplex_distance_sq(oracle::eigvalsh(oracle::pt_b(rho.matrix(), 2, 2))), 1e-10);

  LoccSearchConfig config;
  config.restarts = 1;
  config.evals = 1;
  const auto report = locc_search(rho, werner_state(0.0), config, 1);
  EXPECT_EQ(report.invalid_css_evals, 2u);
  EXPECT_NEAR(report.best_value, report.baseline_min_hsd, 1e-12);
  EXPECT_FALSE(report.violation);

  bool clean = true;
  locc_objective(bell_state(), werner_state(0.0), std::vector<double>(kLoccParams, 0.0), &clean);
  EXPECT_FALSE(clean);
}

}  // namespace
}  // namespace csskit
