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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "csskit/css_solver.hpp"
#include "csskit/error.hpp"
#include "csskit/gilbert.hpp"
#include "support/oracles.hpp"

namespace csskit {
namespace {

const Bipartition kCut = Bipartition::first_vs_rest(2);

GilbertOptions options(std::size_t iters, GilbertMode mode = GilbertMode::Pairwise) {
  GilbertOptions opt;
  opt.iters = iters;
  opt.mode = mode;
  opt.seed = 17;
  return opt;
}

TEST(Gilbert, SeparableInputConvergesToItself) {
  Rng rng(301);
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = random_product_mixed({2, 2}, rng);
    const auto trace = gilbert_css(rho, kCut, options(200));
    EXPECT_LT(trace.records.back().distance_sq_upper, 1e-6) << trial;
  }
  const auto trace = gilbert_css(max_mixed_state({2, 3}), kCut, options(20));
  EXPECT_LT(trace.records.front().distance_sq_upper, 1e-15);
}

TEST(Gilbert, BellApproachesTheExactDistanceFromAbove) {
  const auto trace = gilbert_css(bell_state(), kCut, options(2000));
  const double last = trace.records.back().distance_sq_upper;
  EXPECT_GE(last, 1.0 / 3.0 - 1e-12);
  EXPECT_LE(last, (1.0 / 3.0) * 1.02);
  EXPECT_NEAR(oracle::hs_sq(trace.sigma.matrix(), bell_state().matrix()), last, 1e-9);
}

TEST(Gilbert, TraceShapeAndMonotonicity) {
  Rng rng(303);
  for (const auto mode : {GilbertMode::Pairwise, GilbertMode::Plain}) {
    const auto rho = random_state({2, 3}, rng);
    const auto trace = gilbert_css(rho, kCut, options(300, mode));
    ASSERT_EQ(trace.records.size(), 300u);
    for (std::size_t k = 0; k < trace.records.size(); ++k) {
      ASSERT_EQ(trace.records[k].iter, k + 1);
      ASSERT_GE(trace.records[k].commutator_hs, 0.0);
      if (k > 0)
        ASSERT_LE(trace.records[k].distance_sq_upper, trace.records[k - 1].distance_sq_upper + 1e-12);
    }
    ASSERT_GE(trace.records.back().distance_sq_upper, min_hsd(rho, kCut) - 1e-10);
    ASSERT_GE(oracle::eigvalsh(oracle::pt_b(trace.sigma.matrix(), 2, 3)).back(), -1e-10);
  }
}

TEST(Gilbert, PairwiseBeatsPlain) {
  Rng rng(305);
  const auto rho = random_state({2, 2}, rng);
  const double exact = min_hsd(rho, kCut);
  const double plain = gilbert_css(rho, kCut, options(500, GilbertMode::Plain)).records.back().distance_sq_upper;
  const double pairwise = gilbert_css(rho, kCut, options(500)).records.back().distance_sq_upper;
  EXPECT_LE(pairwise - exact, plain - exact + 1e-15);
}

TEST(Gilbert, DeterministicForASeed) {
  const auto rho = random_state({2, 2}, 9);
  const auto a = gilbert_css(rho, kCut, options(100));
  const auto b = gilbert_css(rho, kCut, options(100));
  for (std::size_t k = 0; k < a.records.size(); ++k)
    ASSERT_EQ(a.records[k].distance_sq_upper, b.records[k].distance_sq_upper);
  const auto c = gilbert_css(rho, kCut, 100, 5, 17);
  EXPECT_EQ(c.records.back().distance_sq_upper, a.records.back().distance_sq_upper);
}

TEST(CommutatorNorm, Examples) {
  EXPECT_NEAR(commutator_norm(oracle::pauli_x(), oracle::pauli_z()), 2 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(commutator_norm(oracle::pauli_z(), oracle::pauli_z()), 0.0, 1e-15);
  oracle::Sampler s(5);
  const auto h = s.hermitian(4);
  EXPECT_NEAR(commutator_norm(h, h * h), 0.0, 1e-12);
  try {
    commutator_norm(oracle::pauli_x(), ComplexMatrix::Identity(3, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
}

TEST(MovingAverage, Trailing) {
  const std::vector<double> v{1, 2, 3, 4, 5};
  const auto m = moving_average(v, 2);
  const std::vector<double> expected{1, 1.5, 2.5, 3.5, 4.5};
  ASSERT_EQ(m.size(), expected.size());
  for (std::size_t k = 0; k < m.size(); ++k) EXPECT_DOUBLE_EQ(m[k], expected[k]);
  const auto whole = moving_average(v, 10);
  EXPECT_DOUBLE_EQ(whole.back(), 3.0);
  EXPECT_DOUBLE_EQ(moving_average(v, 1)[3], 4.0);
}

TEST(TraceCsv, HeaderAndRows) {
  const auto trace = gilbert_css(bell_state(), kCut, options(7));
  std::ostringstream out;
  write_trace_csv(out, trace);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "iter,distance_sq_upper,commutator_hs");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 2);
  }
  EXPECT_EQ(rows, 7);
}

}  // namespace
}  // namespace csskit
