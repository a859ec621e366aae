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

#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>

#include "csskit/error.hpp"
#include "csskit/rng.hpp"
#include "csskit/state_io.hpp"
#include "csskit/states.hpp"
#include "support/oracles.hpp"

namespace csskit {
namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::Io;
}

TEST(Validate, AcceptsMaximallyMixedAndBell) {
  EXPECT_NO_THROW(validate(ComplexMatrix::Identity(4, 4) / 4.0, {2, 2}));
  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  EXPECT_NO_THROW(validate(bell, {2, 2}));
}

TEST(Validate, ReportsEveryViolation) {
  try {
    validate(ComplexMatrix::Identity(2, 2), {2});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_TRUE(e.has(ErrorKind::TraceNotOne));
    EXPECT_FALSE(e.has(ErrorKind::NotPSD));
  }
  ComplexMatrix bad(2, 2);
  bad << 2, 1, 0, -1;
  try {
    validate(bad, {3});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_TRUE(e.has(ErrorKind::NotHermitian));
    EXPECT_TRUE(e.has(ErrorKind::DimensionMismatch));
  }
  ComplexMatrix negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  try {
    validate(negative, {2});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_TRUE(e.has(ErrorKind::NotPSD));
    EXPECT_FALSE(e.has(ErrorKind::TraceNotOne));
  }
  ComplexMatrix nan = ComplexMatrix::Identity(2, 2) / 2.0;
  nan(0, 0) = std::nan("");
  EXPECT_EQ(kind_of([&] { validate(nan, {2}); }), ErrorKind::NonFinite);
}

TEST(NamedStates, MatchPaperMatrices) {
  const ComplexMatrix bell = bell_state().matrix();
  for (auto [i, j] : {std::pair{0, 0}, {0, 3}, {3, 0}, {3, 3}}) EXPECT_NEAR(std::abs(bell(i, j) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(bell.cwiseAbs().sum(), 2.0, 1e-14);

  const ComplexMatrix ghz = ghz_state().matrix();
  for (auto [i, j] : {std::pair{0, 0}, {0, 7}, {7, 0}, {7, 7}}) EXPECT_NEAR(std::abs(ghz(i, j) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(ghz.cwiseAbs().sum(), 2.0, 1e-14);

  const ComplexMatrix w = w_state().matrix();
  for (int i : {1, 2, 4})
    for (int j : {1, 2, 4}) EXPECT_NEAR(std::abs(w(i, j) - 1.0 / 3.0), 0.0, 1e-15);
  EXPECT_NEAR(w.cwiseAbs().sum(), 3.0, 1e-15);
}

TEST(NamedStates, WernerAndParsing) {
  const auto werner = werner_state(0.4).matrix();
  const ComplexMatrix expected = 0.4 * bell_state().matrix() + 0.6 * ComplexMatrix::Identity(4, 4) / 4.0;
  EXPECT_LE((werner - expected).norm(), 1e-15);
  EXPECT_LE((named_state("werner:0.4").matrix() - expected).norm(), 1e-15);
  EXPECT_LE((named_state("werner:1/3").matrix() - werner_state(1.0 / 3.0).matrix()).norm(), 1e-16);
  EXPECT_EQ(named_state("max_mixed:2x3").dims(), (Dims{2, 3}));
  EXPECT_EQ(named_state("ghz").dims(), (Dims{2, 2, 2}));
  EXPECT_EQ(kind_of([] { named_state("bogus"); }), ErrorKind::UnknownName);
  EXPECT_EQ(kind_of([] { named_state("werner:x"); }), ErrorKind::UnknownName);
  EXPECT_EQ(kind_of([] { werner_state(1.5); }), ErrorKind::InvalidArgument);
}

TEST(Bipartition, Construction) {
  const auto cut = Bipartition::from_side_a({2, 0}, 3);
  EXPECT_EQ(cut.side_a(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(cut.side_b(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(cut.bipartite_dims({2, 3, 2}), (Dims{4, 3}));
  EXPECT_THROW(Bipartition::from_side_a({}, 2), Error);
  EXPECT_THROW(Bipartition::from_side_a({0, 1}, 2), Error);
  EXPECT_THROW(Bipartition::from_side_a({3}, 2), Error);
  EXPECT_THROW(Bipartition::from_side_a({0, 0}, 3), Error);
}

TEST(Bipartition, EitherSideGivesSameSpectrum) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = random_state({2, 3}, rng);
    const auto a = oracle::eigvalsh(partial_transpose(rho.matrix(), rho.dims(), 0));
    const auto b = oracle::eigvalsh(partial_transpose(rho, Bipartition::first_vs_rest(2)));
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-12);
  }
}

TEST(Rng, DeterministicStreams) {
  Rng a(42), b(42), c(42, 1);
  bool differs = false;
  for (int k = 0; k < 100; ++k) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs |= x != c.next_u64();
  }
  EXPECT_TRUE(differs);
  Rng u(7);
  for (int k = 0; k < 10000; ++k) {
    const double x = u.uniform();
    ASSERT_GT(x, 0.0);
    ASSERT_LE(x, 1.0);
  }
}

TEST(Rng, NormalMoments) {
  Rng rng(9);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int k = 0; k < n; ++k) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.01);
}

TEST(RandomState, ValidDeterministicAndFullRank) {
  for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{2, 2, 2}}) {
    const auto a = random_state(dims, 17);
    const auto b = random_state(dims, 17);
    EXPECT_EQ(a.matrix(), b.matrix());
    EXPECT_EQ(a.dims(), dims);
    EXPECT_GT(oracle::eigvalsh(a.matrix()).back(), 0.0);
  }
  EXPECT_NE(random_state({2, 2}, 1).matrix(), random_state({2, 2}, 2).matrix());
}

TEST(RandomState, PartialTransposeHasFewNegativeEigenvalues) {
  Rng rng(2024);
  int entangled_22 = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto rho = random_state({2, 2}, rng);
    const auto s = oracle::eigvalsh(oracle::pt_b(rho.matrix(), 2, 2));
    ASSERT_GE(s[2], -1e-12);
    entangled_22 += s[3] < 0;
  }
  EXPECT_GT(entangled_22, 1000);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto rho = random_state({2, 3}, rng);
    const auto s = oracle::eigvalsh(oracle::pt_b(rho.matrix(), 2, 3));
    ASSERT_GE(s[3], -1e-12);
  }
}

TEST(RandomProductPure, PureFactorsAndPpt) {
  const auto q = random_product_pure({2}, 3);
  EXPECT_NEAR((q.matrix() * q.matrix()).trace().real(), 1.0, 1e-12);
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_product_pure({2, 2}, rng);
    EXPECT_GE(oracle::eigvalsh(oracle::pt_b(p.matrix(), 2, 2)).back(), -1e-12);
    const auto r = random_product_pure({2, 3}, rng);
    const auto ra = oracle::trace_b(r.matrix(), 2, 3);
    EXPECT_NEAR((ra * ra).trace().real(), 1.0, 1e-12);
  }
}

TEST(RandomProductMixed, SeparableProduct) {
  Rng rng(6);
  const auto p = random_product_mixed({2, 2}, rng);
  const ComplexMatrix ra = oracle::trace_b(p.matrix(), 2, 2);
  const std::vector<std::size_t> keep_b{1};
  const ComplexMatrix rb = partial_trace(p.matrix(), {2, 2}, keep_b);
  EXPECT_LE((oracle::kron(ra, rb) - p.matrix()).norm(), 1e-14);
  EXPECT_LT((ra * ra).trace().real(), 1.0 - 1e-6);
}

TEST(RandomCutProductPure, ProductAcrossCut) {
  Rng rng(8);
  const auto cut = Bipartition::from_side_a({1}, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_cut_product_pure({2, 2, 2}, cut, rng);
    const std::vector<std::size_t> keep{1};
    const ComplexMatrix r1 = partial_trace(p.matrix(), {2, 2, 2}, keep);
    EXPECT_NEAR((r1 * r1).trace().real(), 1.0, 1e-12);
  }
}

TEST(StateIo, RoundTripIsExact) {
  Rng rng(10);
  for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{2, 2, 2}}) {
    const auto rho = random_state(dims, rng);
    const auto back = parse_state_json(state_to_json(rho));
    EXPECT_EQ(back.dims(), rho.dims());
    EXPECT_LE((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(StateIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "csskit_state_io_test.json";
  const auto rho = random_state({2, 3}, 77);
  write_state_file(path, rho);
  EXPECT_EQ(read_state_file(path).matrix(), rho.matrix());
  std::filesystem::remove(path);
  EXPECT_EQ(kind_of([&] { read_state_file(path); }), ErrorKind::Io);
}

TEST(StateIo, MalformedInputNamesTheField) {
  const auto message = [](std::string_view text) {
    try {
      parse_state_json(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("{not json").find("Parse"), std::string::npos);
  EXPECT_NE(message(R"({"matrix": [[[1,0]]]})").find("dims"), std::string::npos);
  EXPECT_NE(message(R"({"dims": [1]})").find("matrix"), std::string::npos);
  EXPECT_NE(message(R"({"dims": [2], "matrix": [[[0.5,0],[0,0]],[[0,0],[0.5]]]})").find("matrix[1][1]"),
            std::string::npos);
  EXPECT_NE(message(R"({"dims": [2], "matrix": [[[0.5,0],[0,0]],[[0,0],["a",0]]]})").find("matrix[1][1]"),
            std::string::npos);
  EXPECT_EQ(kind_of([] { parse_state_json(R"({"dims": [2], "matrix": [[[1,0],[0,0]],[[0,0],[1,0]]]})"); }),
            ErrorKind::TraceNotOne);
}

}  // namespace
}  // namespace csskit
