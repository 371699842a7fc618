// Copyright 2026 The seqspectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqspectra/dft.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

namespace seqspectra {
namespace {

constexpr double kTolerance = 1e-9;

// Per-bin check: |a - b| <= 1e-9 * max(|a|, |b|), with an absolute floor of
// 1e-9.
double WorstBinError(const ChannelSpectrum& a, const ChannelSpectrum& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double scale = std::max({std::abs(a[k]), std::abs(b[k]), 1.0});
    worst = std::max(worst, std::abs(a[k] - b[k]) / scale);
  }
  return worst;
}

std::vector<double> RandomReal(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = u(rng);
  return x;
}

TEST(DftNaiveTest, Delta) {
  const std::vector<double> x = {1, 0, 0, 0};
  for (const Complex& c : DftNaive(x)) {
    EXPECT_NEAR(c.real(), 1.0, 1e-15);
    EXPECT_NEAR(c.imag(), 0.0, 1e-15);
  }
}

TEST(DftNaiveTest, Constant) {
  const std::vector<double> x = {1, 1, 1, 1};
  const auto X = DftNaive(x);
  EXPECT_NEAR(std::abs(X[0] - Complex(4, 0)), 0.0, 1e-15);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(std::abs(X[k]), 0.0, 1e-15);
}

TEST(DftNaiveTest, SquareWave) {
  const std::vector<double> x = {1, 1, -1, -1};
  const auto X = DftNaive(x);
  EXPECT_NEAR(std::abs(X[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(X[1] - Complex(2, -2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(X[2]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(X[3] - Complex(2, 2)), 0.0, 1e-15);
}

TEST(DftNaiveTest, AgreesWithLongDoubleOracle) {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 2u, 3u, 7u, 64u, 100u, 257u}) {
    const auto x = RandomReal(rng, n);
    const auto X = DftNaive(x);
    const auto ref = testing::OracleDft(x);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex r(static_cast<double>(ref[k].real()),
                      static_cast<double>(ref[k].imag()));
      EXPECT_NEAR(std::abs(X[k] - r), 0.0, 1e-12) << "n=" << n << " k=" << k;
    }
  }
}

TEST(DftFastTest, SpecExamplesMatchNaive) {
  for (const std::vector<double>& x :
       {std::vector<double>{1, 0, 0, 0}, std::vector<double>{1, 1, 1, 1},
        std::vector<double>{1, 1, -1, -1}}) {
    EXPECT_LE(WorstBinError(DftFast(x), DftNaive(x)), kTolerance);
  }
}

TEST(DftFastTest, LengthOneIsIdentity) {
  const std::vector<Complex> x = {Complex(2.5, -1.25)};
  const auto X = DftFast(x);
  ASSERT_EQ(X.size(), 1u);
  EXPECT_EQ(X[0], x[0]);
}

TEST(DftFastTest, Length1236) {
  std::mt19937_64 rng(1236);
  const auto x = RandomReal(rng, 1236);
  EXPECT_LE(WorstBinError(DftFast(x), DftNaive(x)), kTolerance);
}

TEST(DftFastTest, ComplexInput) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n : {5u, 16u, 103u, 1000u}) {
    std::vector<Complex> x(n);
    for (auto& v : x) v = Complex(u(rng), u(rng));
    EXPECT_LE(WorstBinError(DftFast(x), DftNaive(x)), kTolerance) << n;
  }
}

TEST(FftPlanTest, RejectsWrongLengthAndZero) {
  const FftPlan plan(12);
  EXPECT_EQ(plan.size(), 12u);
  const std::vector<double> x(11, 0.0);
  EXPECT_THROW(plan.Forward(x), std::invalid_argument);
  EXPECT_THROW(FftPlan(0), std::invalid_argument);
}

TEST(FftPlanTest, ReusableAndDeterministic) {
  std::mt19937_64 rng(4);
  const auto x = RandomReal(rng, 999);
  const FftPlan plan(999);
  const auto a = plan.Forward(x);
  const auto b = plan.Forward(x);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, DftFast(x));
}

TEST(DftFastProperty, AllLengthsUpTo256) {
  std::mt19937_64 rng(256);
  for (std::size_t n = 1; n <= 256; ++n) {
    const auto x = RandomReal(rng, n);
    ASSERT_LE(WorstBinError(DftFast(x), DftNaive(x)), kTolerance) << "n=" << n;
  }
}

TEST(DftFastProperty, RandomLengthsUpTo5000) {
  std::mt19937_64 rng(5000);
  std::uniform_int_distribution<std::size_t> len(257, 5000);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = len(rng);
    const auto x = RandomReal(rng, n);
    ASSERT_LE(WorstBinError(DftFast(x), DftNaive(x)), kTolerance) << "n=" << n;
  }
}

}  // namespace
}  // namespace seqspectra
