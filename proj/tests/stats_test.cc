// Copyright 2026 The rglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rglab/stats.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rglab/clt.h"
#include "rglab/errors.h"
#include "rglab/rng.h"

namespace rglab {
namespace {

std::vector<double> box_muller(std::size_t count, std::uint64_t seed) {
  Rng rng(RngStream{seed, 0});
  std::vector<double> out;
  while (out.size() < count) {
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    out.push_back(r * std::cos(2 * std::numbers::pi * u2));
    out.push_back(r * std::sin(2 * std::numbers::pi * u2));
  }
  out.resize(count);
  return out;
}

struct TwoPass {
  double mean = 0, var = 0, skew = 0, kurt = 0;
};

TwoPass two_pass(const std::vector<double>& x) {
  const double n = static_cast<double>(x.size());
  TwoPass t;
  for (double v : x) t.mean += v;
  t.mean /= n;
  double m2 = 0, m3 = 0, m4 = 0;
  for (double v : x) {
    const double d = v - t.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  t.var = m2 / (n - 1);
  m2 /= n;
  m3 /= n;
  m4 /= n;
  t.skew = m3 / std::pow(m2, 1.5);
  t.kurt = m4 / (m2 * m2) - 3;
  return t;
}

TEST(NormalCdf, KnownValues) {
  EXPECT_DOUBLE_EQ(normal_cdf(0.0), 0.5);
  EXPECT_NEAR(normal_cdf(1.959963984540054), 0.975, 1e-15);
  EXPECT_NEAR(normal_cdf(-1.0), 0.15865525393145707, 1e-15);
}

TEST(Moments, AgreeWithTwoPass) {
  Rng rng(RngStream{31, 0});
  std::vector<double> x;
  for (int i = 0; i < 5000; ++i) x.push_back(1e6 + std::pow(rng.uniform(), 3) * 50);
  MomentAccumulator acc;
  for (double v : x) acc.add(v);
  const TwoPass t = two_pass(x);
  EXPECT_EQ(acc.count(), x.size());
  EXPECT_NEAR(acc.mean(), t.mean, 1e-9);
  EXPECT_NEAR(acc.variance(), t.var, 1e-9 * t.var);
  EXPECT_NEAR(acc.skewness(), t.skew, 1e-8);
  EXPECT_NEAR(acc.excess_kurtosis(), t.kurt, 1e-8);
}

TEST(Moments, NormalSelfTest) {
  const auto x = box_muller(100000, 32);
  MomentAccumulator acc;
  for (double v : x) acc.add(v);
  EXPECT_LT(std::abs(acc.mean()), 0.02);
  EXPECT_LT(std::abs(acc.variance() - 1.0), 0.02);
  EXPECT_LT(std::abs(acc.skewness()), 0.03);
  EXPECT_LT(std::abs(acc.excess_kurtosis()), 0.06);
  EXPECT_LT(ks_distance_normal(x), 0.01);
  // For normal data the variance of s^2 is 2 sigma^4 / (n - 1).
  EXPECT_NEAR(acc.variance_standard_error(), std::sqrt(2.0 / (x.size() - 1)), 0.05 * std::sqrt(2.0 / x.size()));
}

TEST(Moments, VarianceStandardErrorMatchesReplication) {
  // Exponential data: spread of s^2 across replications versus the estimate.
  const int reps = 400, size = 500;
  MomentAccumulator spread, estimates;
  for (int r = 0; r < reps; ++r) {
    Rng rng(RngStream{33, static_cast<std::uint64_t>(r)});
    MomentAccumulator acc;
    for (int i = 0; i < size; ++i) acc.add(-std::log(1.0 - rng.uniform()));
    spread.add(acc.variance());
    estimates.add(acc.variance_standard_error());
  }
  EXPECT_NEAR(estimates.mean(), std::sqrt(spread.variance()), 0.15 * std::sqrt(spread.variance()));
}

TEST(KsDistance, DetectsShift) {
  auto x = box_muller(20000, 34);
  EXPECT_LT(ks_distance_normal(x), 0.015);
  for (double& v : x) v += 0.5;
  EXPECT_GT(ks_distance_normal(x), 0.15);
}

TEST(KsDistance, SinglePoint) {
  const std::vector<double> one{0.0};
  EXPECT_DOUBLE_EQ(ks_distance_normal(one), 0.5);
}

TEST(Standardize, Identity) {
  Rng rng(RngStream{35, 0});
  std::vector<double> x;
  for (int i = 0; i < 3000; ++i) x.push_back(40000 + 300 * rng.uniform());
  const auto z = standardize(x);
  MomentAccumulator acc;
  for (double v : z) acc.add(v);
  EXPECT_NEAR(acc.mean(), 0.0, 1e-12);
  EXPECT_NEAR(acc.variance(), 1.0, 1e-12);
}

TEST(Standardize, KsIsAffineInvariant) {
  const auto x = box_muller(2000, 36);
  std::vector<double> y;
  for (double v : x) y.push_back(-3.5 * v + 1234.0);
  std::vector<double> x_mirror;
  for (double v : x) x_mirror.push_back(-v);
  EXPECT_NEAR(ks_distance_normal(standardize(x_mirror)), ks_distance_normal(standardize(y)), 1e-12);
  std::vector<double> w;
  for (double v : x) w.push_back(7.0 * v - 2.0);
  EXPECT_NEAR(ks_distance_normal(standardize(x)), ks_distance_normal(standardize(w)), 1e-12);
}

TEST(Standardize, ConstantInputIsDegenerate) {
  const std::vector<double> flat(200, 4.0);
  EXPECT_THROW(standardize(flat), DegenerateInputError);
  EXPECT_THROW(normality(flat), DegenerateInputError);
  const std::vector<double> few(10, 1.0);
  EXPECT_THROW(normality(few), ParameterError);
}

TEST(GeometricFit, RecoversExactBase) {
  std::map<std::size_t, double> h;
  for (std::size_t j = 1; j <= 40; ++j) h[j] = 1e6 * std::pow(0.7, static_cast<double>(j));
  const GeometricFit plain = fit_geometric_decay(h, 3, 30);
  EXPECT_NEAR(plain.base, 0.7, 1e-12);
  EXPECT_EQ(plain.points, 28u);
  const GeometricFit with_power = fit_geometric_decay(h, 3, 30, true);
  EXPECT_NEAR(with_power.base, 0.7, 1e-9);
  EXPECT_NEAR(with_power.power, 0.0, 1e-8);
}

TEST(GeometricFit, SeparatesPowerLawPrefactor) {
  std::map<std::size_t, double> h;
  for (std::size_t j = 1; j <= 40; ++j) {
    const double x = static_cast<double>(j);
    h[j] = 1e8 * std::pow(x, -1.5) * std::pow(0.74, x);
  }
  const GeometricFit fit = fit_geometric_decay(h, 3, 30, true);
  EXPECT_NEAR(fit.base, 0.74, 1e-9);
  EXPECT_NEAR(fit.power, -1.5, 1e-8);
  EXPECT_LT(fit_geometric_decay(h, 3, 30).base, 0.74);
}

TEST(GeometricFit, TooFewPoints) {
  std::map<std::size_t, double> h{{3, 10.0}};
  EXPECT_EQ(fit_geometric_decay(h, 3, 30).points, 1u);
  EXPECT_EQ(fit_geometric_decay(h, 3, 30).base, 0.0);
}

}  // namespace
}  // namespace rglab
