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

#ifndef RGLAB_STATS_H_
#define RGLAB_STATS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace rglab {

double normal_cdf(double x);

// One-pass central moments up to order four (Terriberry's update), which
// avoids the cancellation of the naive sum-of-powers formulas.
class MomentAccumulator {
 public:
  void add(double x);

  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  // Unbiased sample variance (divides by n - 1); 0 for fewer than 2 values.
  double variance() const;
  double skewness() const;
  double excess_kurtosis() const;
  // Standard error of variance() as an estimator of the population variance.
  double variance_standard_error() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0, m2_ = 0, m3_ = 0, m4_ = 0;
};

// sup_x |F_n(x) - Phi(x)| for the empirical CDF F_n of `values`.
double ks_distance_normal(std::span<const double> values);

// Least-squares fit of log(count_j) = a + j log(base) over
// j in [min_size, max_size], weighted by count_j (approximate inverse
// variance of a log Poisson count). Sizes with zero count are skipped.
//
// With `power_law` the model gains a b log(j) term, so that a polynomial
// prefactor j^b does not leak into the exponential base.
struct GeometricFit {
  double base = 0;
  double intercept = 0;
  double power = 0;
  std::size_t points = 0;
};
GeometricFit fit_geometric_decay(const std::map<std::size_t, double>& histogram,
                                 std::size_t min_size, std::size_t max_size,
                                 bool power_law = false);

}  // namespace rglab

#endif  // RGLAB_STATS_H_
