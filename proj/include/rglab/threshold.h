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

#ifndef RGLAB_THRESHOLD_H_
#define RGLAB_THRESHOLD_H_

#include <cstdint>

namespace rglab {

// P[Poisson(x) <= m], summed with the term recurrence t_{i+1} = t_i x/(i+1)
// and compensated addition. Throws ParameterError for x <= 0.
double poisson_cdf(double x, std::uint32_t m);

// f(x) = x P[Poisson(x) <= k - 1]; strictly decreasing for x > k. k >= 1.
double f_k(double x, std::uint32_t k);

struct ThresholdResult {
  std::uint32_t k = 0;
  double c_hat = 0;
  double residual = 0;  // |f_k(c_hat) - 1/e|
  int iterations = 0;
  double asymptotic = 0;
};

// Root c_hat > k of f_k(x) = 1/e by bisection, bracket width below `tol`.
// Throws ParameterError for k < 2 or tol <= 0, NumericalError if no bracket
// is found below 1e6 k.
ThresholdResult solve_c_hat(std::uint32_t k, double tol = 1e-12);

// k + sqrt(2 k ln k).
double asymptotic_c_hat(std::uint32_t k);

}  // namespace rglab

#endif  // RGLAB_THRESHOLD_H_
