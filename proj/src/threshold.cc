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

#include "rglab/threshold.h"

#include <algorithm>
#include <cmath>

#include "rglab/errors.h"

namespace rglab {

double poisson_cdf(double x, std::uint32_t m) {
  if (!(x > 0.0)) throw ParameterError("Poisson rate must be positive");
  // Below the underflow range of exp(-x) the terms are summed directly;
  // beyond it they are scaled by the largest one and rescaled in log space.
  const auto anchor =
      x < 600.0 ? 0u : static_cast<std::uint32_t>(std::min<double>(m, std::floor(x)));
  double sum = 0.0;
  double carry = 0.0;
  auto add = [&](double term) {
    // Neumaier summation.
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
  };
  double term = 1.0;
  for (std::uint32_t i = anchor; i > 0 && term > 0.0; --i) {
    add(term);
    term *= static_cast<double>(i) / x;
  }
  if (anchor == 0 || term > 0.0) add(term);
  term = 1.0;
  for (std::uint32_t i = anchor + 1; i <= m; ++i) {
    term *= x / static_cast<double>(i);
    add(term);
  }
  if (anchor == 0) return std::min(1.0, std::exp(-x) * (sum + carry));
  const double log_anchor = -x + anchor * std::log(x) - std::lgamma(anchor + 1.0);
  return std::min(1.0, std::exp(log_anchor + std::log(sum + carry)));
}

double f_k(double x, std::uint32_t k) {
  if (k == 0) throw ParameterError("f_k needs k >= 1");
  return x * poisson_cdf(x, k - 1);
}

ThresholdResult solve_c_hat(std::uint32_t k, double tol) {
  if (k < 2) throw ParameterError("c_hat is defined for k >= 2");
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
  const double target = std::exp(-1.0);
  const double kk = static_cast<double>(k);

  double lo = kk;
  double hi = kk + 1.0;
  while (f_k(hi, k) >= target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6 * kk) throw NumericalError("no sign change for c_hat bracket");
  }
  if (f_k(lo, k) <= target) throw NumericalError("f_k(k) does not exceed 1/e");

  ThresholdResult r;
  r.k = k;
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at double resolution
    if (f_k(mid, k) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++r.iterations;
  }
  r.c_hat = 0.5 * (lo + hi);
  r.residual = std::abs(f_k(r.c_hat, k) - target);
  r.asymptotic = asymptotic_c_hat(k);
  return r;
}

double asymptotic_c_hat(std::uint32_t k) {
  const double kk = static_cast<double>(k);
  return kk + std::sqrt(2.0 * kk * std::log(kk));
}

}  // namespace rglab
