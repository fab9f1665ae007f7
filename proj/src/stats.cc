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

#include <algorithm>
#include <cmath>

namespace rglab {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

void MomentAccumulator::add(double x) {
  const double n1 = static_cast<double>(n_);
  ++n_;
  const double n = static_cast<double>(n_);
  const double delta = x - mean_;
  const double delta_n = delta / n;
  const double delta_n2 = delta_n * delta_n;
  const double term1 = delta * delta_n * n1;
  mean_ += delta_n;
  m4_ += term1 * delta_n2 * (n * n - 3 * n + 3) + 6 * delta_n2 * m2_ - 4 * delta_n * m3_;
  m3_ += term1 * delta_n * (n - 2) - 3 * delta_n * m2_;
  m2_ += term1;
}

double MomentAccumulator::variance() const {
  return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1);
}

double MomentAccumulator::skewness() const {
  if (n_ < 2 || m2_ == 0) return 0;
  const double n = static_cast<double>(n_);
  return std::sqrt(n) * m3_ / std::pow(m2_, 1.5);
}

double MomentAccumulator::excess_kurtosis() const {
  if (n_ < 2 || m2_ == 0) return 0;
  const double n = static_cast<double>(n_);
  return n * m4_ / (m2_ * m2_) - 3.0;
}

double MomentAccumulator::variance_standard_error() const {
  if (n_ < 4) return 0;
  const double n = static_cast<double>(n_);
  const double mu4 = m4_ / n;
  const double s2 = variance();
  const double v = mu4 / n - s2 * s2 * (n - 3) / (n * (n - 1));
  return std::sqrt(std::max(0.0, v));
}

double ks_distance_normal(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = normal_cdf(sorted[i]);
    const double i_d = static_cast<double>(i);
    d = std::max({d, (i_d + 1) / n - cdf, cdf - i_d / n});
  }
  return d;
}

GeometricFit fit_geometric_decay(const std::map<std::size_t, double>& histogram,
                                 std::size_t min_size, std::size_t max_size,
                                 bool power_law) {
  // Weighted normal equations for the basis (1, j[, log j]).
  const std::size_t dim = power_law ? 3 : 2;
  double ata[3][3] = {};
  double atb[3] = {};
  GeometricFit fit;
  for (const auto& [j, count] : histogram) {
    if (j < min_size || j > max_size || count <= 0) continue;
    const double x = static_cast<double>(j);
    const double row[3] = {1.0, x, std::log(x)};
    const double y = std::log(count);
    for (std::size_t r = 0; r < dim; ++r) {
      atb[r] += count * row[r] * y;
      for (std::size_t c = 0; c < dim; ++c) ata[r][c] += count * row[r] * row[c];
    }
    ++fit.points;
  }
  if (fit.points < dim) return fit;
  // Gaussian elimination with partial pivoting on the small system.
  double sol[3] = {};
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (std::abs(ata[r][col]) > std::abs(ata[pivot][col])) pivot = r;
    }
    std::swap(ata[col], ata[pivot]);
    std::swap(atb[col], atb[pivot]);
    for (std::size_t r = col + 1; r < dim; ++r) {
      const double f = ata[r][col] / ata[col][col];
      for (std::size_t c = col; c < dim; ++c) ata[r][c] -= f * ata[col][c];
      atb[r] -= f * atb[col];
    }
  }
  for (std::size_t r = dim; r-- > 0;) {
    double acc = atb[r];
    for (std::size_t c = r + 1; c < dim; ++c) acc -= ata[r][c] * sol[c];
    sol[r] = acc / ata[r][r];
  }
  fit.intercept = sol[0];
  fit.base = std::exp(sol[1]);
  fit.power = power_law ? sol[2] : 0.0;
  return fit;
}

}  // namespace rglab
