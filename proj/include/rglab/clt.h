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

#ifndef RGLAB_CLT_H_
#define RGLAB_CLT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rglab/decomposition.h"
#include "rglab/local_approx.h"
#include "rglab/stats.h"

namespace rglab {

struct CltConfig {
  Mode mode = Mode::kGiant;
  std::vector<std::size_t> n_grid;
  double c = 0;
  std::uint32_t k = 3;
  // Radius for Z~_l / Z^_l evaluation; 0 disables it.
  std::uint32_t radius = 0;
  // Truncation size; 0 selects default_truncation(c, radius, n).
  std::size_t t = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  // Allow parameters outside the theorems' hypotheses.
  bool force = false;
  std::size_t threads = 1;

  // Throws ParameterError; the message names the violated hypothesis.
  void validate() const;
};

struct CltTrial {
  std::size_t index = 0;
  std::size_t n = 0;
  std::int64_t z = 0;  // |L| or |V(K)|
  std::optional<std::int64_t> z_tilde;
  std::optional<std::int64_t> z_hat;
};

// Trial i at grid point n uses RngStream::tagged(seed, n, i).
CltTrial clt_trial(const CltConfig& config, std::size_t n, std::size_t index);

// Evaluates the functional (and the local approximations, if enabled) on a
// given graph.
CltTrial clt_evaluate(const Graph& g, const CltConfig& config, std::size_t index);

// Trials [begin, end) at grid point n, delivered to `sink` in index order.
std::vector<CltTrial> run_clt_point(const CltConfig& config, std::size_t n,
                                    std::size_t begin, std::size_t end,
                                    const std::function<void(const CltTrial&)>& sink = {});

// One trial list per grid point, in grid order.
std::vector<std::vector<CltTrial>> run_clt(const CltConfig& config);

struct NormalityReport {
  std::size_t count = 0;
  double mean = 0;
  double variance = 0;
  double skewness = 0;
  double excess_kurtosis = 0;
  double ks_distance = 0;
};

// (x - mean) / sd with the sample mean and the n - 1 sample deviation.
// Throws DegenerateInputError when the sample variance is zero.
std::vector<double> standardize(std::span<const double> values);

// Moment statistics and the exact KS distance of the standardized sample to
// the standard normal. Needs at least `min_count` values.
NormalityReport normality(std::span<const double> values, std::size_t min_count = 100);

struct VarianceRow {
  std::size_t n = 0;
  double variance = 0;
  double ratio = 0;  // variance / n
};

struct VarianceScaling {
  std::vector<VarianceRow> rows;
  // max ratio / min ratio over the grid (infinity if some ratio is 0).
  double spread = 0;
  bool flagged = false;
};

// Needs at least 3 grid points spanning a factor >= 8 in n. Flags when the
// spread exceeds `max_spread` or any ratio vanishes.
VarianceScaling variance_scaling(std::vector<VarianceRow> rows, double max_spread = 1.4);

std::vector<double> z_values(const std::vector<CltTrial>& trials);

// --- mantle / remainder structure -------------------------------------------

struct MantleSample {
  std::size_t max_size = 0;
  std::vector<std::size_t> sizes;  // all component sizes of R
  bool event_E = false;
};

// Components of R = G - L (giant) or G - V(K) (core).
MantleSample mantle_sample(const Graph& g, Mode mode, std::uint32_t k);

struct MantleConfig {
  Mode mode = Mode::kGiant;
  std::size_t n = 0;
  double c = 0;
  std::uint32_t k = 3;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

struct MantleProfile {
  std::size_t threshold = 0;  // log4_threshold(n)
  std::vector<std::size_t> max_sizes;  // per trial
  std::vector<std::uint8_t> event_E;   // per trial
  // Vertices of R by the size of their component, summed over trials.
  std::map<std::size_t, double> vertex_histogram;
  double fraction_below = 0;  // trials with max size < threshold
  GeometricFit fit;           // j in [3, 30], with power-law prefactor
  GeometricFit plain_fit;     // j in [3, 30], pure geometric
  double predicted_base = 0;  // c e^{1-c}; giant mode only
};

MantleProfile mantle_profile(const MantleConfig& config,
                             const std::function<void(std::size_t, const MantleSample&)>& sink = {});

}  // namespace rglab

#endif  // RGLAB_CLT_H_
