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

#include "rglab/clt.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rglab/errors.h"
#include "rglab/parallel.h"
#include "rglab/threshold.h"

namespace rglab {

void CltConfig::validate() const {
  if (n_grid.empty()) throw ParameterError("empty n grid");
  for (std::size_t n : n_grid) {
    if (n < 2 || !(c > 0.0) || !(c < static_cast<double>(n))) {
      throw ParameterError("need n >= 2 and 0 < c/n < 1");
    }
  }
  if (trials < 100) throw ParameterError("the CLT harness needs at least 100 trials");
  if (mode == Mode::kCore && k < 2) throw ParameterError("core mode needs k >= 2");
  if (force) return;
  if (mode == Mode::kGiant && c <= 1.0) {
    throw ParameterError("giant-component CLT requires c > 1; pass --force to run anyway");
  }
  if (mode == Mode::kCore) {
    const double c_hat = solve_c_hat(k).c_hat;
    if (c <= c_hat) {
      std::ostringstream msg;
      msg.precision(10);
      msg << "k-core CLT requires c > c_hat_" << k << " = " << c_hat << " (got c = " << c
          << "); pass --force for an exploratory run";
      throw ParameterError(msg.str());
    }
  }
}

CltTrial clt_trial(const CltConfig& config, std::size_t n, std::size_t index) {
  const Graph g = sample_gnp(n, config.c / static_cast<double>(n),
                             RngStream::tagged(config.seed, n, index));
  return clt_evaluate(g, config, index);
}

CltTrial clt_evaluate(const Graph& g, const CltConfig& config, std::size_t index) {
  const std::size_t n = g.num_vertices();
  CltTrial t;
  t.index = index;
  t.n = n;
  const std::size_t trunc =
      config.t != 0 ? config.t : default_truncation(config.c, config.radius, n);
  if (config.mode == Mode::kGiant) {
    t.z = static_cast<std::int64_t>(components(g).largest_size());
    if (config.radius > 0) {
      const CountPair cp = truncated_giant(g, config.radius, trunc, n);
      t.z_tilde = static_cast<std::int64_t>(cp.x);
      t.z_hat = static_cast<std::int64_t>(cp.y);
    }
  } else {
    const CoreResult core = kcore(g, config.k);
    t.z = static_cast<std::int64_t>(core.size());
    if (config.radius > 0) {
      const CountPair cp = truncated_core(g, config.radius, trunc, config.k, &core);
      t.z_tilde = static_cast<std::int64_t>(cp.x);
      t.z_hat = static_cast<std::int64_t>(cp.y);
    }
  }
  return t;
}

std::vector<CltTrial> run_clt_point(const CltConfig& config, std::size_t n,
                                    std::size_t begin, std::size_t end,
                                    const std::function<void(const CltTrial&)>& sink) {
  std::vector<CltTrial> out;
  out.reserve(end > begin ? end - begin : 0);
  ordered_parallel<CltTrial>(
      begin, end, config.threads, [&](std::size_t i) { return clt_trial(config, n, i); },
      [&](std::size_t, CltTrial&& t) {
        if (sink) sink(t);
        out.push_back(std::move(t));
      });
  return out;
}

std::vector<std::vector<CltTrial>> run_clt(const CltConfig& config) {
  config.validate();
  std::vector<std::vector<CltTrial>> out;
  for (std::size_t n : config.n_grid) {
    out.push_back(run_clt_point(config, n, 0, config.trials));
  }
  return out;
}

std::vector<double> standardize(std::span<const double> values) {
  MomentAccumulator acc;
  for (double v : values) acc.add(v);
  const double var = acc.variance();
  if (!(var > 0.0)) throw DegenerateInputError("sample variance is zero");
  const double sd = std::sqrt(var);
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back((v - acc.mean()) / sd);
  return out;
}

NormalityReport normality(std::span<const double> values, std::size_t min_count) {
  if (values.size() < min_count) {
    throw ParameterError("normality report needs at least " + std::to_string(min_count) +
                         " samples");
  }
  MomentAccumulator acc;
  for (double v : values) acc.add(v);
  NormalityReport r;
  r.count = values.size();
  r.mean = acc.mean();
  r.variance = acc.variance();
  if (!(r.variance > 0.0)) throw DegenerateInputError("sample variance is zero");
  r.skewness = acc.skewness();
  r.excess_kurtosis = acc.excess_kurtosis();
  r.ks_distance = ks_distance_normal(standardize(values));
  return r;
}

VarianceScaling variance_scaling(std::vector<VarianceRow> rows, double max_spread) {
  if (rows.size() < 3) throw ParameterError("variance scaling needs >= 3 grid points");
  std::sort(rows.begin(), rows.end(),
            [](const VarianceRow& a, const VarianceRow& b) { return a.n < b.n; });
  if (rows.front().n == 0 || rows.back().n < 8 * rows.front().n) {
    throw ParameterError("variance scaling grid must span a factor of at least 8");
  }
  VarianceScaling out;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0;
  for (VarianceRow& r : rows) {
    r.ratio = r.variance / static_cast<double>(r.n);
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
  }
  out.rows = std::move(rows);
  out.spread = lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
  out.flagged = !(lo > 0) || out.spread > max_spread;
  return out;
}

std::vector<double> z_values(const std::vector<CltTrial>& trials) {
  std::vector<double> out;
  out.reserve(trials.size());
  for (const auto& t : trials) out.push_back(static_cast<double>(t.z));
  return out;
}

MantleSample mantle_sample(const Graph& g, Mode mode, std::uint32_t k) {
  const std::size_t n = g.num_vertices();
  MantleSample s;
  ComponentLabeling r;
  if (mode == Mode::kGiant) {
    const ComponentLabeling all = components(g);
    s.event_E = check_event_E(EventVariant::kGiant, all, n);
    r = remainder(g, phi_giant_all(all));
  } else {
    r = kcore(g, k).mantle;
    s.event_E = check_event_E(EventVariant::kMantle, r, n);
  }
  s.sizes = r.sizes;
  for (std::size_t size : s.sizes) s.max_size = std::max(s.max_size, size);
  return s;
}

MantleProfile mantle_profile(const MantleConfig& config,
                             const std::function<void(std::size_t, const MantleSample&)>& sink) {
  if (config.n < 2 || !(config.c > 0.0) || !(config.c < static_cast<double>(config.n))) {
    throw ParameterError("need n >= 2 and 0 < c/n < 1");
  }
  if (config.trials == 0) throw ParameterError("need at least one trial");
  MantleProfile out;
  out.threshold = log4_threshold(config.n);
  std::size_t below = 0;
  ordered_parallel<MantleSample>(
      0, config.trials, config.threads,
      [&](std::size_t i) {
        const Graph g = sample_gnp(config.n, config.c / static_cast<double>(config.n),
                                   RngStream::tagged(config.seed, config.n, i));
        return mantle_sample(g, config.mode, config.k);
      },
      [&](std::size_t i, MantleSample&& s) {
        if (sink) sink(i, s);
        out.max_sizes.push_back(s.max_size);
        out.event_E.push_back(s.event_E);
        below += s.max_size < out.threshold;
        for (std::size_t size : s.sizes) {
          out.vertex_histogram[size] += static_cast<double>(size);
        }
      });
  out.fraction_below = static_cast<double>(below) / static_cast<double>(config.trials);
  out.fit = fit_geometric_decay(out.vertex_histogram, 3, 30, true);
  out.plain_fit = fit_geometric_decay(out.vertex_histogram, 3, 30, false);
  if (config.mode == Mode::kGiant) out.predicted_base = config.c * std::exp(1.0 - config.c);
  return out;
}

}  // namespace rglab
