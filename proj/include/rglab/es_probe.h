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

#ifndef RGLAB_ES_PROBE_H_
#define RGLAB_ES_PROBE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rglab/graph.h"
#include "rglab/local_approx.h"
#include "rglab/stats.h"

namespace rglab {

// Edge-resampling experiment. For psi = phi - phi_l evaluated on G- and G+,
// D is the set of vertices whose psi changes and W = C_u- ∪ C_v- is the
// union of the remainder (giant) or mantle (core) components of the
// endpoints of f in G-. On event E the two structural claims
//   (a) D ⊆ W
//   (b) |W| < l  implies  D = ∅
// must hold on every single sample.

struct ProbeConfig {
  Mode mode = Mode::kGiant;
  std::size_t n = 0;
  double c = 0;
  std::uint32_t radius = 1;
  std::uint32_t k = 3;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  PairChoice pair = PairChoice::kFixed;
  std::size_t threads = 1;

  double p() const { return c / static_cast<double>(n); }
  // Throws ParameterError on invalid combinations.
  void validate() const;
};

struct ResampleTrialRecord {
  std::size_t trial = 0;
  Mode mode = Mode::kGiant;
  std::size_t n = 0;
  double c = 0;
  std::uint32_t radius = 0;
  std::uint32_t k = 0;
  std::size_t d_size = 0;
  std::size_t w_size = 0;
  bool event_E = false;
  bool claim_subset = false;
  bool claim_small = false;
  // phi and phi_l individually unchanged at every w outside W.
  bool locality = false;
  bool f_was_edge = false;
  // Z and Z~_l of the sampled graph.
  std::int64_t z = 0;
  std::int64_t z_tilde = 0;

  bool violation() const {
    return event_E && !(claim_subset && claim_small && locality);
  }
};

// Thrown by run_probe when a claim fails on a trial where event E holds.
class ClaimViolation : public std::runtime_error {
 public:
  ClaimViolation(const ResampleTrialRecord& record, std::uint64_t seed);
  const ResampleTrialRecord& record() const { return record_; }
  std::uint64_t seed() const { return seed_; }

 private:
  ResampleTrialRecord record_;
  std::uint64_t seed_;
};

std::vector<Vertex> compute_D(const CoupledPair& pair, Mode mode,
                              std::uint32_t radius, std::uint32_t k);
std::vector<Vertex> compute_W(const CoupledPair& pair, Mode mode, std::uint32_t k);

// Full analysis of one coupled pair (no claim enforcement).
ResampleTrialRecord analyze_pair(const CoupledPair& pair, const ProbeConfig& config,
                                 std::size_t trial);

// Trial i samples G from RngStream{seed, i}. Records are delivered to `sink`
// in trial order and returned. Throws ClaimViolation on the first (lowest
// index) violating trial.
std::vector<ResampleTrialRecord> run_probe(
    const ProbeConfig& config,
    const std::function<void(const ResampleTrialRecord&)>& sink = {});

// 2 M^2 p (1 - p) n^2 mean(|D|^2). Throws ParameterError on empty input or
// mixed (n, p).
double es_bound(const std::vector<ResampleTrialRecord>& records, double p,
                std::size_t n, double m = 1.0);

struct VarianceEstimate {
  double variance = 0;
  double standard_error = 0;
};

// Sample variance of Z - Z~_l across trials.
VarianceEstimate approximation_error_variance(
    const std::vector<ResampleTrialRecord>& records);

double mean_d_squared(const std::vector<ResampleTrialRecord>& records);

struct TailRow {
  std::uint32_t radius = 0;
  double value = 0;  // mean of |W|^2 1{|W| >= l} 1_E
};

struct TailProfile {
  std::vector<TailRow> rows;
  std::map<std::size_t, double> w_histogram;  // |W| -> trials, |W| >= 1
  GeometricFit fit;
  double predicted_base = 0;  // c e^{1-c}, giant mode only
};

TailProfile tail_profile(const std::vector<ResampleTrialRecord>& records,
                         const std::vector<std::uint32_t>& radius_grid);

}  // namespace rglab

#endif  // RGLAB_ES_PROBE_H_
