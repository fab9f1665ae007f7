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

#include "rglab/es_probe.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rglab/decomposition.h"
#include "rglab/errors.h"
#include "rglab/parallel.h"

namespace rglab {

void ProbeConfig::validate() const {
  if (n < 2) throw ParameterError("probe needs n >= 2");
  if (!(c > 0.0) || !(p() < 1.0)) throw ParameterError("need 0 < c/n < 1");
  if (radius < 1) throw ParameterError("radius must be at least 1");
  if (mode == Mode::kCore && k < 2) throw ParameterError("core mode needs k >= 2");
  if (trials == 0) throw ParameterError("need at least one trial");
}

namespace {

// Everything the analysis needs about one side (G- or G+) of a pair.
struct SideEvaluation {
  std::vector<std::uint8_t> phi;
  std::vector<std::uint8_t> phi_local;
  // Giant: components of G - L. Core: mantle G - V(K).
  ComponentLabeling witness;
  // Labelling on which event E is evaluated: all components (giant) or the
  // mantle (core).
  ComponentLabeling event;
};

SideEvaluation evaluate_side(const Graph& g, Mode mode, std::uint32_t radius,
                             std::uint32_t k) {
  SideEvaluation s;
  const std::size_t n = g.num_vertices();
  if (mode == Mode::kGiant) {
    s.event = components(g);
    s.phi = phi_giant_all(s.event);
    s.witness = remainder(g, s.phi);
    s.phi_local = phi_giant_local_all(g, radius, n);
  } else {
    CoreResult core = kcore(g, k);
    s.phi_local = phi_core_local_all(g, radius, k, &core);
    s.phi = std::move(core.in_core);
    s.witness = std::move(core.mantle);
    s.event = s.witness;
  }
  return s;
}

std::vector<Vertex> disagreement(const SideEvaluation& minus,
                                 const SideEvaluation& plus) {
  std::vector<Vertex> d;
  for (std::size_t w = 0; w < minus.phi.size(); ++w) {
    const int psi_minus = minus.phi[w] - minus.phi_local[w];
    const int psi_plus = plus.phi[w] - plus.phi_local[w];
    if (psi_minus != psi_plus) d.push_back(static_cast<Vertex>(w));
  }
  return d;
}

// Mask of W = C_u ∪ C_v in the witness labelling of G-.
std::vector<std::uint8_t> witness_mask(const ComponentLabeling& lab, Edge f) {
  std::vector<std::uint8_t> in_w(lab.comp_id.size(), 0);
  const std::int32_t cu = lab.comp_id[f.u];
  const std::int32_t cv = lab.comp_id[f.v];
  for (std::size_t w = 0; w < in_w.size(); ++w) {
    const std::int32_t id = lab.comp_id[w];
    in_w[w] = id != kNoComponent && (id == cu || id == cv);
  }
  return in_w;
}

// Core mode: the locality argument applies to w whose mantle component is
// untouched by f and keeps the same vertex set (hence the same induced graph
// and edge boundary) in G+. Returns a per-vertex mask of such w.
std::vector<std::uint8_t> preserved_components(const ComponentLabeling& minus,
                                               const ComponentLabeling& plus) {
  const std::size_t n = minus.comp_id.size();
  std::vector<std::int32_t> image(minus.sizes.size(), kNoComponent);
  std::vector<std::uint8_t> ok(minus.sizes.size(), 1);
  for (std::size_t w = 0; w < n; ++w) {
    const std::int32_t a = minus.comp_id[w];
    if (a == kNoComponent) continue;
    const auto ai = static_cast<std::size_t>(a);
    const std::int32_t b = plus.comp_id[w];
    if (b == kNoComponent) {
      ok[ai] = 0;
    } else if (image[ai] == kNoComponent) {
      image[ai] = b;
    } else if (image[ai] != b) {
      ok[ai] = 0;
    }
  }
  std::vector<std::uint8_t> out(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    const std::int32_t a = minus.comp_id[w];
    if (a == kNoComponent) continue;
    const auto ai = static_cast<std::size_t>(a);
    out[w] = ok[ai] && minus.sizes[ai] == plus.sizes[static_cast<std::size_t>(image[ai])];
  }
  return out;
}

}  // namespace

ClaimViolation::ClaimViolation(const ResampleTrialRecord& record,
                               std::uint64_t seed)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << "structural claim violated on trial " << record.trial
            << " (seed " << seed << ", stream index " << record.trial
            << "): D ⊆ W " << (record.claim_subset ? "held" : "FAILED")
            << ", |W| < l => D = ∅ " << (record.claim_small ? "held" : "FAILED")
            << ", locality " << (record.locality ? "held" : "FAILED")
            << "; |D| = " << record.d_size << ", |W| = " << record.w_size;
        return msg.str();
      }()),
      record_(record),
      seed_(seed) {}

std::vector<Vertex> compute_D(const CoupledPair& pair, Mode mode,
                              std::uint32_t radius, std::uint32_t k) {
  return disagreement(evaluate_side(pair.minus(), mode, radius, k),
                      evaluate_side(pair.plus(), mode, radius, k));
}

std::vector<Vertex> compute_W(const CoupledPair& pair, Mode mode, std::uint32_t k) {
  const Graph& g = pair.minus();
  ComponentLabeling lab;
  if (mode == Mode::kGiant) {
    lab = remainder(g, phi_giant_all(components(g)));
  } else {
    lab = kcore(g, k).mantle;
  }
  const auto mask = witness_mask(lab, pair.f());
  std::vector<Vertex> w;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) w.push_back(static_cast<Vertex>(v));
  }
  return w;
}

ResampleTrialRecord analyze_pair(const CoupledPair& pair, const ProbeConfig& config,
                                 std::size_t trial) {
  const SideEvaluation minus = evaluate_side(pair.minus(), config.mode, config.radius, config.k);
  const SideEvaluation plus = evaluate_side(pair.plus(), config.mode, config.radius, config.k);
  const std::size_t n = pair.minus().num_vertices();

  ResampleTrialRecord r;
  r.trial = trial;
  r.mode = config.mode;
  r.n = n;
  r.c = config.c;
  r.radius = config.radius;
  r.k = config.k;
  r.f_was_edge = pair.f_was_edge();

  const auto d = disagreement(minus, plus);
  const auto in_w = witness_mask(minus.witness, pair.f());
  r.d_size = d.size();
  r.w_size = static_cast<std::size_t>(std::count(in_w.begin(), in_w.end(), 1));
  r.event_E = check_event_E(
      config.mode == Mode::kGiant ? EventVariant::kGiant : EventVariant::kMantle,
      {&minus.event, &plus.event}, n);
  r.claim_subset = std::all_of(d.begin(), d.end(), [&](Vertex w) { return in_w[w] != 0; });
  r.claim_small = r.w_size >= config.radius || d.empty();

  std::vector<std::uint8_t> applicable;
  if (config.mode == Mode::kCore) {
    applicable = preserved_components(minus.witness, plus.witness);
  }
  r.locality = true;
  for (std::size_t w = 0; w < n && r.locality; ++w) {
    if (in_w[w]) continue;
    // Core members of G- (C_w = ∅) are always covered; mantle vertices only
    // when their component is carried over unchanged.
    if (config.mode == Mode::kCore && minus.witness.comp_id[w] != kNoComponent &&
        !applicable[w]) {
      continue;
    }
    r.locality = minus.phi[w] == plus.phi[w] && minus.phi_local[w] == plus.phi_local[w];
  }

  const SideEvaluation& sampled = pair.f_was_edge() ? plus : minus;
  for (std::size_t w = 0; w < n; ++w) {
    r.z += sampled.phi[w];
    r.z_tilde += sampled.phi_local[w];
  }
  return r;
}

std::vector<ResampleTrialRecord> run_probe(
    const ProbeConfig& config,
    const std::function<void(const ResampleTrialRecord&)>& sink) {
  config.validate();
  std::vector<ResampleTrialRecord> records;
  records.reserve(config.trials);
  ordered_parallel<ResampleTrialRecord>(
      0, config.trials, config.threads,
      [&](std::size_t i) {
        Rng rng(RngStream{config.seed, i});
        const Graph g = sample_gnp(config.n, config.p(), rng);
        const CoupledPair pair = make_coupled_pair(g, rng, config.pair);
        ResampleTrialRecord r = analyze_pair(pair, config, i);
        if (r.violation()) throw ClaimViolation(r, config.seed);
        return r;
      },
      [&](std::size_t, ResampleTrialRecord&& r) {
        if (sink) sink(r);
        records.push_back(std::move(r));
      });
  return records;
}

double mean_d_squared(const std::vector<ResampleTrialRecord>& records) {
  if (records.empty()) throw ParameterError("no probe records");
  double sum = 0;
  for (const auto& r : records) {
    sum += static_cast<double>(r.d_size) * static_cast<double>(r.d_size);
  }
  return sum / static_cast<double>(records.size());
}

double es_bound(const std::vector<ResampleTrialRecord>& records, double p,
                std::size_t n, double m) {
  if (records.empty()) throw ParameterError("no probe records");
  for (const auto& r : records) {
    if (r.n != n || std::abs(r.c / static_cast<double>(r.n) - p) > 1e-15) {
      throw ParameterError("probe records mix different (n, p)");
    }
  }
  const double nn = static_cast<double>(n);
  return 2.0 * m * m * p * (1.0 - p) * nn * nn * mean_d_squared(records);
}

VarianceEstimate approximation_error_variance(
    const std::vector<ResampleTrialRecord>& records) {
  MomentAccumulator acc;
  for (const auto& r : records) acc.add(static_cast<double>(r.z - r.z_tilde));
  return {acc.variance(), acc.variance_standard_error()};
}

TailProfile tail_profile(const std::vector<ResampleTrialRecord>& records,
                         const std::vector<std::uint32_t>& radius_grid) {
  if (records.empty()) throw ParameterError("no probe records");
  TailProfile out;
  const double count = static_cast<double>(records.size());
  for (std::uint32_t l : radius_grid) {
    double sum = 0;
    for (const auto& r : records) {
      if (r.event_E && r.w_size >= l) {
        sum += static_cast<double>(r.w_size) * static_cast<double>(r.w_size);
      }
    }
    out.rows.push_back({l, sum / count});
  }
  for (const auto& r : records) {
    if (r.w_size > 0) out.w_histogram[r.w_size] += 1;
  }
  out.fit = fit_geometric_decay(out.w_histogram, 3, 30, true);
  const double c = records.front().c;
  out.predicted_base = records.front().mode == Mode::kGiant ? c * std::exp(1.0 - c) : 0.0;
  return out;
}

}  // namespace rglab
