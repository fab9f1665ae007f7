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

#include "rglab/local_approx.h"

#include <cmath>
#include <limits>

namespace rglab {

int phi_giant(const ComponentLabeling& labeling, Vertex v) {
  return labeling.comp_id[v] != kNoComponent && labeling.comp_id[v] == labeling.largest;
}

int phi_giant_local(const LocalBall& b, std::size_t n) {
  return b.boundary_size() > 0 || b.size() > log4_threshold(n);
}

int phi_core_local(const LocalBall& b, std::uint32_t k) {
  return local_kcore(b, k).contains_root;
}

CountPair weighted_count(const Graph& g, const WeightScheme& scheme, std::size_t t) {
  CountPair out;
  out.t = t;
  BallExplorer explorer(g);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const LocalBall b = explorer.extract(v, scheme.radius);
    const double w = scheme.evaluate(b);
    out.x += w;
    if (in_truncation(b.size(), b.num_edges(), t)) out.y += w;
  }
  return out;
}

CountPair truncated_giant(const Graph& g, std::uint32_t radius, std::size_t t,
                          std::size_t n) {
  CountPair out;
  out.t = t;
  const std::size_t threshold = log4_threshold(n);
  // Past max(t, threshold) vertices phi_l = 1 and the ball is outside the
  // truncation, so exploration can stop there.
  const std::size_t cap = std::max(t, threshold);
  BallExplorer explorer(g);
  std::size_t x = 0, y = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const BallSummary s = explorer.summarize(v, radius, cap);
    const bool phi = s.capped || s.boundary_size > 0 || s.size > threshold;
    if (!phi) continue;
    ++x;
    if (!s.capped && in_truncation(s.size, s.induced_edges, t)) ++y;
  }
  out.x = static_cast<double>(x);
  out.y = static_cast<double>(y);
  return out;
}

CountPair truncated_core(const Graph& g, std::uint32_t radius, std::size_t t,
                         std::uint32_t k, const CoreResult* core) {
  CountPair out;
  out.t = t;
  BallExplorer explorer(g);
  LocalCoreEngine engine(g);
  std::size_t x = 0, y = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const BallSummary s = explorer.summarize(v, radius, t);
    const bool truncated = in_truncation(s.size, s.induced_edges, t) && !s.capped;
    int phi;
    if (truncated) {
      phi = phi_core_local(explorer.extract(v, radius), k);
    } else if (core != nullptr && core->in_core[v]) {
      phi = 1;
    } else {
      phi = engine.root_in_local_core(v, radius, k);
    }
    x += phi;
    if (truncated) y += phi;
  }
  out.x = static_cast<double>(x);
  out.y = static_cast<double>(y);
  return out;
}

std::size_t default_truncation(double c, std::uint32_t radius, std::size_t n) {
  const double raw = std::ceil(std::pow(4.0 * c, static_cast<double>(radius)));
  const auto cap = static_cast<double>(log4_threshold(n));
  return static_cast<std::size_t>(std::min(raw, cap));
}

std::vector<std::uint8_t> phi_giant_all(const ComponentLabeling& labeling) {
  std::vector<std::uint8_t> out(labeling.comp_id.size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    out[v] = static_cast<std::uint8_t>(phi_giant(labeling, static_cast<Vertex>(v)));
  }
  return out;
}

std::vector<std::uint8_t> phi_core_all(const CoreResult& core) { return core.in_core; }

std::vector<std::uint8_t> phi_giant_local_all(const Graph& g, std::uint32_t radius,
                                              std::size_t n) {
  const std::size_t threshold = log4_threshold(n);
  BallExplorer explorer(g);
  std::vector<std::uint8_t> out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out[v] = explorer.reaches_radius_or_exceeds(v, radius, threshold);
  }
  return out;
}

std::vector<std::uint8_t> phi_core_local_all(const Graph& g, std::uint32_t radius,
                                             std::uint32_t k, const CoreResult* core) {
  LocalCoreEngine engine(g);
  std::vector<std::uint8_t> out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out[v] = (core != nullptr && core->in_core[v]) ||
             engine.root_in_local_core(v, radius, k);
  }
  return out;
}

std::vector<CensusRecord> census(const Graph& g, Mode mode, std::uint32_t radius,
                                 std::uint32_t k) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> phi;
  if (mode == Mode::kGiant) {
    phi = phi_giant_all(components(g));
  } else {
    phi = kcore(g, k).in_core;
  }
  BallExplorer explorer(g);
  std::vector<CensusRecord> out;
  out.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    const LocalBall b = explorer.extract(v, radius);
    CensusRecord r;
    r.v = v;
    r.ball_size = b.size();
    r.boundary_size = b.boundary_size();
    r.is_tree = b.is_tree();
    r.phi = phi[v];
    r.phi_local = mode == Mode::kGiant ? phi_giant_local(b, n) : phi_core_local(b, k);
    out.push_back(r);
  }
  return out;
}

}  // namespace rglab
