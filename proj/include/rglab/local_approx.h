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

#ifndef RGLAB_LOCAL_APPROX_H_
#define RGLAB_LOCAL_APPROX_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "rglab/decomposition.h"
#include "rglab/graph.h"

namespace rglab {

enum class Mode { kGiant, kCore };

// phi(v) for the giant: membership in the designated largest component.
int phi_giant(const ComponentLabeling& labeling, Vertex v);

// phi_l(v) for the giant: 1 iff the boundary of the ball is non-empty or the
// ball has more than log4_threshold(n) vertices.
int phi_giant_local(const LocalBall& b, std::size_t n);

// phi_l(v) for the core: 1 iff the root lies in its l-local k-core.
int phi_core_local(const LocalBall& b, std::uint32_t k);

// A weight rule on rooted balls. `evaluate` must depend on the rooted
// isomorphism class of the ball only, and return a value in [0, 1].
struct WeightScheme {
  std::uint32_t radius = 0;
  std::function<double(const LocalBall&)> evaluate;
};

// Weighted neighbourhood count X and its truncation Y (tree balls with
// 2 <= |ball| <= t only).
struct CountPair {
  double x = 0;
  double y = 0;
  std::size_t t = 0;
};

// Tree-shaped ball whose size lies in [2, t].
inline bool in_truncation(std::size_t size, std::size_t edges, std::size_t t) {
  return size >= 2 && size <= t && edges + 1 == size;
}

// Generic reference evaluation: materializes every ball.
CountPair weighted_count(const Graph& g, const WeightScheme& scheme, std::size_t t);

// (Z~_l, Z^_l) for the giant indicator.
CountPair truncated_giant(const Graph& g, std::uint32_t radius, std::size_t t,
                          std::size_t n);

// (Y~_l, Y^_l) for the core indicator. When `core` (the k-core of g) is
// supplied, core members are scored 1 without a local computation, which is
// exact because V(K) ∩ B(v, l) always lies inside K(v, l).
CountPair truncated_core(const Graph& g, std::uint32_t radius, std::size_t t,
                         std::uint32_t k, const CoreResult* core = nullptr);

// Default truncation size: ceil((4c)^l), capped at log4_threshold(n).
std::size_t default_truncation(double c, std::uint32_t radius, std::size_t n);

// Per-vertex indicator vectors.
std::vector<std::uint8_t> phi_giant_all(const ComponentLabeling& labeling);
std::vector<std::uint8_t> phi_core_all(const CoreResult& core);
std::vector<std::uint8_t> phi_giant_local_all(const Graph& g, std::uint32_t radius,
                                              std::size_t n);
std::vector<std::uint8_t> phi_core_local_all(const Graph& g, std::uint32_t radius,
                                             std::uint32_t k,
                                             const CoreResult* core = nullptr);

struct CensusRecord {
  Vertex v = 0;
  std::size_t ball_size = 0;
  std::size_t boundary_size = 0;
  bool is_tree = false;
  int phi = 0;
  int phi_local = 0;
};

// One record per vertex, in vertex order.
std::vector<CensusRecord> census(const Graph& g, Mode mode, std::uint32_t radius,
                                 std::uint32_t k);

}  // namespace rglab

#endif  // RGLAB_LOCAL_APPROX_H_
