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

#ifndef RGLAB_DECOMPOSITION_H_
#define RGLAB_DECOMPOSITION_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "rglab/graph.h"

namespace rglab {

using VertexMask = std::vector<std::uint8_t>;

inline constexpr std::int32_t kNoComponent = -1;

// Partition of (a subset of) the vertices into connected components.
//
// Component ids are assigned in order of each component's smallest vertex,
// so "smallest id" and "smallest minimum vertex" coincide. Vertices outside
// the labelled subgraph carry kNoComponent (the convention C_v = empty).
struct ComponentLabeling {
  std::vector<std::int32_t> comp_id;
  std::vector<std::size_t> sizes;
  // Largest component, ties broken by smallest minimum vertex id;
  // kNoComponent when nothing is labelled.
  std::int32_t largest = kNoComponent;

  std::size_t num_components() const { return sizes.size(); }
  std::size_t largest_size() const {
    return largest == kNoComponent ? 0 : sizes[static_cast<std::size_t>(largest)];
  }
  // |C_v|; zero for unlabelled vertices.
  std::size_t size_of(Vertex v) const {
    return comp_id[v] == kNoComponent ? 0 : sizes[static_cast<std::size_t>(comp_id[v])];
  }
  // Members of v's component, ascending; empty for unlabelled vertices.
  std::vector<Vertex> members_of(Vertex v) const;
  // Largest size among components other than `largest`.
  std::size_t second_largest_size() const;
};

ComponentLabeling components(const Graph& g);

// Components of g - excluded. `excluded` is indexed by vertex (non-zero means
// excluded).
ComponentLabeling remainder(const Graph& g, std::span<const std::uint8_t> excluded);

struct CoreResult {
  std::uint32_t k = 0;
  VertexMask in_core;
  std::vector<Vertex> core;  // ascending
  ComponentLabeling mantle;  // components of G - V(K)
  // Deletion sequence of the peeling process. Each vertex had degree < k in
  // the graph remaining at its deletion time.
  std::vector<Vertex> peel_order;

  std::size_t size() const { return core.size(); }
};

// k-core by peeling, always deleting the lowest-id vertex whose current
// degree is below k.
CoreResult kcore(const Graph& g, std::uint32_t k);

// True iff every vertex of `order` has fewer than k neighbours among the
// vertices preceding it in `order` together with `core`. The reverse of a
// peel order passes this check. Throws ParameterError if order and core
// overlap or order repeats a vertex.
bool verify_degenerate_ordering(const Graph& g, std::span<const Vertex> core,
                                std::span<const Vertex> order, std::uint32_t k);

// K(v, l): the maximal subset of a ball that contains the whole boundary and
// in which every non-boundary member has at least k neighbours.
struct LocalCore {
  Vertex root = 0;
  std::uint32_t radius = 0;
  std::vector<Vertex> members;  // global ids, ascending
  bool contains_root = false;
};

// Peels non-boundary vertices of current degree < k. Boundary vertices are
// never deleted and interior distances are fixed at their original values.
LocalCore local_kcore(const LocalBall& b, std::uint32_t k);

// C_v^l: the component of the root in B(v, l) - K(v, l), as ascending global
// ids; empty when the root belongs to K(v, l).
std::vector<Vertex> local_mantle_component(const LocalBall& b,
                                           const LocalCore& core);

// Decides root membership in K(v, l) directly on the host graph with
// reusable scratch space. Equivalent to local_kcore(ball(g, v, l), k)
// .contains_root; not thread-safe.
class LocalCoreEngine : private BallExplorer {
 public:
  explicit LocalCoreEngine(const Graph& g);
  bool root_in_local_core(Vertex v, std::uint32_t radius, std::uint32_t k);

 private:
  std::vector<std::uint32_t> live_degree_;
  std::vector<Vertex> queue_;
};

// ceil((ln n)^4): the size cut-off separating "small" components.
std::size_t log4_threshold(std::size_t n);

enum class EventVariant {
  kGiant,   // exactly one component larger than the cut-off
  kMantle,  // no component larger than the cut-off
};

// Event E evaluated on every supplied labelling (conjunction).
bool check_event_E(EventVariant variant,
                   std::initializer_list<const ComponentLabeling*> labelings,
                   std::size_t n);
bool check_event_E(EventVariant variant, const ComponentLabeling& labeling,
                   std::size_t n);

}  // namespace rglab

#endif  // RGLAB_DECOMPOSITION_H_
