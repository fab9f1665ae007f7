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

#ifndef RGLAB_GRAPH_H_
#define RGLAB_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rglab/rng.h"

namespace rglab {

using Vertex = std::uint32_t;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

// Immutable simple undirected graph on vertices 0..n-1 in CSR form.
// Neighbour lists are sorted and free of loops and duplicates, and the
// adjacency relation is symmetric.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  // Throws ParameterError on out-of-range endpoints, loops or repeated pairs.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return adj_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex a, Vertex b) const;

  // All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;

  // Image of the graph under the vertex map v -> perm[v]; perm must be a
  // permutation of 0..n-1.
  Graph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph sample_gnp(std::size_t, double, Rng&);
  Graph(std::size_t n, std::vector<std::size_t> offsets,
        std::vector<Vertex> adj)
      : n_(n), offsets_(std::move(offsets)), adj_(std::move(adj)) {}

  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

// Samples G(n, p). Uses geometric skipping over the pair sequence, so the
// cost is O(n + m) rather than O(n^2). Throws ParameterError unless
// 0 <= p <= 1 and n >= 1.
Graph sample_gnp(std::size_t n, double p, Rng& rng);
inline Graph sample_gnp(std::size_t n, double p, RngStream stream) {
  Rng rng(stream);
  return sample_gnp(n, p, rng);
}

// --- coupled resampling pair ------------------------------------------------

enum class PairChoice {
  kFixed,    // f = {0, 1}
  kUniform,  // f uniform over all vertex pairs
};

// Two graphs G- and G+ = G- + f that differ only in the designated pair f.
class CoupledPair {
 public:
  // `base` must not contain f.
  CoupledPair(Graph base, Edge f, bool f_was_edge);

  const Graph& minus() const { return minus_; }
  const Graph& plus() const { return plus_; }
  Edge f() const { return f_; }
  // Whether f was present in the graph the pair was built from. Diagnostic
  // only; the sampled graph is plus() if true and minus() otherwise.
  bool f_was_edge() const { return f_was_edge_; }
  const Graph& sampled() const { return f_was_edge_ ? plus_ : minus_; }

 private:
  Graph minus_;
  Graph plus_;
  Edge f_;
  bool f_was_edge_;
};

// Throws ParameterError if g has fewer than 2 vertices. The rng is consumed
// only for PairChoice::kUniform.
CoupledPair make_coupled_pair(const Graph& g, Rng& rng,
                              PairChoice choice = PairChoice::kFixed);

// --- rooted balls -----------------------------------------------------------

// Induced subgraph on B(root, radius) with BFS distances. Local index 0 is
// the root; members are listed in BFS order, so distances are
// non-decreasing along the member list.
struct LocalBall {
  Vertex root = 0;
  std::uint32_t radius = 0;
  std::vector<Vertex> members;       // global ids
  std::vector<std::uint32_t> dist;   // parallel to members
  std::vector<std::uint32_t> offsets;  // local CSR, size members.size() + 1
  std::vector<std::uint32_t> adj;      // local indices, sorted per vertex

  std::size_t size() const { return members.size(); }
  std::size_t num_edges() const { return adj.size() / 2; }
  bool on_boundary(std::uint32_t local) const { return dist[local] == radius; }
  std::size_t boundary_size() const;
  // Global ids of the vertices at distance exactly `radius`.
  std::vector<Vertex> boundary() const;
  std::span<const std::uint32_t> local_neighbors(std::uint32_t local) const {
    return {adj.data() + offsets[local], adj.data() + offsets[local + 1]};
  }
  // Balls are connected by construction, so this is the edge-count test.
  bool is_tree() const { return num_edges() + 1 == size(); }
};

LocalBall ball(const Graph& g, Vertex v, std::uint32_t radius);

// Size statistics of a ball without materializing it.
struct BallSummary {
  std::size_t size = 0;
  std::size_t boundary_size = 0;
  std::size_t induced_edges = 0;
  // Exploration stopped because size exceeded the cap; the other fields are
  // then lower bounds and `size` equals cap + 1.
  bool capped = false;
  bool is_tree() const { return !capped && induced_edges + 1 == size; }
};

// Reusable BFS workspace over one graph. Not thread-safe; use one explorer
// per thread. Every query costs O(ball) instead of O(n).
class BallExplorer {
 public:
  explicit BallExplorer(const Graph& g);

  BallSummary summarize(Vertex v, std::uint32_t radius, std::size_t cap);

  // True iff some vertex lies at distance exactly `radius` from v or the ball
  // has more than `size_threshold` vertices. Stops at the first witness.
  bool reaches_radius_or_exceeds(Vertex v, std::uint32_t radius,
                                 std::size_t size_threshold);

  LocalBall extract(Vertex v, std::uint32_t radius);

  // Distance of w from the root of the last BFS, or npos if not reached.
  static constexpr std::uint32_t npos = ~std::uint32_t{0};

  const Graph& graph() const { return *g_; }

 protected:
  // Runs BFS to `radius`, stopping once more than `cap` vertices are found.
  // Returns false if stopped early. Visited vertices are in order_.
  bool bfs(Vertex v, std::uint32_t radius, std::size_t cap);
  bool visited(Vertex w) const { return stamp_[w] == epoch_; }
  void next_epoch();

  const Graph* g_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::uint32_t> local_;
  std::vector<Vertex> order_;
  std::uint32_t epoch_ = 0;
};

// --- edge-list text format --------------------------------------------------
//
// Header line "n m", then m lines "u v" with 0-indexed vertices. Lines whose
// first non-blank character is '#' are comments and are skipped on input.

void write_edge_list(std::ostream& out, const Graph& g);
// Throws ParameterError on malformed input or an edge count mismatch.
Graph read_edge_list(std::istream& in);

}  // namespace rglab

#endif  // RGLAB_GRAPH_H_
