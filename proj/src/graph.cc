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

#include "rglab/graph.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "rglab/errors.h"

namespace rglab {

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ParameterError("edge endpoint out of range");
    }
    if (e.u == e.v) throw ParameterError("self-loop in edge list");
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<Vertex> adj(offsets[n]);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    adj[fill[e.u]++] = e.v;
    adj[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adj.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = adj.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw ParameterError("duplicate edge in edge list");
    }
  }
  return Graph(n, std::move(offsets), std::move(adj));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex w : neighbors(u)) {
      if (u < w) out.push_back({u, w});
    }
  }
  return out;
}

Graph Graph::with_edge(Edge e) const {
  if (has_edge(e.u, e.v)) return *this;
  auto list = edges();
  list.push_back(e);
  return from_edges(n_, list);
}

Graph Graph::without_edge(Edge e) const {
  auto list = edges();
  std::erase(list, e);
  return from_edges(n_, list);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw ParameterError("permutation size mismatch");
  std::vector<Edge> list;
  list.reserve(num_edges());
  for (const Edge& e : edges()) list.push_back(Edge::of(perm[e.u], perm[e.v]));
  return from_edges(n_, list);
}

Graph sample_gnp(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in [0, 1]");
  }
  if (n == 0) throw ParameterError("graph needs at least one vertex");

  // Pairs (w, v) with w < v are visited in the order v = 1, 2, ... and
  // w = 0..v-1 within each v. The gap to the next present pair is geometric.
  // Because v is non-decreasing over the stream, pushing each pair into both
  // endpoint lists keeps every list sorted without a final sort.
  std::vector<Edge> stream;
  if (p > 0.0) {
    stream.reserve(static_cast<std::size_t>(
        p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 * 1.1 +
        16));
    const double log_q = std::log1p(-p);
    std::uint64_t v = 1;
    std::int64_t w = -1;
    while (v < n) {
      const double r = rng.uniform();
      const double skip = p == 1.0 ? 0.0 : std::floor(std::log1p(-r) / log_q);
      // Clamp so huge skips cannot overflow; anything beyond n^2 ends the run.
      const double max_skip = static_cast<double>(n) * static_cast<double>(n);
      w += 1 + static_cast<std::int64_t>(std::min(skip, max_skip));
      while (v < n && w >= static_cast<std::int64_t>(v)) {
        w -= static_cast<std::int64_t>(v);
        ++v;
      }
      if (v < n) {
        stream.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
      }
    }
  }

  std::vector<std::size_t> offsets(n + 1, 0);
  for (const Edge& e : stream) {
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<Vertex> adj(offsets[n]);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : stream) {
    adj[fill[e.v]++] = e.u;
    adj[fill[e.u]++] = e.v;
  }
  return Graph(n, std::move(offsets), std::move(adj));
}

CoupledPair::CoupledPair(Graph base, Edge f, bool f_was_edge)
    : f_(f), f_was_edge_(f_was_edge) {
  if (f.u == f.v || f.v >= base.num_vertices()) {
    throw ParameterError("designated pair must join two distinct vertices");
  }
  if (base.has_edge(f.u, f.v)) {
    throw ParameterError("base graph of a coupled pair must exclude f");
  }
  plus_ = base.with_edge(f);
  minus_ = std::move(base);
}

CoupledPair make_coupled_pair(const Graph& g, Rng& rng, PairChoice choice) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw ParameterError("coupled pair needs at least 2 vertices");
  Edge f{0, 1};
  if (choice == PairChoice::kUniform) {
    const auto a = static_cast<Vertex>(rng.below(n));
    auto b = static_cast<Vertex>(rng.below(n - 1));
    if (b >= a) ++b;
    f = Edge::of(a, b);
  }
  const bool present = g.has_edge(f.u, f.v);
  return CoupledPair(present ? g.without_edge(f) : g, f, present);
}

std::size_t LocalBall::boundary_size() const {
  return static_cast<std::size_t>(
      std::count(dist.begin(), dist.end(), radius));
}

std::vector<Vertex> LocalBall::boundary() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (dist[i] == radius) out.push_back(members[i]);
  }
  return out;
}

LocalBall ball(const Graph& g, Vertex v, std::uint32_t radius) {
  BallExplorer explorer(g);
  return explorer.extract(v, radius);
}

BallExplorer::BallExplorer(const Graph& g)
    : g_(&g),
      stamp_(g.num_vertices(), 0),
      dist_(g.num_vertices(), 0),
      local_(g.num_vertices(), 0) {}

void BallExplorer::next_epoch() {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
}

bool BallExplorer::bfs(Vertex v, std::uint32_t radius, std::size_t cap) {
  next_epoch();
  order_.clear();
  stamp_[v] = epoch_;
  dist_[v] = 0;
  order_.push_back(v);
  if (order_.size() > cap) return false;
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const Vertex x = order_[head];
    const std::uint32_t d = dist_[x];
    if (d == radius) break;  // BFS order: everything after is at radius too
    for (Vertex y : g_->neighbors(x)) {
      if (stamp_[y] == epoch_) continue;
      stamp_[y] = epoch_;
      dist_[y] = d + 1;
      order_.push_back(y);
      if (order_.size() > cap) return false;
    }
  }
  return true;
}

BallSummary BallExplorer::summarize(Vertex v, std::uint32_t radius,
                                    std::size_t cap) {
  BallSummary s;
  if (!bfs(v, radius, cap)) {
    s.capped = true;
    s.size = order_.size();
    return s;
  }
  s.size = order_.size();
  std::size_t degree_sum = 0;
  for (Vertex x : order_) {
    if (dist_[x] == radius) {
      ++s.boundary_size;
      for (Vertex y : g_->neighbors(x)) degree_sum += visited(y);
    } else {
      degree_sum += g_->degree(x);
    }
  }
  s.induced_edges = degree_sum / 2;
  return s;
}

bool BallExplorer::reaches_radius_or_exceeds(Vertex v, std::uint32_t radius,
                                             std::size_t size_threshold) {
  if (radius == 0) return true;
  next_epoch();
  order_.clear();
  stamp_[v] = epoch_;
  dist_[v] = 0;
  order_.push_back(v);
  if (order_.size() > size_threshold) return true;
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const Vertex x = order_[head];
    const std::uint32_t d = dist_[x];
    for (Vertex y : g_->neighbors(x)) {
      if (stamp_[y] == epoch_) continue;
      if (d + 1 == radius) return true;
      stamp_[y] = epoch_;
      dist_[y] = d + 1;
      order_.push_back(y);
      if (order_.size() > size_threshold) return true;
    }
  }
  return false;
}

LocalBall BallExplorer::extract(Vertex v, std::uint32_t radius) {
  bfs(v, radius, ~std::size_t{0});
  LocalBall b;
  b.root = v;
  b.radius = radius;
  b.members = order_;
  b.dist.reserve(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    b.dist.push_back(dist_[order_[i]]);
    local_[order_[i]] = static_cast<std::uint32_t>(i);
  }
  b.offsets.reserve(order_.size() + 1);
  b.offsets.push_back(0);
  for (Vertex x : order_) {
    const std::size_t start = b.adj.size();
    for (Vertex y : g_->neighbors(x)) {
      if (visited(y)) b.adj.push_back(local_[y]);
    }
    std::sort(b.adj.begin() + static_cast<std::ptrdiff_t>(start), b.adj.end());
    b.offsets.push_back(static_cast<std::uint32_t>(b.adj.size()));
  }
  return b;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw ParameterError("edge list: missing header");
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 1 || m < 0) {
    throw ParameterError("edge list: malformed header '" + line + "'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (next_data_line(in, line)) {
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0 || u >= n || v >= n) {
      throw ParameterError("edge list: malformed edge '" + line + "'");
    }
    edges.push_back(
        Edge::of(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParameterError("edge list: header announces " + std::to_string(m) +
                         " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace rglab
