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

#include "rglab/decomposition.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

#include "rglab/errors.h"

namespace rglab {

std::vector<Vertex> ComponentLabeling::members_of(Vertex v) const {
  std::vector<Vertex> out;
  const std::int32_t id = comp_id[v];
  if (id == kNoComponent) return out;
  for (std::size_t w = 0; w < comp_id.size(); ++w) {
    if (comp_id[w] == id) out.push_back(static_cast<Vertex>(w));
  }
  return out;
}

std::size_t ComponentLabeling::second_largest_size() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (static_cast<std::int32_t>(i) != largest) best = std::max(best, sizes[i]);
  }
  return best;
}

ComponentLabeling remainder(const Graph& g, std::span<const std::uint8_t> excluded) {
  const std::size_t n = g.num_vertices();
  ComponentLabeling out;
  out.comp_id.assign(n, kNoComponent);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (out.comp_id[s] != kNoComponent || (!excluded.empty() && excluded[s])) {
      continue;
    }
    const auto id = static_cast<std::int32_t>(out.sizes.size());
    std::size_t size = 0;
    out.comp_id[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex y : g.neighbors(x)) {
        if (out.comp_id[y] != kNoComponent || (!excluded.empty() && excluded[y])) {
          continue;
        }
        out.comp_id[y] = id;
        stack.push_back(y);
      }
    }
    out.sizes.push_back(size);
    if (out.largest == kNoComponent ||
        size > out.sizes[static_cast<std::size_t>(out.largest)]) {
      out.largest = id;
    }
  }
  return out;
}

ComponentLabeling components(const Graph& g) { return remainder(g, {}); }

CoreResult kcore(const Graph& g, std::uint32_t k) {
  const std::size_t n = g.num_vertices();
  CoreResult out;
  out.k = k;
  out.in_core.assign(n, 1);
  std::vector<std::uint32_t> deg(n);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> low;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    if (deg[v] < k) low.push(v);
  }
  // Degrees only decrease, so a vertex enters the heap exactly once: either
  // initially or when its degree first drops to k - 1.
  while (!low.empty()) {
    const Vertex v = low.top();
    low.pop();
    out.in_core[v] = 0;
    out.peel_order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (out.in_core[w] && deg[w]-- == k) low.push(w);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (out.in_core[v]) out.core.push_back(v);
  }
  out.mantle = remainder(g, out.in_core);
  return out;
}

bool verify_degenerate_ordering(const Graph& g, std::span<const Vertex> core,
                                std::span<const Vertex> order, std::uint32_t k) {
  const std::size_t n = g.num_vertices();
  VertexMask seen(n, 0);
  for (Vertex v : core) {
    if (v >= n) throw ParameterError("core vertex out of range");
    seen[v] = 1;
  }
  for (Vertex v : order) {
    if (v >= n) throw ParameterError("ordering vertex out of range");
    if (seen[v] == 1) throw ParameterError("ordering and core overlap");
    if (seen[v] == 3) throw ParameterError("ordering repeats a vertex");
    seen[v] = 3;
  }
  // Second pass: 1 = core, 2 = already placed, 3 = pending.
  bool ok = true;
  for (Vertex v : order) {
    std::uint32_t prior = 0;
    for (Vertex w : g.neighbors(v)) prior += (seen[w] == 1 || seen[w] == 2);
    if (prior >= k) ok = false;
    seen[v] = 2;
  }
  return ok;
}

LocalCore local_kcore(const LocalBall& b, std::uint32_t k) {
  const std::size_t size = b.size();
  std::vector<std::uint8_t> alive(size, 1);
  std::vector<std::uint32_t> deg(size);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < size; ++i) {
    deg[i] = static_cast<std::uint32_t>(b.local_neighbors(i).size());
    if (!b.on_boundary(i) && deg[i] < k) {
      alive[i] = 0;
      queue.push_back(i);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t j : b.local_neighbors(queue[head])) {
      if (alive[j] && !b.on_boundary(j) && deg[j]-- == k) {
        alive[j] = 0;
        queue.push_back(j);
      }
    }
  }
  LocalCore out;
  out.root = b.root;
  out.radius = b.radius;
  for (std::uint32_t i = 0; i < size; ++i) {
    if (alive[i]) out.members.push_back(b.members[i]);
  }
  std::sort(out.members.begin(), out.members.end());
  out.contains_root = size > 0 && alive[0];
  return out;
}

std::vector<Vertex> local_mantle_component(const LocalBall& b,
                                           const LocalCore& core) {
  std::vector<Vertex> out;
  if (core.contains_root || b.size() == 0) return out;
  std::vector<std::uint8_t> state(b.size(), 0);  // 1 = in local core, 2 = seen
  for (std::uint32_t i = 0; i < b.size(); ++i) {
    if (std::binary_search(core.members.begin(), core.members.end(),
                           b.members[i])) {
      state[i] = 1;
    }
  }
  std::vector<std::uint32_t> stack{0};
  state[0] = 2;
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    out.push_back(b.members[x]);
    for (std::uint32_t y : b.local_neighbors(x)) {
      if (state[y] == 0) {
        state[y] = 2;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LocalCoreEngine::LocalCoreEngine(const Graph& g)
    : BallExplorer(g), live_degree_(g.num_vertices(), 0) {}

bool LocalCoreEngine::root_in_local_core(Vertex v, std::uint32_t radius,
                                         std::uint32_t k) {
  bfs(v, radius, ~std::size_t{0});
  // Interior members keep all their neighbours inside the ball, so their
  // starting degree is the host degree. local_ marks peeled vertices.
  queue_.clear();
  for (Vertex x : order_) {
    if (dist_[x] == radius) break;
    live_degree_[x] = static_cast<std::uint32_t>(g_->degree(x));
    local_[x] = 0;
    if (live_degree_[x] < k) {
      if (x == v) return false;
      local_[x] = epoch_;
      queue_.push_back(x);
    }
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    for (Vertex y : g_->neighbors(queue_[head])) {
      if (dist_[y] == radius || local_[y] == epoch_) continue;
      if (live_degree_[y]-- == k) {
        if (y == v) return false;
        local_[y] = epoch_;
        queue_.push_back(y);
      }
    }
  }
  return true;
}

std::size_t log4_threshold(std::size_t n) {
  if (n <= 1) return 0;
  const double l = std::log(static_cast<double>(n));
  return static_cast<std::size_t>(std::ceil(l * l * l * l));
}

namespace {

bool event_holds(EventVariant variant, const ComponentLabeling& lab,
                 std::size_t threshold) {
  const auto big = std::count_if(lab.sizes.begin(), lab.sizes.end(),
                                 [&](std::size_t s) { return s > threshold; });
  return variant == EventVariant::kGiant ? big == 1 : big == 0;
}

}  // namespace

bool check_event_E(EventVariant variant,
                   std::initializer_list<const ComponentLabeling*> labelings,
                   std::size_t n) {
  const std::size_t threshold = log4_threshold(n);
  return std::all_of(labelings.begin(), labelings.end(),
                     [&](const ComponentLabeling* lab) {
                       return event_holds(variant, *lab, threshold);
                     });
}

bool check_event_E(EventVariant variant, const ComponentLabeling& labeling,
                   std::size_t n) {
  return check_event_E(variant, {&labeling}, n);
}

}  // namespace rglab
