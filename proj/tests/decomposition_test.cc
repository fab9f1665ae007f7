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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.h"
#include "rglab/errors.h"
#include "rglab/local_approx.h"

namespace rglab {
namespace {

Graph make(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back(Edge::of(i, static_cast<Vertex>((i + 1) % n)));
  return make(n, e);
}

const Graph kK4 = Graph::from_edges(
    4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

TEST(Components, Examples) {
  const ComponentLabeling empty = components(Graph(5));
  EXPECT_EQ(empty.num_components(), 5u);
  EXPECT_EQ(empty.largest_size(), 1u);
  EXPECT_EQ(empty.largest, empty.comp_id[0]);

  EXPECT_EQ(components(cycle(5)).num_components(), 1u);
  EXPECT_EQ(components(cycle(5)).largest_size(), 5u);

  const Graph two = make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const ComponentLabeling lab = components(two);
  EXPECT_EQ(lab.num_components(), 2u);
  EXPECT_EQ(lab.largest, lab.comp_id[0]);
  EXPECT_EQ(lab.second_largest_size(), 3u);
  EXPECT_EQ(lab.members_of(4), (std::vector<Vertex>{3, 4, 5}));
}

TEST(Components, MatchFloodFillOracle) {
  Rng rng(RngStream{21, 0});
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    const Graph g = oracle::random_graph(n, rng.uniform() * 0.4, rng);
    const auto expect = oracle::brute_components(g);
    const ComponentLabeling lab = components(g);
    ASSERT_EQ(lab.num_components(), expect.size());
    EXPECT_EQ(lab.members_of(expect.front().front()), expect.front());
    EXPECT_EQ(lab.comp_id[expect.front().front()], lab.largest);
    for (const auto& c : expect) EXPECT_EQ(lab.members_of(c.front()), c);
  }
}

TEST(Remainder, Examples) {
  const Graph path = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const std::vector<std::uint8_t> mid{0, 0, 1, 0, 0};
  const ComponentLabeling r = remainder(path, mid);
  EXPECT_EQ(r.num_components(), 2u);
  EXPECT_EQ(r.comp_id[2], kNoComponent);
  EXPECT_EQ(r.size_of(2), 0u);
  EXPECT_EQ(r.members_of(1), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(r.members_of(4), (std::vector<Vertex>{3, 4}));

  const std::vector<std::uint8_t> all(5, 1);
  const ComponentLabeling none = remainder(path, all);
  EXPECT_EQ(none.num_components(), 0u);
  EXPECT_EQ(none.largest, kNoComponent);

  const std::vector<std::uint8_t> nothing(5, 0);
  EXPECT_EQ(remainder(path, nothing).comp_id, components(path).comp_id);
}

TEST(KCore, Examples) {
  const CoreResult k4 = kcore(kK4, 3);
  EXPECT_EQ(k4.core, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(k4.peel_order.empty());

  const Graph tree = make(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  EXPECT_TRUE(kcore(tree, 2).core.empty());

  std::vector<Edge> e = cycle(5).edges();
  e.push_back({4, 5});
  const CoreResult c5 = kcore(make(6, e), 2);
  EXPECT_EQ(c5.core, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(c5.peel_order, (std::vector<Vertex>{5}));
  EXPECT_EQ(c5.mantle.num_components(), 1u);
  EXPECT_EQ(c5.mantle.members_of(5), (std::vector<Vertex>{5}));
}

TEST(KCore, MatchesExhaustiveSearch) {
  Rng rng(RngStream{22, 0});
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    const Graph g = oracle::random_graph(n, 0.1 + 0.8 * rng.uniform(), rng);
    for (std::uint32_t k : {2u, 3u, 4u}) {
      ASSERT_EQ(kcore(g, k).core, oracle::brute_kcore(g, static_cast<int>(k)));
    }
  }
}

TEST(KCore, PeelOrderCertificate) {
  Rng rng(RngStream{23, 0});
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = sample_gnp(60, 5.0 / 60, rng);
    for (std::uint32_t k : {1u, 2u, 3u, 4u}) {
      const CoreResult r = kcore(g, k);
      ASSERT_EQ(r.core.size() + r.peel_order.size(), g.num_vertices());
      // Forward replay: each deletion had degree < k at its time.
      std::vector<char> alive(g.num_vertices(), 1);
      for (Vertex v : r.peel_order) {
        std::uint32_t deg = 0;
        for (Vertex w : g.neighbors(v)) deg += alive[w];
        EXPECT_LT(deg, k);
        alive[v] = 0;
      }
      for (Vertex v : r.core) {
        std::uint32_t deg = 0;
        for (Vertex w : g.neighbors(v)) deg += r.in_core[w];
        EXPECT_GE(deg, k);
      }
      std::vector<Vertex> reversed(r.peel_order.rbegin(), r.peel_order.rend());
      EXPECT_TRUE(verify_degenerate_ordering(g, r.core, reversed, k));
      EXPECT_EQ(r.mantle.comp_id, remainder(g, r.in_core).comp_id);
    }
  }
}

TEST(KCore, RandomTieBreakingGivesSameCore) {
  Rng rng(RngStream{24, 0});
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 10 + rng.below(41);
    const Graph g = sample_gnp(n, 4.0 / static_cast<double>(n), rng);
    for (std::uint32_t k : {2u, 3u}) {
      std::vector<char> alive(n, 1);
      for (;;) {
        std::vector<Vertex> low;
        for (Vertex v = 0; v < n; ++v) {
          if (!alive[v]) continue;
          std::uint32_t deg = 0;
          for (Vertex w : g.neighbors(v)) deg += alive[w];
          if (deg < k) low.push_back(v);
        }
        if (low.empty()) break;
        alive[low[rng.below(low.size())]] = 0;
      }
      std::vector<Vertex> core;
      for (Vertex v = 0; v < n; ++v) if (alive[v]) core.push_back(v);
      EXPECT_EQ(kcore(g, k).core, core);
    }
  }
}

TEST(DegenerateOrdering, Examples) {
  EXPECT_TRUE(verify_degenerate_ordering(kK4, std::vector<Vertex>{0, 1, 2, 3}, {}, 3));
  const Graph tri = make(3, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<Vertex> perm{0, 1, 2};
  do {
    EXPECT_TRUE(verify_degenerate_ordering(tri, {}, perm, 3));
  } while (std::next_permutation(perm.begin(), perm.end()));

  const Graph c5 = cycle(5);
  std::vector<Vertex> order{0, 1, 2, 3, 4};
  int checked = 0;
  do {
    EXPECT_FALSE(verify_degenerate_ordering(c5, {}, order, 2));
    ++checked;
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(checked, 120);

  EXPECT_THROW(verify_degenerate_ordering(kK4, std::vector<Vertex>{0}, std::vector<Vertex>{0}, 3),
               ParameterError);
  EXPECT_THROW(verify_degenerate_ordering(kK4, {}, std::vector<Vertex>{1, 1}, 3), ParameterError);
}

TEST(LocalCore, Examples) {
  const LocalBall isolated = ball(Graph(3), 1, 2);
  const LocalCore none = local_kcore(isolated, 1);
  EXPECT_TRUE(none.members.empty());
  EXPECT_FALSE(none.contains_root);

  // Radius 3 exceeds the diameter, so the boundary is empty.
  const LocalBall k4 = ball(kK4, 0, 3);
  EXPECT_EQ(k4.boundary_size(), 0u);
  const LocalCore in_k4 = local_kcore(k4, 3);
  EXPECT_EQ(in_k4.members, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(in_k4.contains_root);

  for (std::size_t leaves : {1u, 2u, 3u}) {
    std::vector<Edge> e;
    for (Vertex i = 1; i <= leaves; ++i) e.push_back({0, i});
    const Graph star = make(leaves + 1, e);
    const LocalCore lc = local_kcore(ball(star, 0, 1), 2);
    std::vector<Vertex> expect;
    if (leaves >= 2) expect.push_back(0);
    for (Vertex i = 1; i <= leaves; ++i) expect.push_back(i);
    EXPECT_EQ(lc.members, expect);
    EXPECT_EQ(lc.contains_root, leaves >= 2);
  }
}

TEST(LocalCore, MatchesExhaustiveSearch) {
  Rng rng(RngStream{25, 0});
  int balls = 0;
  while (balls < 3000) {
    const std::size_t n = 2 + rng.below(13);
    const Graph g = oracle::random_graph(n, 0.15 + 0.5 * rng.uniform(), rng);
    const Vertex v = static_cast<Vertex>(rng.below(n));
    const std::uint32_t r = 1 + static_cast<std::uint32_t>(rng.below(3));
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(4));
    const LocalBall b = ball(g, v, r);
    const LocalCore lc = local_kcore(b, k);
    ASSERT_EQ(lc.members, oracle::brute_local_kcore(g, v, static_cast<int>(r), static_cast<int>(k)));
    EXPECT_EQ(lc.contains_root, std::binary_search(lc.members.begin(), lc.members.end(), v));
    LocalCoreEngine engine(g);
    EXPECT_EQ(engine.root_in_local_core(v, r, k), lc.contains_root);
    ++balls;
  }
}

// C_v^l, the component of v in B(v,l) - K(v,l), lies inside v's mantle
// component C_v; in particular core vertices are in their local cores.
TEST(LocalCore, LocalMantleInsideGlobalMantle) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const std::size_t n = 3000;
    const double c = 3.0 + static_cast<double>(s);
    const Graph g = sample_gnp(n, c / n, RngStream{26, s});
    const CoreResult core = kcore(g, 3);
    LocalCoreEngine engine(g);
    for (Vertex v = 0; v < n; ++v) {
      for (std::uint32_t r : {1u, 2u, 3u}) {
        const LocalBall b = ball(g, v, r);
        const LocalCore lc = local_kcore(b, 3);
        const auto cv = local_mantle_component(b, lc);
        if (core.in_core[v]) {
          EXPECT_TRUE(lc.contains_root);
          EXPECT_TRUE(cv.empty());
        } else {
          const auto global = core.mantle.members_of(v);
          for (Vertex w : cv) {
            EXPECT_TRUE(std::binary_search(global.begin(), global.end(), w));
          }
        }
        EXPECT_EQ(engine.root_in_local_core(v, r, 3), lc.contains_root);
      }
    }
  }
}

TEST(LocalCore, ErrorSetShrinksWithRadius) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const std::size_t n = 5000;
    const Graph g = sample_gnp(n, 7.2 / n, RngStream{27, s});
    const CoreResult core = kcore(g, 3);
    const auto phi = phi_core_all(core);
    std::vector<std::uint8_t> prev_err(n, 1);
    for (std::uint32_t r = 1; r <= 6; ++r) {
      const auto local = phi_core_local_all(g, r, 3);
      EXPECT_EQ(local, phi_core_local_all(g, r, 3, &core));
      for (Vertex v = 0; v < n; ++v) {
        const std::uint8_t err = local[v] != phi[v];
        EXPECT_LE(err, prev_err[v]);
        prev_err[v] = err;
      }
    }
  }
}

TEST(EventE, Threshold) {
  EXPECT_EQ(log4_threshold(100000), static_cast<std::size_t>(std::ceil(std::pow(std::log(1e5), 4))));
  EXPECT_EQ(log4_threshold(100000), 17569u);
  ComponentLabeling lab;
  lab.sizes = {20000};
  for (int i = 0; i < 1000; ++i) lab.sizes.push_back(50);
  lab.largest = 0;
  EXPECT_TRUE(check_event_E(EventVariant::kGiant, lab, 100000));
  ComponentLabeling small;
  small.sizes.assign(100, 10);
  small.largest = 0;
  EXPECT_FALSE(check_event_E(EventVariant::kGiant, small, 100000));
  EXPECT_TRUE(check_event_E(EventVariant::kMantle, small, 100000));
  EXPECT_TRUE(check_event_E(EventVariant::kMantle, ComponentLabeling{}, 100000));
  ComponentLabeling two;
  two.sizes = {20000, 18000};
  two.largest = 0;
  EXPECT_FALSE(check_event_E(EventVariant::kGiant, two, 100000));
  EXPECT_FALSE(check_event_E(EventVariant::kGiant, {&lab, &small}, 100000));
  EXPECT_TRUE(check_event_E(EventVariant::kGiant, {&lab, &lab}, 100000));
}

}  // namespace
}  // namespace rglab
