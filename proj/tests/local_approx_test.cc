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

#include <gtest/gtest.h>

#include <map>

#include "oracles.h"

namespace rglab {
namespace {

Graph make(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

WeightScheme giant_scheme(std::uint32_t r, std::size_t n) {
  return {r, [n](const LocalBall& b) { return static_cast<double>(phi_giant_local(b, n)); }};
}

WeightScheme core_scheme(std::uint32_t r, std::uint32_t k) {
  return {r, [k](const LocalBall& b) { return static_cast<double>(phi_core_local(b, k)); }};
}

TEST(PhiGiant, Examples) {
  const Graph path = make(4, {{0, 1}, {1, 2}, {2, 3}});
  const ComponentLabeling connected = components(path);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(phi_giant(connected, v), 1);

  const ComponentLabeling empty = components(Graph(4));
  int z = 0;
  for (Vertex v = 0; v < 4; ++v) z += phi_giant(empty, v);
  EXPECT_EQ(z, 1);
  EXPECT_EQ(phi_giant(empty, 0), 1);

  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < 7; ++i) e.push_back({i, i + 1});
  e.push_back({7, 8});
  e.push_back({8, 9});
  const ComponentLabeling two = components(make(10, e));
  int sum = 0;
  for (Vertex v = 0; v < 10; ++v) sum += phi_giant(two, v);
  EXPECT_EQ(sum, 7);
}

TEST(PhiGiantLocal, Examples) {
  const std::size_t n = 1000;
  EXPECT_EQ(phi_giant_local(ball(Graph(3), 0, 2), n), 0);
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < 9; ++i) e.push_back({i, i + 1});
  const Graph path = make(9, e);
  EXPECT_EQ(phi_giant_local(ball(path, 4, 4), n), 1);
  EXPECT_EQ(ball(path, 4, 4).size(), 9u);

  // Two components: a 20-vertex path and a triangle; l = 4.
  std::vector<Edge> f;
  for (Vertex i = 0; i + 1 < 20; ++i) f.push_back({i, i + 1});
  f.push_back({20, 21});
  f.push_back({21, 22});
  f.push_back({20, 22});
  const Graph g = make(23, f);
  const ComponentLabeling lab = components(g);
  for (Vertex v : {20u, 21u, 22u}) {
    EXPECT_EQ(phi_giant_local(ball(g, v, 4), n), 0);
    EXPECT_EQ(phi_giant(lab, v), 0);
  }
  EXPECT_EQ(phi_giant_local(ball(g, 10, 4), n), 1);
  // A large ball without boundary counts once it exceeds the cut-off.
  EXPECT_EQ(phi_giant_local(ball(g, 0, 50), 2), 1);
}

TEST(PhiCoreLocal, Examples) {
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}};
  const Graph g = make(6, e);
  EXPECT_EQ(phi_core_local(ball(g, 0, 4), 3), 1);
  EXPECT_EQ(phi_core_local(ball(Graph(2), 0, 3), 1), 0);
  EXPECT_EQ(phi_core_local(ball(g, 5, 5), 3), 0);
}

TEST(WeightedCount, Examples) {
  const Graph g = make(2, {{0, 1}});
  const WeightScheme ones{1, [](const LocalBall&) { return 1.0; }};
  const CountPair edge = weighted_count(g, ones, 2);
  EXPECT_EQ(edge.x, 2);
  EXPECT_EQ(edge.y, 2);
  const Graph tri = make(3, {{0, 1}, {1, 2}, {0, 2}});
  const CountPair t = weighted_count(tri, ones, 100);
  EXPECT_EQ(t.x, 3);
  EXPECT_EQ(t.y, 0);
  const Graph big = sample_gnp(300, 0.01, RngStream{41, 0});
  EXPECT_EQ(weighted_count(big, ones, 10).x, 300);
}

TEST(TruncatedCounts, Examples) {
  const CountPair empty = truncated_giant(Graph(5), 2, 10, 5);
  EXPECT_EQ(empty.x, 0);
  EXPECT_EQ(empty.y, 0);
  EXPECT_EQ(truncated_core(Graph(5), 2, 10, 3).x, 0);
  const Graph path = make(3, {{0, 1}, {1, 2}});
  const CountPair p = truncated_giant(path, 1, 3, 3);
  EXPECT_EQ(p.x, 3);
  EXPECT_EQ(p.y, 3);
  EXPECT_EQ(p.t, 3u);
}

TEST(TruncatedCounts, FastPathsMatchReference) {
  Rng rng(RngStream{42, 0});
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 50 + rng.below(400);
    const double c = 0.5 + 8.0 * rng.uniform();
    const Graph g = sample_gnp(n, c / static_cast<double>(n), rng);
    const std::uint32_t r = 1 + static_cast<std::uint32_t>(rng.below(5));
    const std::size_t t = 2 + rng.below(60);
    // Small n keeps the cut-off comparable to ball sizes.
    const std::size_t cutoff_n = 2 + rng.below(40);
    const CountPair ref = weighted_count(g, giant_scheme(r, cutoff_n), t);
    const CountPair fast = truncated_giant(g, r, t, cutoff_n);
    EXPECT_EQ(fast.x, ref.x);
    EXPECT_EQ(fast.y, ref.y);
    const auto local = phi_giant_local_all(g, r, cutoff_n);
    EXPECT_EQ(static_cast<double>(std::count(local.begin(), local.end(), 1)), ref.x);

    const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng.below(3));
    const CountPair cref = weighted_count(g, core_scheme(r, k), t);
    const CoreResult core = kcore(g, k);
    for (const CoreResult* hint : {static_cast<const CoreResult*>(nullptr), &core}) {
      const CountPair cfast = truncated_core(g, r, t, k, hint);
      EXPECT_EQ(cfast.x, cref.x);
      EXPECT_EQ(cfast.y, cref.y);
      const auto clocal = phi_core_local_all(g, r, k, hint);
      EXPECT_EQ(static_cast<double>(std::count(clocal.begin(), clocal.end(), 1)), cref.x);
    }
  }
}

TEST(TruncatedCounts, InvariantUnderRelabeling) {
  Rng rng(RngStream{43, 0});
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2000;
    const double c = trial % 2 ? 2.0 : 7.0;
    const Graph g = sample_gnp(n, c / n, rng);
    const Graph h = g.relabeled(oracle::random_permutation(n, rng));
    for (std::uint32_t r : {2u, 3u}) {
      const std::size_t t = default_truncation(c, r, n);
      const CountPair a = truncated_giant(g, r, t, n), b = truncated_giant(h, r, t, n);
      EXPECT_EQ(a.x, b.x);
      EXPECT_EQ(a.y, b.y);
      const CountPair ca = truncated_core(g, r, t, 3), cb = truncated_core(h, r, t, 3);
      EXPECT_EQ(ca.x, cb.x);
      EXPECT_EQ(ca.y, cb.y);
    }
  }
}

// Tree balls with the same canonical rooted-tree code get the same weight.
TEST(WeightScheme, DependsOnlyOnIsomorphismClass) {
  Rng rng(RngStream{44, 0});
  std::map<std::string, int> giant_by_code, core_by_code;
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 4 + rng.below(10);
    const Graph g = oracle::random_graph(n, 1.6 / static_cast<double>(n), rng);
    const auto a = oracle::adjacency(g);
    for (Vertex v = 0; v < n; ++v) {
      for (std::uint32_t r = 1; r <= 3; ++r) {
        const LocalBall b = ball(g, v, r);
        if (!b.is_tree()) continue;
        std::uint64_t mask = 0;
        for (Vertex w : b.members) mask |= std::uint64_t{1} << w;
        const std::string code = std::to_string(r) + oracle::tree_code(a, mask, static_cast<int>(v), -1);
        const int pg = phi_giant_local(b, 30);
        const int pc = phi_core_local(b, 2);
        auto [it, fresh] = giant_by_code.emplace(code, pg);
        EXPECT_EQ(it->second, pg);
        auto [jt, fresh2] = core_by_code.emplace(code, pc);
        EXPECT_EQ(jt->second, pc);
        checked += !fresh;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(Locality, ComponentSubgraphGivesSameIndicator) {
  const std::size_t n = 3000;
  const Graph g = sample_gnp(n, 1.5 / n, RngStream{45, 0});
  const ComponentLabeling lab = components(g);
  Rng rng(RngStream{45, 1});
  for (int i = 0; i < 200; ++i) {
    const Vertex v = static_cast<Vertex>(rng.below(n));
    const auto members = lab.members_of(v);
    std::vector<Vertex> index(n, 0);
    for (std::size_t j = 0; j < members.size(); ++j) index[members[j]] = static_cast<Vertex>(j);
    std::vector<Edge> e;
    for (Vertex x : members)
      for (Vertex y : g.neighbors(x))
        if (x < y) e.push_back(Edge::of(index[x], index[y]));
    const Graph sub = Graph::from_edges(members.size(), e);
    for (std::uint32_t r : {1u, 3u, 5u}) {
      EXPECT_EQ(phi_giant_local(ball(g, v, r), n), phi_giant_local(ball(sub, index[v], r), n));
      EXPECT_EQ(phi_core_local(ball(g, v, r), 2), phi_core_local(ball(sub, index[v], r), 2));
    }
  }
}

TEST(ErrorOneSidedness, GiantMembersAreLocallyDetected) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const std::size_t n = 10000;
    const Graph g = sample_gnp(n, 2.0 / n, RngStream{46, s});
    const ComponentLabeling lab = components(g);
    ASSERT_TRUE(check_event_E(EventVariant::kGiant, lab, n));
    for (std::uint32_t r : {1u, 3u, 6u}) {
      const auto local = phi_giant_local_all(g, r, n);
      for (Vertex v = 0; v < n; ++v) {
        if (phi_giant(lab, v)) EXPECT_EQ(local[v], 1);
      }
    }
  }
}

TEST(Census, AgreesWithDirectEvaluation) {
  const std::size_t n = 500;
  const Graph g = sample_gnp(n, 3.0 / n, RngStream{47, 0});
  const auto rows = census(g, Mode::kGiant, 2, 3);
  const ComponentLabeling lab = components(g);
  ASSERT_EQ(rows.size(), n);
  for (Vertex v = 0; v < n; ++v) {
    const LocalBall b = ball(g, v, 2);
    EXPECT_EQ(rows[v].v, v);
    EXPECT_EQ(rows[v].ball_size, b.size());
    EXPECT_EQ(rows[v].boundary_size, b.boundary_size());
    EXPECT_EQ(rows[v].is_tree, b.is_tree());
    EXPECT_EQ(rows[v].phi, phi_giant(lab, v));
    EXPECT_EQ(rows[v].phi_local, phi_giant_local(b, n));
  }
  const auto core_rows = census(g, Mode::kCore, 2, 2);
  const CoreResult core = kcore(g, 2);
  for (Vertex v = 0; v < n; ++v) EXPECT_EQ(core_rows[v].phi, core.in_core[v]);
}

TEST(DefaultTruncation, GrowsThenCaps) {
  EXPECT_EQ(default_truncation(2.0, 1, 100000), 8u);
  EXPECT_EQ(default_truncation(2.0, 3, 100000), 512u);
  EXPECT_EQ(default_truncation(2.0, 6, 100000), log4_threshold(100000));
}

}  // namespace
}  // namespace rglab
