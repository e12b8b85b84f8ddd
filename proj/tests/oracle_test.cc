// Copyright 2026 The Dynconn Authors.
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

#include "dynconn/oracle.h"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "dynconn/errors.h"
#include "dynconn/hashing.h"
#include "dynconn/two_edge.h"

namespace dynconn {
namespace {

OracleGraph random_graph(SplitMix64& rng, std::size_t n, std::size_t m) {
  OracleGraph g(n);
  while (g.edges().size() < m) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    if (u != v && !g.contains(EdgeKey::canonical(u, v))) {
      g.insert(EdgeKey::canonical(u, v));
    }
  }
  return g;
}

TEST(OracleTest, InsertDelete) {
  OracleGraph g(4);
  g.insert({0, 1});
  EXPECT_THROW(g.insert({0, 1}), UsageError);
  g.erase({0, 1});
  EXPECT_TRUE(g.edges().empty());
  EXPECT_THROW(g.erase({0, 1}), UsageError);
  EXPECT_THROW(g.insert({1, 4}), ParameterError);
}

TEST(OracleTest, ReplayMatchesFinalSet) {
  SplitMix64 rng(1);
  OracleGraph g(10);
  std::set<EdgeKey> shadow;
  for (int i = 0; i < 1000; ++i) {
    const auto u = static_cast<Vertex>(rng.below(10));
    const auto v = static_cast<Vertex>(rng.below(10));
    if (u == v) continue;
    const EdgeKey e = EdgeKey::canonical(u, v);
    if (shadow.erase(e)) {
      g.erase(e);
    } else {
      shadow.insert(e);
      g.insert(e);
    }
  }
  EXPECT_EQ(g.edges(), shadow);
}

TEST(OracleTest, ConnectedMatchesTransitiveClosure) {
  SplitMix64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const OracleGraph g = random_graph(rng, 8, rng.below(12));
    bool reach[8][8] = {};
    for (int v = 0; v < 8; ++v) reach[v][v] = true;
    for (const EdgeKey& e : g.edges()) reach[e.x][e.y] = reach[e.y][e.x] = true;
    for (int k = 0; k < 8; ++k) {
      for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
          reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
        }
      }
    }
    for (Vertex i = 0; i < 8; ++i) {
      for (Vertex j = 0; j < 8; ++j) ASSERT_EQ(g.connected(i, j), reach[i][j]);
    }
  }
  EXPECT_FALSE(OracleGraph(3).connected(0, 2));
  EXPECT_TRUE(OracleGraph(3).connected(1, 1));
}

TEST(OracleTest, TwoEdge) {
  OracleGraph g(6);
  for (EdgeKey e : {EdgeKey{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) {
    g.insert(e);
  }
  EXPECT_TRUE(g.two_edge_connected(0, 2));
  EXPECT_FALSE(g.two_edge_connected(0, 3));
  g.insert({2, 3});
  EXPECT_FALSE(g.two_edge_connected(0, 3));
  EXPECT_TRUE(g.connected(0, 3));
}

TEST(OracleTest, TwoEdgeAgreesWithBridgeBackend) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const OracleGraph g = random_graph(rng, 16, rng.below(36));
    const auto edges = g.edge_list();
    for (Vertex u = 0; u < 16; ++u) {
      for (Vertex v = 0; v < 16; ++v) {
        const bool two = g.two_edge_connected(u, v);
        ASSERT_EQ(two, bridge_backend_query(16, edges, u, v));
        if (two) ASSERT_TRUE(g.connected(u, v));
      }
    }
  }
}

TEST(OracleTest, Cutset) {
  OracleGraph g(4);
  g.insert({0, 1});
  EXPECT_EQ(g.cutset({0}), (std::vector<EdgeKey>{{0, 1}}));
  EXPECT_TRUE(g.cutset({0, 1}).empty());
  EXPECT_THROW(g.cutset({}), ParameterError);
  EXPECT_THROW(g.cutset({0, 1, 2, 3}), ParameterError);
}

TEST(OracleTest, CutsetSizeFromDegrees) {
  SplitMix64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const OracleGraph g = random_graph(rng, 12, rng.below(40));
    std::vector<Vertex> side;
    std::vector<bool> in(12, false);
    for (Vertex v = 0; v < 12; ++v) {
      if (rng.below(2)) {
        side.push_back(v);
        in[v] = true;
      }
    }
    if (side.empty() || side.size() == 12) continue;
    std::size_t degree_sum = 0, inside = 0;
    for (const EdgeKey& e : g.edges()) {
      degree_sum += in[e.x] + in[e.y];
      inside += in[e.x] && in[e.y];
    }
    ASSERT_EQ(g.cutset(side).size(), degree_sum - 2 * inside);
  }
}

}  // namespace
}  // namespace dynconn
