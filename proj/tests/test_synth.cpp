// Copyright 2026 The fastcm Authors.
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

#include <gtest/gtest.h>

#include <cmath>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "metrics.hpp"
#include "rng.hpp"
#include "synth.hpp"

namespace fastcm {
namespace {

std::vector<std::vector<NodeId>> adjacency(const EdgeList& e) {
  std::vector<std::vector<NodeId>> adj(e.n_nodes);
  for (const Edge& edge : e.edges) {
    adj[edge.src].push_back(edge.dst);
    adj[edge.dst].push_back(edge.src);
  }
  return adj;
}

bool connected(const EdgeList& e) {
  const auto adj = adjacency(e);
  std::vector<char> seen(e.n_nodes, 0);
  std::queue<NodeId> todo;
  todo.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const NodeId u = todo.front();
    todo.pop();
    for (NodeId v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        todo.push(v);
      }
    }
  }
  return reached == e.n_nodes;
}

double average_clustering(const EdgeList& e) {
  const auto adj = adjacency(e);
  std::vector<std::set<NodeId>> nb(e.n_nodes);
  for (std::size_t i = 0; i < e.n_nodes; ++i) nb[i].insert(adj[i].begin(), adj[i].end());
  double total = 0.0;
  for (std::size_t i = 0; i < e.n_nodes; ++i) {
    const std::size_t d = adj[i].size();
    if (d < 2) continue;
    std::size_t links = 0;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) links += nb[adj[i][a]].count(adj[i][b]);
    total += 2.0 * links / (d * (d - 1.0));
  }
  return total / e.n_nodes;
}

EdgeList make_graph(std::size_t n, std::vector<std::pair<NodeId, NodeId>> pairs) {
  EdgeList e;
  e.n_nodes = n;
  for (auto [a, b] : pairs) e.edges.push_back({a, b, 1});
  e.sort();
  return e;
}

TEST(HolmeKim, EdgeCountAccounting) {
  RngStream rng(1, 0);
  const auto g = holme_kim(5000, 10, 0.1, rng);
  EXPECT_EQ(g.n_nodes, 5000u);
  // Complete seed on m nodes plus m edges per later node.
  EXPECT_EQ(g.size(), 10u * 9u / 2u + 10u * (5000u - 10u));
  EXPECT_NO_THROW(g.validate());
  EXPECT_TRUE(connected(g));
}

TEST(HolmeKim, SimpleAndConnectedAcrossParameters) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (std::size_t m : {1, 2, 5}) {
      for (double p : {0.0, 0.5, 1.0}) {
        RngStream rng(seed, m);
        const auto g = holme_kim(200, m, p, rng);
        EXPECT_NO_THROW(g.validate());
        EXPECT_FALSE(g.weighted);
        EXPECT_TRUE(connected(g));
      }
    }
  }
}

TEST(HolmeKim, Deterministic) {
  RngStream a(42, 7), b(42, 7);
  EXPECT_EQ(holme_kim(1000, 4, 0.3, a), holme_kim(1000, 4, 0.3, b));
}

TEST(HolmeKim, TriadStepRaisesClustering) {
  double with = 0.0, without = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RngStream r1(seed, 0), r2(seed, 1);
    with += average_clustering(holme_kim(1000, 3, 1.0, r1));
    without += average_clustering(holme_kim(1000, 3, 0.0, r2));
  }
  EXPECT_GT(with, without);
}

TEST(HolmeKim, PreferentialAttachmentGivesHeavyTail) {
  RngStream rng(3, 0);
  const auto k = degree_and_strength(holme_kim(5000, 3, 0.0, rng)).first;
  double top = 0.0, mean = 0.0;
  for (double x : k.values) {
    top = std::max(top, x);
    mean += x / k.values.size();
  }
  // An Erdos-Renyi graph of this density would have max degree near 20.
  EXPECT_GT(top, 10 * mean);
}

TEST(HolmeKim, RejectsBadArguments) {
  RngStream rng(0, 0);
  EXPECT_THROW(holme_kim(10, 10, 0.1, rng), InvalidArgument);
  EXPECT_THROW(holme_kim(10, 0, 0.1, rng), InvalidArgument);
  EXPECT_THROW(holme_kim(10, 2, 1.5, rng), InvalidArgument);
}

TEST(CommonNeighborWeights, Examples) {
  const auto tri = common_neighbor_weights(make_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(tri.weighted);
  for (const Edge& e : tri.edges) EXPECT_EQ(e.weight, 2u);
  const auto star = common_neighbor_weights(make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  for (const Edge& e : star.edges) EXPECT_EQ(e.weight, 1u);
  const auto k4 = common_neighbor_weights(make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  for (const Edge& e : k4.edges) EXPECT_EQ(e.weight, 3u);
}

TEST(CommonNeighborWeights, PreservesTopology) {
  RngStream rng(5, 0);
  const auto g = holme_kim(500, 4, 0.5, rng);
  const auto w = common_neighbor_weights(g);
  ASSERT_EQ(w.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(w.edges[i].src, g.edges[i].src);
    EXPECT_EQ(w.edges[i].dst, g.edges[i].dst);
    EXPECT_GE(w.edges[i].weight, 1u);
  }
}

TEST(CommonNeighborWeights, RejectsWeightedInput) {
  auto g = make_graph(3, {{0, 1}});
  g.weighted = true;
  EXPECT_THROW(common_neighbor_weights(g), InvalidArgument);
}

}  // namespace
}  // namespace fastcm
