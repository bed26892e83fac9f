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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "error.hpp"
#include "inference.hpp"
#include "metrics.hpp"
#include "rng.hpp"
#include "samplers.hpp"

namespace fastcm {
namespace {

EdgeList make_graph(std::size_t n, std::vector<std::pair<NodeId, NodeId>> pairs) {
  EdgeList e;
  e.n_nodes = n;
  for (auto [a, b] : pairs) e.edges.push_back({std::min(a, b), std::max(a, b), 1});
  e.sort();
  return e;
}

EdgeList complete_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return make_graph(n, pairs);
}

EdgeList random_graph(std::size_t n, double p, RngStream& rng) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (rng.uniform() < p) pairs.emplace_back(i, j);
  return make_graph(n, pairs);
}

std::uint64_t brute_triangles(const EdgeList& e) {
  const std::size_t n = e.n_nodes;
  std::vector<char> adj(n * n, 0);
  for (const Edge& edge : e.edges) adj[edge.src * n + edge.dst] = adj[edge.dst * n + edge.src] = 1;
  std::uint64_t t = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) t += adj[a * n + b] && adj[b * n + c] && adj[a * n + c];
  return t;
}

TEST(LogDegreeMse, Examples) {
  const std::vector<double> k{1.0, 4.0, 2.5};
  EXPECT_EQ(log_degree_mse(k, k), 0.0);
  const std::vector<double> zero{0.0}, shifted{std::exp(1.0) - 1.0};
  EXPECT_NEAR(log_degree_mse(zero, shifted), 1.0, 1e-15);
}

TEST(LogDegreeMse, NonNegativeAndZeroOnlyWhenEqual) {
  RngStream rng(1, 0);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> a(10), b(10);
    for (std::size_t i = 0; i < 10; ++i) {
      a[i] = std::floor(10 * rng.uniform());
      b[i] = std::floor(10 * rng.uniform());
    }
    const double mse = log_degree_mse(a, b);
    EXPECT_GE(mse, 0.0);
    EXPECT_EQ(mse == 0.0, a == b);
  }
}

TEST(LogDegreeMse, RejectsLengthMismatch) {
  const std::vector<double> a{1.0, 2.0}, b{1.0};
  EXPECT_THROW(log_degree_mse(a, b), InvalidArgument);
}

TEST(RichClubDensity, CompleteAndEmpty) {
  const DegreeSequence k{std::vector<double>(10, 9.0)};
  for (double alpha : {0.2, 0.5, 1.0}) {
    EXPECT_DOUBLE_EQ(rich_club_density(complete_graph(10), k, alpha), 1.0);
    EXPECT_DOUBLE_EQ(rich_club_density(make_graph(10, {}), k, alpha), 0.0);
  }
}

TEST(RichClubDensity, StarHubAndLeaf) {
  const auto star = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  const DegreeSequence k{{5, 1, 1, 1, 1, 1}};
  EXPECT_EQ(rich_club_members(k, 2.0 / 6.0), (std::vector<NodeId>{0, 1}));
  EXPECT_DOUBLE_EQ(rich_club_density(star, k, 2.0 / 6.0), 1.0);
}

TEST(RichClubDensity, RejectsSingletonGroup) {
  const DegreeSequence k{{3, 1, 1, 1}};
  EXPECT_THROW(rich_club_density(complete_graph(4), k, 0.2), InvalidArgument);
}

TEST(RichClubDensity, RelabelInvariant) {
  RngStream rng(2, 0);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_graph(25, 0.2, rng);
    auto k = degree_and_strength(g).first;
    // Distinct reference values so the tie-break never depends on ids.
    for (std::size_t i = 0; i < k.values.size(); ++i) k.values[i] += 1e-3 * static_cast<double>(i);
    std::vector<NodeId> perm(25);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<NodeId, NodeId>> moved;
    for (const Edge& e : g.edges) moved.emplace_back(perm[e.src], perm[e.dst]);
    DegreeSequence k2{std::vector<double>(25)};
    for (std::size_t i = 0; i < 25; ++i) k2.values[perm[i]] = k.values[i];
    for (double alpha : {0.1, 0.3, 0.6}) {
      EXPECT_DOUBLE_EQ(rich_club_density(g, k, alpha), rich_club_density(make_graph(25, moved), k2, alpha));
    }
  }
}

TEST(TriangleCount, Examples) {
  EXPECT_EQ(triangle_count(complete_graph(3)), 1u);
  EXPECT_EQ(triangle_count(complete_graph(4)), 4u);
  EXPECT_EQ(triangle_count(make_graph(5, {})), 0u);
}

TEST(TriangleCount, MatchesTripleEnumeration) {
  RngStream rng(3, 0);
  for (std::size_t n = 3; n <= 30; ++n) {
    for (double p : {0.1, 0.3, 0.6, 0.9}) {
      const auto g = random_graph(n, p, rng);
      EXPECT_EQ(triangle_count(g), brute_triangles(g)) << "n=" << n << " p=" << p;
    }
  }
}

TEST(TriangleCount, IgnoresWeights) {
  auto g = complete_graph(5);
  g.weighted = true;
  for (Edge& e : g.edges) e.weight = 7;
  EXPECT_EQ(triangle_count(g), 10u);
}

TEST(DegreeAndStrength, Examples) {
  EdgeList e;
  e.n_nodes = 2;
  e.weighted = true;
  e.edges.push_back({0, 1, 3});
  const auto [k, s] = degree_and_strength(e);
  EXPECT_EQ(k.values, (std::vector<double>{1, 1}));
  EXPECT_EQ(s.values, (std::vector<double>{3, 3}));
  const auto [k0, s0] = degree_and_strength(make_graph(4, {}));
  EXPECT_EQ(k0.values, std::vector<double>(4, 0.0));
  EXPECT_EQ(s0.values, std::vector<double>(4, 0.0));
}

TEST(DegreeAndStrength, UecmEnsembleMatchesExpectation) {
  RngStream prng(4, 0);
  std::vector<double> a(6), b(6);
  for (std::size_t i = 0; i < 6; ++i) {
    a[i] = -1.0 + 2.0 * prng.uniform();
    b[i] = 0.1 + prng.uniform();
  }
  const ParamsUECM params(a, b);
  const auto want = expected_strengths(params);
  RngStream rng(5, 0);
  constexpr int kSamples = 10000;
  std::vector<double> sum(6, 0.0), sq(6, 0.0);
  for (int t = 0; t < kSamples; ++t) {
    const auto s = degree_and_strength(sample_uecm_fast(params, rng)).second;
    for (std::size_t i = 0; i < 6; ++i) {
      sum[i] += s.values[i];
      sq[i] += s.values[i] * s.values[i];
    }
  }
  for (std::size_t i = 0; i < 6; ++i) {
    const double mean = sum[i] / kSamples;
    const double se = std::sqrt((sq[i] / kSamples - mean * mean) / kSamples);
    EXPECT_LT(std::abs(mean - want[i]), 3 * se) << "node " << i;
  }
}

TEST(SummarizeSample, FillsEveryField) {
  const auto g = complete_graph(6);
  const DegreeSequence ref{std::vector<double>(6, 5.0)};
  const std::vector<double> alphas{0.4, 1.0};
  const auto rec = summarize_sample(g, ref, alphas);
  EXPECT_EQ(rec.degrees, std::vector<double>(6, 5.0));
  EXPECT_EQ(rec.triangles, 20u);
  EXPECT_EQ(rec.rich_club, (std::vector<double>{1.0, 1.0}));
}

}  // namespace
}  // namespace fastcm
