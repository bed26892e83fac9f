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

#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace fastcm {

namespace {

// Sorted neighbor lists of the undirected topology.
std::vector<std::vector<NodeId>> adjacency(const EdgeList& edges) {
  std::vector<std::vector<NodeId>> adj(edges.n_nodes);
  for (const Edge& e : edges.edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

}  // namespace

double log_degree_mse(std::span<const double> reference, std::span<const double> sampled) {
  if (reference.size() != sampled.size())
    throw InvalidArgument("log_degree_mse: length mismatch");
  if (reference.empty()) throw InvalidArgument("log_degree_mse: empty sequences");
  double sum = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double d = std::log1p(reference[i]) - std::log1p(sampled[i]);
    sum += d * d;
  }
  return sum / static_cast<double>(reference.size());
}

std::vector<NodeId> rich_club_members(const DegreeSequence& reference, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw InvalidArgument("rich_club_density: alpha must lie in (0, 1]");
  const std::size_t n = reference.size();
  // The epsilon keeps alpha * N from rounding up past an exact integer.
  const auto group = static_cast<std::size_t>(
      std::ceil(alpha * static_cast<double>(n) - 1e-9));
  if (group < 2) throw InvalidArgument("rich_club_density: group has fewer than 2 nodes");
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  const auto& k = reference.values;
  std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(group), ids.end(),
                    [&](NodeId a, NodeId b) { return k[a] != k[b] ? k[a] > k[b] : a < b; });
  ids.resize(group);
  return ids;
}

double rich_club_density(const EdgeList& edges, const DegreeSequence& reference, double alpha) {
  if (reference.size() != edges.n_nodes)
    throw InvalidArgument("rich_club_density: reference degrees do not match node count");
  const std::vector<NodeId> members = rich_club_members(reference, alpha);
  std::vector<char> in_group(edges.n_nodes, 0);
  for (NodeId v : members) in_group[v] = 1;
  std::size_t inside = 0;
  for (const Edge& e : edges.edges)
    if (in_group[e.src] && in_group[e.dst]) ++inside;
  const double g = static_cast<double>(members.size());
  return static_cast<double>(inside) / (g * (g - 1.0) / 2.0);
}

std::uint64_t triangle_count(const EdgeList& edges) {
  if (edges.directed) throw InvalidArgument("triangle_count: graph must be undirected");
  const auto adj = adjacency(edges);
  const std::size_t n = adj.size();
  // Orient each edge from lower to higher (degree, id) rank so every
  // triangle is counted once at its lowest-ranked vertex.
  auto before = [&](NodeId a, NodeId b) {
    return adj[a].size() != adj[b].size() ? adj[a].size() < adj[b].size() : a < b;
  };
  std::vector<std::vector<NodeId>> out(n);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : adj[v])
      if (before(v, u)) out[v].push_back(u);
  }
  std::uint64_t total = 0;
  std::vector<char> mark(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : out[v]) mark[u] = 1;
    for (NodeId u : out[v])
      for (NodeId w : out[u]) total += mark[w];
    for (NodeId u : out[v]) mark[u] = 0;
  }
  return total;
}

std::pair<DegreeSequence, StrengthSequence> degree_and_strength(const EdgeList& edges) {
  DegreeSequence k{std::vector<double>(edges.n_nodes, 0.0)};
  StrengthSequence s{std::vector<double>(edges.n_nodes, 0.0)};
  for (const Edge& e : edges.edges) {
    if (e.src >= edges.n_nodes || e.dst >= edges.n_nodes)
      throw InvalidArgument("degree_and_strength: node id out of range");
    k.values[e.src] += 1.0;
    k.values[e.dst] += 1.0;
    s.values[e.src] += static_cast<double>(e.weight);
    s.values[e.dst] += static_cast<double>(e.weight);
  }
  return {std::move(k), std::move(s)};
}

SampleRecord summarize_sample(const EdgeList& edges, const DegreeSequence& reference,
                              std::span<const double> alpha_levels) {
  SampleRecord rec;
  auto [k, s] = degree_and_strength(edges);
  rec.degrees = std::move(k.values);
  if (edges.weighted) rec.strengths = std::move(s.values);
  rec.triangles = triangle_count(edges);
  rec.rich_club.reserve(alpha_levels.size());
  for (double a : alpha_levels) rec.rich_club.push_back(rich_club_density(edges, reference, a));
  return rec;
}

}  // namespace fastcm
