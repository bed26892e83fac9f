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

#include "synth.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace fastcm {

EdgeList holme_kim(std::size_t n, std::size_t m, double p_triad, RngStream& rng) {
  if (m < 1 || m >= n) throw InvalidArgument("holme_kim: need 1 <= m < n");
  if (!(p_triad >= 0.0 && p_triad <= 1.0))
    throw InvalidArgument("holme_kim: p_triad must lie in [0, 1]");
  if (n > std::size_t{1} << 31) throw InvalidArgument("holme_kim: n too large");

  EdgeList out;
  out.n_nodes = n;
  std::vector<std::vector<NodeId>> adj(n);
  // Every edge contributes both endpoints; a uniform pick is degree-proportional.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * m * n);

  auto connect = [&](NodeId a, NodeId b) {
    out.edges.push_back(a < b ? Edge{a, b, 1} : Edge{b, a, 1});
    adj[a].push_back(b);
    adj[b].push_back(a);
    endpoints.push_back(a);
    endpoints.push_back(b);
  };

  for (NodeId a = 0; a < m; ++a)
    for (NodeId b = a + 1; b < m; ++b) connect(a, b);

  std::vector<NodeId> targets;
  std::vector<NodeId> eligible;
  for (auto v = static_cast<NodeId>(m); v < n; ++v) {
    targets.clear();
    auto chosen = [&](NodeId u) {
      return std::find(targets.begin(), targets.end(), u) != targets.end();
    };
    auto preferential = [&]() {
      NodeId u;
      do {
        u = endpoints.empty() ? static_cast<NodeId>(rng.below(v))
                              : endpoints[rng.below(endpoints.size())];
      } while (chosen(u));
      return u;
    };

    NodeId anchor = preferential();
    targets.push_back(anchor);
    while (targets.size() < m) {
      if (rng.uniform() < p_triad) {
        eligible.clear();
        for (NodeId u : adj[anchor])
          if (!chosen(u)) eligible.push_back(u);
        if (!eligible.empty()) {
          targets.push_back(eligible[rng.below(eligible.size())]);
          continue;
        }
      }
      anchor = preferential();
      targets.push_back(anchor);
    }
    for (NodeId u : targets) connect(u, v);
  }
  return out;
}

EdgeList common_neighbor_weights(const EdgeList& edges) {
  if (edges.directed) throw InvalidArgument("common_neighbor_weights: graph must be undirected");
  if (edges.weighted) throw InvalidArgument("common_neighbor_weights: input must be unweighted");
  std::vector<std::vector<NodeId>> adj(edges.n_nodes);
  for (const Edge& e : edges.edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());

  EdgeList out = edges;
  out.weighted = true;
  for (Edge& e : out.edges) {
    const auto& a = adj[e.src];
    const auto& b = adj[e.dst];
    Weight common = 0;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end() && ib != b.end();) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        ++common;
        ++ia;
        ++ib;
      }
    }
    e.weight = 1 + common;
  }
  return out;
}

}  // namespace fastcm
