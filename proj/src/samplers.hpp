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

#ifndef FASTCM_SAMPLERS_HPP_
#define FASTCM_SAMPLERS_HPP_

#include <span>
#include <vector>

#include "rng.hpp"
#include "types.hpp"

namespace fastcm {

// Node order used by the fast samplers: ascending key, ties by node id.
struct SortedNodeOrder {
  std::vector<NodeId> order;
  std::vector<double> key;  // key[t] belongs to node order[t]
};

// key = alpha (UBCM).
SortedNodeOrder sort_nodes(const ParamsUBCM& params);
// key = alpha + beta (UECM).
SortedNodeOrder sort_nodes(const ParamsUECM& params);

// suffix[t] = min{ beta[order[u]] : u >= t }, with suffix[n] = +inf.
std::vector<double> beta_suffix_min(const ParamsUECM& params,
                                    std::span<const NodeId> order);

// O(N^2) references.
EdgeList sample_ubcm_bruteforce(const ParamsUBCM& params, RngStream& rng);
EdgeList sample_uecm_bruteforce(const ParamsUECM& params, RngStream& rng);

// Skip-and-reject samplers; same distribution as the brute-force versions,
// expected cost proportional to the number of sampled edges.
EdgeList sample_ubcm_fast(const ParamsUBCM& params, RngStream& rng);
EdgeList sample_uecm_fast(const ParamsUECM& params, RngStream& rng);

// Chung-Lu with min(1, k_i k_j / 2M) used as the edge probability.
EdgeList sample_chunglu_mh(const DegreeSequence& k, RngStream& rng);

// Weighted Chung-Lu baseline: Poisson(sum(s) / 2) endpoint-pair draws,
// endpoints proportional to s, repeated pairs aggregated into weights.
EdgeList sample_chunglu_stub(const DegreeSequence& k, const StrengthSequence& s,
                             RngStream& rng);

// Edges only between the + set (ids [0, n+)) and the - set
// (ids [n+, n+ + n-)).
EdgeList sample_bipartite_fast(const ParamsUBCM& plus, const ParamsUBCM& minus,
                               RngStream& rng);
EdgeList sample_bipartite_fast(const ParamsUECM& plus, const ParamsUECM& minus,
                               RngStream& rng);

// Directed edge i -> j with the kernel evaluated on (out_i, in_j); no
// self-loops.
EdgeList sample_directed_fast(const ParamsUBCM& out, const ParamsUBCM& in,
                              RngStream& rng);
EdgeList sample_directed_fast(const ParamsUECM& out, const ParamsUECM& in,
                              RngStream& rng);

}  // namespace fastcm

#endif  // FASTCM_SAMPLERS_HPP_
