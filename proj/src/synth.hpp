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

#ifndef FASTCM_SYNTH_HPP_
#define FASTCM_SYNTH_HPP_

#include <cstddef>

#include "rng.hpp"
#include "types.hpp"

namespace fastcm {

// Holme-Kim growth: complete seed graph on m nodes, then every new node
// adds m edges. Each attachment after the first is a triad-closure step
// with probability p_triad (a random neighbor of the last preferentially
// chosen target), otherwise preferential attachment. Requires 1 <= m < n.
EdgeList holme_kim(std::size_t n, std::size_t m, double p_triad, RngStream& rng);

// Weight of each edge (i, j) becomes 1 + |N(i) & N(j)|.
EdgeList common_neighbor_weights(const EdgeList& edges);

}  // namespace fastcm

#endif  // FASTCM_SYNTH_HPP_
