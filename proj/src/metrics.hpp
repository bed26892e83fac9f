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

#ifndef FASTCM_METRICS_HPP_
#define FASTCM_METRICS_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "types.hpp"

namespace fastcm {

// N^-1 sum (log(k_i + 1) - log(k'_i + 1))^2, natural log.
double log_degree_mse(std::span<const double> reference, std::span<const double> sampled);

// Edge density among the top ceil(alpha N) nodes by reference degree (ties
// by ascending node id). The group must contain at least two nodes.
double rich_club_density(const EdgeList& edges, const DegreeSequence& reference, double alpha);

// Rich-club group used by rich_club_density.
std::vector<NodeId> rich_club_members(const DegreeSequence& reference, double alpha);

// Triangles of the undirected simple graph; weights ignored.
std::uint64_t triangle_count(const EdgeList& edges);

// Realized degrees (edges per node) and strengths (weight sums). Directed
// lists count both endpoints.
std::pair<DegreeSequence, StrengthSequence> degree_and_strength(const EdgeList& edges);

struct SampleRecord {
  std::uint64_t sample_id = 0;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  std::vector<double> degrees;
  std::vector<double> strengths;  // empty for unweighted samples
  std::uint64_t triangles = 0;
  std::vector<double> rich_club;  // one per requested alpha level
};

struct EnsembleReport {
  std::vector<double> alpha_levels;
  std::vector<SampleRecord> records;
};

// Fills the statistics of one ensemble member.
SampleRecord summarize_sample(const EdgeList& edges, const DegreeSequence& reference,
                              std::span<const double> alpha_levels);

}  // namespace fastcm

#endif  // FASTCM_METRICS_HPP_
