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

#include "types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace fastcm {

ParamsUBCM::ParamsUBCM(std::vector<double> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.size() < 2) throw InvalidArgument("ParamsUBCM: need at least 2 nodes");
  for (double a : alpha_) {
    // +inf is the isolated-node sentinel.
    if (std::isnan(a) || a == -INFINITY)
      throw InvalidArgument("ParamsUBCM: alpha must be finite or +inf");
  }
}

ParamsUECM::ParamsUECM(std::vector<double> alpha, std::vector<double> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.size() != beta_.size())
    throw InvalidArgument("ParamsUECM: alpha and beta differ in length");
  if (alpha_.size() < 2) throw InvalidArgument("ParamsUECM: need at least 2 nodes");
  for (double a : alpha_) {
    if (std::isnan(a) || a == -INFINITY)
      throw InvalidArgument("ParamsUECM: alpha must be finite or +inf");
  }
  double lowest = INFINITY, second = INFINITY;
  for (double b : beta_) {
    if (!std::isfinite(b)) throw InvalidArgument("ParamsUECM: beta must be finite");
    if (b < lowest) {
      second = lowest;
      lowest = b;
    } else if (b < second) {
      second = b;
    }
  }
  // Only pair sums enter the model; a single negative entry is fine.
  if (!(lowest + second > 0.0))
    throw InvalidArgument("ParamsUECM: beta_i + beta_j must be > 0 for every pair");
}

double DegreeSequence::total() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

double StrengthSequence::total() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

void EdgeList::validate() const {
  if (bipartite && bipartite->plus + bipartite->minus != n_nodes)
    throw InvalidArgument("EdgeList: bipartite sizes do not sum to n_nodes");
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.src >= n_nodes || e.dst >= n_nodes)
      throw InvalidArgument("EdgeList: node id out of range");
    if (e.src == e.dst) throw InvalidArgument("EdgeList: self-loop");
    if (!directed && e.src > e.dst)
      throw InvalidArgument("EdgeList: undirected edge not stored with src < dst");
    if (e.weight < 1) throw InvalidArgument("EdgeList: weight must be >= 1");
    pairs.emplace_back(e.src, e.dst);
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
    throw InvalidArgument("EdgeList: duplicate pair");
}

void EdgeList::sort() {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
}

}  // namespace fastcm
