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

#ifndef FASTCM_TYPES_HPP_
#define FASTCM_TYPES_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fastcm {

using NodeId = std::uint32_t;
using Weight = std::uint64_t;

// Per-node multipliers of the binary configuration model. An entry of +inf
// marks a node that can never connect (zero target degree).
class ParamsUBCM {
 public:
  explicit ParamsUBCM(std::vector<double> alpha);

  std::size_t size() const noexcept { return alpha_.size(); }
  std::span<const double> alpha() const noexcept { return alpha_; }
  double alpha(std::size_t i) const { return alpha_[i]; }

 private:
  std::vector<double> alpha_;
};

// Per-node (alpha, beta) pairs of the enhanced configuration model.
// beta is finite with beta_i + beta_j > 0 for every pair i != j.
class ParamsUECM {
 public:
  ParamsUECM(std::vector<double> alpha, std::vector<double> beta);

  std::size_t size() const noexcept { return alpha_.size(); }
  std::span<const double> alpha() const noexcept { return alpha_; }
  std::span<const double> beta() const noexcept { return beta_; }
  double alpha(std::size_t i) const { return alpha_[i]; }
  double beta(std::size_t i) const { return beta_[i]; }

 private:
  std::vector<double> alpha_;
  std::vector<double> beta_;
};

// Expected (real-valued) degrees.
struct DegreeSequence {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double total() const;
};

// Expected (real-valued) strengths.
struct StrengthSequence {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double total() const;
};

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  Weight weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct BipartiteSizes {
  std::size_t plus = 0;
  std::size_t minus = 0;

  friend bool operator==(const BipartiteSizes&, const BipartiteSizes&) = default;
};

// A sampled or loaded network. Undirected edges are stored once with
// src < dst. For bipartite output, ids [0, plus) form the + set and
// [plus, plus + minus) the - set.
struct EdgeList {
  std::size_t n_nodes = 0;
  bool directed = false;
  bool weighted = false;
  std::optional<BipartiteSizes> bipartite;
  std::vector<Edge> edges;
  // Original node labels (index = node id); empty when ids were numeric.
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return edges.size(); }

  // Throws InvalidArgument on out-of-range ids, self-loops, src >= dst for
  // undirected lists, duplicate pairs or zero weights.
  void validate() const;

  // Sorts edges by (src, dst).
  void sort();

  friend bool operator==(const EdgeList& a, const EdgeList& b) {
    return a.n_nodes == b.n_nodes && a.directed == b.directed &&
           a.weighted == b.weighted && a.bipartite == b.bipartite &&
           a.edges == b.edges;
  }
};

}  // namespace fastcm

#endif  // FASTCM_TYPES_HPP_
