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

#ifndef FASTCM_IO_HPP_
#define FASTCM_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "types.hpp"

namespace fastcm {

struct ReadOptions {
  bool weighted = false;
  bool directed = false;
};

struct ReadResult {
  EdgeList edges;
  std::vector<std::string> warnings;
};

// Parses `src dst [weight]` lines separated by whitespace or commas. Lines
// starting with '#' are comments, except the directives written by
// write_edgelist (`# nodes=N`, `# directed`, `# weighted`,
// `# bipartite=P,M`). When every id is a non-negative integer the ids are
// used as-is; otherwise labels are mapped to dense ids in order of first
// appearance and kept in EdgeList::labels. Self-loops are dropped and
// repeated pairs merged (weights summed in weighted mode). Non-integer
// weights are rounded with a warning.
ReadResult read_edgelist(const std::filesystem::path& path, const ReadOptions& opts = {});
ReadResult parse_edgelist(const std::string& text, const ReadOptions& opts = {});

// Header directives, then `src<TAB>dst[<TAB>weight]` sorted by (src, dst).
void write_edgelist(const EdgeList& edges, const std::filesystem::path& path);
std::string format_edgelist(const EdgeList& edges);

// `node<TAB>label` for every node; no-op when the list has no labels.
void write_labels(const EdgeList& edges, const std::filesystem::path& path);

using Params = std::variant<ParamsUBCM, ParamsUECM>;

// Columnar text with header `node,alpha` or `node,alpha,beta`.
void write_params(const Params& params, const std::filesystem::path& path);
std::string format_params(const Params& params);
Params read_params(const std::filesystem::path& path);
Params parse_params(const std::string& text);

struct Targets {
  DegreeSequence degrees;
  std::optional<StrengthSequence> strengths;
};

// Columnar text with header `node,degree` or `node,degree,strength`.
Targets read_targets(const std::filesystem::path& path);
Targets parse_targets(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace fastcm

#endif  // FASTCM_IO_HPP_
