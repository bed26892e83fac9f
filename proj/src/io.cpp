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

#include "io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "error.hpp"

namespace fastcm {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != ',') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void append_uint(std::string& out, std::uint64_t v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

struct RawEdge {
  std::string_view a, b;
  double weight;
  std::size_t line;
};

// Applies a `# key=value` directive; other comments are ignored.
void apply_directive(std::string_view comment, EdgeList& out, std::size_t& header_nodes,
                     std::size_t line) {
  const std::string_view body = trim(comment.substr(1));
  if (body == "directed") {
    out.directed = true;
  } else if (body == "weighted") {
    out.weighted = true;
  } else if (body.starts_with("nodes=")) {
    auto v = parse_uint(body.substr(6));
    if (!v) throw ParseError("bad nodes directive", line);
    header_nodes = *v;
  } else if (body.starts_with("bipartite=")) {
    auto parts = split_fields(body.substr(10));
    std::optional<std::uint64_t> p, m;
    if (parts.size() == 2) {
      p = parse_uint(parts[0]);
      m = parse_uint(parts[1]);
    }
    if (!p || !m) throw ParseError("bad bipartite directive", line);
    out.bipartite = BipartiteSizes{*p, *m};
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

ReadResult parse_edgelist(const std::string& text, const ReadOptions& opts) {
  ReadResult result;
  EdgeList& out = result.edges;
  out.directed = opts.directed;
  out.weighted = opts.weighted;
  std::size_t header_nodes = 0;
  std::vector<RawEdge> raw;

  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view line = trim(lines[ln]);
    if (line.empty()) continue;
    if (line.front() == '#') {
      apply_directive(line, out, header_nodes, ln + 1);
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() < 2 || fields.size() > 3)
      throw ParseError("expected `src dst [weight]`", ln + 1);
    double w = 1.0;
    if (fields.size() == 3) {
      auto parsed = parse_double(fields[2]);
      if (!parsed || std::isnan(*parsed) || std::isinf(*parsed))
        throw ParseError("malformed weight '" + std::string(fields[2]) + "'", ln + 1);
      if (*parsed < 0.0) throw ParseError("negative weight", ln + 1);
      w = *parsed;
    }
    raw.push_back({fields[0], fields[1], w, ln + 1});
  }

  const bool numeric = std::all_of(raw.begin(), raw.end(), [](const RawEdge& e) {
    return parse_uint(e.a).has_value() && parse_uint(e.b).has_value();
  });
  std::unordered_map<std::string_view, NodeId> label_ids;
  auto id_of = [&](std::string_view token, std::size_t line) -> NodeId {
    if (numeric) {
      const std::uint64_t v = *parse_uint(token);
      if (v >= std::numeric_limits<NodeId>::max()) throw ParseError("node id too large", line);
      return static_cast<NodeId>(v);
    }
    auto [it, inserted] = label_ids.try_emplace(token, static_cast<NodeId>(out.labels.size()));
    if (inserted) out.labels.emplace_back(token);
    return it->second;
  };

  std::size_t rounded = 0, dropped_zero = 0, self_loops = 0;
  std::map<std::pair<NodeId, NodeId>, Weight> merged;
  std::size_t max_id_plus_one = 0;
  for (const RawEdge& e : raw) {
    NodeId a = id_of(e.a, e.line);
    NodeId b = id_of(e.b, e.line);
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(a, b) + std::size_t{1});
    if (a == b) {
      ++self_loops;
      continue;
    }
    if (!out.directed && a > b) std::swap(a, b);
    Weight w = 1;
    if (out.weighted) {
      const double r = std::round(e.weight);
      if (r != e.weight) ++rounded;
      if (r < 1.0) {
        ++dropped_zero;
        continue;
      }
      w = static_cast<Weight>(r);
    }
    auto [it, inserted] = merged.try_emplace({a, b}, w);
    if (!inserted) {
      if (out.weighted) it->second += w;
    }
  }

  out.n_nodes = numeric ? std::max(header_nodes, max_id_plus_one) : out.labels.size();
  if (out.bipartite && out.bipartite->plus + out.bipartite->minus != out.n_nodes)
    throw ParseError("bipartite sizes do not match node count", 1);
  out.edges.reserve(merged.size());
  for (const auto& [pair, w] : merged) out.edges.push_back({pair.first, pair.second, w});

  if (rounded)
    result.warnings.push_back(std::to_string(rounded) + " non-integer weight(s) rounded");
  if (dropped_zero)
    result.warnings.push_back(std::to_string(dropped_zero) + " edge(s) with weight < 1 dropped");
  if (self_loops) result.warnings.push_back(std::to_string(self_loops) + " self-loop(s) dropped");
  return result;
}

ReadResult read_edgelist(const std::filesystem::path& path, const ReadOptions& opts) {
  return parse_edgelist(read_file(path), opts);
}

std::string format_edgelist(const EdgeList& edges) {
  EdgeList sorted = edges;
  sorted.sort();
  std::string text = "# nodes=" + std::to_string(sorted.n_nodes) + "\n";
  if (sorted.directed) text += "# directed\n";
  if (sorted.weighted) text += "# weighted\n";
  if (sorted.bipartite) {
    text += "# bipartite=" + std::to_string(sorted.bipartite->plus) + "," +
            std::to_string(sorted.bipartite->minus) + "\n";
  }
  text.reserve(text.size() + sorted.edges.size() * 16);
  for (const Edge& e : sorted.edges) {
    append_uint(text, e.src);
    text += '\t';
    append_uint(text, e.dst);
    if (sorted.weighted) {
      text += '\t';
      append_uint(text, e.weight);
    }
    text += '\n';
  }
  return text;
}

void write_edgelist(const EdgeList& edges, const std::filesystem::path& path) {
  write_file(path, format_edgelist(edges));
}

void write_labels(const EdgeList& edges, const std::filesystem::path& path) {
  if (edges.labels.empty()) return;
  std::string text = "node\tlabel\n";
  for (std::size_t i = 0; i < edges.labels.size(); ++i)
    text += std::to_string(i) + "\t" + edges.labels[i] + "\n";
  write_file(path, text);
}

std::string format_params(const Params& params) {
  std::string text;
  if (const auto* u = std::get_if<ParamsUBCM>(&params)) {
    text = "node,alpha\n";
    for (std::size_t i = 0; i < u->size(); ++i)
      text += std::to_string(i) + "," + format_double(u->alpha(i)) + "\n";
  } else {
    const auto& e = std::get<ParamsUECM>(params);
    text = "node,alpha,beta\n";
    for (std::size_t i = 0; i < e.size(); ++i) {
      text += std::to_string(i) + "," + format_double(e.alpha(i)) + "," +
              format_double(e.beta(i)) + "\n";
    }
  }
  return text;
}

void write_params(const Params& params, const std::filesystem::path& path) {
  write_file(path, format_params(params));
}

namespace {

// Reads `node,<c1>[,<c2>]` rows where node runs 0..N-1 in order.
std::vector<std::vector<double>> parse_columns(const std::string& text,
                                               const std::vector<std::string>& short_header,
                                               const std::vector<std::string>& long_header,
                                               const char* what) {
  const auto lines = split_lines(text);
  std::size_t ln = 0;
  while (ln < lines.size() && trim(lines[ln]).empty()) ++ln;
  if (ln == lines.size()) throw ParseError(std::string("empty ") + what + " file", 1);
  std::vector<std::string> header;
  for (auto f : split_fields(trim(lines[ln]))) header.emplace_back(f);
  std::size_t cols;
  if (header == short_header) {
    cols = 1;
  } else if (header == long_header) {
    cols = 2;
  } else {
    throw ParseError(std::string("unexpected ") + what + " header", ln + 1);
  }
  std::vector<std::vector<double>> columns(cols);
  for (++ln; ln < lines.size(); ++ln) {
    const std::string_view line = trim(lines[ln]);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (fields.size() != cols + 1) throw ParseError("wrong number of fields", ln + 1);
    auto node = parse_uint(fields[0]);
    if (!node || *node != columns[0].size())
      throw ParseError("node ids must run 0..N-1 in order", ln + 1);
    for (std::size_t c = 0; c < cols; ++c) {
      auto v = parse_double(fields[c + 1]);
      if (!v) throw ParseError("malformed number '" + std::string(fields[c + 1]) + "'", ln + 1);
      columns[c].push_back(*v);
    }
  }
  return columns;
}

}  // namespace

Params parse_params(const std::string& text) {
  auto cols = parse_columns(text, {"node", "alpha"}, {"node", "alpha", "beta"}, "parameter");
  try {
    if (cols.size() == 1) return ParamsUBCM(std::move(cols[0]));
    return ParamsUECM(std::move(cols[0]), std::move(cols[1]));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 1);
  }
}

Params read_params(const std::filesystem::path& path) { return parse_params(read_file(path)); }

Targets parse_targets(const std::string& text) {
  auto cols =
      parse_columns(text, {"node", "degree"}, {"node", "degree", "strength"}, "target");
  Targets t;
  t.degrees.values = std::move(cols[0]);
  if (cols.size() == 2) t.strengths = StrengthSequence{std::move(cols[1])};
  return t;
}

Targets read_targets(const std::filesystem::path& path) { return parse_targets(read_file(path)); }

}  // namespace fastcm
