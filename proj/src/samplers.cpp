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

#include "samplers.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "error.hpp"
#include "model.hpp"

namespace fastcm {

namespace {

// Relative slack allowed between p and q before the scan reports a broken
// bound; covers last-ulp differences of exp/log.
constexpr double kBoundSlack = 1e-12;

SortedNodeOrder sort_by_key(std::vector<double> key_by_node) {
  const std::size_t n = key_by_node.size();
  SortedNodeOrder out;
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), NodeId{0});
  std::sort(out.order.begin(), out.order.end(), [&](NodeId a, NodeId b) {
    return key_by_node[a] != key_by_node[b] ? key_by_node[a] < key_by_node[b] : a < b;
  });
  out.key.resize(n);
  for (std::size_t t = 0; t < n; ++t) out.key[t] = key_by_node[out.order[t]];
  return out;
}

struct UecmSide {
  SortedNodeOrder sorted;
  std::vector<double> beta;    // beta in sorted order
  std::vector<double> suffix;  // BetaSuffixMin, size n + 1
};

UecmSide make_uecm_side(const ParamsUECM& params) {
  UecmSide side{sort_nodes(params), {}, {}};
  side.beta.resize(params.size());
  for (std::size_t t = 0; t < params.size(); ++t)
    side.beta[t] = params.beta(side.sorted.order[t]);
  side.suffix = beta_suffix_min(params, side.sorted.order);
  return side;
}

// Visits candidates at sorted positions >= start. Each position is reached
// with the proposal q in force when the skip was drawn and accepted with
// p / q, so its net inclusion probability is p. Key sums are
// non-decreasing along the scan, which keeps p <= q.
template <class Emit>
void scan_ubcm(double key_focal, const SortedNodeOrder& cand, std::size_t start, double q,
               RngStream& rng, Emit&& emit) {
  const std::size_t n = cand.key.size();
  std::size_t cur = start;
  while (q > 0.0) {
    const std::uint64_t skip = detail::skip(q, rng);
    if (skip > n - cur) break;
    const std::size_t t = cur + static_cast<std::size_t>(skip) - 1;
    const double p = kernel::ubcm(key_focal + cand.key[t]);
    assert(p <= q * (1.0 + kBoundSlack));
    if (rng.uniform() * q < p) emit(t, Weight{1});
    q = p;
    cur = t + 1;
  }
}

// Same scan with the upper bound built from
// beta_min = beta_focal + min(beta over candidates >= start).
template <class Emit>
void scan_uecm(double key_focal, double beta_focal, const UecmSide& cand, std::size_t start,
               double first_key, RngStream& rng, Emit&& emit) {
  const std::size_t n = cand.sorted.key.size();
  if (start >= n) return;
  const double beta_min = beta_focal + cand.suffix[start];
  const double log_r_min = kernel::log_one_minus_exp_neg(beta_min);
  double q = kernel::uecm(key_focal + first_key, log_r_min);
  std::size_t cur = start;
  while (q > 0.0) {
    const std::uint64_t skip = detail::skip(q, rng);
    if (skip > n - cur) break;
    const std::size_t t = cur + static_cast<std::size_t>(skip) - 1;
    const double x = key_focal + cand.sorted.key[t];
    const double b = beta_focal + cand.beta[t];
    const double p = kernel::uecm(x, kernel::log_one_minus_exp_neg(b));
    if (p > q * (1.0 + kBoundSlack))
      throw ContractViolation("sample_uecm_fast: edge probability " + std::to_string(p) +
                              " exceeds proposal " + std::to_string(q));
    if (rng.uniform() * q < p) emit(t, 1 + detail::failures_exp(b, rng));
    q = kernel::uecm(x, log_r_min);
    cur = t + 1;
  }
}

Edge undirected_edge(NodeId a, NodeId b, Weight w) {
  return a < b ? Edge{a, b, w} : Edge{b, a, w};
}

void require_degrees(const DegreeSequence& k) {
  if (k.size() < 2) throw InvalidArgument("degree sequence needs at least 2 nodes");
  std::size_t positive = 0;
  for (double v : k.values) {
    if (!std::isfinite(v) || v < 0.0)
      throw InvalidArgument("degrees must be finite and non-negative");
    if (v > 0.0) ++positive;
  }
  if (positive < 2) throw InvalidArgument("degree sequence needs at least two positive entries");
}

template <class Params>
EdgeList bipartite_shell(const Params& plus, const Params& minus, bool weighted) {
  EdgeList out;
  out.n_nodes = plus.size() + minus.size();
  out.weighted = weighted;
  out.bipartite = BipartiteSizes{plus.size(), minus.size()};
  return out;
}

// Cross-set scans pair every beta of one side with every beta of the other.
void require_cross_beta(const ParamsUECM& a, const ParamsUECM& b) {
  const double lowest_a = *std::min_element(a.beta().begin(), a.beta().end());
  const double lowest_b = *std::min_element(b.beta().begin(), b.beta().end());
  if (!(lowest_a + lowest_b > 0.0))
    throw InvalidArgument("beta sums across the two parameter sets must be > 0");
}

void require_same_size(std::size_t out, std::size_t in) {
  if (out != in) throw InvalidArgument("out and in parameter vectors differ in length");
}

}  // namespace

SortedNodeOrder sort_nodes(const ParamsUBCM& params) {
  return sort_by_key({params.alpha().begin(), params.alpha().end()});
}

SortedNodeOrder sort_nodes(const ParamsUECM& params) {
  std::vector<double> key(params.size());
  for (std::size_t i = 0; i < key.size(); ++i) key[i] = params.alpha(i) + params.beta(i);
  return sort_by_key(std::move(key));
}

std::vector<double> beta_suffix_min(const ParamsUECM& params, std::span<const NodeId> order) {
  std::vector<double> suffix(order.size() + 1, std::numeric_limits<double>::infinity());
  for (std::size_t t = order.size(); t-- > 0;)
    suffix[t] = std::min(suffix[t + 1], params.beta(order[t]));
  return suffix;
}

EdgeList sample_ubcm_bruteforce(const ParamsUBCM& params, RngStream& rng) {
  EdgeList out;
  out.n_nodes = params.size();
  const auto alpha = params.alpha();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = i + 1; j < alpha.size(); ++j) {
      if (rng.uniform() < kernel::ubcm(alpha[i] + alpha[j]))
        out.edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), 1});
    }
  }
  return out;
}

EdgeList sample_uecm_bruteforce(const ParamsUECM& params, RngStream& rng) {
  EdgeList out;
  out.n_nodes = params.size();
  out.weighted = true;
  const auto alpha = params.alpha();
  const auto beta = params.beta();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = i + 1; j < alpha.size(); ++j) {
      const double b = beta[i] + beta[j];
      const double p = kernel::uecm(alpha[i] + alpha[j] + b, kernel::log_one_minus_exp_neg(b));
      if (rng.uniform() < p) {
        out.edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j),
                             1 + detail::failures_exp(b, rng)});
      }
    }
  }
  return out;
}

EdgeList sample_ubcm_fast(const ParamsUBCM& params, RngStream& rng) {
  EdgeList out;
  out.n_nodes = params.size();
  const SortedNodeOrder sorted = sort_nodes(params);
  const std::size_t n = sorted.order.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double key = sorted.key[i];
    const NodeId focal = sorted.order[i];
    // The (i, i) pair bounds every later candidate.
    scan_ubcm(key, sorted, i + 1, kernel::ubcm(key + key), rng, [&](std::size_t t, Weight w) {
      out.edges.push_back(undirected_edge(focal, sorted.order[t], w));
    });
  }
  return out;
}

EdgeList sample_uecm_fast(const ParamsUECM& params, RngStream& rng) {
  EdgeList out;
  out.n_nodes = params.size();
  out.weighted = true;
  const UecmSide side = make_uecm_side(params);
  const std::size_t n = side.sorted.order.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double key = side.sorted.key[i];
    const NodeId focal = side.sorted.order[i];
    scan_uecm(key, side.beta[i], side, i + 1, key, rng, [&](std::size_t t, Weight w) {
      out.edges.push_back(undirected_edge(focal, side.sorted.order[t], w));
    });
  }
  return out;
}

EdgeList sample_chunglu_mh(const DegreeSequence& k, RngStream& rng) {
  require_degrees(k);
  const double two_m = k.total();
  const std::size_t n = k.size();
  // Descending degree = ascending negated degree.
  std::vector<double> neg(n);
  for (std::size_t i = 0; i < n; ++i) neg[i] = -k.values[i];
  SortedNodeOrder sorted = sort_by_key(std::move(neg));

  EdgeList out;
  out.n_nodes = n;
  auto prob = [two_m](double a, double b) { return std::min(1.0, a * b / two_m); };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double kf = -sorted.key[i];
    if (kf <= 0.0) break;
    const NodeId focal = sorted.order[i];
    double q = prob(kf, -sorted.key[i + 1]);
    std::size_t cur = i + 1;
    while (q > 0.0) {
      const std::uint64_t skip = detail::skip(q, rng);
      if (skip > n - cur) break;
      const std::size_t t = cur + static_cast<std::size_t>(skip) - 1;
      const double p = prob(kf, -sorted.key[t]);
      if (rng.uniform() * q < p) out.edges.push_back(undirected_edge(focal, sorted.order[t], 1));
      q = p;
      cur = t + 1;
    }
  }
  return out;
}

EdgeList sample_chunglu_stub(const DegreeSequence& k, const StrengthSequence& s,
                             RngStream& rng) {
  if (k.size() != s.size()) throw InvalidArgument("degree and strength sequences differ in length");
  if (s.size() < 2) throw InvalidArgument("strength sequence needs at least 2 nodes");
  std::size_t positive = 0;
  for (double v : s.values) {
    if (!std::isfinite(v) || v < 0.0)
      throw InvalidArgument("strengths must be finite and non-negative");
    if (v > 0.0) ++positive;
  }
  const double total = s.total();
  if (!(total > 0.0)) throw InvalidArgument("sample_chunglu_stub: sum of strengths must be > 0");
  if (positive < 2)
    throw InvalidArgument("sample_chunglu_stub: need two nodes with positive strength");

  const auto draws = std::poisson_distribution<std::uint64_t>(total / 2.0)(rng);
  std::discrete_distribution<std::size_t> endpoint(s.values.begin(), s.values.end());
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(draws);
  for (std::uint64_t c = 0; c < draws; ++c) {
    std::size_t a, b;
    do {
      a = endpoint(rng);
      b = endpoint(rng);
    } while (a == b);
    pairs.emplace_back(static_cast<NodeId>(std::min(a, b)), static_cast<NodeId>(std::max(a, b)));
  }
  std::sort(pairs.begin(), pairs.end());

  EdgeList out;
  out.n_nodes = s.size();
  out.weighted = true;
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    out.edges.push_back({pairs[i].first, pairs[i].second, static_cast<Weight>(j - i)});
    i = j;
  }
  return out;
}

EdgeList sample_bipartite_fast(const ParamsUBCM& plus, const ParamsUBCM& minus, RngStream& rng) {
  EdgeList out = bipartite_shell(plus, minus, false);
  const SortedNodeOrder ps = sort_nodes(plus);
  const SortedNodeOrder ms = sort_nodes(minus);
  const auto offset = static_cast<NodeId>(plus.size());
  for (std::size_t i = 0; i < ps.order.size(); ++i) {
    const double key = ps.key[i];
    const NodeId focal = ps.order[i];
    scan_ubcm(key, ms, 0, kernel::ubcm(key + ms.key[0]), rng, [&](std::size_t t, Weight w) {
      out.edges.push_back({focal, offset + ms.order[t], w});
    });
  }
  return out;
}

EdgeList sample_bipartite_fast(const ParamsUECM& plus, const ParamsUECM& minus, RngStream& rng) {
  require_cross_beta(plus, minus);
  EdgeList out = bipartite_shell(plus, minus, true);
  const UecmSide ps = make_uecm_side(plus);
  const UecmSide ms = make_uecm_side(minus);
  const auto offset = static_cast<NodeId>(plus.size());
  for (std::size_t i = 0; i < ps.sorted.order.size(); ++i) {
    const NodeId focal = ps.sorted.order[i];
    scan_uecm(ps.sorted.key[i], ps.beta[i], ms, 0, ms.sorted.key[0], rng,
              [&](std::size_t t, Weight w) {
                out.edges.push_back({focal, offset + ms.sorted.order[t], w});
              });
  }
  return out;
}

EdgeList sample_directed_fast(const ParamsUBCM& out_params, const ParamsUBCM& in_params,
                              RngStream& rng) {
  require_same_size(out_params.size(), in_params.size());
  EdgeList out;
  out.n_nodes = out_params.size();
  out.directed = true;
  const SortedNodeOrder os = sort_nodes(out_params);
  const SortedNodeOrder is = sort_nodes(in_params);
  for (std::size_t i = 0; i < os.order.size(); ++i) {
    const double key = os.key[i];
    const NodeId src = os.order[i];
    scan_ubcm(key, is, 0, kernel::ubcm(key + is.key[0]), rng, [&](std::size_t t, Weight w) {
      if (is.order[t] != src) out.edges.push_back({src, is.order[t], w});
    });
  }
  return out;
}

EdgeList sample_directed_fast(const ParamsUECM& out_params, const ParamsUECM& in_params,
                              RngStream& rng) {
  require_same_size(out_params.size(), in_params.size());
  require_cross_beta(out_params, in_params);
  EdgeList out;
  out.n_nodes = out_params.size();
  out.directed = true;
  out.weighted = true;
  const UecmSide os = make_uecm_side(out_params);
  const UecmSide is = make_uecm_side(in_params);
  for (std::size_t i = 0; i < os.sorted.order.size(); ++i) {
    const NodeId src = os.sorted.order[i];
    scan_uecm(os.sorted.key[i], os.beta[i], is, 0, is.sorted.key[0], rng,
              [&](std::size_t t, Weight w) {
                if (is.sorted.order[t] != src) out.edges.push_back({src, is.sorted.order[t], w});
              });
  }
  return out;
}

}  // namespace fastcm
