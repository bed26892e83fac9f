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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "error.hpp"
#include "inference.hpp"
#include "model.hpp"
#include "samplers.hpp"
#include "support/stats.hpp"

namespace fastcm {
namespace {

using testing::binomial_z;
using testing::two_sample_z;

constexpr std::size_t kMaxWeightBin = 12;

// Per ordered pair (src * n + dst): inclusion counts and weight histogram
// (bins 1..kMaxWeightBin - 1, last bin is the tail).
struct PairStats {
  std::size_t n = 0;
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> hits;
  std::vector<std::vector<double>> weights;

  explicit PairStats(std::size_t nodes)
      : n(nodes), hits(nodes * nodes, 0), weights(nodes * nodes, std::vector<double>(kMaxWeightBin, 0.0)) {}

  void add(const EdgeList& e) {
    ++samples;
    for (const Edge& edge : e.edges) {
      const std::size_t idx = edge.src * n + edge.dst;
      ++hits[idx];
      weights[idx][std::min<std::size_t>(edge.weight, kMaxWeightBin) - 1] += 1.0;
    }
  }
};

PairStats collect(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                  const std::function<EdgeList(RngStream&)>& sampler) {
  PairStats stats(n);
  RngStream rng(seed, 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    EdgeList e = sampler(rng);
    stats.add(e);
  }
  return stats;
}

std::vector<double> random_alpha(std::size_t n, RngStream& rng, double lo, double hi) {
  std::vector<double> a(n);
  for (double& x : a) x = lo + (hi - lo) * rng.uniform();
  return a;
}

void expect_hygiene(const EdgeList& e) {
  EXPECT_NO_THROW(e.validate());
}

TEST(SampleUbcmBruteforce, SaturatedLimits) {
  RngStream rng(1, 0);
  EXPECT_TRUE(sample_ubcm_bruteforce(ParamsUBCM(std::vector<double>(10, 50.0)), rng).edges.empty());
  EXPECT_EQ(sample_ubcm_bruteforce(ParamsUBCM(std::vector<double>(10, -50.0)), rng).size(), 45u);
}

TEST(SampleUbcmBruteforce, PairFrequenciesMatchKernel) {
  RngStream prng(100, 0);
  const ParamsUBCM params(random_alpha(8, prng, -1.5, 1.5));
  const auto stats = collect(8, 100000, 1, [&](RngStream& r) { return sample_ubcm_bruteforce(params, r); });
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      EXPECT_LT(binomial_z(stats.hits[i * 8 + j], stats.samples,
                           ubcm_edge_prob(params.alpha(i), params.alpha(j))), 4.0);
}

TEST(SampleUbcmFast, MatchesBruteforceAndKernel) {
  RngStream prng(101, 0);
  const ParamsUBCM params(random_alpha(8, prng, -2.0, 2.0));
  const auto fast = collect(8, 100000, 2, [&](RngStream& r) { return sample_ubcm_fast(params, r); });
  const auto brute = collect(8, 100000, 3, [&](RngStream& r) { return sample_ubcm_bruteforce(params, r); });
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) {
      const std::size_t idx = i * 8 + j;
      EXPECT_LT(two_sample_z(fast.hits[idx], fast.samples, brute.hits[idx], brute.samples), 4.0);
      EXPECT_LT(binomial_z(fast.hits[idx], fast.samples,
                           ubcm_edge_prob(params.alpha(i), params.alpha(j))), 4.0);
    }
  }
}

TEST(SampleUbcmFast, HomogeneousIsErdosRenyi) {
  constexpr std::size_t n = 30;
  const double alpha = 0.6;
  const double p = ubcm_edge_prob(alpha, alpha);
  const ParamsUBCM params(std::vector<double>(n, alpha));
  const std::size_t pairs = n * (n - 1) / 2;
  RngStream rng(4, 0);
  constexpr int kSamples = 20000;
  std::vector<double> counts(pairs + 1, 0.0);
  for (int s = 0; s < kSamples; ++s) counts[sample_ubcm_fast(params, rng).size()] += 1.0;
  std::vector<double> probs(pairs + 1);
  for (std::size_t m = 0; m <= pairs; ++m) {
    probs[m] = std::exp(std::lgamma(pairs + 1.0) - std::lgamma(m + 1.0) -
                        std::lgamma(pairs - m + 1.0) + m * std::log(p) +
                        (pairs - m) * std::log1p(-p));
  }
  EXPECT_GT(testing::chi_square_fit(counts, probs).p_value, 1e-4);
}

TEST(SampleUbcmFast, CertainEdgesGiveCompleteGraph) {
  RngStream rng(5, 0);
  const auto e = sample_ubcm_fast(ParamsUBCM(std::vector<double>(12, -50.0)), rng);
  EXPECT_EQ(e.size(), 66u);
  expect_hygiene(e);
}

TEST(SampleUbcmFast, IsolatedSentinelNeverConnects) {
  std::vector<double> alpha(10, -1.0);
  alpha[3] = INFINITY;
  const ParamsUBCM params(alpha);
  RngStream rng(6, 0);
  for (int s = 0; s < 200; ++s) {
    for (const Edge& e : sample_ubcm_fast(params, rng).edges) {
      EXPECT_NE(e.src, 3u);
      EXPECT_NE(e.dst, 3u);
    }
  }
}

TEST(SampleUbcmFast, DeterministicAndClean) {
  RngStream prng(7, 0);
  const ParamsUBCM params(random_alpha(300, prng, -2.0, 3.0));
  RngStream a(9, 1), b(9, 1);
  const auto ea = sample_ubcm_fast(params, a);
  const auto eb = sample_ubcm_fast(params, b);
  EXPECT_EQ(ea, eb);
  expect_hygiene(ea);
}

TEST(SampleUecmBruteforce, LargeBetaGivesUnitWeights) {
  const ParamsUECM params(std::vector<double>(10, -30.0), std::vector<double>(10, 30.0));
  RngStream rng(8, 0);
  for (int s = 0; s < 50; ++s) {
    const auto e = sample_uecm_bruteforce(params, rng);
    for (const Edge& edge : e.edges) EXPECT_EQ(edge.weight, 1u);
    EXPECT_GT(e.size(), 0u);
  }
}

TEST(SampleUecmBruteforce, JointLawAndStrengths) {
  RngStream prng(102, 0);
  constexpr std::size_t n = 6;
  const ParamsUECM params(random_alpha(n, prng, -1.0, 1.0), random_alpha(n, prng, 0.1, 0.8));
  constexpr std::uint64_t kSamples = 100000;
  PairStats stats(n);
  std::vector<double> strength_sum(n, 0.0), strength_sq(n, 0.0);
  RngStream rng(10, 0);
  for (std::uint64_t s = 0; s < kSamples; ++s) {
    const auto e = sample_uecm_bruteforce(params, rng);
    stats.add(e);
    std::vector<double> st(n, 0.0);
    for (const Edge& edge : e.edges) {
      st[edge.src] += edge.weight;
      st[edge.dst] += edge.weight;
    }
    for (std::size_t i = 0; i < n; ++i) {
      strength_sum[i] += st[i];
      strength_sq[i] += st[i] * st[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double p = uecm_edge_prob(params.alpha(i), params.alpha(j), params.beta(i), params.beta(j));
      for (int w = 1; w <= 6; ++w) {
        const double pw = p * uecm_weight_pmf(w, params.beta(i), params.beta(j));
        EXPECT_LT(binomial_z(static_cast<std::uint64_t>(stats.weights[i * n + j][w - 1]), kSamples, pw), 4.0)
            << i << "," << j << " w=" << w;
      }
    }
  }
  const auto expected = expected_strengths(params);
  for (std::size_t i = 0; i < n; ++i) {
    const double mean = strength_sum[i] / kSamples;
    const double var = strength_sq[i] / kSamples - mean * mean;
    EXPECT_LT(std::abs(mean - expected[i]), 3.0 * std::sqrt(var / kSamples)) << "node " << i;
  }
}

TEST(SampleUecmFast, MatchesBruteforce) {
  RngStream prng(103, 0);
  constexpr std::size_t n = 8;
  const ParamsUECM params(random_alpha(n, prng, -1.5, 1.5), random_alpha(n, prng, 0.05, 1.5));
  const auto fast = collect(n, 100000, 11, [&](RngStream& r) { return sample_uecm_fast(params, r); });
  const auto brute = collect(n, 100000, 12, [&](RngStream& r) { return sample_uecm_bruteforce(params, r); });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t idx = i * n + j;
      EXPECT_LT(two_sample_z(fast.hits[idx], fast.samples, brute.hits[idx], brute.samples), 4.0);
      const auto chi = testing::chi_square_homogeneity(fast.weights[idx], brute.weights[idx]);
      EXPECT_GT(chi.p_value, 1e-4) << i << "," << j;
    }
  }
}

TEST(SampleUecmFast, NegativeBetaNodeMatchesBruteforce) {
  // One hub with beta < 0; every pair sum stays positive.
  RngStream prng(104, 0);
  constexpr std::size_t n = 6;
  auto beta = random_alpha(n, prng, 0.2, 1.0);
  beta[2] = -0.15;
  const ParamsUECM params(random_alpha(n, prng, -1.0, 1.0), beta);
  const auto fast = collect(n, 100000, 14, [&](RngStream& r) { return sample_uecm_fast(params, r); });
  const auto brute = collect(n, 100000, 15, [&](RngStream& r) { return sample_uecm_bruteforce(params, r); });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t idx = i * n + j;
      EXPECT_LT(two_sample_z(fast.hits[idx], fast.samples, brute.hits[idx], brute.samples), 4.0);
      const auto chi = testing::chi_square_homogeneity(fast.weights[idx], brute.weights[idx]);
      EXPECT_GT(chi.p_value, 1e-4) << i << "," << j;
    }
  }
}

TEST(SampleUecmFast, HomogeneousParametersUseTightBound) {
  // With identical nodes beta_min equals every pair's beta sum, so the
  // proposal equals the edge probability and the output is an
  // Erdos-Renyi graph with geometric weights.
  constexpr std::size_t n = 40;
  const ParamsUECM params(std::vector<double>(n, 0.8), std::vector<double>(n, 0.4));
  const double p = uecm_edge_prob(0.8, 0.8, 0.4, 0.4);
  RngStream rng(13, 0);
  double edges = 0.0;
  constexpr int kSamples = 5000;
  for (int s = 0; s < kSamples; ++s) edges += static_cast<double>(sample_uecm_fast(params, rng).size());
  const double pairs = n * (n - 1) / 2.0;
  const double sd = std::sqrt(pairs * p * (1 - p) / kSamples);
  EXPECT_LT(std::abs(edges / kSamples - pairs * p), 4 * sd);
}

TEST(SampleUecmFast, UnitStrengthTargetsGiveUnitWeights) {
  const DegreeSequence k{{1.0, 2.0, 1.5, 2.5, 3.0, 1.0, 2.0}};
  const StrengthSequence s{k.values};
  const auto wfit = solve_uecm(k, s);
  ASSERT_TRUE(wfit.report.converged);
  const auto bfit = solve_ubcm(k);
  ASSERT_TRUE(bfit.report.converged);
  constexpr std::size_t n = 7;
  PairStats weighted(n), binary(n);
  RngStream r1(14, 0), r2(15, 0);
  for (int t = 0; t < 50000; ++t) {
    const auto e = sample_uecm_fast(wfit.params, r1);
    for (const Edge& edge : e.edges) ASSERT_EQ(edge.weight, 1u);
    weighted.add(e);
    binary.add(sample_ubcm_fast(bfit.params, r2));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      EXPECT_LT(two_sample_z(weighted.hits[i * n + j], weighted.samples, binary.hits[i * n + j],
                             binary.samples), 4.0);
}

TEST(SampleUecmFast, DeterministicAndClean) {
  RngStream prng(16, 0);
  const ParamsUECM params(random_alpha(400, prng, -1.0, 4.0), random_alpha(400, prng, 0.01, 2.0));
  RngStream a(3, 3), b(3, 3);
  const auto ea = sample_uecm_fast(params, a);
  EXPECT_EQ(ea, sample_uecm_fast(params, b));
  expect_hygiene(ea);
  EXPECT_GT(ea.size(), 0u);
}

TEST(BetaSuffixMin, Definition) {
  const ParamsUECM params({0, 0, 0, 0, 0}, {0.5, 0.2, 0.9, 0.3, 0.7});
  const std::vector<NodeId> order{4, 2, 0, 1, 3};
  const auto m = beta_suffix_min(params, order);
  ASSERT_EQ(m.size(), 6u);
  EXPECT_DOUBLE_EQ(m[0], 0.2);
  EXPECT_DOUBLE_EQ(m[2], 0.2);
  EXPECT_DOUBLE_EQ(m[3], 0.2);
  EXPECT_DOUBLE_EQ(m[4], 0.3);
  EXPECT_TRUE(std::isinf(m[5]));
}

TEST(SortNodes, AscendingKeyThenId) {
  const auto s = sort_nodes(ParamsUECM({0.5, 0.1, 0.3, 0.0}, {0.1, 0.3, 0.1, 0.4}));
  EXPECT_EQ(s.order, (std::vector<NodeId>{1, 2, 3, 0}));
}

TEST(SampleChungLuMh, ClampsHubPairs) {
  // 20 * 20 / (2M) > 1 for the two hubs.
  DegreeSequence k{{20, 20, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}};
  RngStream rng(20, 0);
  for (int s = 0; s < 500; ++s) {
    const auto e = sample_chunglu_mh(k, rng);
    expect_hygiene(e);
    bool hub_pair = false;
    for (const Edge& edge : e.edges) hub_pair |= edge.src == 0 && edge.dst == 1;
    EXPECT_TRUE(hub_pair);
  }
}

TEST(SampleChungLuMh, PairFrequenciesMatchClampedRate) {
  const DegreeSequence k{{6.0, 5.0, 3.5, 3.0, 2.0, 1.5, 1.0, 0.5}};
  const double m = k.total() / 2.0;
  const auto stats = collect(8, 100000, 21, [&](RngStream& r) { return sample_chunglu_mh(k, r); });
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      EXPECT_LT(binomial_z(stats.hits[i * 8 + j], stats.samples,
                           std::min(1.0, chung_lu_rate(k.values[i], k.values[j], m))), 4.0);
}

TEST(SampleChungLuMh, EqualDegreesAreErdosRenyi) {
  constexpr std::size_t n = 50;
  const DegreeSequence k{std::vector<double>(n, 10.0)};
  const double p = 10.0 * 10.0 / (10.0 * n);
  RngStream rng(22, 0);
  double edges = 0.0;
  constexpr int kSamples = 4000;
  for (int s = 0; s < kSamples; ++s) edges += static_cast<double>(sample_chunglu_mh(k, rng).size());
  const double pairs = n * (n - 1) / 2.0;
  EXPECT_LT(std::abs(edges / kSamples - pairs * p), 4 * std::sqrt(pairs * p * (1 - p) / kSamples));
}

TEST(SampleChungLuStub, TwoNodeWeightsArePoisson) {
  const DegreeSequence k{{1.0, 1.0}};
  const StrengthSequence s{{2.0, 2.0}};
  RngStream rng(23, 0);
  constexpr int kSamples = 100000;
  // Every draw lands on the only pair, so its weight is C ~ Poisson(2);
  // bin 0 is "no edge".
  std::vector<double> counts(16, 0.0);
  for (int t = 0; t < kSamples; ++t) {
    const auto e = sample_chunglu_stub(k, s, rng);
    ASSERT_LE(e.size(), 1u);
    const std::size_t w = e.size() == 0 ? 0 : e.edges[0].weight;
    counts[std::min<std::size_t>(w, 15)] += 1.0;
  }
  std::vector<double> probs(16);
  double used = 0.0;
  for (int w = 0; w < 15; ++w) {
    probs[w] = std::exp(-2.0 + w * std::log(2.0) - std::lgamma(w + 1.0));
    used += probs[w];
  }
  probs[15] = 1.0 - used;
  EXPECT_GT(testing::chi_square_fit(counts, probs).p_value, 1e-4);
}

TEST(SampleChungLuStub, RejectsZeroTotal) {
  RngStream rng(24, 0);
  EXPECT_THROW(sample_chunglu_stub({{0, 0, 0}}, {{0, 0, 0}}, rng), InvalidArgument);
}

TEST(SampleChungLuStub, UniformStrengthsSpreadEvenly) {
  constexpr std::size_t n = 20;
  const DegreeSequence k{std::vector<double>(n, 3.0)};
  const StrengthSequence s{std::vector<double>(n, 6.0)};
  RngStream rng(25, 0);
  constexpr int kSamples = 10000;
  std::vector<double> sum(n, 0.0), sq(n, 0.0);
  for (int t = 0; t < kSamples; ++t) {
    const auto e = sample_chunglu_stub(k, s, rng);
    expect_hygiene(e);
    std::vector<double> st(n, 0.0);
    for (const Edge& edge : e.edges) {
      st[edge.src] += edge.weight;
      st[edge.dst] += edge.weight;
    }
    for (std::size_t i = 0; i < n; ++i) {
      sum[i] += st[i];
      sq[i] += st[i] * st[i];
    }
  }
  const double target = 6.0 * n / n;
  for (std::size_t i = 0; i < n; ++i) {
    const double mean = sum[i] / kSamples;
    const double var = sq[i] / kSamples - mean * mean;
    EXPECT_LT(std::abs(mean - target), 3.0 * std::sqrt(var / kSamples)) << "node " << i;
  }
}

TEST(SampleBipartiteFast, EqualParametersGiveErdosRenyiBlock) {
  const ParamsUBCM plus(std::vector<double>(10, 0.2)), minus(std::vector<double>(15, 0.2));
  const double p = ubcm_edge_prob(0.2, 0.2);
  RngStream rng(30, 0);
  double edges = 0.0;
  constexpr int kSamples = 5000;
  for (int t = 0; t < kSamples; ++t) {
    const auto e = sample_bipartite_fast(plus, minus, rng);
    for (const Edge& edge : e.edges) {
      ASSERT_LT(edge.src, 10u);
      ASSERT_GE(edge.dst, 10u);
    }
    edges += static_cast<double>(e.size());
  }
  EXPECT_LT(std::abs(edges / kSamples - 150 * p), 4 * std::sqrt(150 * p * (1 - p) / kSamples));
}

TEST(SampleBipartiteFast, MatchesPairwiseOracleUbcm) {
  RngStream prng(104, 0);
  const ParamsUBCM plus(random_alpha(4, prng, -1.5, 1.5)), minus(random_alpha(4, prng, -1.5, 1.5));
  const auto stats = collect(8, 100000, 31, [&](RngStream& r) { return sample_bipartite_fast(plus, minus, r); });
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_LT(binomial_z(stats.hits[i * 8 + 4 + j], stats.samples,
                           ubcm_edge_prob(plus.alpha(i), minus.alpha(j))), 4.0);
}

TEST(SampleBipartiteFast, MatchesPairwiseOracleUecm) {
  RngStream prng(105, 0);
  const ParamsUECM plus(random_alpha(4, prng, -1.0, 1.0), random_alpha(4, prng, 0.05, 1.0));
  const ParamsUECM minus(random_alpha(4, prng, -1.0, 1.0), random_alpha(4, prng, 0.05, 1.0));
  const auto stats = collect(8, 100000, 32, [&](RngStream& r) { return sample_bipartite_fast(plus, minus, r); });
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double p = uecm_edge_prob(plus.alpha(i), minus.alpha(j), plus.beta(i), minus.beta(j));
      const std::size_t idx = i * 8 + 4 + j;
      EXPECT_LT(binomial_z(stats.hits[idx], stats.samples, p), 4.0);
      std::vector<double> probs(kMaxWeightBin);
      double used = 0.0;
      for (std::size_t w = 1; w < kMaxWeightBin; ++w) {
        probs[w - 1] = uecm_weight_pmf(static_cast<long long>(w), plus.beta(i), minus.beta(j));
        used += probs[w - 1];
      }
      probs.back() = 1.0 - used;
      EXPECT_GT(testing::chi_square_fit(stats.weights[idx], probs).p_value, 1e-4);
    }
  }
}

TEST(SampleBipartiteFast, RejectsNonPositiveCrossBeta) {
  // Each side is valid alone, but 0.5 + (-0.6) <= 0 across sides.
  const ParamsUECM plus({0.0, 0.0}, {0.5, 1.0});
  const ParamsUECM minus({0.0, 0.0}, {1.0, -0.6});
  RngStream rng(37, 0);
  EXPECT_THROW(sample_bipartite_fast(plus, minus, rng), InvalidArgument);
  EXPECT_THROW(sample_directed_fast(plus, minus, rng), InvalidArgument);
}

TEST(SampleBipartiteFast, SaturatedPlusNodeIsIsolated) {
  std::vector<double> a(5, -1.0);
  a[2] = 50.0;
  const ParamsUBCM plus(a), minus(std::vector<double>(6, -1.0));
  RngStream rng(33, 0);
  for (int t = 0; t < 1000; ++t)
    for (const Edge& e : sample_bipartite_fast(plus, minus, rng).edges) ASSERT_NE(e.src, 2u);
}

TEST(SampleDirectedFast, PairFrequenciesAndNoDiagonal) {
  RngStream prng(106, 0);
  constexpr std::size_t n = 6;
  const ParamsUBCM out(random_alpha(n, prng, -1.5, 1.5)), in(random_alpha(n, prng, -1.5, 1.5));
  const auto stats = collect(n, 100000, 34, [&](RngStream& r) {
    auto e = sample_directed_fast(out, in, r);
    EXPECT_TRUE(e.directed);
    return e;
  });
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(stats.hits[i * n + i], 0u);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      EXPECT_LT(binomial_z(stats.hits[i * n + j], stats.samples, ubcm_edge_prob(out.alpha(i), in.alpha(j))), 4.0);
    }
  }
}

TEST(SampleDirectedFast, SymmetricParamsBalanceInAndOut) {
  RngStream prng(107, 0);
  constexpr std::size_t n = 30;
  const auto a = random_alpha(n, prng, -1.0, 2.0);
  const ParamsUECM out(a, std::vector<double>(n, 0.5)), in(a, std::vector<double>(n, 0.5));
  RngStream rng(35, 0);
  std::vector<double> outdeg(n, 0.0), indeg(n, 0.0);
  constexpr int kSamples = 20000;
  for (int t = 0; t < kSamples; ++t) {
    const auto e = sample_directed_fast(out, in, rng);
    expect_hygiene(e);
    for (const Edge& edge : e.edges) {
      outdeg[edge.src] += 1;
      indeg[edge.dst] += 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    // Var(out - in) <= mean(out) + mean(in) per sample (sums of Bernoullis).
    const double se = std::sqrt((outdeg[i] + indeg[i]) / kSamples / kSamples);
    EXPECT_LT(std::abs(outdeg[i] - indeg[i]) / kSamples, 4 * se + 1e-12) << "node " << i;
  }
}

TEST(SampleDirectedFast, RejectsMismatchedSizes) {
  RngStream rng(36, 0);
  EXPECT_THROW(sample_directed_fast(ParamsUBCM({0, 0, 0}), ParamsUBCM({0, 0}), rng), InvalidArgument);
}

}  // namespace
}  // namespace fastcm
