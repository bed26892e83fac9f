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

#ifndef FASTCM_MODEL_HPP_
#define FASTCM_MODEL_HPP_

#include <cmath>

namespace fastcm {

// Expected number of edges between i and j in the Chung-Lu model,
// k_i k_j / 2M. Not clamped.
double chung_lu_rate(double k_i, double k_j, double m);

// exp(-a_i - a_j) / (1 + exp(-a_i - a_j)).
double ubcm_edge_prob(double alpha_i, double alpha_j);

// Probability that a pair is connected (with any weight >= 1) under the
// enhanced configuration model.
double uecm_edge_prob(double alpha_i, double alpha_j, double beta_i, double beta_j);

// P(w | edge exists) = y^(w-1) (1 - y), y = exp(-beta_i - beta_j).
double uecm_weight_pmf(long long w, double beta_i, double beta_j);

// uecm_edge_prob with exp(-beta_i - beta_j) in the denominator replaced by
// exp(-beta_min). Requires 0 < beta_min <= beta_i + beta_j.
double uecm_upper_bound_prob(double alpha_i, double alpha_j, double beta_i,
                             double beta_j, double beta_min);

// E[w_ij], counting absent edges as weight 0.
double uecm_expected_weight(double alpha_i, double alpha_j, double beta_i,
                            double beta_j);

namespace kernel {

// Unchecked building blocks shared by the samplers and the solver. Argument
// x is the summed exponent (alpha_i + alpha_j [+ beta_i + beta_j]).

inline double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
inline double softplus(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

inline double ubcm(double x) { return sigmoid(-x); }

// log(1 - exp(-b)) for b > 0.
inline double log_one_minus_exp_neg(double b) { return std::log(-std::expm1(-b)); }

// e^-x / (1 - e^-b + e^-x) = sigmoid(-x - log(1 - e^-b)).
inline double uecm(double x, double log_r) { return sigmoid(-x - log_r); }

}  // namespace kernel

}  // namespace fastcm

#endif  // FASTCM_MODEL_HPP_
