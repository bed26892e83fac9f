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

#include "model.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace fastcm {

namespace {

void require_not_nan(double v, const char* what) {
  if (std::isnan(v)) throw InvalidArgument(std::string(what) + " is NaN");
}

// alpha may be +inf (isolated node) but never -inf.
void require_alpha(double a) {
  if (std::isnan(a) || a == -INFINITY)
    throw InvalidArgument("alpha must be finite or +inf");
}

double beta_sum(double beta_i, double beta_j) {
  if (!std::isfinite(beta_i) || !std::isfinite(beta_j))
    throw InvalidArgument("beta must be finite");
  const double b = beta_i + beta_j;
  if (!(b > 0.0)) throw InvalidArgument("beta_i + beta_j must be > 0");
  return b;
}

}  // namespace

double chung_lu_rate(double k_i, double k_j, double m) {
  if (!std::isfinite(k_i) || !std::isfinite(k_j) || !std::isfinite(m))
    throw InvalidArgument("chung_lu_rate: non-finite input");
  if (!(m > 0.0)) throw InvalidArgument("chung_lu_rate: M must be > 0");
  if (k_i < 0.0 || k_j < 0.0) throw InvalidArgument("chung_lu_rate: negative degree");
  return k_i * k_j / (2.0 * m);
}

double ubcm_edge_prob(double alpha_i, double alpha_j) {
  require_alpha(alpha_i);
  require_alpha(alpha_j);
  return kernel::ubcm(alpha_i + alpha_j);
}

double uecm_edge_prob(double alpha_i, double alpha_j, double beta_i, double beta_j) {
  require_alpha(alpha_i);
  require_alpha(alpha_j);
  const double b = beta_sum(beta_i, beta_j);
  return kernel::uecm(alpha_i + alpha_j + b, kernel::log_one_minus_exp_neg(b));
}

double uecm_weight_pmf(long long w, double beta_i, double beta_j) {
  if (w < 1) throw InvalidArgument("uecm_weight_pmf: w must be >= 1");
  const double b = beta_sum(beta_i, beta_j);
  // y^(w-1) (1 - y) evaluated in log space for large w.
  return std::exp(-b * static_cast<double>(w - 1)) * -std::expm1(-b);
}

double uecm_upper_bound_prob(double alpha_i, double alpha_j, double beta_i,
                             double beta_j, double beta_min) {
  require_alpha(alpha_i);
  require_alpha(alpha_j);
  require_not_nan(beta_min, "beta_min");
  const double b = beta_sum(beta_i, beta_j);
  if (!(beta_min > 0.0)) throw InvalidArgument("uecm_upper_bound_prob: beta_min must be > 0");
  if (beta_min > b)
    throw ContractViolation("uecm_upper_bound_prob: beta_min exceeds beta_i + beta_j");
  return kernel::uecm(alpha_i + alpha_j + b, kernel::log_one_minus_exp_neg(beta_min));
}

double uecm_expected_weight(double alpha_i, double alpha_j, double beta_i,
                            double beta_j) {
  const double p = uecm_edge_prob(alpha_i, alpha_j, beta_i, beta_j);
  return p / -std::expm1(-(beta_i + beta_j));
}

}  // namespace fastcm
