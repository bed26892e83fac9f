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

#ifndef FASTCM_INFERENCE_HPP_
#define FASTCM_INFERENCE_HPP_

#include <cstddef>
#include <vector>

#include "types.hpp"

namespace fastcm {

struct SolverOptions {
  std::size_t max_iterations = 10000;
  // Max-norm of |expected - target| / max(target, 1).
  double tolerance = 1e-8;
  // Initial step length of every Newton update, in (0, 1].
  double damping = 1.0;

  void validate() const;
};

struct FitReport {
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
  double wall_seconds = 0.0;
};

struct UbcmFit {
  ParamsUBCM params;
  FitReport report;
};

struct UecmFit {
  ParamsUECM params;
  FitReport report;
};

// Maximum-likelihood multipliers reproducing k in expectation. Nodes with
// k_i = 0 get alpha = +inf. Requires 0 <= k_i < N - 1 and at least two
// positive entries. Non-convergence is reported, not thrown.
UbcmFit solve_ubcm(const DegreeSequence& k, const SolverOptions& opts = {});

// Same for degrees and strengths jointly. Requires s_i >= k_i, and s_i = 0
// wherever k_i = 0. Isolated nodes get alpha = +inf and the largest fitted
// beta.
UecmFit solve_uecm(const DegreeSequence& k, const StrengthSequence& s,
                   const SolverOptions& opts = {});

// Direct O(N^2) sums of edge probabilities / expected weights.
std::vector<double> expected_degrees(const ParamsUBCM& params);
std::vector<double> expected_degrees(const ParamsUECM& params);
std::vector<double> expected_strengths(const ParamsUECM& params);

// max_i |got_i - want_i| / max(want_i, 1).
double max_relative_residual(const std::vector<double>& got, const std::vector<double>& want);

}  // namespace fastcm

#endif  // FASTCM_INFERENCE_HPP_
