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

#ifndef FASTCM_RNG_HPP_
#define FASTCM_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace fastcm {

// Random stream identified by (seed, stream id). Two streams with the same
// pair produce identical draws on the same build; different stream ids give
// independent sequences for parallel ensemble members.
class RngStream {
 public:
  using result_type = std::mt19937_64::result_type;

  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  result_type operator()() { return engine_(); }
  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }

  // Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

// Largest value geometric_skip can return; stands in for "past every
// candidate" when q is tiny.
inline constexpr std::uint64_t kMaxSkip = std::uint64_t{1} << 62;

// Draws L >= 1 with P(L) = q (1 - q)^(L - 1). Requires 0 < q <= 1.
std::uint64_t geometric_skip(double q, RngStream& rng);

namespace detail {

inline std::uint64_t clamp_skip(double v) {
  if (!(v < static_cast<double>(kMaxSkip))) return kMaxSkip;
  return static_cast<std::uint64_t>(v);
}

// Unchecked geometric_skip; q in (0, 1].
inline std::uint64_t skip(double q, RngStream& rng) {
  if (q >= 1.0) return 1;
  return 1 + clamp_skip(std::floor(std::log(rng.uniform()) / std::log1p(-q)));
}

// Number of failures before the first success when the failure
// probability is exp(-b); b > 0.
inline std::uint64_t failures_exp(double b, RngStream& rng) {
  return clamp_skip(std::floor(-std::log(rng.uniform()) / b));
}

}  // namespace detail

}  // namespace fastcm

#endif  // FASTCM_RNG_HPP_
