// Copyright 2026 netcap authors.
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

#ifndef NETCAP_CHANNEL_HPP_
#define NETCAP_CHANNEL_HPP_

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "netcap/alpha_sequence.hpp"
#include "netcap/input_distribution.hpp"
#include "netcap/rng.hpp"

namespace netcap {

// How the infinite interferer sum is cut off for simulation: either an
// explicit interferer count or a relative tail-variance tolerance
// (omitted variance <= eps * sigma2 at the configured power).
struct Truncation {
  enum class Mode { kCount, kTailEps };

  static Truncation count(std::size_t L) { return {Mode::kCount, L, 0.0}; }
  static Truncation tail_eps(double eps) { return {Mode::kTailEps, 0, eps}; }

  Mode mode = Mode::kTailEps;
  std::size_t explicit_count = 0;
  double eps = 1e-6;
};

// Full channel description: fading profile, noise and transmit power.
class NetworkConfig {
 public:
  NetworkConfig(AlphaSequence alphas, double sigma2, double power,
                Truncation truncation = {}, std::uint64_t seed = 0);

  const AlphaSequence& alphas() const noexcept { return alphas_; }
  double sigma2() const noexcept { return sigma2_; }
  double power() const noexcept { return power_; }
  double snr() const noexcept { return power_ / sigma2_; }
  const Truncation& truncation() const noexcept { return truncation_; }
  std::uint64_t seed() const noexcept { return seed_; }

  NetworkConfig with_power(double power) const;
  NetworkConfig with_seed(std::uint64_t seed) const;

  // Resolved interferer count under the truncation policy.
  std::size_t interferer_count() const;

 private:
  AlphaSequence alphas_;
  double sigma2_;
  double power_;
  Truncation truncation_;
  std::uint64_t seed_;
};

// Realized inputs for one channel use: the direct symbol plus the
// truncated interferer symbols.
struct InputDraw {
  std::complex<double> direct;
  std::vector<std::complex<double>> interferers;
};

// Joint draw of one channel use and its two companion channels:
//   y       = H0 x0 + sum_{l>=1} H_l x_l + Z
//   y_shift = sum_{l>=0} H_{l+1} x_l + Z          (same fading, same noise,
//                                                  indices moved up one)
//   y_indep = sum_{l>=0} G_{l+1} x_l + Z'         (fresh fading and noise
//                                                  on the shifted indices)
// conditional_variance is Var(y | all inputs) = sum alpha_l |x_l|^2 + sigma2.
struct ChannelSample {
  std::complex<double> y;
  std::complex<double> y_shifted;      // shared randomness
  std::complex<double> y_shifted_indep;  // independent randomness
  double conditional_variance;
  InputDraw inputs;
};

// Independent draws from the shared law Q for the direct node and L
// interferers.
InputDraw sample_inputs(const InputDistribution& dist, std::size_t interferers,
                        Rng& rng);

ChannelSample sample_channel(const NetworkConfig& config, const InputDraw& inputs,
                             Rng& rng);

// Convenience: draw inputs and a channel output in one go.
ChannelSample sample_channel(const NetworkConfig& config,
                             const InputDistribution& dist, Rng& rng);

// Blocklength cap for multivariate sampling; raise consciously if needed.
inline constexpr int kDefaultBlocklengthCap = 4;

// n consecutive channel uses. Each node contributes one n-block drawn
// from Q^n; fading and noise are i.i.d. across time.
std::vector<ChannelSample> multivariate_sample(const NetworkConfig& config,
                                               const InputDistribution& dist,
                                               int n, Rng& rng,
                                               int blocklength_cap = kDefaultBlocklengthCap);

// Var(Y_k | all inputs) for each time index of a block.
std::vector<double> conditional_variance_vector(
    std::span<const std::complex<double>> direct_block,
    std::span<const std::vector<std::complex<double>>> interferer_blocks,
    const AlphaSequence& alphas, double sigma2);

}  // namespace netcap

#endif  // NETCAP_CHANNEL_HPP_
