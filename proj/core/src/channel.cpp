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

#include "netcap/channel.hpp"

#include <cmath>

#include "netcap/errors.hpp"

namespace netcap {

NetworkConfig::NetworkConfig(AlphaSequence alphas, double sigma2, double power,
                             Truncation truncation, std::uint64_t seed)
    : alphas_(std::move(alphas)),
      sigma2_(sigma2),
      power_(power),
      truncation_(truncation),
      seed_(seed) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw ModelError("sigma2 must be positive and finite");
  }
  if (!(power >= 0.0) || !std::isfinite(power)) {
    throw ModelError("power must be nonnegative and finite");
  }
  if (truncation_.mode == Truncation::Mode::kTailEps && !(truncation_.eps > 0.0)) {
    throw ModelError("truncation eps must be positive");
  }
}

NetworkConfig NetworkConfig::with_power(double power) const {
  return NetworkConfig(alphas_, sigma2_, power, truncation_, seed_);
}

NetworkConfig NetworkConfig::with_seed(std::uint64_t seed) const {
  return NetworkConfig(alphas_, sigma2_, power_, truncation_, seed);
}

std::size_t NetworkConfig::interferer_count() const {
  if (truncation_.mode == Truncation::Mode::kCount) {
    return truncation_.explicit_count;
  }
  return truncation_length(alphas_, power_, sigma2_, truncation_.eps);
}

InputDraw sample_inputs(const InputDistribution& dist, std::size_t interferers,
                        Rng& rng) {
  InputDraw draw;
  draw.direct = dist.sample_symbol(rng);
  draw.interferers.resize(interferers);
  for (auto& symbol : draw.interferers) symbol = dist.sample_symbol(rng);
  return draw;
}

ChannelSample sample_channel(const NetworkConfig& config, const InputDraw& inputs,
                             Rng& rng) {
  const AlphaSequence& alphas = config.alphas();
  const double sigma2 = config.sigma2();
  const std::size_t L = inputs.interferers.size();

  ChannelSample out;
  out.inputs = inputs;

  // One shared fading draw per index 0..L+1; y uses H_0..H_L, the
  // shared-randomness shifted channel uses H_1..H_{L+1} on the same inputs.
  std::complex<double> y{0.0, 0.0};
  std::complex<double> y_shift{0.0, 0.0};
  double cond_var = sigma2;

  std::complex<double> h_next = rng.complex_normal(alphas.value(0));  // H_0
  for (std::size_t ell = 0; ell <= L; ++ell) {
    const std::complex<double> h = h_next;
    h_next = rng.complex_normal(alphas.value(ell + 1));  // H_{ell+1}
    const std::complex<double> x =
        ell == 0 ? inputs.direct : inputs.interferers[ell - 1];
    y += h * x;
    y_shift += h_next * x;
    cond_var += alphas.value(ell) * std::norm(x);
  }
  const std::complex<double> noise = rng.complex_normal(sigma2);
  out.y = y + noise;
  out.y_shifted = y_shift + noise;
  out.conditional_variance = cond_var;

  // Fully independent shifted channel: fresh fading on indices 1..L+1,
  // fresh noise.
  std::complex<double> y_indep{0.0, 0.0};
  for (std::size_t ell = 0; ell <= L; ++ell) {
    const std::complex<double> x =
        ell == 0 ? inputs.direct : inputs.interferers[ell - 1];
    y_indep += rng.complex_normal(alphas.value(ell + 1)) * x;
  }
  out.y_shifted_indep = y_indep + rng.complex_normal(sigma2);
  return out;
}

ChannelSample sample_channel(const NetworkConfig& config,
                             const InputDistribution& dist, Rng& rng) {
  const InputDraw inputs = sample_inputs(dist, config.interferer_count(), rng);
  return sample_channel(config, inputs, rng);
}

std::vector<ChannelSample> multivariate_sample(const NetworkConfig& config,
                                               const InputDistribution& dist,
                                               int n, Rng& rng,
                                               int blocklength_cap) {
  if (n < 1) throw ModelError("blocklength must be at least 1");
  if (n > blocklength_cap) {
    throw ModelError("blocklength " + std::to_string(n) +
                     " exceeds the configured cap of " +
                     std::to_string(blocklength_cap));
  }
  const std::size_t L = config.interferer_count();

  // Each node draws one n-block from the same law.
  std::vector<std::complex<double>> direct_block(n);
  dist.sample_block(direct_block, rng);
  std::vector<std::vector<std::complex<double>>> interferer_blocks(L);
  for (auto& block : interferer_blocks) {
    block.resize(n);
    dist.sample_block(block, rng);
  }

  std::vector<ChannelSample> samples;
  samples.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    InputDraw draw;
    draw.direct = direct_block[static_cast<std::size_t>(k)];
    draw.interferers.resize(L);
    for (std::size_t ell = 0; ell < L; ++ell) {
      draw.interferers[ell] = interferer_blocks[ell][static_cast<std::size_t>(k)];
    }
    samples.push_back(sample_channel(config, draw, rng));
  }
  return samples;
}

std::vector<double> conditional_variance_vector(
    std::span<const std::complex<double>> direct_block,
    std::span<const std::vector<std::complex<double>>> interferer_blocks,
    const AlphaSequence& alphas, double sigma2) {
  std::vector<double> variances(direct_block.size(), sigma2);
  for (std::size_t k = 0; k < direct_block.size(); ++k) {
    variances[k] += alphas.value(0) * std::norm(direct_block[k]);
    for (std::size_t ell = 0; ell < interferer_blocks.size(); ++ell) {
      variances[k] += alphas.value(ell + 1) * std::norm(interferer_blocks[ell][k]);
    }
  }
  return variances;
}

}  // namespace netcap
