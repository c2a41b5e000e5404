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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "netcap/errors.hpp"
#include "netcap/stats.hpp"

using namespace netcap;

namespace {

NetworkConfig default_config(double power = 1.0, double sigma2 = 1.0) {
  return NetworkConfig(AlphaSequence::exponential(0.5), sigma2, power);
}

}  // namespace

TEST_SUITE_BEGIN("channel");

TEST_CASE("snr is power over noise variance") {
  const NetworkConfig config(AlphaSequence::exponential(0.5), 0.25, 10.0);
  CHECK(config.snr() == 40.0);
  CHECK_THROWS_AS(NetworkConfig(AlphaSequence::exponential(0.5), 0.0, 1.0),
                  ModelError);
  CHECK_THROWS_AS(NetworkConfig(AlphaSequence::exponential(0.5), 1.0, -1.0),
                  ModelError);
}

TEST_CASE("interferer count follows the truncation policy") {
  CHECK(default_config().interferer_count() == 20);
  const NetworkConfig fixed(AlphaSequence::exponential(0.5), 1.0, 1.0,
                            Truncation::count(7));
  CHECK(fixed.interferer_count() == 7);
  CHECK(default_config(0.0).interferer_count() == 0);
}

TEST_CASE("noise-only channel") {
  const NetworkConfig config = default_config(0.0);
  Rng rng(1);
  const InputDistribution dist = InputDistribution::silent();
  const int n = 200000;
  double power_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const ChannelSample s = sample_channel(config, dist, rng);
    REQUIRE(s.conditional_variance == 1.0);
    power_sum += std::norm(s.y);
  }
  const double mean_power = power_sum / n;
  // |Y|^2 is Exp(1): the sample mean has sd 1/sqrt(n).
  CHECK(std::abs(mean_power - 1.0) < 4.0 / std::sqrt(n));
}

TEST_CASE("conditional variance for a single direct input") {
  const NetworkConfig config(AlphaSequence::exponential(0.5), 1.0, 9.0,
                             Truncation::count(0));
  Rng rng(2);
  InputDraw inputs;
  inputs.direct = {3.0, 0.0};
  const ChannelSample s = sample_channel(config, inputs, rng);
  CHECK(s.conditional_variance == doctest::Approx(10.0).epsilon(1e-15));
}

TEST_CASE("conditional variance accumulates the truncated interferer sum") {
  const NetworkConfig config(AlphaSequence::exponential(0.5), 1.0, 1.0,
                             Truncation::count(20));
  Rng rng(3);
  InputDraw inputs;
  inputs.direct = {1.0, 0.0};
  inputs.interferers.assign(20, {1.0, 0.0});
  const ChannelSample s = sample_channel(config, inputs, rng);
  double expected = 1.0 + 1.0;  // sigma2 + direct
  for (int ell = 1; ell <= 20; ++ell) expected += std::pow(0.5, ell);
  CHECK(s.conditional_variance == doctest::Approx(expected).epsilon(1e-15));
  CHECK(expected == doctest::Approx(3.0 - std::pow(0.5, 20)).epsilon(1e-12));
}

TEST_CASE("blocklength one reproduces the scalar sampler draw for draw") {
  const NetworkConfig config = default_config();
  const InputDistribution dist = InputDistribution::circular_gaussian(1.0);
  Rng rng_a(17);
  Rng rng_b(17);
  const ChannelSample direct = sample_channel(config, dist, rng_a);
  const std::vector<ChannelSample> block = multivariate_sample(config, dist, 1, rng_b);
  REQUIRE(block.size() == 1);
  CHECK(block[0].y == direct.y);
  CHECK(block[0].y_shifted == direct.y_shifted);
  CHECK(block[0].y_shifted_indep == direct.y_shifted_indep);
  CHECK(block[0].conditional_variance == direct.conditional_variance);
}

TEST_CASE("repeated blocks give equal conditional variances") {
  const NetworkConfig config = default_config();
  const InputDistribution dist =
      InputDistribution::circular_gaussian(2.0).with_block_mode(
          InputDistribution::BlockMode::kRepeated);
  Rng rng(4);
  const auto block = multivariate_sample(config, dist, 2, rng);
  REQUIRE(block.size() == 2);
  CHECK(block[0].conditional_variance ==
        doctest::Approx(block[1].conditional_variance).epsilon(1e-15));
}

TEST_CASE("iid blocks decorrelate the two outputs") {
  const NetworkConfig config = default_config(4.0);
  const InputDistribution dist = InputDistribution::circular_gaussian(4.0);
  Rng rng(5);
  const int n = 200000;
  std::complex<double> cross{0.0, 0.0};
  double p1 = 0.0;
  double p2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto block = multivariate_sample(config, dist, 2, rng);
    cross += block[0].y * std::conj(block[1].y);
    p1 += std::norm(block[0].y);
    p2 += std::norm(block[1].y);
  }
  const double denom = std::sqrt((p1 / n) * (p2 / n));
  CHECK(std::abs(cross) / n / denom < 4.0 / std::sqrt(n));
}

TEST_CASE("blocklength cap") {
  const NetworkConfig config = default_config();
  const InputDistribution dist = InputDistribution::circular_gaussian(1.0);
  Rng rng(6);
  CHECK_THROWS_AS(multivariate_sample(config, dist, 5, rng), ModelError);
  CHECK_THROWS_AS(multivariate_sample(config, dist, 0, rng), ModelError);
  CHECK(multivariate_sample(config, dist, 5, rng, 8).size() == 5);
}

TEST_CASE("circular symmetry of the output at fixed inputs") {
  const NetworkConfig config = default_config();
  const InputDistribution dist = InputDistribution::circular_gaussian(1.0);
  Rng rng(7);
  const InputDraw inputs = sample_inputs(dist, config.interferer_count(), rng);
  const int n = 30000;
  std::vector<double> plain(n), rotated(n);
  for (int i = 0; i < n; ++i) {
    plain[i] = sample_channel(config, inputs, rng).y.real();
    const double theta = 2.0 * std::numbers::pi * rng.uniform_co();
    const std::complex<double> rot{std::cos(theta), std::sin(theta)};
    rotated[i] = (sample_channel(config, inputs, rng).y * rot).real();
  }
  CHECK(ks_two_sample(plain, rotated).p_value > 0.01);
}

TEST_CASE("input law properties") {
  Rng rng(8);
  SUBCASE("silent") {
    const InputDistribution dist = InputDistribution::silent();
    for (int i = 0; i < 100; ++i) CHECK(dist.sample_symbol(rng) == std::complex<double>{});
  }
  SUBCASE("constant modulus") {
    const InputDistribution dist = InputDistribution::constant_modulus(4.0);
    std::vector<double> phases;
    for (int i = 0; i < 20000; ++i) {
      const auto x = dist.sample_symbol(rng);
      REQUIRE(std::abs(x) == doctest::Approx(2.0).epsilon(1e-12));
      double ph = std::arg(x);
      if (ph < 0) ph += 2.0 * std::numbers::pi;
      phases.push_back(ph);
    }
    CHECK(ks_uniform(phases, 0.0, 2.0 * std::numbers::pi).p_value > 0.01);
  }
  SUBCASE("on-off magnitudes and duty cycle") {
    const InputDistribution dist = InputDistribution::on_off(0.1, 10.0);
    const int n = 1000000;
    int active = 0;
    double power_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto x = dist.sample_symbol(rng);
      const double mag = std::abs(x);
      if (mag > 0.0) {
        ++active;
        REQUIRE(mag == doctest::Approx(10.0).epsilon(1e-12));
      }
      power_sum += std::norm(x);
    }
    // Mean power is P = 10; per-draw sd is sqrt(E|X|^4 - P^2) ~ 30.
    CHECK(std::abs(power_sum / n - 10.0) < 3.0 * 30.0 / std::sqrt(n));
    CHECK(std::abs(active / static_cast<double>(n) - 0.1) <
          4.0 * std::sqrt(0.1 * 0.9 / n));
  }
  SUBCASE("qam16 is normalized to its power") {
    const InputDistribution dist = InputDistribution::qam16(5.0);
    double energy = 0.0;
    for (std::size_t i = 0; i < dist.points().size(); ++i) {
      energy += dist.probs()[i] * std::norm(dist.points()[i]);
    }
    CHECK(energy == doctest::Approx(1.0).epsilon(1e-12));
    double mean_power = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) mean_power += std::norm(dist.sample_symbol(rng));
    CHECK(mean_power / n == doctest::Approx(5.0).epsilon(0.02));
  }
  SUBCASE("snr-adaptive duty cycle") {
    const InputDistribution dist = InputDistribution::on_off_snr_adaptive(1.0);
    CHECK(dist.at_snr(9.0).delta() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(dist.at_snr(0.0).delta() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("conditional variance vector matches the scalar formula") {
  const AlphaSequence alphas = AlphaSequence::exponential(0.5);
  const std::vector<std::complex<double>> direct{{1.0, 0.0}, {0.0, 2.0}};
  const std::vector<std::vector<std::complex<double>>> interferers{
      {{1.0, 0.0}, {1.0, 1.0}},
      {{0.0, 0.0}, {3.0, 0.0}},
  };
  const auto v = conditional_variance_vector(direct, interferers, alphas, 2.0);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == doctest::Approx(2.0 + 1.0 + 0.5 * 1.0 + 0.25 * 0.0).epsilon(1e-15));
  CHECK(v[1] == doctest::Approx(2.0 + 4.0 + 0.5 * 2.0 + 0.25 * 9.0).epsilon(1e-15));
}

TEST_SUITE_END();
