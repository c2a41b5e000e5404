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

#include "netcap/input_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "netcap/errors.hpp"

namespace netcap {

namespace {

void check_power(double power) {
  if (!(power >= 0.0) || !std::isfinite(power)) {
    throw ModelError("input power must be nonnegative and finite");
  }
}

}  // namespace

InputDistribution InputDistribution::circular_gaussian(double power) {
  check_power(power);
  InputDistribution d;
  d.family_ = Family::kCircularGaussian;
  d.power_ = power;
  return d;
}

InputDistribution InputDistribution::constant_modulus(double power) {
  check_power(power);
  InputDistribution d;
  d.family_ = Family::kConstantModulus;
  d.power_ = power;
  return d;
}

InputDistribution InputDistribution::constellation(
    std::vector<std::complex<double>> points, std::vector<double> probs,
    double power) {
  check_power(power);
  if (points.empty() || points.size() != probs.size()) {
    throw ModelError("constellation needs matching nonempty point/probability lists");
  }
  double psum = 0.0;
  double energy = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(probs[i] >= 0.0)) throw ModelError("constellation probabilities must be nonnegative");
    psum += probs[i];
    energy += probs[i] * std::norm(points[i]);
  }
  if (std::abs(psum - 1.0) > 1e-12) {
    throw ModelError("constellation probabilities must sum to 1");
  }
  if (!(energy > 0.0) && power > 0.0) {
    throw ModelError("constellation must carry energy to meet a positive power");
  }
  // Scale the shape to unit mean power; `power_` applies the rest.
  const double scale = energy > 0.0 ? 1.0 / std::sqrt(energy) : 1.0;
  for (auto& p : points) p *= scale;

  InputDistribution d;
  d.family_ = Family::kConstellation;
  d.power_ = power;
  d.points_ = std::move(points);
  d.probs_ = std::move(probs);
  d.cdf_.resize(d.probs_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < d.probs_.size(); ++i) {
    acc += d.probs_[i];
    d.cdf_[i] = acc;
  }
  d.cdf_.back() = 1.0;
  return d;
}

InputDistribution InputDistribution::qam16(double power) {
  std::vector<std::complex<double>> pts;
  pts.reserve(16);
  for (int re : {-3, -1, 1, 3}) {
    for (int im : {-3, -1, 1, 3}) {
      pts.emplace_back(static_cast<double>(re), static_cast<double>(im));
    }
  }
  return constellation(std::move(pts), std::vector<double>(16, 1.0 / 16.0), power);
}

InputDistribution InputDistribution::on_off(double delta, double power) {
  check_power(power);
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw ModelError("on-off delta must lie in (0,1], got " + std::to_string(delta));
  }
  InputDistribution d;
  d.family_ = Family::kOnOff;
  d.power_ = power;
  d.delta_ = delta;
  return d;
}

InputDistribution InputDistribution::on_off_snr_adaptive(double power) {
  InputDistribution d = on_off(1.0, power);
  d.delta_rule_ = DeltaRule::kInverseOnePlusSnr;
  return d;
}

InputDistribution InputDistribution::silent() { return circular_gaussian(0.0); }

InputDistribution InputDistribution::with_power(double power) const {
  check_power(power);
  InputDistribution d = *this;
  d.power_ = power;
  return d;
}

InputDistribution InputDistribution::with_block_mode(BlockMode mode) const {
  InputDistribution d = *this;
  d.block_mode_ = mode;
  return d;
}

InputDistribution InputDistribution::at_snr(double snr) const {
  InputDistribution d = *this;
  if (delta_rule_ == DeltaRule::kInverseOnePlusSnr) {
    d.delta_ = 1.0 / (1.0 + snr);
  }
  return d;
}

std::complex<double> InputDistribution::sample_symbol(Rng& rng) const {
  switch (family_) {
    case Family::kCircularGaussian:
      return rng.complex_normal(power_);
    case Family::kConstantModulus: {
      const double phase = 2.0 * std::numbers::pi * rng.uniform_co();
      const double amp = std::sqrt(power_);
      return {amp * std::cos(phase), amp * std::sin(phase)};
    }
    case Family::kConstellation: {
      const double u = rng.uniform_co();
      const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
      const std::size_t idx =
          std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()),
                                points_.size() - 1);
      return points_[idx] * std::sqrt(power_);
    }
    case Family::kOnOff: {
      const double u = rng.uniform_co();
      const double phase = 2.0 * std::numbers::pi * rng.uniform_co();
      if (u >= delta_) return {0.0, 0.0};
      const double amp = std::sqrt(power_ / delta_);
      return {amp * std::cos(phase), amp * std::sin(phase)};
    }
  }
  return {0.0, 0.0};
}

void InputDistribution::sample_block(std::span<std::complex<double>> out,
                                     Rng& rng) const {
  if (out.empty()) return;
  if (block_mode_ == BlockMode::kRepeated) {
    const auto symbol = sample_symbol(rng);
    std::fill(out.begin(), out.end(), symbol);
    return;
  }
  for (auto& symbol : out) symbol = sample_symbol(rng);
}

std::string InputDistribution::family_name() const {
  switch (family_) {
    case Family::kCircularGaussian: return "gaussian";
    case Family::kConstantModulus: return "constant-modulus";
    case Family::kConstellation: return "constellation";
    case Family::kOnOff: return "on-off";
  }
  return "unknown";
}

}  // namespace netcap
