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

#ifndef NETCAP_INPUT_DISTRIBUTION_HPP_
#define NETCAP_INPUT_DISTRIBUTION_HPP_

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "netcap/rng.hpp"

namespace netcap {

// Per-symbol input law shared by the transmitter and every interferer.
// Each family meets the average power constraint E|X|^2 = P exactly:
//   circular-gaussian : X ~ CN(0, P)
//   constant-modulus  : |X| = sqrt(P), uniform phase
//   constellation     : discrete points scaled so sum p_i |x_i|^2 = P
//   on-off            : 0 w.p. 1-delta, else amplitude sqrt(P/delta),
//                       uniform phase (peaky signaling)
//
// A delta rule makes the on-off duty cycle a function of the operating
// SNR, the standard way to let the input law track the SNR.
class InputDistribution {
 public:
  enum class Family { kCircularGaussian, kConstantModulus, kConstellation, kOnOff };
  enum class BlockMode { kIid, kRepeated };
  enum class DeltaRule { kFixed, kInverseOnePlusSnr };

  static InputDistribution circular_gaussian(double power);
  static InputDistribution constant_modulus(double power);
  static InputDistribution constellation(std::vector<std::complex<double>> points,
                                         std::vector<double> probs, double power);
  static InputDistribution qam16(double power);
  static InputDistribution on_off(double delta, double power);
  static InputDistribution on_off_snr_adaptive(double power);

  // Zero-power degenerate input (all symbols 0).
  static InputDistribution silent();

  Family family() const noexcept { return family_; }
  double power() const noexcept { return power_; }
  double delta() const noexcept { return delta_; }
  DeltaRule delta_rule() const noexcept { return delta_rule_; }
  BlockMode block_mode() const noexcept { return block_mode_; }
  const std::vector<std::complex<double>>& points() const noexcept { return points_; }
  const std::vector<double>& probs() const noexcept { return probs_; }

  InputDistribution with_power(double power) const;
  InputDistribution with_block_mode(BlockMode mode) const;

  // Resolves the SNR-dependent parameters (linear SNR, not dB).
  InputDistribution at_snr(double snr) const;

  std::complex<double> sample_symbol(Rng& rng) const;

  // One n-symbol block for a single node. kIid draws each symbol fresh;
  // kRepeated repeats one draw across the block (a fully correlated Q^n).
  void sample_block(std::span<std::complex<double>> out, Rng& rng) const;

  std::string family_name() const;

 private:
  InputDistribution() = default;

  Family family_ = Family::kCircularGaussian;
  double power_ = 1.0;
  double delta_ = 1.0;
  DeltaRule delta_rule_ = DeltaRule::kFixed;
  BlockMode block_mode_ = BlockMode::kIid;
  std::vector<std::complex<double>> points_;  // unit-power shape
  std::vector<double> probs_;
  std::vector<double> cdf_;
};

}  // namespace netcap

#endif  // NETCAP_INPUT_DISTRIBUTION_HPP_
