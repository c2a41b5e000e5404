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

#ifndef NETCAP_CONFIG_HPP_
#define NETCAP_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netcap/channel.hpp"
#include "netcap/input_distribution.hpp"

namespace netcap {

enum class ExperimentMode { kBounds, kSimulate, kMiSweep, kVerify, kDistCheck };

std::string to_string(ExperimentMode mode);

// Flat `key = value` experiment description with dotted section prefixes
// and `#` comments. Unknown keys are errors; parse(serialize(c)) == c.
// The full key list is documented in the README.
struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::kBounds;

  // network.*
  AlphaModel alpha_model = AlphaModel::kExponential;
  double rho = 0.5;
  double beta = 2.0;
  std::vector<double> alphas;  // explicit model values
  double alpha0 = 1.0;
  double sigma2 = 1.0;
  double power = 1.0;
  double truncation_eps = 1e-6;
  std::optional<std::uint64_t> truncation_count;
  std::uint64_t seed = 0;

  // input.*
  InputDistribution::Family family = InputDistribution::Family::kCircularGaussian;
  double delta = 1.0;
  InputDistribution::DeltaRule delta_rule = InputDistribution::DeltaRule::kFixed;
  std::string constellation = "qam16";
  InputDistribution::BlockMode block_mode = InputDistribution::BlockMode::kIid;

  // sweep.*
  std::vector<double> sweep_snr_db;

  // estimator.*
  int n = 1;
  std::uint64_t outer_samples = 100'000;    // N
  std::uint64_t mixture_samples = 10'000;   // M
  double ci_cap = 0.05;
  int max_doublings = 3;

  // verify.* / check.*
  std::uint64_t lemma_trials = 1'000'000;
  std::uint64_t check_samples = 100'000;

  // output.*
  std::string out_csv;

  bool operator==(const ExperimentConfig&) const = default;

  // Materialized model objects.
  AlphaSequence alpha_sequence() const;
  NetworkConfig network() const;
  InputDistribution input() const;  // at the configured base power
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& config);

}  // namespace netcap

#endif  // NETCAP_CONFIG_HPP_
