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

#ifndef NETCAP_EXPERIMENT_HPP_
#define NETCAP_EXPERIMENT_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "netcap/capacity_bounds.hpp"
#include "netcap/config.hpp"
#include "netcap/mi_estimator.hpp"

namespace netcap {

// Exit codes shared by every mode.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitBoundViolation = 2;
inline constexpr int kExitVerifyFailure = 3;

struct BoundsReport {
  AlphaModel model;
  double rho;
  EtaBounds bounds;
  CapacityBound k_worst_case;
  CapacityBound proposition;
  std::optional<CapacityBound> geometric;
  std::optional<ExponentialBoundPair> exponential;
};

BoundsReport compute_bounds(const ExperimentConfig& config);
void write_bounds_text(const BoundsReport& report, std::ostream& out);
std::string bounds_csv(const BoundsReport& report);

struct SweepResult {
  std::vector<MIEstimate> rows;
  bool bound_violation = false;
};

// One MI estimate per sweep SNR; a row violates bound dominance when
// mi - 3 se exceeds any applicable bound. The dominance bounds repeat in
// every row on purpose: plotted against the rising SNR column they show
// the flat ceiling directly.
SweepResult run_mi_sweep(const ExperimentConfig& config, int workers);

// Exact column set, in order:
// snr_db,mi_nats,ci_low,ci_high,bound_proposition,bound_geometric,
// bound_exponential_proof,bound_exponential_stated,flags
std::string sweep_csv(const SweepResult& result);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

// Property suites over the variance-ratio analysis, the ratio-law
// integrals and the closed-form bounds, plus the shifted-channel
// distributional identity when the alpha model is exponential.
VerifyReport run_verify(const ExperimentConfig& config, int workers);

// Channel-level distributional checks: circular symmetry, the
// conditional-variance formula, truncation stability, and the
// shifted-channel identity.
VerifyReport run_dist_check(const ExperimentConfig& config, int workers);

// Line-oriented report: "CHECK <name> PASS|FAIL <measured> <tolerance>".
void write_verify_report(const VerifyReport& report, std::ostream& out);

// Raw channel-sample dump (one row per draw).
std::string simulate_csv(const ExperimentConfig& config);

}  // namespace netcap

#endif  // NETCAP_EXPERIMENT_HPP_
