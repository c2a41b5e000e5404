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

#ifndef NETCAP_MI_ESTIMATOR_HPP_
#define NETCAP_MI_ESTIMATOR_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "netcap/capacity_bounds.hpp"
#include "netcap/channel.hpp"
#include "netcap/stats.hpp"

namespace netcap {

// Monte Carlo estimation of (1/n) I(X_1^n; Y_1^n). Conditioned on all
// inputs the outputs are independent circular Gaussians, so both the
// output law and the conditional output law are product-form Gaussian
// mixtures; each entropy is estimated as an empirical cross-entropy
// against a frozen M-component mixture density. That cross-entropy is
// upward-biased by O(1/M) where the mixture under-resolves the true law,
// so M is doubled until the estimate moves by less than the confidence
// half-width (the move is measured between the half and full component
// sets, which brackets the next doubling step).

struct MiParams {
  int n = 1;
  std::size_t outer = 100'000;   // N: outer Monte Carlo samples
  std::size_t mixture = 10'000;  // M: frozen mixture components (initial)
  double ci_cap_nats = 0.05;     // wider 95% CI => low-confidence flag
  int max_mixture_doublings = 3;
  int workers = 1;
  int blocklength_cap = kDefaultBlocklengthCap;
};

struct EntropyEstimate {
  double nats = 0.0;
  double se = 0.0;
  bool exact = false;  // degenerate mixture, analytic value
  std::size_t mixture_size = 0;
  bool converged = true;
};

struct MIEstimate {
  double mi_nats = 0.0;
  double se = 0.0;
  double ci_low = 0.0;   // 95% normal interval
  double ci_high = 0.0;
  EntropyEstimate output_entropy;
  EntropyEstimate conditional_entropy;
  int n = 1;
  std::size_t samples_outer = 0;
  double snr_db = 0.0;
  std::vector<CapacityBound> bound_refs;
  std::vector<std::string> flags;  // low_confidence, negative_mi, mixture_unconverged
};

// Frozen conditional-variance component sets for one estimate, drawn in a
// deterministic stream order: building with a doubled M reproduces the
// first M draws and appends fresh ones. Given the same root generator an
// estimate_mi call received, this returns exactly the component sets that
// estimate used, so an external evaluator (e.g. a quadrature oracle) can
// integrate against the same densities.
struct FrozenMixtures {
  std::vector<double> marginal;          // M x n variance vectors
  std::vector<double> conditional_base;  // M x n interferer-only + sigma2
  int n = 1;
};

FrozenMixtures mi_frozen_mixtures(const NetworkConfig& config,
                                  const InputDistribution& dist, int n,
                                  std::size_t m_marginal,
                                  std::size_t m_conditional, Rng estimate_rng);

// Entropy of an n-dimensional product-Gaussian mixture defined by a
// variance-vector sampler. Degenerate mixtures short-circuit to the exact
// Gaussian entropy.
EntropyEstimate estimate_entropy_mixture(
    const std::function<void(Rng&, std::span<double>)>& variance_sampler, int n,
    std::size_t outer, std::size_t mixture, Rng rng, int workers = 1,
    int max_doublings = 3);

MIEstimate estimate_mi(const NetworkConfig& config, const InputDistribution& dist,
                       const MiParams& params, Rng rng);

// MI estimates across an ascending SNR grid (dB). The input law's
// SNR-dependent parameters are resolved per point; every applicable
// SNR-independent bound is attached to each row.
std::vector<MIEstimate> saturation_profile(const NetworkConfig& config,
                                           const InputDistribution& dist,
                                           std::span<const double> snr_db,
                                           const MiParams& params, Rng rng);

// Distributional identity of the index-shifted channel under exponential
// decay: the shifted output must match sqrt(rho) Y + sqrt(1-rho) Z' in
// law. Certified by two-sample KS tests on modulus, real and imaginary
// parts; the identity is exact, so only Monte Carlo noise is tolerated.
struct BarIdentityReport {
  double rho = 0.0;
  std::size_t samples = 0;
  KsResult ks_abs;
  KsResult ks_real;
  KsResult ks_imag;
  double min_p = 0.0;
  bool pass = false;
  static constexpr double kPThreshold = 1e-3;
};

BarIdentityReport check_bar_identity(const NetworkConfig& config,
                                     const InputDistribution& dist,
                                     std::size_t samples, Rng rng);

}  // namespace netcap

#endif  // NETCAP_MI_ESTIMATOR_HPP_
