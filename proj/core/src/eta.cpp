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

#include "netcap/eta.hpp"

#include <algorithm>
#include <cmath>

#include "netcap/errors.hpp"

namespace netcap {

double eta_squared(std::span<const double> input_power,
                   const AlphaSequence& alphas, double sigma2) {
  if (!(sigma2 > 0.0)) throw ModelError("sigma2 must be positive");
  double num = sigma2;
  double den = sigma2;
  for (std::size_t ell = 0; ell < input_power.size(); ++ell) {
    num += alphas.value(ell) * input_power[ell];
    den += alphas.value(ell + 1) * input_power[ell];
  }
  return num / den;
}

EtaBounds eta_bounds(const AlphaSequence& alphas) {
  const double alpha_ratio = alphas.value(0) / alphas.value(1);
  const double inv_rho = 1.0 / alphas.rho();
  return EtaBounds{
      .eta_min2 = std::min(1.0, alpha_ratio),
      .eta_max2 = std::max(alpha_ratio, inv_rho),
      .alpha_ratio = alpha_ratio,
      .inv_rho = inv_rho,
  };
}

double eta_star2(double r, const EtaBounds& bounds) {
  const double r2 = r * r;
  const auto objective = [r2](double x) {
    const double d = r2 + x;
    return x / (d * d);
  };
  const double at_min = objective(bounds.eta_min2);
  const double at_max = objective(bounds.eta_max2);
  return at_min <= at_max ? bounds.eta_min2 : bounds.eta_max2;
}

Lemma1Report verify_eta_bounds(const AlphaSequence& alphas, double sigma2,
                               std::size_t trials, Rng& rng) {
  if (trials < 1) throw ModelError("trials must be at least 1");
  const EtaBounds bounds = eta_bounds(alphas);
  // Allow for rounding in the two accumulated sums.
  const double lo = bounds.eta_min2 * (1.0 - 1e-9);
  const double hi = bounds.eta_max2 * (1.0 + 1e-9);

  Lemma1Report report;
  report.trials = trials;
  report.min_seen = bounds.eta_max2;
  report.max_seen = bounds.eta_min2;

  std::vector<double> input;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng.next() % 32);
    input.assign(len, 0.0);

    // Magnitudes log-uniform over [1e-6, 1e6] probe the dominant-term
    // limits where the extremes live.
    const auto magnitude = [&rng]() {
      return std::pow(10.0, -6.0 + 12.0 * rng.uniform_co());
    };

    switch (rng.next() % 4) {
      case 0: {  // sparse: one to three spikes
        const std::size_t spikes = 1 + rng.next() % 3;
        for (std::size_t s = 0; s < spikes; ++s) {
          input[rng.next() % len] = magnitude();
        }
        break;
      }
      case 1:  // dense, comparable magnitudes
        for (auto& p : input) p = rng.uniform() * 4.0;
        break;
      case 2:  // dense, extreme spread
        for (auto& p : input) p = magnitude();
        break;
      default:  // dense with zero gaps
        for (auto& p : input) {
          p = (rng.next() % 2 == 0) ? 0.0 : magnitude();
        }
        break;
    }

    const double e2 = eta_squared(input, alphas, sigma2);
    report.min_seen = std::min(report.min_seen, e2);
    report.max_seen = std::max(report.max_seen, e2);
    if (e2 < lo || e2 > hi) {
      ++report.violations;
      if (report.worst_input.empty()) report.worst_input = input;
    }
  }
  return report;
}

}  // namespace netcap
