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

#ifndef NETCAP_ETA_HPP_
#define NETCAP_ETA_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "netcap/alpha_sequence.hpp"
#include "netcap/rng.hpp"

namespace netcap {

// Interval that confines the conditional variance ratio eta^2 for every
// input vector: [min(1, a0/a1), max(a0/a1, 1/rho)]. The derivation record
// keeps the two raw ingredients.
struct EtaBounds {
  double eta_min2;
  double eta_max2;
  double alpha_ratio;  // a0 / a1
  double inv_rho;      // 1 / rho
};

// Ratio of the conditional output variances of the channel and its
// index-shifted companion, for given squared input magnitudes
// (input_power[l] = |x_l|^2, l = 0 the direct input):
//
//   (sum_l alpha_l     |x_l|^2 + sigma2)
//   ------------------------------------
//   (sum_l alpha_{l+1} |x_l|^2 + sigma2)
//
// The denominator is at least sigma2, so the ratio is always finite.
double eta_squared(std::span<const double> input_power,
                   const AlphaSequence& alphas, double sigma2);

EtaBounds eta_bounds(const AlphaSequence& alphas);

// Minimizer over x in [eta_min2, eta_max2] of x / (r^2 + x)^2. The map
// rises below x = r^2 and falls above it, so the minimum sits at one of
// the endpoints; ties resolve to eta_min2.
double eta_star2(double r, const EtaBounds& bounds);

// Brute-force certification of the eta^2 bounds: random input-magnitude
// vectors (sparse, dense and log-uniform extreme patterns) must never
// leave [eta_min2, eta_max2].
struct Lemma1Report {
  std::size_t trials = 0;
  double min_seen = 0.0;
  double max_seen = 0.0;
  std::size_t violations = 0;
  std::vector<double> worst_input;  // first offending vector, if any
};

Lemma1Report verify_eta_bounds(const AlphaSequence& alphas, double sigma2,
                               std::size_t trials, Rng& rng);

}  // namespace netcap

#endif  // NETCAP_ETA_HPP_
