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

#ifndef NETCAP_STATS_HPP_
#define NETCAP_STATS_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace netcap {

struct SummaryStats {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;  // sample variance (n-1)
  double stddev = 0.0;
  double se = 0.0;  // standard error of the mean
};

SummaryStats summarize(std::span<const double> values);

struct KsResult {
  double statistic;  // sup-norm CDF distance
  double p_value;    // asymptotic, with the small-sample refinement
  std::size_t n_effective;
};

// Kolmogorov tail Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_tail(double lambda);

// Two-sided two-sample Kolmogorov-Smirnov test.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// One-sample test against the uniform law on [lo, hi).
KsResult ks_uniform(std::vector<double> samples, double lo, double hi);

}  // namespace netcap

#endif  // NETCAP_STATS_HPP_
