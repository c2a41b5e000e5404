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

#include "netcap/stats.hpp"

#include <algorithm>
#include <cmath>

#include "netcap/errors.hpp"

namespace netcap {

SummaryStats summarize(std::span<const double> values) {
  SummaryStats s;
  s.n = values.size();
  if (s.n == 0) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (double v : values) {
      const double d = v - s.mean;
      ss += d * d;
    }
    s.variance = ss / static_cast<double>(s.n - 1);
    s.stddev = std::sqrt(s.variance);
    s.se = s.stddev / std::sqrt(static_cast<double>(s.n));
  }
  return s;
}

double kolmogorov_tail(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    sign = -sign;
    if (term < 1e-14) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {

// Stephens' small-sample adjustment of the asymptotic tail.
double p_from_statistic(double d, double n_effective) {
  const double sq = std::sqrt(n_effective);
  const double lambda = (sq + 0.12 + 0.11 / sq) * d;
  return kolmogorov_tail(lambda);
}

}  // namespace

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw ModelError("KS test needs nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t ia = 0;
  std::size_t ib = 0;
  double d = 0.0;
  while (ia < a.size() && ib < b.size()) {
    const double x = std::min(a[ia], b[ib]);
    while (ia < a.size() && a[ia] <= x) ++ia;
    while (ib < b.size() && b[ib] <= x) ++ib;
    d = std::max(d, std::abs(static_cast<double>(ia) / na -
                             static_cast<double>(ib) / nb));
  }
  const double ne = na * nb / (na + nb);
  return {d, p_from_statistic(d, ne), static_cast<std::size_t>(ne)};
}

KsResult ks_uniform(std::vector<double> samples, double lo, double hi) {
  if (samples.empty()) throw ModelError("KS test needs nonempty samples");
  if (!(hi > lo)) throw ModelError("KS uniform reference needs hi > lo");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  const double width = hi - lo;
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = std::clamp((samples[i] - lo) / width, 0.0, 1.0);
    const double hi_step = static_cast<double>(i + 1) / n;
    const double lo_step = static_cast<double>(i) / n;
    d = std::max({d, hi_step - cdf, cdf - lo_step});
  }
  return {d, p_from_statistic(d, n), samples.size()};
}

}  // namespace netcap
