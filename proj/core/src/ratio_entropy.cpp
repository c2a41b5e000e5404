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

#include "netcap/ratio_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "netcap/errors.hpp"

namespace netcap {

RatioLaw RatioLaw::constant(double eta2) {
  if (!(eta2 > 0.0) || !std::isfinite(eta2)) {
    throw ModelError("eta^2 must be positive and finite");
  }
  return RatioLaw(std::vector<double>{eta2});
}

RatioLaw RatioLaw::mixture(std::vector<double> eta2_draws) {
  if (eta2_draws.empty()) throw ModelError("ratio law needs at least one eta^2 draw");
  for (double e2 : eta2_draws) {
    if (!(e2 > 0.0) || !std::isfinite(e2)) {
      throw ModelError("every eta^2 draw must be positive and finite");
    }
  }
  return RatioLaw(std::move(eta2_draws));
}

double RatioLaw::pdf(double r) const {
  if (r <= 0.0) return 0.0;
  double acc = 0.0;
  for (double e2 : eta2_draws_) {
    const double d = r * r + e2;
    acc += e2 / (d * d);
  }
  return 2.0 * r * acc / static_cast<double>(eta2_draws_.size());
}

double RatioLaw::mean_eta() const {
  double acc = 0.0;
  for (double e2 : eta2_draws_) acc += std::sqrt(e2);
  return acc / static_cast<double>(eta2_draws_.size());
}

double RatioLaw::mean_log_eta2() const {
  double acc = 0.0;
  for (double e2 : eta2_draws_) acc += std::log(e2);
  return acc / static_cast<double>(eta2_draws_.size());
}

double ratio_pdf_conditional(double r, double eta2) {
  if (!(eta2 > 0.0)) throw ModelError("eta^2 must be positive");
  if (r <= 0.0) return 0.0;
  const double d = r * r + eta2;
  return 2.0 * eta2 * r / (d * d);
}

RatioLaw make_ratio_law(const std::function<double(Rng&)>& eta2_sampler,
                        std::size_t draws, Rng& rng) {
  if (draws < 1) throw ModelError("need at least one eta^2 draw");
  std::vector<double> e2(draws);
  for (auto& v : e2) v = eta2_sampler(rng);
  return RatioLaw::mixture(std::move(e2));
}

double ratio_pdf_marginal(double r, const std::function<double(Rng&)>& eta2_sampler,
                          std::size_t draws, Rng& rng) {
  return make_ratio_law(eta2_sampler, draws, rng).pdf(r);
}

double ratio_entropy(const RatioLaw& law, const QuadratureSpec& spec) {
  const auto integrand = [&law](double r) {
    const double f = law.pdf(r);
    if (f <= 0.0) return 0.0;
    return -f * std::log(f);
  };
  return integrate_semi_infinite_sq_checked(integrand, spec, "ratio entropy");
}

double ratio_mean(const RatioLaw& law) {
  return 0.5 * std::numbers::pi * law.mean_eta();
}

double ratio_mean(const std::function<double(Rng&)>& eta2_sampler,
                  std::size_t draws, Rng& rng) {
  return ratio_mean(make_ratio_law(eta2_sampler, draws, rng));
}

double ratio_log_mean(const RatioLaw& law, const QuadratureSpec& spec) {
  const auto integrand = [&law](double r) {
    const double f = law.pdf(r);
    if (f <= 0.0) return 0.0;
    return f * std::log(r);
  };
  return integrate_semi_infinite_sq_checked(integrand, spec, "ratio log-mean");
}

AppendixCase::AppendixCase(double e2, double s2) : eta2(e2), eta_star2(s2) {
  if (!(eta2 > 0.0) || !(eta_star2 > 0.0)) {
    throw ModelError("appendix case needs positive eta^2 and eta_star^2");
  }
  star_dominates = eta_star2 >= eta2;
  gamma = std::abs(eta_star2 - eta2);
}

namespace {

// (1/gamma) log(1 + gamma/c) with its gamma -> 0 limit 1/c. Small gamma
// goes through log1p, so there is no cancellation to dodge; the exact
// zero still short-circuits.
double log_slope(double gamma, double c) {
  if (gamma == 0.0) return 1.0 / c;
  return std::log1p(gamma / c) / gamma;
}

}  // namespace

AppendixIntegral appendix_integral(const AppendixCase& c,
                                   const QuadratureSpec& spec) {
  AppendixIntegral out;

  const double e2 = c.eta2;
  const double s2 = c.eta_star2;
  out.numeric = integrate_semi_infinite_checked(
      [e2, s2](double t) {
        const double d = t + e2;
        return std::log(t + s2) / (d * d);
      },
      spec, "integration-by-parts integral");

  if (c.star_dominates) {
    out.closed_form = std::log(e2 + c.gamma) / e2 + log_slope(c.gamma, e2);
    out.bound = (std::log(s2) + 1.0) / e2;
  } else {
    out.closed_form = std::log(s2) / (s2 + c.gamma) + log_slope(c.gamma, s2);
    out.bound = (std::log(s2) + e2 / s2) / e2;
  }
  return out;
}

double ratio_entropy_upper_bound(const EtaBounds& bounds) {
  const double s = bounds.eta_min2;
  return -std::log(2.0) - 0.5 * std::log(bounds.eta_min2) + std::log(s) +
         2.0 * bounds.eta_max2 / s;
}

}  // namespace netcap
