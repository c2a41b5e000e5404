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

#ifndef NETCAP_RATIO_ENTROPY_HPP_
#define NETCAP_RATIO_ENTROPY_HPP_

#include <functional>
#include <span>
#include <vector>

#include "netcap/eta.hpp"
#include "netcap/quadrature.hpp"
#include "netcap/rng.hpp"

namespace netcap {

// Law of R = |Y / Y_shifted|, the modulus ratio of the channel output and
// its independently-faded index-shifted companion. Conditioned on the
// inputs R is a ratio of two independent Rayleigh variables and its
// density depends on the inputs only through the variance ratio eta^2:
//
//   f(r | eta^2) = 2 eta^2 r / (r^2 + eta^2)^2 .
//
// Marginally the density is the expectation of that kernel over eta^2. A
// RatioLaw holds either a constant eta^2 or a frozen finite set of eta^2
// draws, so the marginal is a genuine deterministic mixture and its
// normalization, entropy and moments are internally consistent.
class RatioLaw {
 public:
  static RatioLaw constant(double eta2);
  static RatioLaw mixture(std::vector<double> eta2_draws);

  double pdf(double r) const;

  bool is_constant() const noexcept { return eta2_draws_.size() == 1; }
  std::span<const double> eta2_values() const noexcept { return eta2_draws_; }

  // E[eta] and E[log eta^2] over the frozen draws.
  double mean_eta() const;
  double mean_log_eta2() const;

 private:
  explicit RatioLaw(std::vector<double> draws) : eta2_draws_(std::move(draws)) {}
  std::vector<double> eta2_draws_;
};

// Conditional Rayleigh-ratio density 2 eta^2 r / (r^2 + eta^2)^2.
double ratio_pdf_conditional(double r, double eta2);

// Mixture density from M fresh eta^2 draws; a constant sampler reproduces
// the conditional density exactly.
double ratio_pdf_marginal(double r, const std::function<double(Rng&)>& eta2_sampler,
                          std::size_t draws, Rng& rng);

// Frozen-law builder for evaluation sweeps.
RatioLaw make_ratio_law(const std::function<double(Rng&)>& eta2_sampler,
                        std::size_t draws, Rng& rng);

// Differential entropy h(R) = -int f log f dr by adaptive quadrature on
// the compactified domain. Throws QuadratureError when the estimate does
// not converge to the spec tolerance.
double ratio_entropy(const RatioLaw& law, const QuadratureSpec& spec = {.abs_tol = 1e-8});

// E[R]; evaluates to (pi/2) E[eta] in closed form.
double ratio_mean(const RatioLaw& law);
double ratio_mean(const std::function<double(Rng&)>& eta2_sampler,
                  std::size_t draws, Rng& rng);

// E[log R] by quadrature (for the circular-symmetry entropy decomposition
// checks; equals (1/2) E[log eta^2] for this law).
double ratio_log_mean(const RatioLaw& law, const QuadratureSpec& spec = {.abs_tol = 1e-8});

// One case of the integration-by-parts identity behind the entropy bound:
// the integral  int_0^inf log(t + eta_star2) / (t + eta2)^2 dt  evaluated
// three ways. `gamma` is |eta_star2 - eta2|; the closed form and the final
// relaxed bound depend on which of the two is larger.
struct AppendixCase {
  AppendixCase(double eta2, double eta_star2);

  double eta2;
  double eta_star2;
  double gamma;
  bool star_dominates;  // eta_star2 >= eta2
};

struct AppendixIntegral {
  double numeric;      // quadrature
  double closed_form;  // exact integrated-by-parts expression
  double bound;        // after log(1+b) <= b relaxation
};

AppendixIntegral appendix_integral(const AppendixCase& c,
                                   const QuadratureSpec& spec = {.abs_tol = 1e-10});

// Upper bound on h(R) valid for every input law whose eta^2 stays inside
// `bounds`:  -log 2 - (1/2) log eta_min2 + log s + 2 eta_max2 / s  at the
// conservative substitution s = eta_min2 (the maximizer of the two
// s-dependent terms over the admissible interval).
double ratio_entropy_upper_bound(const EtaBounds& bounds);

}  // namespace netcap

#endif  // NETCAP_RATIO_ENTROPY_HPP_
