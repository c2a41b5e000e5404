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

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "netcap/errors.hpp"

using namespace netcap;

namespace {

// Test-side oracle: hand-rolled double-exponential trapezoid over (0,1),
// independent of the library quadrature path. The endpoint clustering
// absorbs the integrable log singularities of the entropy integrand.
double de_quad_unit(const std::function<double(double)>& f) {
  const double h = 1.0 / 64.0;
  const double half_pi = 0.5 * std::numbers::pi;
  double acc = 0.0;
  for (double t = -4.0; t <= 4.0; t += h) {
    const double s = std::sinh(t);
    const double u = 0.5 * (1.0 + std::tanh(half_pi * s));
    const double c = std::cosh(half_pi * s);
    const double w = half_pi * std::cosh(t) / (2.0 * c * c);
    if (u <= 0.0 || u >= 1.0 || w <= 0.0) continue;
    const double v = f(u) * w;
    if (std::isfinite(v)) acc += v;
  }
  return acc * h;
}

double entropy_oracle(const RatioLaw& law) {
  const auto g = [&law](double u) {
    const double om = 1.0 - u;
    const double r = std::sqrt(u / om);
    const double f = law.pdf(r);
    if (f <= 0.0) return 0.0;
    return -f * std::log(f) / (2.0 * r * om * om);
  };
  return de_quad_unit(g);
}

}  // namespace

TEST_SUITE_BEGIN("ratio_entropy");

TEST_CASE("conditional density values") {
  CHECK(ratio_pdf_conditional(0.0, 1.0) == 0.0);
  CHECK(ratio_pdf_conditional(-1.0, 1.0) == 0.0);
  CHECK(ratio_pdf_conditional(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(ratio_pdf_conditional(1.0, 0.0), ModelError);
}

TEST_CASE("normalization of the conditional density") {
  for (double e2 : {0.5, 1.0, 2.0}) {
    const RatioLaw law = RatioLaw::constant(e2);
    const double mass = integrate_semi_infinite_sq_checked(
        [&law](double r) { return law.pdf(r); }, {.abs_tol = 1e-9});
    CHECK(std::abs(mass - 1.0) < 1e-8);
  }
}

TEST_CASE("marginal density") {
  SUBCASE("constant sampler reduces to the conditional density") {
    Rng rng(1);
    const auto sampler = [](Rng&) { return 1.7; };
    for (double r : {0.1, 0.7, 2.0, 9.0}) {
      CHECK(ratio_pdf_marginal(r, sampler, 64, rng) ==
            doctest::Approx(ratio_pdf_conditional(r, 1.7)).epsilon(1e-15));
    }
  }
  SUBCASE("two-point mixture at r = 1") {
    const RatioLaw law = RatioLaw::mixture({1.0, 2.0});
    CHECK(law.pdf(1.0) == doctest::Approx(0.25 + 2.0 / 9.0).epsilon(1e-15));
  }
  SUBCASE("mixture mass is 1") {
    Rng rng(2);
    const auto sampler = [](Rng& r) { return 0.5 + 1.5 * r.uniform_co(); };
    const RatioLaw law = make_ratio_law(sampler, 10000, rng);
    const double mass = integrate_semi_infinite_sq_checked(
        [&law](double r) { return law.pdf(r); }, {.abs_tol = 1e-8});
    CHECK(std::abs(mass - 1.0) < 1e-6);
  }
}

TEST_CASE("entropy of the unit-ratio law") {
  const double h = ratio_entropy(RatioLaw::constant(1.0));
  const double closed = 2.0 - std::log(2.0);
  CHECK(h == doctest::Approx(closed).epsilon(1e-10));
  // Independent double-exponential oracle.
  CHECK(std::abs(h - entropy_oracle(RatioLaw::constant(1.0))) < 1e-9);
}

TEST_CASE("entropy scales by half the log of the variance ratio") {
  const double h1 = ratio_entropy(RatioLaw::constant(1.0));
  const double h4 = ratio_entropy(RatioLaw::constant(4.0));
  CHECK(h4 - h1 == doctest::Approx(0.5 * std::log(4.0)).epsilon(1e-6));
}

TEST_CASE("first integral identity") {
  for (double e2 : {0.5, 1.0, 2.0}) {
    const RatioLaw law = RatioLaw::constant(e2);
    const double value = integrate_semi_infinite_sq_checked(
        [&law](double r) {
          const double f = law.pdf(r);
          return f > 0.0 ? -f * std::log(2.0 * r) : 0.0;
        },
        {.abs_tol = 1e-9});
    CHECK(value == doctest::Approx(-std::log(2.0) - 0.5 * std::log(e2)).epsilon(1e-8));
  }
  // Mixture version by linearity.
  const RatioLaw mix = RatioLaw::mixture({0.5, 1.0, 2.0, 4.0});
  const double value = integrate_semi_infinite_sq_checked(
      [&mix](double r) {
        const double f = mix.pdf(r);
        return f > 0.0 ? -f * std::log(2.0 * r) : 0.0;
      },
      {.abs_tol = 1e-9});
  CHECK(value ==
        doctest::Approx(-std::log(2.0) - 0.5 * mix.mean_log_eta2()).epsilon(1e-8));
}

TEST_CASE("mean of the ratio") {
  CHECK(ratio_mean(RatioLaw::constant(1.0)) ==
        doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-15));
  CHECK(ratio_mean(RatioLaw::constant(16.0)) ==
        doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
  Rng rng(3);
  const auto sampler = [](Rng&) { return 4.0; };
  CHECK(ratio_mean(sampler, 32, rng) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  // Quadrature cross-check of E[R] for the unit law.
  const RatioLaw law = RatioLaw::constant(1.0);
  const double quad = integrate_semi_infinite_sq_checked(
      [&law](double r) { return r * law.pdf(r); }, {.abs_tol = 1e-8});
  CHECK(quad == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-7));
}

TEST_CASE("log-mean of the ratio") {
  for (double e2 : {0.5, 1.0, 3.0}) {
    CHECK(ratio_log_mean(RatioLaw::constant(e2)) ==
          doctest::Approx(0.5 * std::log(e2)).epsilon(1e-8));
  }
}

TEST_CASE("integration-by-parts cases") {
  SUBCASE("exact tie") {
    const AppendixCase c(1.0, 1.0);
    CHECK(c.gamma == 0.0);
    const AppendixIntegral result = appendix_integral(c);
    CHECK(result.closed_form == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(result.bound == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(result.numeric == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("minimizer above") {
    const AppendixIntegral result = appendix_integral(AppendixCase(1.0, 2.0));
    CHECK(result.closed_form == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(result.bound == doctest::Approx(std::log(2.0) + 1.0).epsilon(1e-12));
    CHECK(std::abs(result.numeric - result.closed_form) < 1e-8);
    CHECK(result.closed_form <= result.bound);
  }
  SUBCASE("minimizer below") {
    const AppendixIntegral result = appendix_integral(AppendixCase(2.0, 1.0));
    CHECK(result.closed_form == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(result.bound == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(result.numeric - result.closed_form) < 1e-8);
  }
  SUBCASE("grid contract") {
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        const double e2 = 0.3 * std::pow(10.0, i / 9.0);
        const double s2 = 0.3 * std::pow(10.0, j / 9.0);
        const AppendixIntegral result = appendix_integral(AppendixCase(e2, s2));
        REQUIRE(std::abs(result.numeric - result.closed_form) < 1e-8);
        REQUIRE(result.numeric <= result.bound + 1e-12);
      }
    }
  }
  SUBCASE("tiny gamma avoids cancellation") {
    const AppendixIntegral a = appendix_integral(AppendixCase(1.0, 1.0 + 1e-13));
    const AppendixIntegral b = appendix_integral(AppendixCase(1.0, 1.0));
    CHECK(a.closed_form == doctest::Approx(b.closed_form).epsilon(1e-10));
  }
}

TEST_CASE("entropy upper bound") {
  SUBCASE("tight in the degenerate case") {
    const EtaBounds degenerate{1.0, 1.0, 1.0, 1.0};
    CHECK(ratio_entropy_upper_bound(degenerate) ==
          doctest::Approx(2.0 - std::log(2.0)).epsilon(1e-15));
    CHECK(ratio_entropy(RatioLaw::constant(1.0)) <=
          ratio_entropy_upper_bound(degenerate) + 1e-10);
  }
  SUBCASE("canonical exponential interval") {
    const EtaBounds b{1.0, 2.0, 2.0, 2.0};
    CHECK(ratio_entropy_upper_bound(b) ==
          doctest::Approx(4.0 - std::log(2.0)).epsilon(1e-15));
  }
  SUBCASE("dominates sampled laws inside the interval") {
    Rng rng(4);
    const EtaBounds b{1.0, 2.0, 2.0, 2.0};
    const double cap = ratio_entropy_upper_bound(b);
    for (int rep = 0; rep < 20; ++rep) {
      const auto sampler = [](Rng& r) { return 1.0 + r.uniform_co(); };
      const RatioLaw law = make_ratio_law(sampler, 2000, rng);
      CHECK(ratio_entropy(law) <= cap + 1e-9);
    }
  }
}

TEST_CASE("non-convergent quadrature is reported with the achieved error") {
  try {
    ratio_entropy(RatioLaw::constant(1.0), {.abs_tol = 1e-30});
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.achieved_error() > 0.0);
    CHECK(e.achieved_error() < 1e-6);
  }
}

TEST_CASE("law validation") {
  CHECK_THROWS_AS(RatioLaw::constant(0.0), ModelError);
  CHECK_THROWS_AS(RatioLaw::constant(-2.0), ModelError);
  CHECK_THROWS_AS(RatioLaw::mixture({}), ModelError);
  CHECK_THROWS_AS(RatioLaw::mixture({1.0, 0.0}), ModelError);
}

TEST_SUITE_END();
