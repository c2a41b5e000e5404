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

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace netcap;

TEST_SUITE_BEGIN("eta");

TEST_CASE("eta squared evaluates the shifted-variance ratio") {
  const AlphaSequence alphas = AlphaSequence::exponential(0.5);

  SUBCASE("all-zero inputs give exactly 1") {
    const std::vector<double> powers(8, 0.0);
    CHECK(eta_squared(powers, alphas, 1.0) == 1.0);
    CHECK(eta_squared({}, alphas, 2.5) == 1.0);
  }
  SUBCASE("single direct term") {
    // (1*2 + 1) / (0.5*2 + 1) = 1.5
    const std::vector<double> powers{2.0};
    CHECK(eta_squared(powers, alphas, 1.0) == doctest::Approx(1.5).epsilon(1e-15));
  }
  SUBCASE("dominant direct input approaches the first variance ratio") {
    const std::vector<double> powers{1e9};
    CHECK(eta_squared(powers, alphas, 1.0) == doctest::Approx(2.0).epsilon(1e-6));
  }
}

TEST_CASE("interval endpoints from the decay profile") {
  SUBCASE("canonical exponential") {
    const EtaBounds b = eta_bounds(AlphaSequence::exponential(0.5));
    CHECK(b.eta_min2 == 1.0);
    CHECK(b.eta_max2 == 2.0);
  }
  SUBCASE("mild decay") {
    // alpha_1 = 0.8, successive ratio 0.8: both candidates equal 1.25.
    const EtaBounds b = eta_bounds(AlphaSequence::explicit_values({0.8, 0.64}));
    CHECK(b.eta_min2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(b.eta_max2 == doctest::Approx(1.25).epsilon(1e-12));
  }
  SUBCASE("strong nearest interferer") {
    // alpha_1 = 2 with ratio floor 0.5: interval (0.5, 2).
    const EtaBounds b = eta_bounds(AlphaSequence::explicit_values({2.0, 1.0, 0.5}));
    CHECK(b.eta_min2 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(b.eta_max2 == doctest::Approx(2.0).epsilon(1e-15));
  }
}

TEST_CASE("endpoint minimizer of x/(r^2+x)^2") {
  const EtaBounds b = eta_bounds(AlphaSequence::exponential(0.5));  // [1, 2]

  SUBCASE("objective rising on the whole interval") {
    CHECK(eta_star2(std::sqrt(2.0), b) == b.eta_min2);
    CHECK(eta_star2(10.0, b) == b.eta_min2);
  }
  SUBCASE("objective falling on the whole interval") {
    CHECK(eta_star2(1.0, b) == b.eta_max2);
    CHECK(eta_star2(0.0, b) == b.eta_max2);
  }
  SUBCASE("interior peak resolved against a grid search") {
    for (double r2 : {0.1, 0.5, 1.3, 1.5, 2.7, 10.0}) {
      const double r = std::sqrt(r2);
      const auto objective = [r2](double x) {
        const double d = r2 + x;
        return x / (d * d);
      };
      double grid_min = 1e300;
      for (int g = 0; g <= 10000; ++g) {
        const double x = 1.0 + static_cast<double>(g) / 10000.0;
        grid_min = std::min(grid_min, objective(x));
      }
      const double star = eta_star2(r, b);
      CHECK(star >= b.eta_min2);
      CHECK(star <= b.eta_max2);
      CHECK(objective(star) <= grid_min + 1e-12);
    }
  }
}

TEST_CASE("randomized certification stays inside the interval") {
  Rng rng(101);
  const AlphaSequence models[] = {
      AlphaSequence::exponential(0.5),
      AlphaSequence::exponential(0.95),
      AlphaSequence::polynomial(2.0),
      AlphaSequence::explicit_values({2.0, 1.2, 0.9}),
  };
  for (const AlphaSequence& alphas : models) {
    const EtaBounds b = eta_bounds(alphas);
    const Lemma1Report report = verify_eta_bounds(alphas, 1.0, 100000, rng);
    CHECK(report.violations == 0);
    CHECK(report.min_seen >= b.eta_min2 * (1.0 - 1e-9));
    CHECK(report.max_seen <= b.eta_max2 * (1.0 + 1e-9));
  }
}

TEST_CASE("extremes are approached in dominant-term limits") {
  const AlphaSequence alphas = AlphaSequence::exponential(0.5);
  const std::vector<double> spike{1e9};
  CHECK(eta_squared(spike, alphas, 1.0) == doctest::Approx(2.0).epsilon(1e-6));
  const std::vector<double> zeros(5, 0.0);
  CHECK(eta_squared(zeros, alphas, 1.0) == 1.0);
}

TEST_CASE("scale continuity") {
  const AlphaSequence alphas = AlphaSequence::exponential(0.5);
  Rng rng(55);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> powers(1 + rng.next() % 24);
    for (auto& p : powers) p = rng.exponential() * 3.0;
    const double base = eta_squared(powers, alphas, 1.0);
    for (double c : {1e-6, 1e6}) {
      std::vector<double> scaled = powers;
      for (auto& p : scaled) p *= c;
      CHECK(eta_squared(scaled, alphas, c) ==
            doctest::Approx(base).epsilon(1e-12));
    }
  }
}

TEST_CASE("mean of the kernel dominates its value at the minimizer") {
  const AlphaSequence alphas = AlphaSequence::exponential(0.5);
  const EtaBounds b = eta_bounds(alphas);
  Rng rng(77);
  const std::size_t draws = 20000;
  std::vector<double> eta2s(draws);
  for (auto& e2 : eta2s) {
    std::vector<double> powers(21);
    for (auto& p : powers) p = rng.exponential();
    e2 = eta_squared(powers, alphas, 1.0);
  }
  for (int i = 1; i <= 25; ++i) {
    const double r2 = 0.16 * i * i;  // spread across both regimes
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double e2 : eta2s) {
      const double g = e2 / ((r2 + e2) * (r2 + e2));
      sum += g;
      sum_sq += g * g;
    }
    const double mean = sum / draws;
    const double sd = std::sqrt(
        std::max(0.0, (sum_sq - draws * mean * mean) / (draws - 1.0)));
    const double se = sd / std::sqrt(static_cast<double>(draws));
    const double star = eta_star2(std::sqrt(r2), b);
    const double floor = star / ((r2 + star) * (r2 + star));
    CHECK(mean - floor >= -4.0 * se);
  }
}

TEST_SUITE_END();
