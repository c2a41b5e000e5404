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

#include "netcap/alpha_sequence.hpp"

#include <doctest.h>

#include <cmath>

#include "netcap/errors.hpp"

using netcap::AlphaModel;
using netcap::AlphaSequence;
using netcap::ModelError;
using netcap::TruncationError;
using netcap::truncation_length;

TEST_SUITE_BEGIN("alpha_sequence");

TEST_CASE("exponential values") {
  const AlphaSequence seq = AlphaSequence::exponential(0.5);
  CHECK(seq.value(0) == 1.0);
  CHECK(seq.value(1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(seq.value(2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(seq.value(3) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(seq.rho() == 0.5);
  CHECK(seq.model() == AlphaModel::kExponential);
}

TEST_CASE("exponential rejects rho outside (0,1)") {
  CHECK_THROWS_AS(AlphaSequence::exponential(0.0), ModelError);
  CHECK_THROWS_AS(AlphaSequence::exponential(1.0), ModelError);
  CHECK_THROWS_AS(AlphaSequence::exponential(1.5), ModelError);
  CHECK_THROWS_AS(AlphaSequence::exponential(-0.1), ModelError);
}

TEST_CASE("constant explicit list accepted with clamped ratio floor") {
  const AlphaSequence seq = AlphaSequence::explicit_values({1.0, 1.0, 1.0});
  CHECK(seq.rho() == AlphaSequence::kDefaultRhoCeiling);
  CHECK(seq.rho() < 1.0);
  CHECK(seq.value(2) == 1.0);
}

TEST_CASE("explicit ratio floor is the infimum of successive ratios") {
  const AlphaSequence seq = AlphaSequence::explicit_values({0.5, 0.3, 0.2});
  CHECK(seq.rho() == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("explicit list validation") {
  CHECK_THROWS_AS(AlphaSequence::explicit_values({}), ModelError);
  CHECK_THROWS_AS(AlphaSequence::explicit_values({0.5, 0.6}), ModelError);
  CHECK_THROWS_AS(AlphaSequence::explicit_values({0.5, 0.0}), ModelError);
  CHECK_THROWS_AS(AlphaSequence::explicit_values({-1.0}), ModelError);
}

TEST_CASE("polynomial values and ratio floor") {
  const AlphaSequence seq = AlphaSequence::polynomial(2.0);
  CHECK(seq.value(1) == 1.0);
  CHECK(seq.value(2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(seq.value(10) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(seq.rho() == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("ordering and ratio-floor invariants hold for every model") {
  const AlphaSequence models[] = {
      AlphaSequence::exponential(0.3),
      AlphaSequence::exponential(0.97),
      AlphaSequence::polynomial(1.5),
      AlphaSequence::explicit_values({2.0, 1.0, 0.9, 0.5}),
  };
  for (const AlphaSequence& seq : models) {
    for (std::size_t ell = 1; ell <= 300; ++ell) {
      const double ratio = seq.value(ell + 1) / seq.value(ell);
      REQUIRE(seq.value(ell + 1) <= seq.value(ell) * (1.0 + 1e-12));
      REQUIRE(ratio >= seq.rho() * (1.0 - 1e-12));
    }
  }
}

TEST_CASE("exponential truncation matches the direct summation") {
  // Closed form against brute force for the canonical case.
  const AlphaSequence seq = AlphaSequence::exponential(0.5);
  CHECK(truncation_length(seq, 1.0, 1.0, 1e-6) == 20);

  const AlphaSequence slow = AlphaSequence::exponential(0.9);
  const std::size_t L = truncation_length(slow, 1.0, 1.0, 1e-6);
  const auto brute_tail = [&](std::size_t count) {
    double tail = 0.0;
    for (std::size_t ell = count + 1; ell < count + 4000; ++ell) {
      tail += slow.value(ell);
    }
    return tail;
  };
  CHECK(brute_tail(L) <= 1e-6);
  REQUIRE(L > 0);
  CHECK(brute_tail(L - 1) > 1e-6);
}

TEST_CASE("explicit lists truncate to their own length") {
  const AlphaSequence seq =
      AlphaSequence::explicit_values({0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1});
  CHECK(truncation_length(seq, 1.0, 1.0, 1e-6) == 8);
  CHECK(truncation_length(seq, 1e9, 1.0, 1e-12) == 8);
}

TEST_CASE("polynomial truncation") {
  const AlphaSequence fast = AlphaSequence::polynomial(3.0);
  const std::size_t L = truncation_length(fast, 1.0, 1.0, 1e-6);
  CHECK(fast.tail_sum(L) <= 1e-6);
  CHECK(L > 1);
  CHECK(fast.tail_sum(L - 1) > 1e-6);

  // A convergent but heavy tail that cannot reach eps within the cap.
  const AlphaSequence heavy = AlphaSequence::polynomial(1.2);
  try {
    truncation_length(heavy, 1.0, 1.0, 1e-9);
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.achieved_tail_mass() > 1e-9);
    CHECK(std::isfinite(e.achieved_tail_mass()));
  }

  // Divergent tail.
  CHECK_THROWS_AS(truncation_length(AlphaSequence::polynomial(0.9), 1.0, 1.0, 1e-3),
                  TruncationError);
}

TEST_CASE("exponential tail sum closed form") {
  const AlphaSequence seq = AlphaSequence::exponential(0.7);
  for (std::size_t L : {0u, 1u, 5u, 30u}) {
    double brute = 0.0;
    for (std::size_t ell = L + 1; ell < L + 2000; ++ell) brute += seq.value(ell);
    CHECK(seq.tail_sum(L) == doctest::Approx(brute).epsilon(1e-12));
  }
}

TEST_SUITE_END();
