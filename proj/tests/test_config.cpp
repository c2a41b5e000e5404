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

#include "netcap/config.hpp"

#include <doctest.h>

#include <string>

#include "netcap/errors.hpp"
#include "netcap/experiment.hpp"

using namespace netcap;

TEST_SUITE_BEGIN("config");

TEST_CASE("minimal config fills the documented defaults") {
  const ExperimentConfig c = parse_config("network.rho = 0.5\n");
  CHECK(c.truncation_eps == 1e-6);
  CHECK(c.n == 1);
  CHECK(c.outer_samples == 100000);
  CHECK(c.mixture_samples == 10000);
  CHECK(c.seed == 0);
  CHECK(c.mode == ExperimentMode::kBounds);
  CHECK_FALSE(c.truncation_count.has_value());
}

TEST_CASE("range violations carry the line and the key") {
  try {
    parse_config("mode = bounds\nnetwork.rho = 1.5\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("network.rho") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("input.delta = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("input.delta = 1.2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("network.power = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("network.sigma2 = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("network.truncation_eps = -1e-6\n"), ConfigError);
}

TEST_CASE("unknown keys fail fast") {
  try {
    parse_config("# comment\n\nnetwork.rh = 0.5\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("unknown key") != std::string::npos);
  }
}

TEST_CASE("malformed lines") {
  CHECK_THROWS_AS(parse_config("just words\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("= 3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("network.rho =\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("network.rho = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("sweep.snr_db = 1,,2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("network.seed = -1\n"), ConfigError);
}

TEST_CASE("comments and spacing are tolerated") {
  const ExperimentConfig c = parse_config(
      "  # full-line comment\n"
      "mode = mi-sweep   # trailing comment\n"
      "\n"
      "  sweep.snr_db =  0,  10 , 20\n");
  CHECK(c.mode == ExperimentMode::kMiSweep);
  REQUIRE(c.sweep_snr_db.size() == 3);
  CHECK(c.sweep_snr_db[1] == 10.0);
}

TEST_CASE("parse of serialize is the identity on random configs") {
  Rng rng(99);
  for (int rep = 0; rep < 100; ++rep) {
    ExperimentConfig c;
    switch (rng.next() % 3) {
      case 0:
        c.alpha_model = AlphaModel::kExponential;
        c.rho = 0.05 + 0.9 * rng.uniform_co();
        break;
      case 1:
        c.alpha_model = AlphaModel::kPolynomial;
        c.beta = 1.1 + 3.0 * rng.uniform_co();
        break;
      default: {
        c.alpha_model = AlphaModel::kExplicit;
        double v = 0.5 + rng.uniform_co();
        for (int i = 0; i < 3 + static_cast<int>(rng.next() % 4); ++i) {
          c.alphas.push_back(v);
          v *= 0.4 + 0.6 * rng.uniform_co();
        }
        break;
      }
    }
    c.mode = static_cast<ExperimentMode>(rng.next() % 5);
    c.alpha0 = 0.5 + rng.uniform_co();
    c.sigma2 = 0.1 + rng.uniform_co();
    c.power = 10.0 * rng.uniform_co();
    c.seed = rng.next();
    if (rng.next() % 2 == 0) c.truncation_count = rng.next() % 64;
    c.family = static_cast<InputDistribution::Family>(rng.next() % 4);
    c.delta = 0.05 + 0.95 * rng.uniform_co();
    c.delta_rule = rng.next() % 2 == 0 ? InputDistribution::DeltaRule::kFixed
                                       : InputDistribution::DeltaRule::kInverseOnePlusSnr;
    c.block_mode = rng.next() % 2 == 0 ? InputDistribution::BlockMode::kIid
                                       : InputDistribution::BlockMode::kRepeated;
    for (int i = 0; i < static_cast<int>(rng.next() % 4); ++i) {
      c.sweep_snr_db.push_back(10.0 * i + rng.uniform_co());
    }
    c.n = 1 + static_cast<int>(rng.next() % 4);
    c.outer_samples = 2 + rng.next() % 100000;
    c.mixture_samples = 1 + rng.next() % 10000;
    c.ci_cap = 0.01 + rng.uniform_co();
    c.max_doublings = static_cast<int>(rng.next() % 5);
    c.lemma_trials = 1 + rng.next() % 1000000;
    c.check_samples = 10 + rng.next() % 100000;
    if (rng.next() % 2 == 0) c.out_csv = "out.csv";

    const ExperimentConfig round = parse_config(serialize_config(c));
    REQUIRE(round == c);
  }
}

TEST_CASE("materialization") {
  SUBCASE("explicit model requires the value list") {
    ExperimentConfig c;
    c.alpha_model = AlphaModel::kExplicit;
    CHECK_THROWS_AS(c.network(), ConfigError);
  }
  SUBCASE("truncation count wins over eps when present") {
    ExperimentConfig c = parse_config("network.truncation_count = 5\n");
    CHECK(c.network().interferer_count() == 5);
  }
  SUBCASE("snr-adaptive on-off input") {
    ExperimentConfig c =
        parse_config("input.family = on-off\ninput.delta_rule = inv-one-plus-snr\n");
    const InputDistribution d = c.input().at_snr(99.0);
    CHECK(d.delta() == doctest::Approx(0.01).epsilon(1e-12));
  }
  SUBCASE("constellation preset") {
    ExperimentConfig c = parse_config("input.family = constellation\n");
    CHECK(c.input().points().size() == 16);
    CHECK_THROWS_AS(parse_config("input.constellation = psk32\n"), ConfigError);
  }
}

TEST_CASE("sweep CSV schema is pinned") {
  SweepResult result;
  MIEstimate row;
  row.snr_db = 10.0;
  row.mi_nats = 0.5;
  row.ci_low = 0.4;
  row.ci_high = 0.6;
  row.bound_refs.push_back(proposition_bound(eta_bounds(AlphaSequence::exponential(0.5))));
  row.flags.push_back("low_confidence");
  result.rows.push_back(row);
  const std::string csv = sweep_csv(result);
  CHECK(csv.starts_with(
      "snr_db,mi_nats,ci_low,ci_high,bound_proposition,bound_geometric,"
      "bound_exponential_proof,bound_exponential_stated,flags\n"));
  // Inapplicable bounds stay empty; flags land in the last column.
  CHECK(csv.find("10,0.5,0.4,0.6,4.49130348,,,,low_confidence\n") != std::string::npos);
}

TEST_CASE("empty sweep is a config error") {
  const ExperimentConfig c = parse_config("mode = mi-sweep\n");
  CHECK_THROWS_AS(run_mi_sweep(c, 1), ConfigError);
}

TEST_SUITE_END();
