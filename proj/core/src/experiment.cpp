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

#include "netcap/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

#include "netcap/errors.hpp"
#include "netcap/eta.hpp"
#include "netcap/parallel.hpp"
#include "netcap/quadrature.hpp"
#include "netcap/ratio_entropy.hpp"
#include "netcap/stats.hpp"

namespace netcap {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i > 0) out += ';';
    out += flags[i];
  }
  return out;
}

const CapacityBound* find_bound(const MIEstimate& row, BoundKind kind) {
  for (const CapacityBound& b : row.bound_refs) {
    if (b.kind == kind) return &b;
  }
  return nullptr;
}

}  // namespace

BoundsReport compute_bounds(const ExperimentConfig& config) {
  const AlphaSequence alphas = config.alpha_sequence();
  BoundsReport report{
      .model = alphas.model(),
      .rho = alphas.rho(),
      .bounds = eta_bounds(alphas),
      .k_worst_case = {},
      .proposition = {},
      .geometric = std::nullopt,
      .exponential = std::nullopt,
  };
  report.k_worst_case = bound_K_worst_case(report.bounds);
  report.proposition = proposition_bound(report.bounds);
  if (alphas.model() == AlphaModel::kExponential) {
    report.geometric = geometric_bound(alphas.rho());
    report.exponential = exponential_bound(alphas.rho());
  }
  return report;
}

void write_bounds_text(const BoundsReport& report, std::ostream& out) {
  out << "alpha model        : " << to_string(report.model) << "\n";
  out << "decay ratio floor  : " << fmt(report.rho) << "\n";
  out << "eta_min^2          : " << fmt(report.bounds.eta_min2) << "\n";
  out << "eta_max^2          : " << fmt(report.bounds.eta_max2) << "\n";
  const auto row = [&](const char* name, const CapacityBound& b) {
    out << name << fmt(b.nats) << " nats  (" << fmt(nats_to_bits(b.nats))
        << " bits)\n";
  };
  row("K (worst-case s)   : ", report.k_worst_case);
  row("proposition        : ", report.proposition);
  if (report.geometric) row("geometric          : ", *report.geometric);
  if (report.exponential) {
    row("exponential proof  : ", report.exponential->proof);
    row("exponential stated : ", report.exponential->stated);
  }
}

std::string bounds_csv(const BoundsReport& report) {
  std::string out = "bound,nats,bits\n";
  const auto row = [&out](const std::string& name, double nats) {
    out += name + "," + fmt(nats) + "," + fmt(nats_to_bits(nats)) + "\n";
  };
  row("eta_min2", report.bounds.eta_min2);
  row("eta_max2", report.bounds.eta_max2);
  row("K_worst_case", report.k_worst_case.nats);
  row("proposition", report.proposition.nats);
  if (report.geometric) row("geometric", report.geometric->nats);
  if (report.exponential) {
    row("exponential_proof", report.exponential->proof.nats);
    row("exponential_stated", report.exponential->stated.nats);
  }
  return out;
}

SweepResult run_mi_sweep(const ExperimentConfig& config, int workers) {
  if (config.sweep_snr_db.empty()) {
    throw ConfigError(0, "sweep.snr_db is required for mi-sweep");
  }
  MiParams params;
  params.n = config.n;
  params.outer = config.outer_samples;
  params.mixture = config.mixture_samples;
  params.ci_cap_nats = config.ci_cap;
  params.max_mixture_doublings = config.max_doublings;
  params.workers = workers;

  SweepResult result;
  result.rows = saturation_profile(config.network(), config.input(),
                                   config.sweep_snr_db, params, Rng(config.seed));
  for (const MIEstimate& row : result.rows) {
    const double upper = row.mi_nats - 3.0 * row.se;
    const CapacityBound* prop = find_bound(row, BoundKind::kProposition);
    const CapacityBound* proof = find_bound(row, BoundKind::kExponentialProof);
    if ((prop && upper > prop->nats) || (proof && upper > proof->nats)) {
      result.bound_violation = true;
    }
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out =
      "snr_db,mi_nats,ci_low,ci_high,bound_proposition,bound_geometric,"
      "bound_exponential_proof,bound_exponential_stated,flags\n";
  for (const MIEstimate& row : result.rows) {
    const auto bound_field = [&row](BoundKind kind) {
      const CapacityBound* b = find_bound(row, kind);
      return b ? fmt(b->nats) : std::string();
    };
    out += fmt(row.snr_db) + "," + fmt(row.mi_nats) + "," + fmt(row.ci_low) + "," +
           fmt(row.ci_high) + "," + bound_field(BoundKind::kProposition) + "," +
           bound_field(BoundKind::kGeometric) + "," +
           bound_field(BoundKind::kExponentialProof) + "," +
           bound_field(BoundKind::kExponentialStated) + "," +
           join_flags(row.flags) + "\n";
  }
  return out;
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

void write_verify_report(const VerifyReport& report, std::ostream& out) {
  for (const VerifyCheck& c : report.checks) {
    out << "CHECK " << c.name << " " << (c.pass ? "PASS" : "FAIL") << " "
        << fmt(c.measured) << " " << fmt(c.tolerance) << "\n";
  }
}

namespace {

// ---------------------------------------------------------------------
// Shared sampling helpers for the verification suites.

std::vector<double> draw_input_powers(const InputDistribution& dist,
                                      std::size_t indices, Rng& rng) {
  std::vector<double> powers(indices);
  for (auto& p : powers) p = std::norm(dist.sample_symbol(rng));
  return powers;
}

struct PairSample {
  double eta;        // sqrt of the input-conditioned variance ratio
  double log_eta2;
  double ratio;      // |y / y_indep_shifted|
  double log_ratio;
  double phase;      // arg(y / y_indep_shifted) in [0, 2pi)
};

PairSample draw_pair(const NetworkConfig& net, const InputDistribution& dist,
                     std::size_t interferers, Rng& rng) {
  const InputDraw inputs = sample_inputs(dist, interferers, rng);
  std::vector<double> powers(interferers + 1);
  powers[0] = std::norm(inputs.direct);
  for (std::size_t ell = 0; ell < interferers; ++ell) {
    powers[ell + 1] = std::norm(inputs.interferers[ell]);
  }
  const double eta2 = eta_squared(powers, net.alphas(), net.sigma2());

  const ChannelSample sample = sample_channel(net, inputs, rng);
  const std::complex<double> w = sample.y / sample.y_shifted_indep;
  double phase = std::arg(w);
  if (phase < 0.0) phase += 2.0 * std::numbers::pi;

  return {std::sqrt(eta2), std::log(eta2), std::abs(w), std::log(std::abs(w)),
          phase};
}

class CheckList {
 public:
  // pass when measured <= tolerance
  void le(const std::string& name, double measured, double tolerance) {
    checks.push_back({name, measured <= tolerance, measured, tolerance});
  }
  // pass when measured >= tolerance
  void ge(const std::string& name, double measured, double tolerance) {
    checks.push_back({name, measured >= tolerance, measured, tolerance});
  }
  std::vector<VerifyCheck> checks;
};

}  // namespace

VerifyReport run_verify(const ExperimentConfig& config, int workers) {
  VerifyReport report;
  CheckList checks;

  AlphaSequence alphas = AlphaSequence::exponential(0.5);
  NetworkConfig net(alphas, 1.0, 1.0);
  try {
    alphas = config.alpha_sequence();
    net = config.network();
  } catch (const std::exception&) {
    report.checks.push_back({"model.construction", false, 0.0, 0.0});
    return report;
  }
  report.checks.push_back({"model.construction", true, 0.0, 0.0});

  const double sigma2 = config.sigma2;
  const InputDistribution dist = config.input();
  const std::size_t interferers = net.interferer_count();
  const EtaBounds bounds = eta_bounds(alphas);
  Rng root(config.seed);

  // Successive-ratio floor: 1 <= alpha_l / alpha_{l+1} <= 1/rho.
  {
    double worst = 0.0;
    for (std::size_t ell = 1; ell <= 200; ++ell) {
      const double ratio = alphas.value(ell) / alphas.value(ell + 1);
      worst = std::max({worst, 1.0 - ratio, ratio - bounds.inv_rho});
    }
    checks.le("alpha.ratio_floor", worst, 1e-9);
  }

  // Randomized certification of the eta^2 interval.
  {
    Rng rng = root.child(1);
    const Lemma1Report lemma =
        verify_eta_bounds(alphas, sigma2, config.lemma_trials, rng);
    checks.le("eta.bound_violations", static_cast<double>(lemma.violations), 0.0);
    checks.le("eta.empirical_range",
              std::max(bounds.eta_min2 - lemma.min_seen,
                       lemma.max_seen - bounds.eta_max2),
              1e-9 * bounds.eta_max2);
  }

  // Scale continuity: common scaling of |x|^2 and sigma2 leaves eta^2 alone.
  {
    Rng rng = root.child(2);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      std::vector<double> powers = draw_input_powers(dist, interferers + 1, rng);
      const double base = eta_squared(powers, alphas, sigma2);
      for (double c : {1e-6, 1e6}) {
        std::vector<double> scaled = powers;
        for (auto& p : scaled) p *= c;
        const double e2 = eta_squared(scaled, alphas, sigma2 * c);
        worst = std::max(worst, std::abs(e2 - base) / base);
      }
    }
    checks.le("eta.scale_invariance", worst, 1e-9);
  }

  // Endpoint minimizer: in range, and never beaten on a fine grid.
  {
    double out_of_range = 0.0;
    double excess = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double r = 0.05 * static_cast<double>(i);
      const double star = eta_star2(r, bounds);
      out_of_range = std::max({out_of_range, bounds.eta_min2 - star,
                               star - bounds.eta_max2});
      const auto objective = [r](double x) {
        const double d = r * r + x;
        return x / (d * d);
      };
      double grid_min = objective(bounds.eta_min2);
      for (int g = 0; g <= 10'000; ++g) {
        const double x = bounds.eta_min2 + (bounds.eta_max2 - bounds.eta_min2) *
                                               static_cast<double>(g) / 10'000.0;
        grid_min = std::min(grid_min, objective(x));
      }
      excess = std::max(excess, objective(star) - grid_min);
    }
    checks.le("eta_star.in_range", out_of_range, 0.0);
    checks.le("eta_star.grid_optimal", excess, 1e-12);
  }

  // E[x/(r^2+x)^2] over eta^2 draws dominates the value at the minimizer.
  {
    Rng rng = root.child(3);
    constexpr std::size_t kDraws = 100'000;
    std::vector<double> eta2s(kDraws);
    for (auto& e2 : eta2s) {
      e2 = eta_squared(draw_input_powers(dist, interferers + 1, rng), alphas,
                       sigma2);
    }
    double min_z = 1e300;
    for (int i = 1; i <= 100; ++i) {
      const double r = 0.1 * static_cast<double>(i);
      const double r2 = r * r;
      double sum = 0.0;
      double sum_sq = 0.0;
      for (double e2 : eta2s) {
        const double g = e2 / ((r2 + e2) * (r2 + e2));
        sum += g;
        sum_sq += g * g;
      }
      const double mean = sum / static_cast<double>(kDraws);
      const double var = std::max(
          0.0, (sum_sq - static_cast<double>(kDraws) * mean * mean) /
                   static_cast<double>(kDraws - 1));
      const double se = std::sqrt(var / static_cast<double>(kDraws));
      const double star = eta_star2(r, bounds);
      const double floor = star / ((r2 + star) * (r2 + star));
      const double diff = mean - floor;
      min_z = std::min(min_z, se > 0.0 ? diff / se : (diff >= -1e-12 ? 1e300 : -1e300));
    }
    checks.ge("eta.mean_dominates_minimizer", min_z, -4.0);
  }

  // Ratio-law normalization, first-integral identity, entropy values.
  {
    double worst_norm = 0.0;
    double worst_integral1 = 0.0;
    for (double e2 : {0.5, 1.0, 2.0}) {
      const RatioLaw law = RatioLaw::constant(e2);
      const double norm = integrate_semi_infinite_sq_checked(
          [&law](double r) { return law.pdf(r); }, {.abs_tol = 1e-9},
          "constant-law normalization");
      worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
      const double first = integrate_semi_infinite_sq_checked(
          [&law](double r) {
            const double f = law.pdf(r);
            return f > 0.0 ? -f * std::log(2.0 * r) : 0.0;
          },
          {.abs_tol = 1e-9}, "constant-law first integral");
      const double closed = -std::log(2.0) - 0.5 * std::log(e2);
      worst_integral1 = std::max(worst_integral1, std::abs(first - closed));
    }
    checks.le("ratio.normalization_const", worst_norm, 1e-8);
    checks.le("ratio.first_integral_const", worst_integral1, 1e-8);

    Rng rng = root.child(4);
    const auto eta_sampler = [&](Rng& r) {
      return eta_squared(draw_input_powers(dist, interferers + 1, r), alphas,
                         sigma2);
    };
    const RatioLaw mixture = make_ratio_law(eta_sampler, 10'000, rng);
    const double norm = integrate_semi_infinite_sq_checked(
        [&mixture](double r) { return mixture.pdf(r); }, {.abs_tol = 1e-8},
        "mixture-law normalization");
    checks.le("ratio.normalization_mixture", std::abs(norm - 1.0), 1e-4);
    const double first = integrate_semi_infinite_sq_checked(
        [&mixture](double r) {
          const double f = mixture.pdf(r);
          return f > 0.0 ? -f * std::log(2.0 * r) : 0.0;
        },
        {.abs_tol = 1e-8}, "mixture-law first integral");
    const double closed = -std::log(2.0) - 0.5 * mixture.mean_log_eta2();
    checks.le("ratio.first_integral_mixture", std::abs(first - closed), 1e-8);

    checks.le("ratio.entropy_unit",
              std::abs(ratio_entropy(RatioLaw::constant(1.0)) -
                       (2.0 - std::log(2.0))),
              1e-8);
    checks.le("ratio.entropy_scaling",
              std::abs(ratio_entropy(RatioLaw::constant(4.0)) -
                       ratio_entropy(RatioLaw::constant(1.0)) -
                       0.5 * std::log(4.0)),
              1e-6);
    double worst_logmean = 0.0;
    for (double e2 : {0.5, 2.0}) {
      worst_logmean = std::max(
          worst_logmean, std::abs(ratio_log_mean(RatioLaw::constant(e2)) -
                                  0.5 * std::log(e2)));
    }
    checks.le("ratio.log_mean_symmetry", worst_logmean, 1e-8);

    // h(R) never exceeds the interval bound, whatever in-range law shows up.
    double worst_slack = -1e300;
    const double cap = ratio_entropy_upper_bound(bounds);
    Rng law_rng = root.child(5);
    for (int i = 0; i < 20; ++i) {
      const RatioLaw law = make_ratio_law(eta_sampler, 2'000, law_rng);
      worst_slack = std::max(worst_slack, ratio_entropy(law) - cap);
    }
    checks.le("ratio.entropy_upper_bound", worst_slack, 1e-9);
  }

  // Integration-by-parts identity on a (eta^2, eta_star^2) grid.
  {
    double worst_match = 0.0;
    double worst_bound = -1e300;
    const auto grid_value = [](int i) {
      return 0.2 * std::pow(25.0, static_cast<double>(i) / 31.0);
    };
    for (int i = 0; i < 32; ++i) {
      for (int j = 0; j < 32; ++j) {
        const AppendixCase c(grid_value(i), grid_value(j));
        const AppendixIntegral result = appendix_integral(c);
        worst_match = std::max(worst_match,
                               std::abs(result.numeric - result.closed_form));
        worst_bound = std::max(worst_bound, result.numeric - result.bound);
      }
    }
    // Exact-tie diagonal (gamma = 0 analytic limit).
    for (int i = 0; i < 32; ++i) {
      const AppendixCase c(grid_value(i), grid_value(i));
      const AppendixIntegral result = appendix_integral(c);
      worst_match = std::max(worst_match,
                             std::abs(result.numeric - result.closed_form));
      worst_bound = std::max(worst_bound, result.numeric - result.bound);
    }
    checks.le("appendix.integral_matches_closed_form", worst_match, 1e-8);
    checks.le("appendix.integral_below_bound", worst_bound, 1e-12);
  }

  // Paired channel draws: mean ratio, mean log ratio, phase uniformity.
  {
    constexpr std::size_t kPairs = 1'000'000;
    constexpr std::size_t kPhases = 100'000;
    Rng pair_rng = root.child(6);

    struct Partial {
      double sum_eta = 0.0, sum_eta_sq = 0.0;
      double sum_r = 0.0, sum_r_sq = 0.0;
      double sum_lr = 0.0, sum_lr_sq = 0.0;
    };
    std::vector<Partial> partials(kMonteCarloChunks);
    std::vector<double> phases(kPhases);
    parallel_chunks(kMonteCarloChunks, workers, [&](std::size_t chunk) {
      Rng rng = pair_rng.child(chunk);
      Partial p;
      const auto [begin, end] = chunk_range(kPairs, kMonteCarloChunks, chunk);
      for (std::size_t i = begin; i < end; ++i) {
        const PairSample s = draw_pair(net, dist, interferers, rng);
        p.sum_eta += s.eta;
        p.sum_eta_sq += s.eta * s.eta;
        p.sum_r += s.ratio;
        p.sum_r_sq += s.ratio * s.ratio;
        p.sum_lr += s.log_ratio;
        p.sum_lr_sq += s.log_ratio * s.log_ratio;
        if (i < kPhases) phases[i] = s.phase;
      }
      partials[chunk] = p;
    });
    Partial total;
    for (const Partial& p : partials) {
      total.sum_eta += p.sum_eta;
      total.sum_eta_sq += p.sum_eta_sq;
      total.sum_r += p.sum_r;
      total.sum_r_sq += p.sum_r_sq;
      total.sum_lr += p.sum_lr;
      total.sum_lr_sq += p.sum_lr_sq;
    }
    const double n = static_cast<double>(kPairs);
    const auto se_of = [n](double sum, double sum_sq) {
      const double mean = sum / n;
      const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
      return std::sqrt(var / n);
    };

    // E[R] two ways: (pi/2) E[eta] against the direct mean of the ratio.
    const double mean_r_formula = 0.5 * std::numbers::pi * total.sum_eta / n;
    const double se_formula = 0.5 * std::numbers::pi * se_of(total.sum_eta, total.sum_eta_sq);
    const double mean_r_direct = total.sum_r / n;
    const double se_direct = se_of(total.sum_r, total.sum_r_sq);
    const double z_mean = std::abs(mean_r_formula - mean_r_direct) /
                          std::hypot(se_formula, se_direct);
    checks.le("ratio.mean_two_estimators", z_mean, 3.0);

    // E[log R] : quadrature over a frozen eta-mixture law against the
    // direct Monte Carlo mean.
    Rng law_rng = root.child(7);
    const RatioLaw law = make_ratio_law(
        [&](Rng& r) {
          return eta_squared(draw_input_powers(dist, interferers + 1, r), alphas,
                             sigma2);
        },
        10'000, law_rng);
    const double quad_logmean = ratio_log_mean(law);
    double law_sd = 0.0;
    {
      double s = 0.0, ss = 0.0;
      for (double e2 : law.eta2_values()) {
        const double v = 0.5 * std::log(e2);
        s += v;
        ss += v * v;
      }
      const double m = s / static_cast<double>(law.eta2_values().size());
      law_sd = std::sqrt(std::max(0.0, ss / static_cast<double>(law.eta2_values().size()) - m * m) /
                         static_cast<double>(law.eta2_values().size()));
    }
    const double mc_logmean = total.sum_lr / n;
    const double z_log = std::abs(quad_logmean - mc_logmean) /
                         std::hypot(law_sd, se_of(total.sum_lr, total.sum_lr_sq));
    checks.le("ratio.log_mean_two_estimators", z_log, 3.0);

    const KsResult phase_ks = ks_uniform(std::move(phases), 0.0, 2.0 * std::numbers::pi);
    checks.ge("ratio.phase_uniform_p", phase_ks.p_value, 0.01);
  }

  // Closed-form bound lattice.
  {
    double worst = -1e300;
    for (int g = 0; g <= 100; ++g) {
      const double s = bounds.eta_min2 + (bounds.eta_max2 - bounds.eta_min2) *
                                             static_cast<double>(g) / 100.0;
      worst = std::max(worst, bound_K(bounds, s).nats - proposition_bound(bounds).nats);
    }
    checks.le("bounds.K_below_proposition", worst, 1e-12);

    double worst_geo = 0.0;
    double worst_proof = -1e300;
    double worst_monotone = 0.0;
    double prev_prop = 1e300, prev_geo = 1e300, prev_proof = 1e300;
    for (int g = 1; g <= 1000; ++g) {
      const double rho = static_cast<double>(g) / 1001.0;
      const EtaBounds b = eta_bounds(AlphaSequence::exponential(rho));
      const double prop = proposition_bound(b).nats;
      const double geo = geometric_bound(rho).nats;
      const double proof = exponential_bound(rho).proof.nats;
      worst_geo = std::max(worst_geo, std::abs(geo - prop));
      worst_proof = std::max(worst_proof, proof - geo);
      worst_monotone = std::max({worst_monotone, prop - prev_prop, geo - prev_geo,
                                 proof - prev_proof});
      prev_prop = prop;
      prev_geo = geo;
      prev_proof = proof;
    }
    checks.le("bounds.geometric_equals_proposition", worst_geo, 1e-12);
    checks.le("bounds.exponential_proof_below_geometric", worst_proof, 0.0);
    checks.le("bounds.monotone_in_rho", worst_monotone, 1e-12);
  }

  // Shifted-channel law identity (exponential decay only).
  if (alphas.model() == AlphaModel::kExponential) {
    const BarIdentityReport bar =
        check_bar_identity(net, dist, config.check_samples, root.child(8));
    checks.ge("shifted_channel.identity_min_p", bar.min_p,
              BarIdentityReport::kPThreshold);
  }

  report.checks.insert(report.checks.end(), checks.checks.begin(),
                       checks.checks.end());
  return report;
}

VerifyReport run_dist_check(const ExperimentConfig& config, int workers) {
  (void)workers;
  VerifyReport report;
  CheckList checks;

  const NetworkConfig net = config.network();
  const InputDistribution dist = config.input();
  const std::size_t interferers = net.interferer_count();
  const std::size_t samples = config.check_samples;
  Rng root(config.seed);

  // Circular symmetry at fixed inputs: a phase-randomized batch must match
  // an unrotated batch in distribution.
  {
    Rng rng = root.child(0);
    const InputDraw inputs = sample_inputs(dist, interferers, rng);
    std::vector<double> plain(samples), rotated(samples);
    for (std::size_t i = 0; i < samples; ++i) {
      plain[i] = sample_channel(net, inputs, rng).y.real();
      const double theta = 2.0 * std::numbers::pi * rng.uniform_co();
      const std::complex<double> rotation{std::cos(theta), std::sin(theta)};
      rotated[i] = (sample_channel(net, inputs, rng).y * rotation).real();
    }
    const KsResult ks = ks_two_sample(std::move(plain), std::move(rotated));
    checks.ge("channel.circular_symmetry_p", ks.p_value, 0.01);
  }

  // Conditional variance formula against the sample variance at fixed inputs.
  {
    Rng rng = root.child(1);
    const InputDraw inputs = sample_inputs(dist, interferers, rng);
    double predicted = 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
      const ChannelSample s = sample_channel(net, inputs, rng);
      predicted = s.conditional_variance;
      sum += std::norm(s.y);
    }
    const double observed = sum / static_cast<double>(samples);
    checks.le("channel.conditional_variance_rel_err",
              std::abs(observed - predicted) / predicted, 0.02);
  }

  // Extending the truncation by 10 interferers moves the output variance
  // by no more than the tail tolerance plus Monte Carlo noise.
  {
    Rng rng = root.child(2);
    const auto mean_power = [&](const NetworkConfig& cfg, Rng& r, double* se) {
      double sum = 0.0;
      double sum_sq = 0.0;
      for (std::size_t i = 0; i < samples; ++i) {
        const double p = std::norm(sample_channel(cfg, dist, r).y);
        sum += p;
        sum_sq += p * p;
      }
      const double n = static_cast<double>(samples);
      const double mean = sum / n;
      *se = std::sqrt(std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) / n);
      return mean;
    };
    const NetworkConfig longer(net.alphas(), net.sigma2(), net.power(),
                               Truncation::count(interferers + 10), net.seed());
    double se_a = 0.0;
    double se_b = 0.0;
    const double var_a = mean_power(net, rng, &se_a);
    const double var_b = mean_power(longer, rng, &se_b);
    const double eps = net.truncation().mode == Truncation::Mode::kTailEps
                           ? net.truncation().eps
                           : 1e-6;
    checks.le("channel.truncation_stability", std::abs(var_a - var_b),
              eps * net.sigma2() + 3.0 * std::hypot(se_a, se_b));
  }

  if (net.alphas().model() == AlphaModel::kExponential) {
    const BarIdentityReport bar =
        check_bar_identity(net, dist, samples, root.child(3));
    checks.ge("shifted_channel.p_abs", bar.ks_abs.p_value,
              BarIdentityReport::kPThreshold);
    checks.ge("shifted_channel.p_real", bar.ks_real.p_value,
              BarIdentityReport::kPThreshold);
    checks.ge("shifted_channel.p_imag", bar.ks_imag.p_value,
              BarIdentityReport::kPThreshold);
  }

  report.checks = std::move(checks.checks);
  return report;
}

std::string simulate_csv(const ExperimentConfig& config) {
  const NetworkConfig net = config.network();
  const InputDistribution dist = config.input();
  Rng rng = Rng(config.seed).child(0);

  std::string out =
      "index,re_y,im_y,re_y_shifted,im_y_shifted,re_y_shifted_indep,"
      "im_y_shifted_indep,conditional_variance\n";
  for (std::size_t i = 0; i < config.check_samples; ++i) {
    const ChannelSample s = sample_channel(net, dist, rng);
    out += std::to_string(i) + "," + fmt(s.y.real()) + "," + fmt(s.y.imag()) + "," +
           fmt(s.y_shifted.real()) + "," + fmt(s.y_shifted.imag()) + "," +
           fmt(s.y_shifted_indep.real()) + "," + fmt(s.y_shifted_indep.imag()) +
           "," + fmt(s.conditional_variance) + "\n";
  }
  return out;
}

}  // namespace netcap
