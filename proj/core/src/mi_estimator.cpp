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

#include "netcap/mi_estimator.hpp"

#include <cmath>
#include <numbers>

#include "netcap/errors.hpp"
#include "netcap/mixture_density.hpp"
#include "netcap/parallel.hpp"

namespace netcap {

namespace {

// Stream layout below the root generator handed to estimate_mi. Frozen
// sets draw sequentially from their own streams, so rebuilding with a
// doubled M reproduces the first M components and appends fresh ones.
constexpr std::uint64_t kStreamMixtures = 0;
constexpr std::uint64_t kStreamOuter = 1;
constexpr std::uint64_t kStreamMarginal = 0;
constexpr std::uint64_t kStreamConditional = 1;

struct OuterSamples {
  std::vector<double> v;  // N x n squared output moduli
  std::vector<double> a;  // N x n direct-input variance contributions
  std::size_t count = 0;
  int n = 1;
};

// Variance pieces of one node draw: a_k = alpha0 |x_k|^2 for the direct
// node, t_k = sigma2 + sum_{l>=1} alpha_l |x_{l,k}|^2 for the interferers.
struct BlockScratch {
  std::vector<std::complex<double>> block;
  std::vector<double> a;
  std::vector<double> t;
};

void draw_variance_pieces(const NetworkConfig& config, const InputDistribution& dist,
                          int n, std::size_t interferers, Rng& rng,
                          BlockScratch& scratch) {
  const AlphaSequence& alphas = config.alphas();
  const std::size_t nd = static_cast<std::size_t>(n);
  scratch.block.resize(nd);
  scratch.a.assign(nd, 0.0);
  scratch.t.assign(nd, config.sigma2());

  dist.sample_block(scratch.block, rng);
  for (std::size_t k = 0; k < nd; ++k) {
    scratch.a[k] = alphas.value(0) * std::norm(scratch.block[k]);
  }
  for (std::size_t ell = 1; ell <= interferers; ++ell) {
    dist.sample_block(scratch.block, rng);
    const double alpha = alphas.value(ell);
    for (std::size_t k = 0; k < nd; ++k) {
      scratch.t[k] += alpha * std::norm(scratch.block[k]);
    }
  }
}

OuterSamples draw_outer_samples(const NetworkConfig& config,
                                const InputDistribution& dist, int n,
                                std::size_t count, std::size_t interferers,
                                Rng outer_rng, int workers) {
  OuterSamples out;
  out.count = count;
  out.n = n;
  const std::size_t nd = static_cast<std::size_t>(n);
  out.v.resize(count * nd);
  out.a.resize(count * nd);

  parallel_chunks(kMonteCarloChunks, workers, [&](std::size_t chunk) {
    Rng rng = outer_rng.child(chunk);
    BlockScratch scratch;
    const auto [begin, end] = chunk_range(count, kMonteCarloChunks, chunk);
    for (std::size_t i = begin; i < end; ++i) {
      draw_variance_pieces(config, dist, n, interferers, rng, scratch);
      for (std::size_t k = 0; k < nd; ++k) {
        const double s = scratch.a[k] + scratch.t[k];
        out.a[i * nd + k] = scratch.a[k];
        out.v[i * nd + k] = -s * std::log(rng.uniform());
      }
    }
  });
  return out;
}

struct EvalMoments {
  double mean_full = 0.0;
  double mean_half = 0.0;
  double se_full = 0.0;
};

// Reduces per-chunk partial sums in chunk order regardless of the thread
// schedule.
template <typename PerSample>
EvalMoments evaluate_samples(std::size_t count, int workers, PerSample&& body) {
  struct Partial {
    double sum_full = 0.0;
    double sum_sq = 0.0;
    double sum_half = 0.0;
  };
  std::vector<Partial> partials(kMonteCarloChunks);

  parallel_chunks(kMonteCarloChunks, workers, [&](std::size_t chunk) {
    Partial p;
    std::vector<double> scratch;
    const auto [begin, end] = chunk_range(count, kMonteCarloChunks, chunk);
    for (std::size_t i = begin; i < end; ++i) {
      const MixtureLogDensity ld = body(i, scratch);
      p.sum_full += ld.full;
      p.sum_sq += ld.full * ld.full;
      p.sum_half += ld.half;
    }
    partials[chunk] = p;
  });

  Partial total;
  for (const Partial& p : partials) {
    total.sum_full += p.sum_full;
    total.sum_sq += p.sum_sq;
    total.sum_half += p.sum_half;
  }
  const double nd = static_cast<double>(count);
  EvalMoments m;
  m.mean_full = total.sum_full / nd;
  m.mean_half = total.sum_half / nd;
  if (count > 1) {
    const double var =
        std::max(0.0, (total.sum_sq - nd * m.mean_full * m.mean_full) / (nd - 1.0));
    m.se_full = std::sqrt(var / nd);
  }
  return m;
}

bool resolution_converged(const EvalMoments& m) {
  return std::abs(m.mean_full - m.mean_half) <= 1.96 * m.se_full + 1e-12;
}

}  // namespace

FrozenMixtures mi_frozen_mixtures(const NetworkConfig& config,
                                  const InputDistribution& dist, int n,
                                  std::size_t m_marginal,
                                  std::size_t m_conditional, Rng estimate_rng) {
  if (m_marginal < 1 || m_conditional < 1) {
    throw ModelError("mixture size must be at least 1");
  }
  const Rng rng = estimate_rng.child(kStreamMixtures);
  const std::size_t interferers = config.interferer_count();
  const std::size_t nd = static_cast<std::size_t>(n);

  FrozenMixtures fm;
  fm.n = n;
  fm.marginal.reserve(m_marginal * nd);
  fm.conditional_base.reserve(m_conditional * nd);

  Rng marg_rng = rng.child(kStreamMarginal);
  BlockScratch scratch;
  for (std::size_t j = 0; j < m_marginal; ++j) {
    draw_variance_pieces(config, dist, n, interferers, marg_rng, scratch);
    for (std::size_t k = 0; k < nd; ++k) {
      fm.marginal.push_back(scratch.a[k] + scratch.t[k]);
    }
  }

  Rng cond_rng = rng.child(kStreamConditional);
  for (std::size_t j = 0; j < m_conditional; ++j) {
    draw_variance_pieces(config, dist, n, interferers, cond_rng, scratch);
    fm.conditional_base.insert(fm.conditional_base.end(), scratch.t.begin(),
                               scratch.t.end());
  }
  return fm;
}

EntropyEstimate estimate_entropy_mixture(
    const std::function<void(Rng&, std::span<double>)>& variance_sampler, int n,
    std::size_t outer, std::size_t mixture, Rng rng, int workers,
    int max_doublings) {
  if (n < 1) throw ModelError("dimension must be at least 1");
  if (outer < 1 || mixture < 1) throw ModelError("sample counts must be positive");
  const std::size_t nd = static_cast<std::size_t>(n);

  // Outer draws: a fresh variance vector per sample, one squared-modulus
  // coordinate per dimension.
  std::vector<double> v(outer * nd);
  {
    Rng outer_rng = rng.child(kStreamOuter);
    parallel_chunks(kMonteCarloChunks, workers, [&](std::size_t chunk) {
      Rng crng = outer_rng.child(chunk);
      std::vector<double> s(nd);
      const auto [begin, end] = chunk_range(outer, kMonteCarloChunks, chunk);
      for (std::size_t i = begin; i < end; ++i) {
        variance_sampler(crng, s);
        for (std::size_t k = 0; k < nd; ++k) {
          v[i * nd + k] = -s[k] * std::log(crng.uniform());
        }
      }
    });
  }

  EntropyEstimate est;
  std::size_t m = mixture;
  for (int doubling = 0;; ++doubling) {
    // Sequential redraw from the same stream: the first `mixture` rows of
    // every rebuild are identical.
    std::vector<double> rows(m * nd);
    {
      Rng mix_rng = rng.child(kStreamMixtures);
      std::vector<double> s(nd);
      for (std::size_t j = 0; j < m; ++j) {
        variance_sampler(mix_rng, s);
        for (std::size_t k = 0; k < nd; ++k) rows[j * nd + k] = s[k];
      }
    }
    GaussianMixtureDensity density(std::move(rows), n);
    est.mixture_size = m;
    if (density.degenerate()) {
      est.nats = density.exact_entropy();
      est.se = 0.0;
      est.exact = true;
      est.converged = true;
      return est;
    }

    const EvalMoments moments = evaluate_samples(
        outer, workers, [&](std::size_t i, std::vector<double>& scratch) {
          return density.log_density(std::span(v).subspan(i * nd, nd), scratch);
        });
    est.nats = -moments.mean_full;
    est.se = moments.se_full;
    est.converged = resolution_converged(moments);
    if (est.converged || doubling >= max_doublings) return est;
    m *= 2;
  }
}

MIEstimate estimate_mi(const NetworkConfig& config, const InputDistribution& dist,
                       const MiParams& params, Rng rng) {
  if (params.n < 1) throw ModelError("blocklength must be at least 1");
  if (params.n > params.blocklength_cap) {
    throw ModelError("blocklength " + std::to_string(params.n) +
                     " exceeds the configured cap of " +
                     std::to_string(params.blocklength_cap));
  }
  if (params.outer < 2 || params.mixture < 1) {
    throw ModelError("outer and mixture sample counts must be positive");
  }

  const int n = params.n;
  const std::size_t nd = static_cast<std::size_t>(n);
  const std::size_t interferers = config.interferer_count();

  const OuterSamples samples =
      draw_outer_samples(config, dist, n, params.outer, interferers,
                         rng.child(kStreamOuter), params.workers);

  MIEstimate out;
  out.n = n;
  out.samples_outer = params.outer;

  // Output-entropy side.
  std::size_t m_marg = params.mixture;
  for (int doubling = 0;; ++doubling) {
    FrozenMixtures fm = mi_frozen_mixtures(config, dist, n, m_marg, 1, rng);
    GaussianMixtureDensity density(std::move(fm.marginal), n);
    out.output_entropy.mixture_size = m_marg;
    if (density.degenerate()) {
      out.output_entropy.nats = density.exact_entropy();
      out.output_entropy.se = 0.0;
      out.output_entropy.exact = true;
      out.output_entropy.converged = true;
      break;
    }
    const EvalMoments moments = evaluate_samples(
        params.outer, params.workers, [&](std::size_t i, std::vector<double>& scratch) {
          return density.log_density(std::span(samples.v).subspan(i * nd, nd), scratch);
        });
    out.output_entropy.nats = -moments.mean_full;
    out.output_entropy.se = moments.se_full;
    out.output_entropy.converged = resolution_converged(moments);
    if (out.output_entropy.converged || doubling >= params.max_mixture_doublings) break;
    m_marg *= 2;
  }

  // Conditional side: direct input clamped per outer sample, interferers
  // mixed from the frozen base set.
  std::size_t m_cond = params.mixture;
  for (int doubling = 0;; ++doubling) {
    FrozenMixtures fm = mi_frozen_mixtures(config, dist, n, 1, m_cond, rng);
    ShiftedMixtureDensity density(std::move(fm.conditional_base), n);
    out.conditional_entropy.mixture_size = m_cond;
    if (density.degenerate()) {
      // Single interferer atom: the conditional law per sample is exactly
      // Gaussian, so average the analytic per-sample entropies.
      const EvalMoments moments = evaluate_samples(
          params.outer, params.workers,
          [&](std::size_t i, std::vector<double>&) {
            const double h = density.exact_conditional_entropy(
                std::span(samples.a).subspan(i * nd, nd));
            return MixtureLogDensity{-h, -h};
          });
      out.conditional_entropy.nats = -moments.mean_full;
      out.conditional_entropy.se = moments.se_full;
      out.conditional_entropy.exact = true;
      out.conditional_entropy.converged = true;
      break;
    }
    const EvalMoments moments = evaluate_samples(
        params.outer, params.workers, [&](std::size_t i, std::vector<double>& scratch) {
          return density.log_density(std::span(samples.v).subspan(i * nd, nd),
                                     std::span(samples.a).subspan(i * nd, nd),
                                     scratch);
        });
    out.conditional_entropy.nats = -moments.mean_full;
    out.conditional_entropy.se = moments.se_full;
    out.conditional_entropy.converged = resolution_converged(moments);
    if (out.conditional_entropy.converged || doubling >= params.max_mixture_doublings) break;
    m_cond *= 2;
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  out.mi_nats = (out.output_entropy.nats - out.conditional_entropy.nats) * inv_n;
  out.se = std::hypot(out.output_entropy.se, out.conditional_entropy.se) * inv_n;
  out.ci_low = out.mi_nats - 1.96 * out.se;
  out.ci_high = out.mi_nats + 1.96 * out.se;
  out.snr_db = 10.0 * std::log10(std::max(config.snr(), 1e-300));

  if (out.ci_high - out.ci_low > params.ci_cap_nats) {
    out.flags.push_back("low_confidence");
  }
  if (out.mi_nats < 0.0) out.flags.push_back("negative_mi");
  if (!out.output_entropy.converged || !out.conditional_entropy.converged) {
    out.flags.push_back("mixture_unconverged");
  }
  return out;
}

std::vector<MIEstimate> saturation_profile(const NetworkConfig& config,
                                           const InputDistribution& dist,
                                           std::span<const double> snr_db,
                                           const MiParams& params, Rng rng) {
  if (snr_db.empty()) throw ModelError("SNR sweep list must not be empty");
  for (std::size_t i = 1; i < snr_db.size(); ++i) {
    if (!(snr_db[i] > snr_db[i - 1])) {
      throw ModelError("SNR sweep list must be strictly ascending");
    }
  }

  const bool exponential = config.alphas().model() == AlphaModel::kExponential;
  std::vector<MIEstimate> rows;
  rows.reserve(snr_db.size());
  for (std::size_t i = 0; i < snr_db.size(); ++i) {
    const double snr = std::pow(10.0, snr_db[i] / 10.0);
    const double power = snr * config.sigma2();
    const NetworkConfig point_config = config.with_power(power);
    const InputDistribution point_dist = dist.at_snr(snr).with_power(power);

    MIEstimate est = estimate_mi(point_config, point_dist, params, rng.child(i));
    est.snr_db = snr_db[i];

    const EtaBounds bounds = eta_bounds(config.alphas());
    est.bound_refs.push_back(proposition_bound(bounds));
    if (exponential) {
      est.bound_refs.push_back(geometric_bound(config.alphas().rho()));
      const ExponentialBoundPair pair = exponential_bound(config.alphas().rho());
      est.bound_refs.push_back(pair.proof);
      est.bound_refs.push_back(pair.stated);
    }
    rows.push_back(std::move(est));
  }
  return rows;
}

BarIdentityReport check_bar_identity(const NetworkConfig& config,
                                     const InputDistribution& dist,
                                     std::size_t samples, Rng rng) {
  if (config.alphas().model() != AlphaModel::kExponential) {
    throw ModelError("the shifted-channel identity requires exponential alpha decay");
  }
  if (samples < 10) throw ModelError("need at least 10 samples");

  const AlphaSequence& alphas = config.alphas();
  const double rho = alphas.rho();
  const double sigma2 = config.sigma2();
  const std::size_t L = config.interferer_count();

  std::vector<double> side_a_abs(samples), side_a_re(samples), side_a_im(samples);
  std::vector<double> side_b_abs(samples), side_b_re(samples), side_b_im(samples);

  Rng rng_a = rng.child(0);
  Rng rng_b = rng.child(1);
  const double sqrt_rho = std::sqrt(rho);
  const double sqrt_om = std::sqrt(1.0 - rho);

  for (std::size_t i = 0; i < samples; ++i) {
    // Side A: the index-shifted channel, fresh everything.
    {
      const InputDraw inputs = sample_inputs(dist, L, rng_a);
      std::complex<double> y{0.0, 0.0};
      for (std::size_t ell = 0; ell <= L; ++ell) {
        const std::complex<double> x =
            ell == 0 ? inputs.direct : inputs.interferers[ell - 1];
        y += rng_a.complex_normal(alphas.value(ell + 1)) * x;
      }
      y += rng_a.complex_normal(sigma2);
      side_a_abs[i] = std::abs(y);
      side_a_re[i] = y.real();
      side_a_im[i] = y.imag();
    }
    // Side B: sqrt(rho) Y + sqrt(1-rho) Z' with independent draws.
    {
      const InputDraw inputs = sample_inputs(dist, L, rng_b);
      std::complex<double> y{0.0, 0.0};
      for (std::size_t ell = 0; ell <= L; ++ell) {
        const std::complex<double> x =
            ell == 0 ? inputs.direct : inputs.interferers[ell - 1];
        y += rng_b.complex_normal(alphas.value(ell)) * x;
      }
      y += rng_b.complex_normal(sigma2);
      const std::complex<double> mixed =
          sqrt_rho * y + sqrt_om * rng_b.complex_normal(sigma2);
      side_b_abs[i] = std::abs(mixed);
      side_b_re[i] = mixed.real();
      side_b_im[i] = mixed.imag();
    }
  }

  BarIdentityReport report;
  report.rho = rho;
  report.samples = samples;
  report.ks_abs = ks_two_sample(std::move(side_a_abs), std::move(side_b_abs));
  report.ks_real = ks_two_sample(std::move(side_a_re), std::move(side_b_re));
  report.ks_imag = ks_two_sample(std::move(side_a_im), std::move(side_b_im));
  report.min_p = std::min({report.ks_abs.p_value, report.ks_real.p_value,
                           report.ks_imag.p_value});
  report.pass = report.min_p >= BarIdentityReport::kPThreshold;
  return report;
}

}  // namespace netcap
