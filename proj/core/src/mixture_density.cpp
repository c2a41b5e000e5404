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

// Built with fast-math so the exp/log sweeps vectorize; keep NaN/Inf
// plumbing out of this file.

#include "netcap/mixture_density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "netcap/errors.hpp"

namespace netcap {

namespace {

constexpr double kLogPi = 1.1447298858494002;

// Variance atoms produced through trigonometric identities (constant
// modulus, on-off) jitter in the last few ulps, so grouping uses a
// relative tolerance well above that noise and far below any genuine
// separation between components.
constexpr double kDedupRelTol = 1e-12;

// Deduplicate rows of a (count x dim) matrix slice; returns unique rows
// and their multiplicities, ordered by row value.
void dedup_rows(std::span<const double> rows, int dim,
                std::vector<double>& unique_rows, std::vector<double>& counts) {
  const std::size_t count = rows.size() / static_cast<std::size_t>(dim);
  const std::size_t d = static_cast<std::size_t>(dim);
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  const auto row = [&](std::size_t i) { return rows.subspan(i * d, d); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ra = row(a);
    const auto rb = row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  });

  unique_rows.clear();
  counts.clear();
  for (std::size_t idx = 0; idx < count; ++idx) {
    const auto r = row(order[idx]);
    bool same = !counts.empty();
    if (same) {
      const double* rep = unique_rows.data() + (counts.size() - 1) * d;
      for (std::size_t k = 0; k < d; ++k) {
        if (std::abs(r[k] - rep[k]) > kDedupRelTol * std::max(r[k], rep[k])) {
          same = false;
          break;
        }
      }
    }
    if (same) {
      counts.back() += 1.0;
    } else {
      unique_rows.insert(unique_rows.end(), r.begin(), r.end());
      counts.push_back(1.0);
    }
  }
}

// log(S1 + S2) from log S1, log S2 where either may be -inf-ish.
double log_add(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

bool rows_match(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > kDedupRelTol * std::max(a[k], b[k])) return false;
  }
  return true;
}

}  // namespace

GaussianMixtureDensity::GaussianMixtureDensity(std::vector<double> variances,
                                               int dim)
    : dim_(dim) {
  if (dim < 1) throw ModelError("mixture dimension must be at least 1");
  const std::size_t d = static_cast<std::size_t>(dim);
  if (variances.empty() || variances.size() % d != 0) {
    throw ModelError("variance matrix must hold a whole number of rows");
  }
  for (double s : variances) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw ModelError("mixture variances must be positive and finite");
    }
  }
  raw_total_ = variances.size() / d;
  const std::size_t first = raw_total_ / 2 > 0 ? raw_total_ / 2 : raw_total_;

  std::vector<double> counts;
  for (int h = 0; h < 2; ++h) {
    Pack& pack = packs_[h];
    const std::size_t begin = h == 0 ? 0 : first;
    const std::size_t end = h == 0 ? first : raw_total_;
    pack.raw = end - begin;
    if (pack.raw == 0) continue;
    std::vector<double> rows;
    dedup_rows(std::span(variances).subspan(begin * d, (end - begin) * d),
               dim, rows, counts);
    pack.unique = counts.size();
    pack.rep.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(d));
    pack.inv.resize(rows.size());
    pack.coef.resize(pack.unique);
    for (std::size_t j = 0; j < pack.unique; ++j) {
      double log_det = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        const double s = rows[j * d + k];
        pack.inv[j * d + k] = 1.0 / s;
        log_det += std::log(s);
      }
      pack.coef[j] = std::log(counts[j]) - log_det;
    }
  }
}

bool GaussianMixtureDensity::degenerate() const noexcept {
  if (packs_[0].unique != 1) return false;
  if (packs_[1].raw == 0) return true;
  return packs_[1].unique == 1 && rows_match(packs_[0].rep, packs_[1].rep);
}

std::size_t GaussianMixtureDensity::scratch_size() const noexcept {
  return std::max(packs_[0].unique, packs_[1].unique);
}

double GaussianMixtureDensity::exact_entropy() const {
  if (!degenerate()) {
    throw ModelError("exact entropy is only defined for a degenerate mixture");
  }
  double h = 0.0;
  for (double s : packs_[0].rep) h += std::log(std::numbers::pi * std::numbers::e * s);
  return h;
}

MixtureLogDensity GaussianMixtureDensity::log_density(
    std::span<const double> v, std::vector<double>& scratch) const {
  const std::size_t d = static_cast<std::size_t>(dim_);
  scratch.resize(scratch_size());
  double log_sum[2] = {0.0, 0.0};

  for (int h = 0; h < 2; ++h) {
    const Pack& pack = packs_[h];
    if (pack.raw == 0) break;
    const std::size_t m = pack.unique;
    double* __restrict e = scratch.data();
    const double* __restrict coef = pack.coef.data();
    const double* __restrict inv = pack.inv.data();

    double peak = -1e300;
    if (d == 1) {
      const double v0 = v[0];
      for (std::size_t j = 0; j < m; ++j) {
        const double t = coef[j] - v0 * inv[j];
        e[j] = t;
        peak = t > peak ? t : peak;
      }
    } else {
      for (std::size_t j = 0; j < m; ++j) {
        double dot = 0.0;
        for (std::size_t k = 0; k < d; ++k) dot += v[k] * inv[j * d + k];
        const double t = coef[j] - dot;
        e[j] = t;
        peak = t > peak ? t : peak;
      }
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) acc += std::exp(e[j] - peak);
    log_sum[h] = peak + std::log(acc);
  }

  const double n_log_pi = static_cast<double>(dim_) * kLogPi;
  MixtureLogDensity out;
  out.half = log_sum[0] - std::log(static_cast<double>(packs_[0].raw)) - n_log_pi;
  if (packs_[1].raw == 0) {
    out.full = out.half;
  } else {
    out.full = log_add(log_sum[0], log_sum[1]) -
               std::log(static_cast<double>(raw_total_)) - n_log_pi;
  }
  return out;
}

ShiftedMixtureDensity::ShiftedMixtureDensity(std::vector<double> base, int dim)
    : dim_(dim) {
  if (dim < 1) throw ModelError("mixture dimension must be at least 1");
  const std::size_t d = static_cast<std::size_t>(dim);
  if (base.empty() || base.size() % d != 0) {
    throw ModelError("base variance matrix must hold a whole number of rows");
  }
  for (double s : base) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw ModelError("base variances must be positive and finite");
    }
  }
  raw_total_ = base.size() / d;
  const std::size_t first = raw_total_ / 2 > 0 ? raw_total_ / 2 : raw_total_;

  std::vector<double> counts;
  for (int h = 0; h < 2; ++h) {
    Pack& pack = packs_[h];
    const std::size_t begin = h == 0 ? 0 : first;
    const std::size_t end = h == 0 ? first : raw_total_;
    pack.raw = end - begin;
    if (pack.raw == 0) continue;
    dedup_rows(std::span(base).subspan(begin * d, (end - begin) * d), dim,
               pack.base, counts);
    pack.unique = counts.size();
    pack.log_w.resize(pack.unique);
    for (std::size_t j = 0; j < pack.unique; ++j) pack.log_w[j] = std::log(counts[j]);
  }
}

bool ShiftedMixtureDensity::degenerate() const noexcept {
  if (packs_[0].unique != 1) return false;
  if (packs_[1].raw == 0) return true;
  return packs_[1].unique == 1 && rows_match(packs_[0].base, packs_[1].base);
}

std::size_t ShiftedMixtureDensity::scratch_size() const noexcept {
  return std::max(packs_[0].unique, packs_[1].unique);
}

double ShiftedMixtureDensity::exact_conditional_entropy(
    std::span<const double> offset) const {
  if (!degenerate()) {
    throw ModelError("exact conditional entropy needs a degenerate mixture");
  }
  double h = 0.0;
  for (std::size_t k = 0; k < offset.size(); ++k) {
    h += std::log(std::numbers::pi * std::numbers::e * (packs_[0].base[k] + offset[k]));
  }
  return h;
}

MixtureLogDensity ShiftedMixtureDensity::log_density(
    std::span<const double> v, std::span<const double> offset,
    std::vector<double>& scratch) const {
  const std::size_t d = static_cast<std::size_t>(dim_);
  scratch.resize(scratch_size());
  double log_sum[2] = {0.0, 0.0};

  for (int h = 0; h < 2; ++h) {
    const Pack& pack = packs_[h];
    if (pack.raw == 0) break;
    const std::size_t m = pack.unique;
    double* __restrict e = scratch.data();
    const double* __restrict base = pack.base.data();
    const double* __restrict log_w = pack.log_w.data();

    double peak = -1e300;
    if (d == 1) {
      const double v0 = v[0];
      const double a0 = offset[0];
      for (std::size_t j = 0; j < m; ++j) {
        const double s = base[j] + a0;
        const double t = log_w[j] - std::log(s) - v0 / s;
        e[j] = t;
        peak = t > peak ? t : peak;
      }
    } else {
      for (std::size_t j = 0; j < m; ++j) {
        double t = log_w[j];
        for (std::size_t k = 0; k < d; ++k) {
          const double s = base[j * d + k] + offset[k];
          t -= std::log(s) + v[k] / s;
        }
        e[j] = t;
        peak = t > peak ? t : peak;
      }
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) acc += std::exp(e[j] - peak);
    log_sum[h] = peak + std::log(acc);
  }

  const double n_log_pi = static_cast<double>(dim_) * kLogPi;
  MixtureLogDensity out;
  out.half = log_sum[0] - std::log(static_cast<double>(packs_[0].raw)) - n_log_pi;
  if (packs_[1].raw == 0) {
    out.full = out.half;
  } else {
    out.full = log_add(log_sum[0], log_sum[1]) -
               std::log(static_cast<double>(raw_total_)) - n_log_pi;
  }
  return out;
}

}  // namespace netcap
