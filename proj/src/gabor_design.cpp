// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include "fbff/gabor_design.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <random>

#include "fbff/polyphase.hpp"

namespace fbff {

GaborSystem::GaborSystem(Signal prototype, std::size_t M, std::size_t Q, std::size_t R)
    : prototype_(std::move(prototype)), M_(M), Q_(Q), R_(R) {
  require(M > 0 && Q > 0 && R > 0, "Gabor parameters must be positive");
  require(prototype_.period() == M * Q * R, "Gabor prototype period " + std::to_string(prototype_.period()) +
                                                " differs from M*Q*R = " + std::to_string(M * Q * R));
}

FilterBank gabor_bank(const GaborSystem& sys) {
  std::vector<Signal> filters;
  filters.reserve(sys.channels());
  for (std::size_t n = 0; n < sys.channels(); ++n) {
    filters.push_back(modulate(sys.prototype(), static_cast<long long>(sys.Q() * n)));
  }
  return FilterBank(std::move(filters), sys.M());
}

std::vector<std::vector<double>> zak_row_sums(const GaborSystem& sys) {
  const ZakMatrix zak = zak_of(sys.prototype(), sys.M(), sys.R());
  const std::size_t roots = sys.Q() * sys.R();
  std::vector<std::vector<double>> out(sys.M(), std::vector<double>(roots));
  for (std::size_t p = 0; p < roots; ++p) {
    const auto energy = zak.row_energy(static_cast<long long>(p));
    for (std::size_t m = 0; m < sys.M(); ++m) out[m][p] = static_cast<double>(sys.M()) * energy[m];
  }
  return out;
}

namespace {

double falling_factorial(std::size_t n, std::size_t k) {
  double out = 1.0;
  for (std::size_t i = 0; i < k; ++i) out *= static_cast<double>(n - i);
  return out;
}

double aperiodic_correlation(std::span<const double> s, std::size_t lag) {
  double sum = 0.0;
  for (std::size_t i = 0; i + lag < s.size(); ++i) sum += s[i] * s[i + lag];
  return sum;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double inf_norm(std::span<const double> v) {
  double worst = 0.0;
  for (double x : v) worst = std::max(worst, std::abs(x));
  return worst;
}

struct RestartOutcome {
  bool found = false;
  std::vector<double> taps;
  double residual = 0.0;
  std::size_t iterations = 0;
};

RestartOutcome run_restart(std::size_t T, std::uint64_t seed, std::size_t index, const MaxFlatOptions& options) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> start(T);
  for (auto& v : start) v = gauss(rng);
  double norm = 0.0;
  for (double v : start) norm += v * v;
  norm = std::sqrt(norm);
  for (auto& v : start) v *= std::sqrt(0.5) / std::max(norm, 1e-300);

  RestartOutcome out;
  LevenbergMarquardtResult fit;
  try {
    fit = levenberg_marquardt([](std::span<const double> even) { return tightness_residual(even); }, start,
                              options.solver);
  } catch (const SingularMatrixError&) {
    return out;
  }
  out.iterations = fit.iterations;

  MaxFlatProblem problem = MaxFlatProblem::from_even(fit.x);
  std::vector<double> taps = problem.taps();
  double sq = 0.0;
  for (double v : taps) sq += v * v;
  const double scale = 1.0 / std::sqrt(sq);
  for (auto& v : taps) v *= scale;
  for (auto& v : problem.even_coeffs) v *= scale;
  for (auto& v : problem.odd_coeffs) v *= scale;

  out.residual = inf_norm(tightness_residual(problem.even_coeffs, problem.odd_coeffs));
  out.found = std::isfinite(out.residual) && out.residual <= options.acceptance;
  out.taps = std::move(taps);
  return out;
}

}  // namespace

RealMatrix flatness_matrix(std::size_t T, bool odd) {
  RealMatrix out(T, T);
  for (std::size_t k = 0; k < T; ++k)
    for (std::size_t p = 0; p < T; ++p) {
      const std::size_t degree = 2 * p + (odd ? 1 : 0);
      out(k, p) = degree >= k ? falling_factorial(degree, k) : 0.0;
    }
  return out;
}

std::vector<double> flatness_solve_odd(std::span<const double> even) {
  const std::size_t T = even.size();
  if (T == 0) throw std::invalid_argument("flatness system needs T >= 1");
  std::vector<double> rhs = flatness_matrix(T, false).apply(even);
  for (auto& v : rhs) v = -v;
  return solve_linear(flatness_matrix(T, true), rhs);
}

MaxFlatProblem MaxFlatProblem::from_even(std::span<const double> even) {
  MaxFlatProblem out;
  out.T = even.size();
  out.even_coeffs.assign(even.begin(), even.end());
  out.odd_coeffs = flatness_solve_odd(even);
  out.flatness_matrix = ::fbff::flatness_matrix(out.T, true);
  return out;
}

std::vector<double> MaxFlatProblem::taps() const {
  std::vector<double> out(2 * T);
  for (std::size_t p = 0; p < T; ++p) {
    out[2 * p] = even_coeffs[p];
    out[2 * p + 1] = odd_coeffs[p];
  }
  return out;
}

std::vector<double> tightness_residual(std::span<const double> even, std::span<const double> odd) {
  if (even.size() != odd.size()) throw std::invalid_argument("even and odd parts must have equal length");
  const std::size_t lags = (even.size() + 1) / 2;
  std::vector<double> out;
  out.reserve(2 * lags);
  for (const auto part : {even, odd}) {
    for (std::size_t q = 0; q < lags; ++q) out.push_back(aperiodic_correlation(part, 2 * q) - (q == 0 ? 0.5 : 0.0));
  }
  return out;
}

std::vector<double> tightness_residual(std::span<const double> even) {
  const std::vector<double> odd = flatness_solve_odd(even);
  return tightness_residual(even, odd);
}

MaxFlatDesign design_maxflat(std::size_t T, std::uint64_t seed, const MaxFlatOptions& options) {
  if (T == 0) throw std::invalid_argument("max-flat design needs T >= 1");
  if (options.restarts == 0) throw std::invalid_argument("max-flat design needs at least one restart");
  const std::size_t threads = std::max<std::size_t>(1, options.threads);

  MaxFlatDesign design;
  for (std::size_t first = 0; first < options.restarts; first += threads) {
    const std::size_t last = std::min(options.restarts, first + threads);
    std::vector<RestartOutcome> batch(last - first);
    if (threads == 1) {
      batch[0] = run_restart(T, seed, first, options);
    } else {
      std::vector<std::future<RestartOutcome>> jobs;
      for (std::size_t i = first; i < last; ++i) {
        jobs.push_back(std::async(std::launch::async, run_restart, T, seed, i, std::cref(options)));
      }
      for (std::size_t i = 0; i < jobs.size(); ++i) batch[i] = jobs[i].get();
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      design.restarts_tried = first + i + 1;
      design.restart = first + i;
      design.residual = batch[i].residual;
      design.iterations = batch[i].iterations;
      if (batch[i].found) {
        design.found = true;
        design.taps = std::move(batch[i].taps);
        return design;
      }
    }
  }
  return design;
}

Signal maxflat_prototype(std::span<const double> taps, std::size_t Q) {
  require(4 * Q >= taps.size(), "prototype period 4Q must hold all " + std::to_string(taps.size()) + " taps");
  std::vector<cplx> values(taps.begin(), taps.end());
  return embed_taps(values, 4 * Q);
}

}  // namespace fbff
