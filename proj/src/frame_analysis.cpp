// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include "fbff/frame_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fbff {

namespace {

constexpr double kZeroGuard = 1e-300;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const CMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

void require_gabor_shape(const Signal& phi, std::size_t M, std::size_t Q, std::size_t R) {
  require(M > 0 && Q > 0 && R > 0, "Gabor parameters must be positive");
  require(phi.period() == M * Q * R, "Gabor prototype period " + std::to_string(phi.period()) +
                                         " differs from M*Q*R = " + std::to_string(M * Q * R));
}

}  // namespace

EigenDecomposition hermitian_eig_decompose(const CMatrix& h) {
  if (h.rows() != h.cols() || hermitian_defect(h) > 1e-10) {
    throw std::invalid_argument("hermitian_eigs: input is not Hermitian");
  }
  const std::size_t n = h.rows();
  CMatrix a = h;
  CMatrix v = CMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  const double threshold = 1e-13 * std::max(h.frobenius_norm(), std::numeric_limits<double>::min());
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Phase the q coordinate so the pivot becomes real, then rotate.
        const cplx w = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx gpp = c;
        const cplx gpq = s;
        const cplx gqp = -s * std::conj(w);
        const cplx gqq = c * std::conj(w);

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenDecomposition out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigs(const CMatrix& h) { return hermitian_eig_decompose(h).values; }

FrameBounds frame_bounds(const PolyphaseMatrix& phi) {
  FrameBounds out;
  out.A = std::numeric_limits<double>::infinity();
  out.B = 0.0;
  for (std::size_t p = 0; p < phi.period(); ++p) {
    const auto eigs = hermitian_eigs(gram(phi, static_cast<long long>(p)));
    const double lo = std::max(0.0, eigs.front());
    const double hi = std::max(0.0, eigs.back());
    out.per_root.emplace_back(lo, hi);
    out.A = std::min(out.A, lo);
    out.B = std::max(out.B, hi);
  }
  return out;
}

bool channel_is_projection(const Signal& phi, std::size_t M, double tol) {
  const auto v = decompose(phi, M);
  for (std::size_t p = 0; p < v.period(); ++p) {
    double sq = 0.0;
    for (const auto& value : v.eval(static_cast<long long>(p))) sq += std::norm(value);
    if (std::abs(sq - 1.0) > tol) return false;
  }
  return true;
}

FusionReport fusion_report(const FilterBank& fb, double tol) {
  const PolyphaseMatrix phi = matrix_of(fb);
  const std::size_t M = fb.downsample();
  const std::size_t N = fb.channels();
  const std::size_t P = fb.inner_period();

  FusionReport report;
  report.tolerance = tol;
  report.redundancy = Rational(static_cast<std::int64_t>(N), static_cast<std::int64_t>(M));
  report.bounds = frame_bounds(phi);
  for (std::size_t n = 0; n < N; ++n) {
    const bool proj = channel_is_projection(fb.filter(n), M, tol);
    report.channel_projection.push_back(proj);
    report.channel_rank.push_back(proj ? std::optional<std::size_t>(P) : std::nullopt);
  }

  const double A = report.bounds.A;
  const double B = report.bounds.B;
  report.is_tight = B > kZeroGuard && (B - A) / std::max(B, kZeroGuard) <= tol;

  const double target = to_double(report.redundancy);
  bool rows_ok = true;
  for (std::size_t p = 0; p < P && rows_ok; ++p) {
    const CMatrix g = gram(phi, static_cast<long long>(p));
    rows_ok = (g - target * CMatrix::identity(M)).max_abs() <= tol * std::max(1.0, target);
  }
  const bool columns_ok = std::all_of(report.channel_projection.begin(), report.channel_projection.end(),
                                      [](bool b) { return b; });
  report.is_puntf = rows_ok && columns_ok;
  return report;
}

ParsevalCheck verify_weighted_parseval(std::span<const WeightedProjection> projections, std::size_t dim,
                                       double tol) {
  require(dim > 0, "Parseval check needs a positive dimension");
  ParsevalCheck check;
  CMatrix total(dim, dim);
  for (const auto& proj : projections) {
    CMatrix pi(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const Signal image = proj.apply(Signal::delta(static_cast<long long>(j), dim));
      require(image.period() == dim, "projection changes dimension: " + std::to_string(dim) + " -> " +
                                         std::to_string(image.period()));
      for (std::size_t i = 0; i < dim; ++i) pi(i, j) = image.samples()[i];
    }
    check.idempotence_error = std::max(check.idempotence_error, (pi * pi - pi).max_abs());
    check.adjointness_error = std::max(check.adjointness_error, (pi - pi.adjoint()).max_abs());
    check.rank_error =
        std::max(check.rank_error, std::abs(pi.trace() - cplx(static_cast<double>(proj.rank), 0.0)));
    total += cplx(to_double(proj.weight), 0.0) * pi;
  }
  check.max_residual = (total - CMatrix::identity(dim)).max_abs();
  check.ok = check.max_residual <= tol && check.idempotence_error <= tol && check.adjointness_error <= tol &&
             check.rank_error <= tol * static_cast<double>(dim);
  return check;
}

FrameBounds gabor_frame_bounds(const Signal& phi, std::size_t M, std::size_t Q, std::size_t R) {
  require_gabor_shape(phi, M, Q, R);
  const ZakMatrix zak = zak_of(phi, M, R);
  FrameBounds out;
  out.A = std::numeric_limits<double>::infinity();
  out.B = 0.0;
  for (std::size_t p = 0; p < Q * R; ++p) {
    const auto energy = zak.row_energy(static_cast<long long>(p));
    const auto [lo, hi] = std::minmax_element(energy.begin(), energy.end());
    const double a = static_cast<double>(M) * *lo;
    const double b = static_cast<double>(M) * *hi;
    out.per_root.emplace_back(a, b);
    out.A = std::min(out.A, a);
    out.B = std::max(out.B, b);
  }
  return out;
}

bool gabor_channel_orthonormal(const Signal& phi, std::size_t M, std::size_t Q, std::size_t R, double tol) {
  require_gabor_shape(phi, M, Q, R);
  return channel_is_projection(phi, M, tol);
}

bool gabor_tightness(const Signal& phi, std::size_t M, std::size_t Q, std::size_t R, double tol) {
  require_gabor_shape(phi, M, Q, R);
  const double target = static_cast<double>(R) / static_cast<double>(M);

  // Zak-domain form: every row of the Zak matrix has squared norm R/M.
  const ZakMatrix zak = zak_of(phi, M, R);
  double freq_dev = 0.0;
  for (std::size_t p = 0; p < Q * R; ++p)
    for (double e : zak.row_energy(static_cast<long long>(p))) freq_dev = std::max(freq_dev, std::abs(e / target - 1.0));

  // Time-domain form: the R-translates of sqrt(M) phi[m + M .] are orthonormal.
  double time_dev = 0.0;
  const double root_m = std::sqrt(static_cast<double>(M));
  for (std::size_t m = 0; m < M; ++m) {
    std::vector<cplx> sub(Q * R);
    for (std::size_t k = 0; k < Q * R; ++k) sub[k] = root_m * phi.samples()[m + M * k];
    const Signal s(std::move(sub));
    for (std::size_t q = 0; q < Q; ++q) {
      const cplx c = inner(s, translate(s, static_cast<long long>(R * q)));
      time_dev = std::max(time_dev, std::abs(c - (q == 0 ? cplx(1.0) : cplx(0.0))));
    }
  }

  const bool freq_ok = freq_dev <= tol;
  const bool time_ok = time_dev <= tol;
  // The two deviations bound each other up to a length-Q DFT.
  const double slack = 4.0 * static_cast<double>(Q * R);
  if (freq_ok != time_ok && std::max(freq_dev, time_dev) > slack * tol) {
    throw std::logic_error("gabor_tightness: Zak-domain and time-domain forms disagree");
  }
  return freq_ok && time_ok;
}

}  // namespace fbff
