// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include "fbff/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fbff {

namespace {

double inf_norm(std::span<const double> v) {
  double worst = 0.0;
  for (double x : v) worst = std::max(worst, std::abs(x));
  return worst;
}

double sq_norm(std::span<const double> v) { return std::inner_product(v.begin(), v.end(), v.begin(), 0.0); }

std::vector<double> eliminate(RealMatrix a, std::vector<double> b) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == 0.0 || !std::isfinite(a(pivot, col))) {
      throw SingularMatrixError("singular matrix at column " + std::to_string(col));
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / a(col, col);
      if (factor == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double sum = b[i];
    for (std::size_t j = i + 1; j < n; ++j) sum -= a(i, j) * x[j];
    x[i] = sum / a(i, i);
  }
  return x;
}

}  // namespace

std::vector<double> RealMatrix::apply(std::span<const double> x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) sum += (*this)(i, j) * x[j];
    out[i] = sum;
  }
  return out;
}

std::vector<double> solve_linear(const RealMatrix& a, std::span<const double> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
  RealMatrix scaled = a;
  std::vector<double> rhs(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    double row_max = 0.0;
    for (std::size_t j = 0; j < n; ++j) row_max = std::max(row_max, std::abs(a(i, j)));
    if (row_max == 0.0) throw SingularMatrixError("zero row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) /= row_max;
    rhs[i] /= row_max;
  }
  std::vector<double> x = eliminate(scaled, rhs);
  std::vector<double> r = scaled.apply(x);
  for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - r[i];
  const std::vector<double> dx = eliminate(scaled, r);
  for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];
  return x;
}

LevenbergMarquardtResult levenberg_marquardt(const ResidualFunction& f, std::vector<double> x0,
                                             const LevenbergMarquardtOptions& options) {
  LevenbergMarquardtResult out;
  out.x = std::move(x0);
  out.residual = f(out.x);
  const std::size_t n = out.x.size();
  const std::size_t m = out.residual.size();
  double cost = sq_norm(out.residual);
  double lambda = 1e-3;

  while (out.iterations < options.max_iterations) {
    out.residual_norm = inf_norm(out.residual);
    if (out.residual_norm <= options.tolerance) {
      out.converged = true;
      return out;
    }
    ++out.iterations;

    RealMatrix jac(m, n);
    std::vector<double> probe = out.x;
    for (std::size_t j = 0; j < n; ++j) {
      const double h = options.relative_step * std::max(1.0, std::abs(out.x[j]));
      probe[j] = out.x[j] + h;
      const auto fp = f(probe);
      probe[j] = out.x[j] - h;
      const auto fm = f(probe);
      probe[j] = out.x[j];
      for (std::size_t i = 0; i < m; ++i) jac(i, j) = (fp[i] - fm[i]) / (2.0 * h);
    }

    RealMatrix jtj(n, n);
    std::vector<double> jtr(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) sum += jac(i, a) * jac(i, b);
        jtj(a, b) = sum;
      }
      double sum = 0.0;
      for (std::size_t i = 0; i < m; ++i) sum += jac(i, a) * out.residual[i];
      jtr[a] = -sum;
    }

    bool accepted = false;
    for (int attempt = 0; attempt < 30 && !accepted; ++attempt) {
      RealMatrix damped = jtj;
      for (std::size_t a = 0; a < n; ++a) damped(a, a) += lambda * std::max(jtj(a, a), 1e-12);
      std::vector<double> step;
      try {
        step = solve_linear(damped, jtr);
      } catch (const SingularMatrixError&) {
        lambda *= 10.0;
        continue;
      }
      std::vector<double> trial = out.x;
      for (std::size_t a = 0; a < n; ++a) trial[a] += step[a];
      auto trial_residual = f(trial);
      const double trial_cost = sq_norm(trial_residual);
      if (std::isfinite(trial_cost) && trial_cost < cost) {
        out.x = std::move(trial);
        out.residual = std::move(trial_residual);
        cost = trial_cost;
        lambda = std::max(lambda / 3.0, 1e-15);
        accepted = true;
      } else {
        lambda *= 4.0;
      }
    }
    if (!accepted) break;  // stalled at a local minimum
  }
  out.residual_norm = inf_norm(out.residual);
  out.converged = out.residual_norm <= options.tolerance;
  return out;
}

}  // namespace fbff
