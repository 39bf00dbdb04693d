// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace fbff {

/// Dense row-major real matrix.
class RealMatrix {
 public:
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<double> apply(std::span<const double> x) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gaussian elimination with row equilibration and partial pivoting, followed
/// by one step of iterative refinement.
std::vector<double> solve_linear(const RealMatrix& a, std::span<const double> b);

using ResidualFunction = std::function<std::vector<double>(std::span<const double>)>;

struct LevenbergMarquardtOptions {
  std::size_t max_iterations = 500;
  double tolerance = 1e-10;       // on the infinity norm of the residual
  double relative_step = 1e-6;    // central difference step, scaled by max(1, |x|)
};

struct LevenbergMarquardtResult {
  std::vector<double> x;
  std::vector<double> residual;
  double residual_norm = 0.0;  // infinity norm
  std::size_t iterations = 0;
  bool converged = false;
};

LevenbergMarquardtResult levenberg_marquardt(const ResidualFunction& f, std::vector<double> x0,
                                             const LevenbergMarquardtOptions& options = {});

}  // namespace fbff
