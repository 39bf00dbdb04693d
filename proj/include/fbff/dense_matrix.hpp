// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <span>
#include <vector>

#include "fbff/types.hpp"

namespace fbff {

/// Small row-major complex matrix for per-root and oracle computations.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major list of rows; all rows must have the same length.
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  cplx operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const cplx> data() const { return data_; }

  CMatrix adjoint() const;
  double frobenius_norm() const;
  /// Largest entrywise modulus.
  double max_abs() const;
  cplx trace() const;

  std::vector<cplx> apply(std::span<const cplx> x) const;
  std::vector<cplx> column(std::size_t j) const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx scale);
  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// max |H - H^H| relative to max(1, max |H|).
double hermitian_defect(const CMatrix& h);

}  // namespace fbff
