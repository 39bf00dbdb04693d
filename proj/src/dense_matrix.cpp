// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include "fbff/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace fbff {

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require(row.size() == cols_, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double CMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& v : data_) sum += std::norm(v);
  return std::sqrt(sum);
}

double CMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto& v : data_) worst = std::max(worst, std::abs(v));
  return worst;
}

cplx CMatrix::trace() const {
  cplx sum{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
  return sum;
}

std::vector<cplx> CMatrix::apply(std::span<const cplx> x) const {
  require(x.size() == cols_, "matrix-vector size mismatch");
  std::vector<cplx> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    cplx sum{};
    for (std::size_t j = 0; j < cols_; ++j) sum += (*this)(i, j) * x[j];
    out[i] = sum;
  }
  return out;
}

std::vector<cplx> CMatrix::column(std::size_t j) const {
  std::vector<cplx> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require(a.cols_ == b.rows_, "matrix product shape mismatch");
  CMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i0 = 0; i0 < a.rows(); ++i0)
    for (std::size_t j0 = 0; j0 < a.cols(); ++j0)
      for (std::size_t i1 = 0; i1 < b.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < b.cols(); ++j1)
          out(i0 * b.rows() + i1, j0 * b.cols() + j1) = a(i0, j0) * b(i1, j1);
  return out;
}

double hermitian_defect(const CMatrix& h) {
  if (h.rows() != h.cols()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i; j < h.cols(); ++j) worst = std::max(worst, std::abs(h(i, j) - std::conj(h(j, i))));
  return worst / std::max(1.0, h.max_abs());
}

}  // namespace fbff
