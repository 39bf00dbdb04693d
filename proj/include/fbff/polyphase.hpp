// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <vector>

#include "fbff/cyclic_poly.hpp"
#include "fbff/dense_matrix.hpp"
#include "fbff/signal.hpp"

namespace fbff {

/// The M polyphase components phi^{(m)}(z) = sum_p phi[m + M p] z^{-p} of one filter.
class PolyphaseVector {
 public:
  explicit PolyphaseVector(std::vector<CyclicPoly> components);

  std::size_t rate() const { return components_.size(); }
  std::size_t period() const { return components_.front().period(); }
  const CyclicPoly& component(std::size_t m) const { return components_.at(m); }
  const std::vector<CyclicPoly>& components() const { return components_; }

  /// The vector in C^M at z = e^{2 pi j p / P}.
  std::vector<cplx> eval(long long p) const;

 private:
  std::vector<CyclicPoly> components_;
};

PolyphaseVector decompose(const Signal& phi, std::size_t M);
Signal reconstruct(const PolyphaseVector& v);

/// M x N grid of cyclic polynomials; row m is a phase, column n a channel.
/// Zero-column matrices are allowed so that union has an identity element.
class PolyphaseMatrix {
 public:
  PolyphaseMatrix(std::size_t rows, std::size_t cols, std::size_t period);

  /// Embeds a constant scalar matrix as degree-zero entries.
  static PolyphaseMatrix constant(const CMatrix& value, std::size_t period);
  static PolyphaseMatrix identity(std::size_t n, std::size_t period);
  static PolyphaseMatrix from_columns(const std::vector<PolyphaseVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t period() const { return period_; }

  const CyclicPoly& at(std::size_t m, std::size_t n) const { return entries_.at(m * cols_ + n); }
  void set(std::size_t m, std::size_t n, CyclicPoly value);

  PolyphaseVector column(std::size_t n) const;

  bool operator==(const PolyphaseMatrix& other) const = default;
  /// Largest coefficientwise difference; shapes must match.
  double distance(const PolyphaseMatrix& other) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t period_;
  std::vector<CyclicPoly> entries_;
};

/// Column n is decompose(phi_n, M).
PolyphaseMatrix matrix_of(const FilterBank& fb);
/// Inverse of matrix_of: rebuilds the filters column by column.
FilterBank bank_of(const PolyphaseMatrix& phi);

/// N x M matrix with entries [Phi_{m,n}(z^{-1})]^*.
PolyphaseMatrix adjoint(const PolyphaseMatrix& phi);
CMatrix eval(const PolyphaseMatrix& phi, long long p);
/// Phi(z) Phi^*(z) at z = e^{2 pi j p / P}.
CMatrix gram(const PolyphaseMatrix& phi, long long p);

/// M x R matrix with entries phi^{(m)}(e^{-2 pi j r / R} z), stored materialized.
class ZakMatrix {
 public:
  ZakMatrix(std::size_t rows, std::size_t cols, std::vector<CyclicPoly> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t period() const { return entries_.front().period(); }
  const CyclicPoly& at(std::size_t m, std::size_t r) const { return entries_.at(m * cols_ + r); }

  CMatrix eval(long long p) const;
  /// sum_r |entry(m, r)|^2 at root p, one value per row.
  std::vector<double> row_energy(long long p) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CyclicPoly> entries_;
};

ZakMatrix zak_of(const Signal& phi, std::size_t M, std::size_t R);

/// (1/P) sum_p <phi(e^{2 pi j p/P}), psi(e^{2 pi j p/P})>_{C^M}.
cplx pp_inner(const Signal& phi, const Signal& psi, std::size_t M);

}  // namespace fbff
