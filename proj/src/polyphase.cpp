// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include "fbff/polyphase.hpp"

#include <algorithm>

namespace fbff {

PolyphaseVector::PolyphaseVector(std::vector<CyclicPoly> components) : components_(std::move(components)) {
  require(!components_.empty(), "polyphase vector needs at least one component");
  for (const auto& c : components_) require(c.period() == period(), "polyphase components must share a period");
}

std::vector<cplx> PolyphaseVector::eval(long long p) const {
  std::vector<cplx> out;
  out.reserve(rate());
  for (const auto& c : components_) out.push_back(c.eval_at_root(p));
  return out;
}

PolyphaseVector decompose(const Signal& phi, std::size_t M) {
  require(M > 0 && phi.period() % M == 0,
          "rate " + std::to_string(M) + " does not divide period " + std::to_string(phi.period()));
  const std::size_t P = phi.period() / M;
  std::vector<CyclicPoly> comps;
  comps.reserve(M);
  for (std::size_t m = 0; m < M; ++m) {
    std::vector<cplx> coeffs(P);
    for (std::size_t p = 0; p < P; ++p) coeffs[p] = phi.samples()[m + M * p];
    comps.emplace_back(std::move(coeffs));
  }
  return PolyphaseVector(std::move(comps));
}

Signal reconstruct(const PolyphaseVector& v) {
  const std::size_t M = v.rate();
  const std::size_t P = v.period();
  std::vector<cplx> out(M * P);
  for (std::size_t m = 0; m < M; ++m)
    for (std::size_t p = 0; p < P; ++p) out[m + M * p] = v.component(m).coeffs()[p];
  return Signal(std::move(out));
}

PolyphaseMatrix::PolyphaseMatrix(std::size_t rows, std::size_t cols, std::size_t period)
    : rows_(rows), cols_(cols), period_(period), entries_(rows * cols, CyclicPoly(period)) {
  require(rows > 0, "polyphase matrix needs at least one row");
}

PolyphaseMatrix PolyphaseMatrix::constant(const CMatrix& value, std::size_t period) {
  PolyphaseMatrix out(value.rows(), value.cols(), period);
  for (std::size_t m = 0; m < value.rows(); ++m)
    for (std::size_t n = 0; n < value.cols(); ++n) out.set(m, n, CyclicPoly::constant(value(m, n), period));
  return out;
}

PolyphaseMatrix PolyphaseMatrix::identity(std::size_t n, std::size_t period) {
  return constant(CMatrix::identity(n), period);
}

PolyphaseMatrix PolyphaseMatrix::from_columns(const std::vector<PolyphaseVector>& columns) {
  require(!columns.empty(), "from_columns needs at least one column");
  PolyphaseMatrix out(columns.front().rate(), columns.size(), columns.front().period());
  for (std::size_t n = 0; n < columns.size(); ++n) {
    require(columns[n].rate() == out.rows_ && columns[n].period() == out.period_, "column shape mismatch");
    for (std::size_t m = 0; m < out.rows_; ++m) out.set(m, n, columns[n].component(m));
  }
  return out;
}

void PolyphaseMatrix::set(std::size_t m, std::size_t n, CyclicPoly value) {
  require(value.period() == period_, "entry period differs from matrix period");
  entries_.at(m * cols_ + n) = std::move(value);
}

PolyphaseVector PolyphaseMatrix::column(std::size_t n) const {
  std::vector<CyclicPoly> comps;
  comps.reserve(rows_);
  for (std::size_t m = 0; m < rows_; ++m) comps.push_back(at(m, n));
  return PolyphaseVector(std::move(comps));
}

double PolyphaseMatrix::distance(const PolyphaseMatrix& other) const {
  require(rows_ == other.rows_ && cols_ == other.cols_ && period_ == other.period_, "matrix shape mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k) worst = std::max(worst, entries_[k].distance(other.entries_[k]));
  return worst;
}

PolyphaseMatrix matrix_of(const FilterBank& fb) {
  PolyphaseMatrix out(fb.downsample(), fb.channels(), fb.inner_period());
  for (std::size_t n = 0; n < fb.channels(); ++n) {
    const auto col = decompose(fb.filter(n), fb.downsample());
    for (std::size_t m = 0; m < fb.downsample(); ++m) out.set(m, n, col.component(m));
  }
  return out;
}

FilterBank bank_of(const PolyphaseMatrix& phi) {
  std::vector<Signal> filters;
  filters.reserve(phi.cols());
  for (std::size_t n = 0; n < phi.cols(); ++n) filters.push_back(reconstruct(phi.column(n)));
  return FilterBank(std::move(filters), phi.rows());
}

PolyphaseMatrix adjoint(const PolyphaseMatrix& phi) {
  require(phi.cols() > 0, "adjoint of a zero-column matrix is undefined");
  PolyphaseMatrix out(phi.cols(), phi.rows(), phi.period());
  for (std::size_t m = 0; m < phi.rows(); ++m)
    for (std::size_t n = 0; n < phi.cols(); ++n) out.set(n, m, phi.at(m, n).conj_reverse());
  return out;
}

CMatrix eval(const PolyphaseMatrix& phi, long long p) {
  CMatrix out(phi.rows(), phi.cols());
  for (std::size_t m = 0; m < phi.rows(); ++m)
    for (std::size_t n = 0; n < phi.cols(); ++n) out(m, n) = phi.at(m, n).eval_at_root(p);
  return out;
}

CMatrix gram(const PolyphaseMatrix& phi, long long p) {
  const CMatrix e = eval(phi, p);
  CMatrix g = e * e.adjoint();
  // Symmetrize so downstream eigensolvers see an exactly Hermitian matrix.
  for (std::size_t i = 0; i < g.rows(); ++i) {
    g(i, i) = g(i, i).real();
    for (std::size_t j = i + 1; j < g.cols(); ++j) g(j, i) = std::conj(g(i, j));
  }
  return g;
}

ZakMatrix::ZakMatrix(std::size_t rows, std::size_t cols, std::vector<CyclicPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(rows_ > 0 && cols_ > 0 && entries_.size() == rows_ * cols_, "Zak matrix shape mismatch");
}

CMatrix ZakMatrix::eval(long long p) const {
  CMatrix out(rows_, cols_);
  for (std::size_t m = 0; m < rows_; ++m)
    for (std::size_t r = 0; r < cols_; ++r) out(m, r) = at(m, r).eval_at_root(p);
  return out;
}

std::vector<double> ZakMatrix::row_energy(long long p) const {
  std::vector<double> out(rows_);
  for (std::size_t m = 0; m < rows_; ++m) {
    double sum = 0.0;
    for (std::size_t r = 0; r < cols_; ++r) sum += std::norm(at(m, r).eval_at_root(p));
    out[m] = sum;
  }
  return out;
}

ZakMatrix zak_of(const Signal& phi, std::size_t M, std::size_t R) {
  const auto v = decompose(phi, M);
  require(R > 0 && v.period() % R == 0,
          "Zak redundancy " + std::to_string(R) + " does not divide inner period " + std::to_string(v.period()));
  std::vector<CyclicPoly> entries;
  entries.reserve(M * R);
  for (std::size_t m = 0; m < M; ++m)
    for (std::size_t r = 0; r < R; ++r) entries.push_back(v.component(m).twist(static_cast<long long>(r), R));
  return ZakMatrix(M, R, std::move(entries));
}

cplx pp_inner(const Signal& phi, const Signal& psi, std::size_t M) {
  require(phi.period() == psi.period(), "pp_inner period mismatch");
  const auto a = decompose(phi, M);
  const auto b = decompose(psi, M);
  const std::size_t P = a.period();
  cplx sum{};
  for (std::size_t m = 0; m < M; ++m) {
    const auto ea = a.component(m).eval_all_roots();
    const auto eb = b.component(m).eval_all_roots();
    for (std::size_t p = 0; p < P; ++p) sum += ea[p] * std::conj(eb[p]);
  }
  return sum / static_cast<double>(P);
}

}  // namespace fbff
