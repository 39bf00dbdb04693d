// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include "fbff/cyclic_poly.hpp"

#include <algorithm>
#include <cmath>

namespace fbff {

namespace {

void require_same_period(const CyclicPoly& a, const CyclicPoly& b) {
  require(a.period() == b.period(), "cyclic polynomial period mismatch: " + std::to_string(a.period()) +
                                        " vs " + std::to_string(b.period()));
}

}  // namespace

CyclicPoly::CyclicPoly(std::size_t period) : coeffs_(period) {
  require(period > 0, "cyclic polynomial period must be positive");
}

CyclicPoly::CyclicPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  require(!coeffs_.empty(), "cyclic polynomial period must be positive");
}

CyclicPoly CyclicPoly::constant(cplx value, std::size_t period) {
  CyclicPoly out(period);
  out.coeffs_[0] = value;
  return out;
}

CyclicPoly CyclicPoly::monomial(cplx value, long long power, std::size_t period) {
  CyclicPoly out(period);
  out.coeffs_[wrap_index(power, period)] = value;
  return out;
}

cplx CyclicPoly::eval_at_root(long long p) const {
  const std::size_t n = period();
  const std::size_t base = wrap_index(p, n);
  cplx sum{0.0, 0.0};
  for (std::size_t q = 0; q < n; ++q) {
    // z^{-q} at z = e^{2 pi j p / P}
    sum += coeffs_[q] * root_of_unity(-static_cast<long long>((base * q) % n), n);
  }
  return sum;
}

std::vector<cplx> CyclicPoly::eval_all_roots() const {
  std::vector<cplx> out(period());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = eval_at_root(static_cast<long long>(p));
  return out;
}

CyclicPoly CyclicPoly::twist(long long r, std::size_t R) const {
  const std::size_t n = period();
  require(R > 0 && n % R == 0, "twist requires R | P (R=" + std::to_string(R) + ", P=" + std::to_string(n) + ")");
  CyclicPoly out(n);
  const std::size_t rr = wrap_index(r, R);
  for (std::size_t p = 0; p < n; ++p) {
    out.coeffs_[p] = coeffs_[p] * root_of_unity(static_cast<long long>((rr * p) % R), R);
  }
  return out;
}

CyclicPoly CyclicPoly::conj_reverse() const {
  const std::size_t n = period();
  CyclicPoly out(n);
  for (std::size_t p = 0; p < n; ++p) out.coeffs_[p] = std::conj(coeffs_[(n - p) % n]);
  return out;
}

CyclicPoly& CyclicPoly::operator+=(const CyclicPoly& other) {
  require_same_period(*this, other);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] += other.coeffs_[p];
  return *this;
}

CyclicPoly& CyclicPoly::operator-=(const CyclicPoly& other) {
  require_same_period(*this, other);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] -= other.coeffs_[p];
  return *this;
}

CyclicPoly& CyclicPoly::operator*=(cplx scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b) {
  require_same_period(a, b);
  const std::size_t n = a.period();
  CyclicPoly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == cplx{}) continue;
    for (std::size_t k = 0; k < n; ++k) out.coeffs_[(i + k) % n] += a.coeffs_[i] * b.coeffs_[k];
  }
  return out;
}

double CyclicPoly::distance(const CyclicPoly& other) const {
  require_same_period(*this, other);
  double worst = 0.0;
  for (std::size_t p = 0; p < coeffs_.size(); ++p) worst = std::max(worst, std::abs(coeffs_[p] - other.coeffs_[p]));
  return worst;
}

CyclicPoly add(const CyclicPoly& a, const CyclicPoly& b) { return a + b; }
CyclicPoly mul(const CyclicPoly& a, const CyclicPoly& b) { return a * b; }

}  // namespace fbff
