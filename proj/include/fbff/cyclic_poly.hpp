// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <span>
#include <vector>

#include "fbff/types.hpp"

namespace fbff {

/// Element of C[z]/<z^P - 1>.
///
/// Index p of the coefficient array holds the coefficient of z^{-p}; positive
/// powers are stored through the ring relation z^{+p} = z^{-(P-p)}. Values
/// are immutable once built, and every binary operation requires both
/// operands to share a period.
class CyclicPoly {
 public:
  /// The zero polynomial of the given period.
  explicit CyclicPoly(std::size_t period);
  explicit CyclicPoly(std::vector<cplx> coeffs);

  static CyclicPoly constant(cplx value, std::size_t period);
  /// value * z^{-power}; power is taken modulo the period.
  static CyclicPoly monomial(cplx value, long long power, std::size_t period);

  std::size_t period() const { return coeffs_.size(); }
  std::span<const cplx> coeffs() const { return coeffs_; }
  /// Coefficient of z^{-p}, p taken modulo the period.
  cplx operator[](long long p) const { return coeffs_[wrap_index(p, coeffs_.size())]; }

  /// Value at z = e^{2 pi j p / P}.
  cplx eval_at_root(long long p) const;
  /// Values at every P-th root of unity; a nonunitary length-P DFT of the coefficients.
  std::vector<cplx> eval_all_roots() const;

  /// Substitution z -> e^{-2 pi j r / R} z. Requires R | P.
  CyclicPoly twist(long long r, std::size_t R) const;
  /// [a(z^{-1})]^*, the entry map of a polyphase adjoint.
  CyclicPoly conj_reverse() const;

  CyclicPoly& operator+=(const CyclicPoly& other);
  CyclicPoly& operator-=(const CyclicPoly& other);
  CyclicPoly& operator*=(cplx scale);

  friend CyclicPoly operator+(CyclicPoly a, const CyclicPoly& b) { return a += b; }
  friend CyclicPoly operator-(CyclicPoly a, const CyclicPoly& b) { return a -= b; }
  friend CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b);
  friend CyclicPoly operator*(cplx s, CyclicPoly a) { return a *= s; }
  friend CyclicPoly operator*(CyclicPoly a, cplx s) { return a *= s; }

  bool operator==(const CyclicPoly& other) const = default;

  /// Largest coefficientwise modulus of the difference; periods must match.
  double distance(const CyclicPoly& other) const;

 private:
  std::vector<cplx> coeffs_;
};

CyclicPoly add(const CyclicPoly& a, const CyclicPoly& b);
CyclicPoly mul(const CyclicPoly& a, const CyclicPoly& b);

}  // namespace fbff
