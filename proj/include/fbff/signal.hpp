// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <span>
#include <vector>

#include "fbff/types.hpp"

namespace fbff {

/// A P-periodic complex sequence; indexing wraps modulo P.
class Signal {
 public:
  explicit Signal(std::size_t period);
  explicit Signal(std::vector<cplx> samples);

  static Signal delta(long long k, std::size_t period);

  std::size_t period() const { return samples_.size(); }
  std::span<const cplx> samples() const { return samples_; }
  cplx operator[](long long k) const { return samples_[wrap_index(k, samples_.size())]; }

  double norm() const;

  Signal& operator+=(const Signal& other);
  Signal& operator-=(const Signal& other);
  Signal& operator*=(cplx scale);
  friend Signal operator+(Signal a, const Signal& b) { return a += b; }
  friend Signal operator-(Signal a, const Signal& b) { return a -= b; }
  friend Signal operator*(cplx s, Signal a) { return a *= s; }

  bool operator==(const Signal& other) const = default;

 private:
  std::vector<cplx> samples_;
};

/// <x, y> = sum_k x[k] conj(y[k]); linear in the first argument.
cplx inner(const Signal& x, const Signal& y);

/// Largest samplewise modulus of x - y.
double max_abs_diff(const Signal& x, const Signal& y);

/// Nonunitary DFT, (F y)[p] = sum_q y[q] e^{-2 pi j p q / P}, by direct summation.
std::vector<cplx> dft(std::span<const cplx> y);

Signal circ_convolve(const Signal& x, const Signal& h);
Signal upsample(const Signal& y, std::size_t M);
Signal downsample(const Signal& x, std::size_t M);
/// (T^k x)[n] = x[n - k].
Signal translate(const Signal& x, long long k);
/// (M^p x)[q] = e^{2 pi j p q / P} x[q].
Signal modulate(const Signal& x, long long p);
/// Conjugate time reversal, x'[k] = conj(x[-k]).
Signal involution(const Signal& x);
/// Folds x onto a divisor of its period: out[k] = sum_m x[k + target_period * m].
Signal periodize(const Signal& x, std::size_t target_period);
/// Zero-extends (or folds, when shorter than the taps) a finite tap list onto a period.
Signal embed_taps(std::span<const cplx> taps, std::size_t period);

/// max_k |<x, T^{step k} x> - delta_k| over the distinct translates; zero iff the
/// step-translates of x are orthonormal. Requires step | period.
double translate_orthonormality_defect(const Signal& x, std::size_t step);

/// N filters of period M*P sharing a downsampling rate M.
class FilterBank {
 public:
  FilterBank(std::vector<Signal> filters, std::size_t downsample);

  std::size_t channels() const { return filters_.size(); }
  std::size_t downsample() const { return downsample_; }
  std::size_t inner_period() const { return inner_period_; }
  std::size_t filter_period() const { return downsample_ * inner_period_; }
  const std::vector<Signal>& filters() const { return filters_; }
  const Signal& filter(std::size_t n) const { return filters_.at(n); }

  bool operator==(const FilterBank& other) const = default;

 private:
  std::vector<Signal> filters_;
  std::size_t downsample_;
  std::size_t inner_period_;
};

/// Phi{y_n} = sum_n phi_n * (up_M y_n).
Signal synthesis_apply(const FilterBank& fb, std::span<const Signal> inputs);
/// Phi^* x = { down_M (phi_n' * x) }.
std::vector<Signal> analysis_apply(const FilterBank& fb, const Signal& x);

}  // namespace fbff
