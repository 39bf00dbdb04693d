// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fbff {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default relative tolerance for tightness and projection verdicts.
inline constexpr double kDefaultTolerance = 1e-9;

/// Raised when periods, rates or shapes are incompatible.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-negative residue of k modulo n (n > 0).
constexpr std::size_t wrap_index(long long k, std::size_t n) {
  const auto m = static_cast<long long>(n);
  const long long r = k % m;
  return static_cast<std::size_t>(r < 0 ? r + m : r);
}

/// e^{2 pi j k / n}, with k reduced modulo n first so large k stays accurate.
inline cplx root_of_unity(long long k, std::size_t n) {
  const double angle = kTwoPi * static_cast<double>(wrap_index(k, n)) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DimensionError(message);
}

}  // namespace fbff
