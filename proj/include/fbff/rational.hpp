// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace fbff {

/// Exact weights and redundancies.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "n", "n/d" or "-n/d"; throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

}  // namespace fbff
