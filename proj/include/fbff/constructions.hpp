// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "fbff/polyphase.hpp"

namespace fbff {

// Builders only construct; verification is left to frame_analysis.

/// The 2 x 3 Mercedes-Benz frame (1/2)[[2, -1, -1], [0, sqrt3, -sqrt3]] as constant entries.
PolyphaseMatrix mercedes_benz(std::size_t period);

/// Taps of the 4-tap Daubechies pair: lowpass (a, c, b, d), highpass (d, -b, c, -a).
struct Daubechies4Coefficients {
  double a, b, c, d;
};
Daubechies4Coefficients daubechies4_coefficients();

/// [[a + b z^-1, d + c z^-1], [c + d z^-1, -b - a z^-1]], paraunitary.
PolyphaseMatrix daubechies4(std::size_t period);

/// Column concatenation [Phi0 | Phi1].
PolyphaseMatrix union_of(const PolyphaseMatrix& phi0, const PolyphaseMatrix& phi1);

/// Kronecker product with ring multiplication; row (m0, m1) -> m0 * M1 + m1, same for columns.
PolyphaseMatrix tensor(const PolyphaseMatrix& phi0, const PolyphaseMatrix& phi1);

/// Matrix product over C[z]/<z^P - 1>.
PolyphaseMatrix paraunitary_product(const PolyphaseMatrix& psi, const PolyphaseMatrix& phi);

/// (I - u u^*) + z u u^*; the positive power z is stored as z^{-(P-1)}.
/// Requires |u| = 1 within 1e-12.
PolyphaseMatrix elementary_paraunitary(std::span<const cplx> u, std::size_t period);

/// Product of elementary factors, left to right; identity when the list is empty.
PolyphaseMatrix paraunitary_chain(const std::vector<std::vector<cplx>>& directions, std::size_t M,
                                  std::size_t period);

/// Row map applied after the z -> -z twist: output row i is phases[i] * input row permutation[i].
struct RowMap {
  std::vector<std::size_t> permutation;
  std::vector<cplx> phases;

  static RowMap identity(std::size_t M);
  static RowMap swap2();
  /// diag(1, e^{j pi / 2 m}...) i.e. phases j^m: turns Psi(-z) into the polyphase
  /// matrix of the filters modulated by e^{j pi k / 2} when M = 2.
  static RowMap quarter_turn(std::size_t M);
};

/// Entrywise twist(., 1, 2) followed by the row map. Requires an even period.
PolyphaseMatrix modulated_copy(const PolyphaseMatrix& psi, const RowMap& rows);

/// Psi(z) F with Psi = daubechies4 and F = mercedes_benz.
PolyphaseMatrix example5(std::size_t period);
/// [Psi(z) | diag(1, j) Psi(-z)]: two stacked Daubechies transforms, the second
/// modulated by pi/2. Requires an even period.
PolyphaseMatrix example7(std::size_t period);

/// Builds a named bank at the given inner period. Known names: mercedes-benz,
/// daubechies4, example5, example7. Throws std::invalid_argument otherwise.
PolyphaseMatrix named_matrix(std::string_view name, std::size_t period);
bool is_named_matrix(std::string_view name);

}  // namespace fbff
