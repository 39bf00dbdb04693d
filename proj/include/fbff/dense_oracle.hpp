// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <vector>

#include "fbff/dense_matrix.hpp"
#include "fbff/signal.hpp"

namespace fbff {

// Brute-force ground truth. Nothing here touches polyphase machinery except
// spectrum_union_check, whose purpose is to compare the two.

/// Largest filter period the oracle accepts.
inline constexpr std::size_t kDenseOracleLimit = 512;

/// The (MP) x (NP) synthesis matrix; column n * P + p is T^{Mp} phi_n.
struct DenseSynthesis {
  CMatrix matrix;
  std::size_t M = 0;
  std::size_t N = 0;
  std::size_t P = 0;
};

DenseSynthesis densify(const FilterBank& fb);

/// Stacks channel inputs in the column order of DenseSynthesis.
std::vector<cplx> stack_inputs(std::span<const Signal> inputs);

/// Eigenvalues of D D^H, ascending.
std::vector<double> dense_frame_spectrum(const DenseSynthesis& d);

struct ChannelGramReport {
  bool idempotent = false;
  bool self_adjoint = false;
  double idempotence_error = 0.0;  // max |Pi^2 - Pi|
  double trace = 0.0;
  std::size_t rank = 0;  // rounded trace
  bool is_projection() const { return idempotent && self_adjoint; }
};

/// Forms Pi_n = sum_p (T^{Mp} phi_n)(T^{Mp} phi_n)^* densely.
CMatrix dense_channel_operator(const DenseSynthesis& d, std::size_t n);
ChannelGramReport dense_channel_gram(const DenseSynthesis& d, std::size_t n, double tol = 1e-9);

/// Dense frame spectrum equals the union over roots of the spectra of Phi(z) Phi^*(z).
bool spectrum_union_check(const FilterBank& fb, double tol = 1e-8);

}  // namespace fbff
