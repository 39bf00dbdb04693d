// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fbff/dense_matrix.hpp"
#include "fbff/polyphase.hpp"
#include "fbff/rational.hpp"
#include "fbff/signal.hpp"

namespace fbff {

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k pairs with values[k]
};

/// Cyclic Jacobi eigensolver for small Hermitian matrices. Throws
/// std::invalid_argument if the input is not Hermitian to 1e-10 (relative).
EigenDecomposition hermitian_eig_decompose(const CMatrix& h);
std::vector<double> hermitian_eigs(const CMatrix& h);

/// Optimal frame bounds; per_root[p] = (A_p, B_p) at z = e^{2 pi j p / P}.
struct FrameBounds {
  double A = 0.0;
  double B = 0.0;
  std::vector<std::pair<double, double>> per_root;
};

FrameBounds frame_bounds(const PolyphaseMatrix& phi);

/// True iff the M-translates of phi are orthonormal, tested through the
/// polyphase vector having unit norm at every root.
bool channel_is_projection(const Signal& phi, std::size_t M, double tol = kDefaultTolerance);

struct FusionReport {
  FrameBounds bounds;
  std::vector<bool> channel_projection;
  /// Rank of the channel projection (the inner period P), or empty when the
  /// channel is not a projection.
  std::vector<std::optional<std::size_t>> channel_rank;
  bool is_tight = false;
  bool is_puntf = false;
  Rational redundancy{0};
  double tolerance = kDefaultTolerance;
};

/// Assembles bounds, per-channel projection flags and the tight/PUNTF verdicts.
///
/// Tightness uses the relative gap (B - A) / B <= tol and additionally
/// requires B > 1e-300, so the all-zero bank is never reported tight. The
/// PUNTF verdict requires unit-norm columns and Phi(z) Phi^*(z) = (N/M) I at
/// every root.
FusionReport fusion_report(const FilterBank& fb, double tol = kDefaultTolerance);

/// Self-map of a dim-dimensional space (signals of period dim).
using LinearOperator = std::function<Signal(const Signal&)>;

struct WeightedProjection {
  LinearOperator apply;
  Rational weight;
  std::size_t rank = 0;
};

struct ParsevalCheck {
  bool ok = false;
  double max_residual = 0.0;       // max |sum_k c_k Pi_k - I|
  double idempotence_error = 0.0;  // worst max |Pi_k^2 - Pi_k|
  double adjointness_error = 0.0;  // worst max |Pi_k - Pi_k^H|
  double rank_error = 0.0;         // worst |tr Pi_k - rank_k|
};

/// Materializes every operator on the standard basis and checks that each is
/// an orthogonal projection of its stated rank and that the weighted sum is
/// the identity. Throws DimensionError when an operator changes dimension.
ParsevalCheck verify_weighted_parseval(std::span<const WeightedProjection> projections, std::size_t dim,
                                       double tol);

/// Extreme values of M sum_r |phi^{(m)}(e^{-2 pi j r/R} z)|^2 over m and all
/// z = e^{2 pi j p/(QR)}; per_root has QR entries.
FrameBounds gabor_frame_bounds(const Signal& phi, std::size_t M, std::size_t Q, std::size_t R);

/// sum_m |phi^{(m)}(z)|^2 = 1 at every root of order QR.
bool gabor_channel_orthonormal(const Signal& phi, std::size_t M, std::size_t Q, std::size_t R,
                               double tol = kDefaultTolerance);

/// Tightness of the Gabor system, checked in both the Zak-domain and the
/// time-domain form. Throws std::logic_error if the two forms disagree.
bool gabor_tightness(const Signal& phi, std::size_t M, std::size_t Q, std::size_t R,
                     double tol = kDefaultTolerance);

}  // namespace fbff
