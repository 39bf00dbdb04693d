// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fbff/numerics.hpp"
#include "fbff/signal.hpp"

namespace fbff {

/// Translates by M and modulates by Q steps of a single prototype of period M*Q*R.
/// Channel n of the bank is modulate(prototype, Q n), n = 0..M*R-1.
class GaborSystem {
 public:
  GaborSystem(Signal prototype, std::size_t M, std::size_t Q, std::size_t R);

  const Signal& prototype() const { return prototype_; }
  std::size_t M() const { return M_; }
  std::size_t Q() const { return Q_; }
  std::size_t R() const { return R_; }
  std::size_t channels() const { return M_ * R_; }

 private:
  Signal prototype_;
  std::size_t M_, Q_, R_;
};

/// M*R filters, rate M, inner period Q*R.
FilterBank gabor_bank(const GaborSystem& sys);

/// out[m][p] = M * sum_r |phi^{(m)}(e^{-2 pi j r/R} e^{2 pi j p/(QR)})|^2.
std::vector<std::vector<double>> zak_row_sums(const GaborSystem& sys);

// Max-flat design for M = R = 2. A filter has 2T taps; the even taps are the
// free variables and the odd taps follow from the flatness constraints
//   sum_{2p+1>=k} (2p+1)!/(2p+1-k)! phi[2p+1] = -sum_{2p>=k} (2p)!/(2p-k)! phi[2p],
// k = 0..T-1, i.e. the first T derivatives (starting with the value) of
// sum_k phi[k] z^k vanish at z = 1.

struct MaxFlatProblem {
  std::size_t T = 0;
  std::vector<double> even_coeffs;
  std::vector<double> odd_coeffs;
  RealMatrix flatness_matrix{0, 0};  // acts on the odd taps

  /// Solves for the odd taps of the given even taps.
  static MaxFlatProblem from_even(std::span<const double> even);
  /// Interleaved taps phi[0..2T-1].
  std::vector<double> taps() const;
};

/// T x T matrix of (2p+1)!/(2p+1-k)! (odd) or (2p)!/(2p-k)! (even taps).
RealMatrix flatness_matrix(std::size_t T, bool odd);

/// Odd taps from even taps. Throws SingularMatrixError if the system is singular.
std::vector<double> flatness_solve_odd(std::span<const double> even);

/// For s in (even part, odd part): <s, T^{2q} s> - delta_q / 2, q = 0..ceil(T/2)-1.
/// All zero iff both polyphase components satisfy |c(z)|^2 + |c(-z)|^2 = 1.
std::vector<double> tightness_residual(std::span<const double> even, std::span<const double> odd);
/// Same, with the odd part derived from the flatness constraints.
std::vector<double> tightness_residual(std::span<const double> even);

struct MaxFlatDesign {
  bool found = false;
  std::vector<double> taps;       // 2T taps, unit norm, when found
  double residual = 0.0;          // infinity norm of tightness_residual
  std::size_t restart = 0;        // index of the successful (or last) restart
  std::size_t restarts_tried = 0;
  std::size_t iterations = 0;
};

struct MaxFlatOptions {
  std::size_t restarts = 100;
  std::size_t threads = 1;
  double acceptance = 1e-8;
  LevenbergMarquardtOptions solver{};
};

/// Randomized-restart search. Restart i draws Gaussian even taps from a
/// generator keyed on (seed, i), scaled so the even part has norm 2^{-1/2}.
/// The lowest successful restart index wins, independent of thread count.
/// Throws std::invalid_argument for T == 0.
MaxFlatDesign design_maxflat(std::size_t T, std::uint64_t seed, const MaxFlatOptions& options = {});

/// Embeds the 2T taps into a Gabor prototype of period 4Q (requires 4Q >= 2T).
Signal maxflat_prototype(std::span<const double> taps, std::size_t Q);

}  // namespace fbff
