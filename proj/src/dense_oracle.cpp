// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include "fbff/dense_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "fbff/frame_analysis.hpp"
#include "fbff/polyphase.hpp"

namespace fbff {

DenseSynthesis densify(const FilterBank& fb) {
  const std::size_t L = fb.filter_period();
  require(L <= kDenseOracleLimit, "dense oracle is limited to MP <= " + std::to_string(kDenseOracleLimit));
  DenseSynthesis d{CMatrix(L, fb.channels() * fb.inner_period()), fb.downsample(), fb.channels(), fb.inner_period()};
  for (std::size_t n = 0; n < d.N; ++n) {
    const Signal& phi = fb.filter(n);
    for (std::size_t p = 0; p < d.P; ++p) {
      const std::size_t shift = d.M * p;
      for (std::size_t k = 0; k < L; ++k) d.matrix((k + shift) % L, n * d.P + p) = phi.samples()[k];
    }
  }
  return d;
}

std::vector<cplx> stack_inputs(std::span<const Signal> inputs) {
  std::vector<cplx> out;
  for (const auto& y : inputs) out.insert(out.end(), y.samples().begin(), y.samples().end());
  return out;
}

std::vector<double> dense_frame_spectrum(const DenseSynthesis& d) {
  CMatrix g = d.matrix * d.matrix.adjoint();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    g(i, i) = g(i, i).real();
    for (std::size_t j = i + 1; j < g.cols(); ++j) g(j, i) = std::conj(g(i, j));
  }
  return hermitian_eigs(g);
}

CMatrix dense_channel_operator(const DenseSynthesis& d, std::size_t n) {
  require(n < d.N, "channel index out of range");
  const std::size_t L = d.matrix.rows();
  CMatrix block(L, d.P);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t p = 0; p < d.P; ++p) block(i, p) = d.matrix(i, n * d.P + p);
  return block * block.adjoint();
}

ChannelGramReport dense_channel_gram(const DenseSynthesis& d, std::size_t n, double tol) {
  const CMatrix pi = dense_channel_operator(d, n);
  ChannelGramReport report;
  report.idempotence_error = (pi * pi - pi).max_abs();
  report.idempotent = report.idempotence_error <= tol;
  report.self_adjoint = (pi - pi.adjoint()).max_abs() <= tol;
  report.trace = pi.trace().real();
  report.rank = static_cast<std::size_t>(std::llround(std::max(0.0, report.trace)));
  return report;
}

bool spectrum_union_check(const FilterBank& fb, double tol) {
  std::vector<double> dense = dense_frame_spectrum(densify(fb));
  const PolyphaseMatrix phi = matrix_of(fb);
  std::vector<double> blocks;
  for (std::size_t p = 0; p < phi.period(); ++p) {
    const auto eigs = hermitian_eigs(gram(phi, static_cast<long long>(p)));
    blocks.insert(blocks.end(), eigs.begin(), eigs.end());
  }
  std::sort(blocks.begin(), blocks.end());
  if (blocks.size() != dense.size()) return false;
  const double scale = std::max(1.0, std::abs(dense.back()));
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (std::abs(dense[i] - blocks[i]) > tol * scale) return false;
  return true;
}

}  // namespace fbff
