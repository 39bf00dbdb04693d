// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <optional>
#include <vector>

#include "fbff/frame_analysis.hpp"
#include "fbff/rational.hpp"
#include "fbff/signal.hpp"

namespace fbff {

/// One synthesis channel y -> filter * (up_rate y), mapping period P to rate * P.
struct ChannelOp {
  Signal filter;
  std::size_t rate = 1;

  std::size_t input_period() const { return filter.period() / rate; }
};

Signal channel_apply(const ChannelOp& ch, const Signal& y);
/// down_rate (filter' * x), the adjoint of channel_apply.
Signal channel_adjoint(const ChannelOp& ch, const Signal& x);

/// phi_outer * (up_M phi_inner); requires period(phi_inner) * M = period(phi_outer).
Signal equivalent_filter(const Signal& phi_outer, const Signal& phi_inner, std::size_t M);

/// Node of a fusion-frame tree. A split node carries a bank whose channels
/// are each weighted by M/N; an identity node passes its input through with
/// weight 1. A split node without children is a single level.
struct TreeNode {
  std::optional<FilterBank> bank;
  Rational weight{1};
  std::vector<TreeNode> children;

  static TreeNode identity();
  static TreeNode split(FilterBank bank, std::vector<TreeNode> children = {});

  bool is_identity() const { return !bank.has_value(); }
};

struct TreeLeaf {
  ChannelOp op;
  Rational weight;
  std::size_t rank = 0;
  std::vector<std::size_t> path;  // channel index at each level
};

/// Flattens a tree into its equivalent leaf channels.
///
/// The root bank fixes the ambient dimension. Every inner bank is periodized
/// to the dimension its parent channel produces (which must divide the inner
/// bank's filter period), and every channel at every level must pass
/// channel_is_projection; otherwise DimensionError is thrown.
std::vector<TreeLeaf> compose_tree(const TreeNode& root, double tol = kDefaultTolerance);

struct TreeVerification {
  ParsevalCheck parseval;
  /// sum_leaves weight * rank, exact.
  Rational weighted_rank_sum{0};
  bool accounting_ok = false;
  bool ok() const { return parseval.ok && accounting_ok; }
};

/// Materializes the leaf projections and checks the weighted Parseval identity
/// along with the exact weight accounting sum c_k rank_k = dim.
TreeVerification verify_tree(const std::vector<TreeLeaf>& leaves, std::size_t dim, double tol);

}  // namespace fbff
