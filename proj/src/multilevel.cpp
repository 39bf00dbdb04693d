// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include "fbff/multilevel.hpp"

namespace fbff {

Signal channel_apply(const ChannelOp& ch, const Signal& y) {
  require(y.period() * ch.rate == ch.filter.period(), "channel input period " + std::to_string(y.period()) +
                                                          " does not match filter period / rate");
  return circ_convolve(ch.filter, upsample(y, ch.rate));
}

Signal channel_adjoint(const ChannelOp& ch, const Signal& x) {
  require(x.period() == ch.filter.period(), "channel adjoint input must have the filter period");
  return downsample(circ_convolve(involution(ch.filter), x), ch.rate);
}

Signal equivalent_filter(const Signal& phi_outer, const Signal& phi_inner, std::size_t M) {
  require(phi_inner.period() * M == phi_outer.period(), "equivalent filter: inner period times rate must equal outer period");
  return circ_convolve(phi_outer, upsample(phi_inner, M));
}

TreeNode TreeNode::identity() { return TreeNode{}; }

TreeNode TreeNode::split(FilterBank bank, std::vector<TreeNode> children) {
  TreeNode node;
  node.weight = Rational(static_cast<std::int64_t>(bank.downsample()), static_cast<std::int64_t>(bank.channels()));
  node.bank = std::move(bank);
  node.children = std::move(children);
  return node;
}

namespace {

void descend(const TreeNode& node, const ChannelOp& parent, const Rational& parent_weight,
             std::vector<std::size_t>& path, double tol, std::vector<TreeLeaf>& out) {
  const std::size_t dim = parent.input_period();
  if (node.is_identity()) {
    out.push_back({parent, parent_weight, dim, path});
    return;
  }
  const FilterBank& bank = *node.bank;
  require(bank.filter_period() % dim == 0, "inner bank filter period " + std::to_string(bank.filter_period()) +
                                               " is not a multiple of level dimension " + std::to_string(dim));
  require(dim % bank.downsample() == 0, "level dimension " + std::to_string(dim) + " not divisible by rate " +
                                            std::to_string(bank.downsample()));
  require(node.children.empty() || node.children.size() == bank.channels(),
          "tree node needs one child per channel (" + std::to_string(bank.channels()) + ")");

  for (std::size_t n = 0; n < bank.channels(); ++n) {
    const Signal local = periodize(bank.filter(n), dim);
    require(channel_is_projection(local, bank.downsample(), tol),
            "channel " + std::to_string(n) + " at depth " + std::to_string(path.size()) + " is not a projection");
    ChannelOp composed{equivalent_filter(parent.filter, local, parent.rate), parent.rate * bank.downsample()};
    path.push_back(n);
    const Rational w = parent_weight * node.weight;
    if (node.children.empty()) {
      const std::size_t rank = composed.input_period();
      out.push_back({std::move(composed), w, rank, path});
    } else {
      descend(node.children[n], composed, w, path, tol, out);
    }
    path.pop_back();
  }
}

}  // namespace

std::vector<TreeLeaf> compose_tree(const TreeNode& root, double tol) {
  require(!root.is_identity(), "tree root must carry a filter bank");
  const std::size_t dim = root.bank->filter_period();
  const ChannelOp top{Signal::delta(0, dim), 1};
  std::vector<TreeLeaf> leaves;
  std::vector<std::size_t> path;
  descend(root, top, Rational(1), path, tol, leaves);
  return leaves;
}

TreeVerification verify_tree(const std::vector<TreeLeaf>& leaves, std::size_t dim, double tol) {
  std::vector<WeightedProjection> projections;
  TreeVerification out;
  for (const auto& leaf : leaves) {
    const ChannelOp op = leaf.op;
    projections.push_back({[op](const Signal& x) { return channel_apply(op, channel_adjoint(op, x)); }, leaf.weight,
                           leaf.rank});
    out.weighted_rank_sum += leaf.weight * static_cast<std::int64_t>(leaf.rank);
  }
  out.accounting_ok = out.weighted_rank_sum == Rational(static_cast<std::int64_t>(dim));
  out.parseval = verify_weighted_parseval(projections, dim, tol);
  return out;
}

}  // namespace fbff
