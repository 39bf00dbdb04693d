// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "fbff/frame_analysis.hpp"
#include "fbff/multilevel.hpp"
#include "fbff/signal.hpp"

namespace fbff {

using json = nlohmann::json;

/// Raised for malformed documents; the message names the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"period": P, "samples": [[re, im], ...]}
json to_json(const Signal& s);
Signal signal_from_json(const json& j);

// {"downsample": M, "inner_period": P, "filters": [<signal>, ...]}
json to_json(const FilterBank& fb);
FilterBank bank_from_json(const json& j);

json to_json(const FrameBounds& b);
json to_json(const FusionReport& r);

/// Parsed tree document. bank holds a constructions name or an inline bank;
/// an empty optional is an identity node.
struct TreeSpec {
  std::optional<std::variant<std::string, FilterBank>> bank;
  std::vector<TreeSpec> children;
};

// {"bank": "<name>" | <bank>, "children": [<tree> | "identity", ...]}
TreeSpec tree_spec_from_json(const json& j);

/// Largest product of downsampling rates along any root-to-leaf path.
std::size_t max_rate_product(const TreeSpec& spec);

/// Instantiates the tree over signals of period ambient_dim. Named banks are
/// built with filter period ambient_dim; compose_tree periodizes them per level.
TreeNode build_tree(const TreeSpec& spec, std::size_t ambient_dim);

/// Builds a named bank whose filters have the given period.
FilterBank named_bank_for_period(const std::string& name, std::size_t filter_period);

json to_json(const TreeLeaf& leaf);

}  // namespace fbff
