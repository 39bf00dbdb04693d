// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include "fbff/json_io.hpp"

#include <algorithm>
#include <charconv>

#include "fbff/constructions.hpp"
#include "fbff/polyphase.hpp"

namespace fbff {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t positive_size(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw FormatError(std::string("field \"") + name + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse = [&](std::string_view part) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw std::invalid_argument("not a rational number: " + text);
    }
    return value;
  };
  const std::string_view view(text);
  if (slash == std::string::npos) return Rational(parse(view));
  const std::int64_t den = parse(view.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  return Rational(parse(view.substr(0, slash)), den);
}

json to_json(const Signal& s) {
  json samples = json::array();
  for (const auto& v : s.samples()) samples.push_back({v.real(), v.imag()});
  return {{"period", s.period()}, {"samples", std::move(samples)}};
}

Signal signal_from_json(const json& j) {
  const std::size_t period = positive_size(j, "period");
  const json& samples = field(j, "samples");
  if (!samples.is_array() || samples.size() != period) {
    throw FormatError("\"samples\" must be an array of length period (" + std::to_string(period) + ")");
  }
  std::vector<cplx> values;
  values.reserve(period);
  for (const auto& pair : samples) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw FormatError("each sample must be a [re, im] pair of numbers");
    }
    values.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return Signal(std::move(values));
}

json to_json(const FilterBank& fb) {
  json filters = json::array();
  for (const auto& f : fb.filters()) filters.push_back(to_json(f));
  return {{"downsample", fb.downsample()}, {"inner_period", fb.inner_period()}, {"filters", std::move(filters)}};
}

FilterBank bank_from_json(const json& j) {
  const std::size_t M = positive_size(j, "downsample");
  const std::size_t P = positive_size(j, "inner_period");
  const json& filters = field(j, "filters");
  if (!filters.is_array() || filters.empty()) throw FormatError("\"filters\" must be a nonempty array");
  std::vector<Signal> out;
  for (const auto& f : filters) {
    Signal s = signal_from_json(f);
    if (s.period() != M * P) {
      throw FormatError("filter period " + std::to_string(s.period()) + " differs from downsample * inner_period");
    }
    out.push_back(std::move(s));
  }
  return FilterBank(std::move(out), M);
}

json to_json(const FrameBounds& b) {
  json per_root = json::array();
  for (const auto& [lo, hi] : b.per_root) per_root.push_back({lo, hi});
  return {{"A", b.A}, {"B", b.B}, {"per_root", std::move(per_root)}};
}

json to_json(const FusionReport& r) {
  json ranks = json::array();
  for (const auto& rank : r.channel_rank) ranks.push_back(rank ? json(*rank) : json(nullptr));
  json flags = json::array();
  for (bool b : r.channel_projection) flags.push_back(b);
  return {{"bounds", to_json(r.bounds)},
          {"channel_projection", std::move(flags)},
          {"channel_rank", std::move(ranks)},
          {"is_tight", r.is_tight},
          {"is_puntf", r.is_puntf},
          {"redundancy", to_string(r.redundancy)},
          {"tolerance", r.tolerance}};
}

TreeSpec tree_spec_from_json(const json& j) {
  TreeSpec spec;
  if (j.is_string()) {
    if (j.get<std::string>() != "identity") throw FormatError("tree leaf strings must be \"identity\"");
    return spec;
  }
  const json& bank = field(j, "bank");
  if (bank.is_string()) {
    const std::string name = bank.get<std::string>();
    if (!is_named_matrix(name)) throw FormatError("unknown bank name \"" + name + "\"");
    spec.bank = name;
  } else {
    spec.bank = bank_from_json(bank);
  }
  if (j.contains("children")) {
    const json& children = j.at("children");
    if (!children.is_array()) throw FormatError("\"children\" must be an array");
    for (const auto& child : children) spec.children.push_back(tree_spec_from_json(child));
  }
  return spec;
}

namespace {

// Every named construction accepts an inner period of 2.
std::size_t named_rate(const std::string& name) { return named_matrix(name, 2).rows(); }

std::size_t rate_of(const std::variant<std::string, FilterBank>& bank) {
  if (const auto* name = std::get_if<std::string>(&bank)) return named_rate(*name);
  return std::get<FilterBank>(bank).downsample();
}

}  // namespace

std::size_t max_rate_product(const TreeSpec& spec) {
  if (!spec.bank) return 1;
  std::size_t below = 1;
  for (const auto& child : spec.children) below = std::max(below, max_rate_product(child));
  return rate_of(*spec.bank) * below;
}

FilterBank named_bank_for_period(const std::string& name, std::size_t filter_period) {
  const std::size_t M = named_rate(name);
  require(filter_period % M == 0, "bank \"" + name + "\" needs a filter period divisible by " + std::to_string(M));
  return bank_of(named_matrix(name, filter_period / M));
}

TreeNode build_tree(const TreeSpec& spec, std::size_t ambient_dim) {
  if (!spec.bank) return TreeNode::identity();
  FilterBank bank = std::holds_alternative<std::string>(*spec.bank)
                        ? named_bank_for_period(std::get<std::string>(*spec.bank), ambient_dim)
                        : std::get<FilterBank>(*spec.bank);
  std::vector<TreeNode> children;
  for (const auto& child : spec.children) children.push_back(build_tree(child, ambient_dim));
  return TreeNode::split(std::move(bank), std::move(children));
}

json to_json(const TreeLeaf& leaf) {
  return {{"path", leaf.path},
          {"rate", leaf.op.rate},
          {"weight", to_string(leaf.weight)},
          {"rank", leaf.rank},
          {"filter", to_json(leaf.op.filter)}};
}

}  // namespace fbff
