// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "fbff/constructions.hpp"
#include "fbff/dense_oracle.hpp"
#include "fbff/frame_analysis.hpp"
#include "fbff/gabor_design.hpp"
#include "fbff/json_io.hpp"
#include "fbff/multilevel.hpp"

namespace fbff::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path, std::istream& in) {
  if (path == "-") return json::parse(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open " + path);
  return json::parse(file);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::uint64_t effective_seed(std::uint64_t seed) {
  const char* env = std::getenv("FBFF_SEED");
  if (env == nullptr || *env == '\0') return seed;
  const std::string_view text(env);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw UsageError("FBFF_SEED is not an integer: " + std::string(text));
  return value;
}

struct OracleCheck {
  json doc;
  bool agrees = false;
};

OracleCheck oracle_check(const FilterBank& fb, const FusionReport& report, double tol) {
  const DenseSynthesis d = densify(fb);
  const std::vector<double> spectrum = dense_frame_spectrum(d);
  const double lo = std::max(0.0, spectrum.front());
  const double hi = std::max(0.0, spectrum.back());
  const double scale = std::max(1.0, hi);
  const double bounds_error = std::max(std::abs(report.bounds.A - lo), std::abs(report.bounds.B - hi)) / scale;

  bool verdicts_agree = true;
  json channels = json::array();
  for (std::size_t n = 0; n < fb.channels(); ++n) {
    const ChannelGramReport g = dense_channel_gram(d, n, tol);
    const bool dense_projection = g.is_projection() && g.rank == fb.inner_period();
    verdicts_agree = verdicts_agree && dense_projection == report.channel_projection[n];
    channels.push_back({{"projection", dense_projection},
                        {"idempotence_error", g.idempotence_error},
                        {"trace", g.trace}});
  }
  const bool union_ok = spectrum_union_check(fb, std::max(tol, 1e-12));

  OracleCheck check;
  check.agrees = bounds_error <= tol && verdicts_agree && union_ok;
  check.doc = {{"spectrum_min", lo},
               {"spectrum_max", hi},
               {"bounds_error", bounds_error},
               {"channels", std::move(channels)},
               {"projection_verdicts_agree", verdicts_agree},
               {"spectrum_union", union_ok},
               {"agrees", check.agrees}};
  return check;
}

// build ---------------------------------------------------------------------

struct BuildArgs {
  std::string name;
  std::size_t period = 1;
  std::vector<std::string> of;
  std::size_t size = 2;
  std::size_t factors = 2;
  std::uint64_t seed = 1;
  std::string directions;
  std::string out;
};

std::vector<std::vector<cplx>> read_directions(const std::string& path, std::istream& in) {
  const json doc = read_json(path, in);
  if (!doc.is_array()) throw FormatError("directions must be an array of vectors");
  std::vector<std::vector<cplx>> out;
  for (const auto& vec : doc) {
    if (!vec.is_array()) throw FormatError("each direction must be an array of [re, im] pairs");
    std::vector<cplx> u;
    for (const auto& pair : vec) {
      if (!pair.is_array() || pair.size() != 2) throw FormatError("each direction entry must be a [re, im] pair");
      u.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<std::vector<cplx>> random_directions(std::size_t M, std::size_t K, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<std::vector<cplx>> out(K, std::vector<cplx>(M));
  for (auto& u : out) {
    double norm2 = 0.0;
    for (auto& v : u) {
      v = cplx(gauss(rng), gauss(rng));
      norm2 += std::norm(v);
    }
    for (auto& v : u) v /= std::sqrt(norm2);
  }
  return out;
}

PolyphaseMatrix build_matrix(const BuildArgs& a, std::istream& in) {
  if (is_named_matrix(a.name)) return named_matrix(a.name, a.period);
  if (a.name == "tensor" || a.name == "union") {
    if (a.of.size() != 2) throw UsageError(a.name + " needs exactly two --of names");
    for (const auto& n : a.of)
      if (!is_named_matrix(n)) throw UsageError("unknown bank name: " + n);
    const PolyphaseMatrix x = named_matrix(a.of[0], a.period);
    const PolyphaseMatrix y = named_matrix(a.of[1], a.period);
    return a.name == "tensor" ? tensor(x, y) : union_of(x, y);
  }
  if (a.name == "paraunitary-chain") {
    const auto dirs = a.directions.empty() ? random_directions(a.size, a.factors, effective_seed(a.seed))
                                           : read_directions(a.directions, in);
    const std::size_t M = dirs.empty() ? a.size : dirs.front().size();
    return paraunitary_chain(dirs, M, a.period);
  }
  throw UsageError("unknown bank name: " + a.name);
}

int cmd_build(const BuildArgs& a, std::istream& in, std::ostream& out) {
  write_text(a.out, dump(to_json(bank_of(build_matrix(a, in)))), out);
  return kExitOk;
}

// analyze / verify ----------------------------------------------------------

struct AnalyzeArgs {
  std::string bank;
  double tol = kDefaultTolerance;
  bool oracle = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::istream& in, std::ostream& out) {
  const FilterBank fb = bank_from_json(read_json(a.bank, in));
  const FusionReport report = fusion_report(fb, a.tol);
  json doc = to_json(report);
  int code = kExitOk;
  if (a.oracle) {
    OracleCheck check = oracle_check(fb, report, a.tol);
    doc["oracle"] = std::move(check.doc);
    if (!check.agrees) code = kExitVerificationFailed;
  }
  out << dump(doc);
  return code;
}

int cmd_verify(const AnalyzeArgs& a, std::istream& in, std::ostream& out) {
  const FilterBank fb = bank_from_json(read_json(a.bank, in));
  const FusionReport report = fusion_report(fb, a.tol);
  bool ok = report.is_tight;
  json doc = {{"A", report.bounds.A},
              {"B", report.bounds.B},
              {"is_tight", report.is_tight},
              {"is_puntf", report.is_puntf}};
  if (a.oracle) {
    OracleCheck check = oracle_check(fb, report, a.tol);
    ok = ok && check.agrees;
    doc["oracle"] = std::move(check.doc);
  }
  doc["ok"] = ok;
  out << dump(doc);
  return ok ? kExitOk : kExitVerificationFailed;
}

// freq ----------------------------------------------------------------------

struct FreqArgs {
  std::string bank;
  std::size_t samples = 512;
  std::string out;
};

int cmd_freq(const FreqArgs& a, std::istream& in, std::ostream& out) {
  if (a.samples < 2) throw UsageError("--samples must be at least 2");
  const FilterBank fb = bank_from_json(read_json(a.bank, in));
  std::ostringstream csv;
  csv << std::setprecision(17) << "n,omega,mag2\n";
  for (std::size_t n = 0; n < fb.channels(); ++n) {
    const auto& taps = fb.filter(n).samples();
    for (std::size_t k = 0; k < a.samples; ++k) {
      const double omega = kTwoPi * static_cast<double>(k) / static_cast<double>(a.samples);
      cplx h = 0.0;
      for (std::size_t q = 0; q < taps.size(); ++q) h += taps[q] * std::polar(1.0, -omega * static_cast<double>(q));
      csv << n << ',' << omega << ',' << std::norm(h) << '\n';
    }
  }
  write_text(a.out, csv.str(), out);
  return kExitOk;
}

// compose -------------------------------------------------------------------

struct ComposeArgs {
  std::string tree;
  std::size_t inner_dim = 0;
  bool verify = false;
  double tol = kDefaultTolerance;
  std::string out;
};

int cmd_compose(const ComposeArgs& a, std::istream& in, std::ostream& out) {
  const TreeSpec spec = tree_spec_from_json(read_json(a.tree, in));
  if (!spec.bank) throw UsageError("the tree root must be a bank");
  const std::size_t dim = a.inner_dim * max_rate_product(spec);
  if (const auto* inline_bank = std::get_if<FilterBank>(&*spec.bank); inline_bank && inline_bank->filter_period() != dim) {
    throw UsageError("inline root bank has filter period " + std::to_string(inline_bank->filter_period()) +
                     " but the tree needs " + std::to_string(dim));
  }
  const std::vector<TreeLeaf> leaves = compose_tree(build_tree(spec, dim), a.tol);

  json items = json::array();
  for (const auto& leaf : leaves) items.push_back(to_json(leaf));
  json doc = {{"ambient_dim", dim}, {"leaves", std::move(items)}};
  int code = kExitOk;
  if (a.verify) {
    const TreeVerification v = verify_tree(leaves, dim, a.tol);
    doc["verification"] = {{"ok", v.ok()},
                           {"residual", v.parseval.max_residual},
                           {"idempotence_error", v.parseval.idempotence_error},
                           {"adjointness_error", v.parseval.adjointness_error},
                           {"rank_error", v.parseval.rank_error},
                           {"weighted_rank_sum", to_string(v.weighted_rank_sum)}};
    if (!v.ok()) code = kExitVerificationFailed;
  }
  write_text(a.out, dump(doc), out);
  return code;
}

// design-maxflat ------------------------------------------------------------

struct DesignArgs {
  std::size_t half_taps = 0;
  std::uint64_t seed = 1;
  std::size_t restarts = 100;
  std::size_t threads = 1;
  std::size_t q = 0;
  std::string out;
  std::string bank_out;
};

int cmd_design(const DesignArgs& a, std::ostream& out) {
  MaxFlatOptions options;
  options.restarts = a.restarts;
  options.threads = std::max<std::size_t>(1, a.threads);
  const std::uint64_t seed = effective_seed(a.seed);
  const MaxFlatDesign design = design_maxflat(a.half_taps, seed, options);

  json doc = {{"half_taps", a.half_taps},
              {"seed", seed},
              {"found", design.found},
              {"restart", design.restart},
              {"restarts_tried", design.restarts_tried},
              {"iterations", design.iterations},
              {"residual", design.residual}};
  if (!design.found) {
    out << dump(doc);
    return kExitVerificationFailed;
  }
  doc["taps"] = design.taps;

  const std::size_t Q = a.q != 0 ? a.q : (a.half_taps + 1) / 2;
  const Signal proto = maxflat_prototype(design.taps, Q);
  const FrameBounds bounds = gabor_frame_bounds(proto, 2, Q, 2);
  const bool tight = gabor_tightness(proto, 2, Q, 2, 1e-8);
  const double defect = translate_orthonormality_defect(proto, 4);
  const double shifted_defect = translate_orthonormality_defect(translate(proto, 2), 4);
  const bool ok = std::abs(bounds.A - 2.0) <= 1e-7 && std::abs(bounds.B - 2.0) <= 1e-7 && tight &&
                  defect <= 1e-8 && shifted_defect <= 1e-8;
  doc["verification"] = {{"Q", Q},
                         {"A", bounds.A},
                         {"B", bounds.B},
                         {"gabor_tight", tight},
                         {"translate_defect", defect},
                         {"shifted_translate_defect", shifted_defect},
                         {"ok", ok}};
  if (!a.out.empty()) write_text(a.out, dump(to_json(proto)), out);
  if (!a.bank_out.empty()) write_text(a.bank_out, dump(to_json(gabor_bank(GaborSystem(proto, 2, Q, 2)))), out);
  out << dump(doc);
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Filter bank fusion frames: build, analyze, compose and design oversampled filter banks."};
  app.name("fbff");
  app.require_subcommand(1);

  std::function<int()> action;

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Emit the JSON of a named filter bank");
  b->add_option("name", build.name,
                "mercedes-benz, daubechies4, example5, example7, tensor, union or paraunitary-chain")
      ->required();
  b->add_option("--period", build.period, "Polyphase period P (filters have period M*P)")
      ->check(CLI::PositiveNumber);
  b->add_option("--of", build.of, "Operand names for tensor and union (give two)");
  b->add_option("--size", build.size, "paraunitary-chain: matrix size M")->check(CLI::PositiveNumber);
  b->add_option("--factors", build.factors, "paraunitary-chain: number of random elementary factors");
  b->add_option("--seed", build.seed, "paraunitary-chain: seed for random directions (FBFF_SEED overrides)");
  b->add_option("--directions", build.directions, "paraunitary-chain: JSON file of unit vectors [[[re,im],...],...]");
  b->add_option("--out", build.out, "Output path (default stdout)");
  b->callback([&] { action = [&] { return cmd_build(build, in, out); }; });

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand(
      "analyze",
      "Report frame bounds, channel projections and PUNTF status. A bank whose upper bound is zero is "
      "reported with is_tight = false.");
  an->add_option("bank", analyze.bank, "Filter bank JSON path, or - for stdin")->required();
  an->add_option("--tol", analyze.tol, "Tolerance")->check(CLI::PositiveNumber);
  an->add_flag("--oracle", analyze.oracle, "Cross-check against the dense matrix oracle; exit 1 on disagreement");
  an->callback([&] { action = [&] { return cmd_analyze(analyze, in, out); }; });

  FreqArgs freq;
  auto* fr = app.add_subcommand("freq", "Write |phi_n(omega)|^2 at omega = 2 pi k / K as CSV");
  fr->add_option("bank", freq.bank, "Filter bank JSON path, or - for stdin")->required();
  fr->add_option("--samples", freq.samples, "Number of frequencies K (at least 2)");
  fr->add_option("--out", freq.out, "Output path (default stdout)");
  fr->callback([&] { action = [&] { return cmd_freq(freq, in, out); }; });

  ComposeArgs compose;
  auto* co = app.add_subcommand("compose", "Flatten a tree of filter banks into weighted leaf channels");
  co->add_option("--tree", compose.tree, "Tree JSON path, or - for stdin")->required();
  co->add_option("--inner-dim", compose.inner_dim, "Input period of the deepest leaves")
      ->required()
      ->check(CLI::PositiveNumber);
  co->add_flag("--verify", compose.verify, "Check the weighted projection sum against the identity; exit 1 on failure");
  co->add_option("--tol", compose.tol, "Tolerance")->check(CLI::PositiveNumber);
  co->add_option("--out", compose.out, "Output path (default stdout)");
  co->callback([&] { action = [&] { return cmd_compose(compose, in, out); }; });

  DesignArgs design;
  auto* de = app.add_subcommand("design-maxflat", "Design a max-flat Gabor prototype with M = R = 2");
  de->add_option("--half-taps", design.half_taps, "T; the filter has 2T taps")->required()->check(CLI::PositiveNumber);
  de->add_option("--seed", design.seed, "Restart seed (FBFF_SEED overrides)");
  de->add_option("--restarts", design.restarts, "Maximum number of random restarts")->check(CLI::PositiveNumber);
  de->add_option("--threads", design.threads, "Worker threads for restarts")->check(CLI::PositiveNumber);
  de->add_option("--q", design.q, "Modulation step Q; the prototype has period 4Q (default ceil(T/2))");
  de->add_option("--out", design.out, "Write the prototype signal JSON here");
  de->add_option("--bank-out", design.bank_out, "Write the resulting Gabor filter bank JSON here");
  de->callback([&] { action = [&] { return cmd_design(design, out); }; });

  AnalyzeArgs verify;
  auto* ve = app.add_subcommand(
      "verify", "Exit 0 if the bank is tight (and, with --oracle, the dense oracle agrees); exit 1 otherwise");
  ve->add_option("bank", verify.bank, "Filter bank JSON path, or - for stdin")->required();
  ve->add_option("--tol", verify.tol, "Tolerance")->check(CLI::PositiveNumber);
  ve->add_flag("--oracle", verify.oracle, "Also require agreement with the dense matrix oracle");
  ve->callback([&] { action = [&] { return cmd_verify(verify, in, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const json::exception& e) {
    err << "fbff: invalid JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "fbff: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "fbff: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "fbff: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fbff: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace fbff::cli
