// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

// Acceptance suite: one PASS/FAIL line per criterion; exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "fbff/constructions.hpp"
#include "fbff/dense_oracle.hpp"
#include "fbff/frame_analysis.hpp"
#include "fbff/gabor_design.hpp"
#include "fbff/multilevel.hpp"
#include "fbff/polyphase.hpp"
#include "oracles.hpp"

using namespace fbff;

namespace {

struct Outcome {
  bool pass = true;
  std::string failures;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    failures += (pass ? "" : "; ") + what;
    pass = false;
  }
};

using Criterion = std::function<void(Outcome&)>;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1 -------------------------------------------------------------------------
void mercedes_benz_criterion(Outcome& o) {
  double worst_bound = 0.0, worst_gram = 0.0;
  for (std::size_t P : {2u, 4u, 8u}) {
    const FilterBank fb = bank_of(mercedes_benz(P));
    const FrameBounds b = frame_bounds(matrix_of(fb));
    worst_bound = std::max({worst_bound, std::abs(b.A - 1.5), std::abs(b.B - 1.5)});
    const FusionReport r = fusion_report(fb);
    for (std::size_t n = 0; n < 3; ++n)
      o.check(r.channel_projection[n] && r.channel_rank[n] == std::optional<std::size_t>(P),
              "channel " + std::to_string(n) + " at P=" + std::to_string(P) + " is not a rank-P projection");
    const DenseSynthesis d = densify(fb);
    worst_gram = std::max(worst_gram, test::max_abs_diff(d.matrix * d.matrix.adjoint(), 1.5 * CMatrix::identity(2 * P)));
  }
  o.check(worst_bound <= 1e-10, "bounds off by " + fmt(worst_bound));
  o.check(worst_gram <= 1e-9, "dense gram off by " + fmt(worst_gram));
  o.detail << "bound err " << fmt(worst_bound) << ", dense gram err " << fmt(worst_gram);
}

// 2 -------------------------------------------------------------------------
void daubechies_criterion(Outcome& o) {
  double worst_gram = 0.0, worst_spec = 0.0;
  for (std::size_t P : {2u, 4u, 8u}) {
    const PolyphaseMatrix psi = daubechies4(P);
    for (long long p = 0; p < static_cast<long long>(P); ++p)
      worst_gram = std::max(worst_gram, test::max_abs_diff(gram(psi, p), CMatrix::identity(2)));
    for (double v : dense_frame_spectrum(densify(bank_of(psi)))) worst_spec = std::max(worst_spec, std::abs(v - 1.0));
  }
  o.check(worst_gram <= 1e-12, "gram off by " + fmt(worst_gram));
  o.check(worst_spec <= 1e-9, "dense spectrum off by " + fmt(worst_spec));
  o.detail << "gram err " << fmt(worst_gram) << ", spectrum err " << fmt(worst_spec);
}

// 3 -------------------------------------------------------------------------
void example5_criterion(Outcome& o) {
  double worst_combo = 0.0, worst_bound = 0.0;
  for (std::size_t P : {2u, 4u}) {
    const FilterBank fb = bank_of(example5(P));
    const FilterBank psi = bank_of(daubechies4(P));
    const FusionReport r = fusion_report(fb);
    o.check(r.is_puntf, "not PUNTF at P=" + std::to_string(P));
    o.check(fb.filter(0) == psi.filter(0), "first filter differs from the low-pass filter");
    const double h = std::sqrt(3.0);
    const Signal phi1 = 0.5 * (-1.0 * psi.filter(0) + h * psi.filter(1));
    const Signal phi2 = 0.5 * (-1.0 * psi.filter(0) - h * psi.filter(1));
    worst_combo = std::max({worst_combo, max_abs_diff(fb.filter(1), phi1), max_abs_diff(fb.filter(2), phi2)});
    worst_bound = std::max({worst_bound, std::abs(r.bounds.A - 1.5), std::abs(r.bounds.B - 1.5)});
  }
  o.check(worst_combo <= 1e-12, "filter combination off by " + fmt(worst_combo));
  o.check(worst_bound <= 1e-9, "bounds off by " + fmt(worst_bound));
  o.detail << "combination err " << fmt(worst_combo) << ", bound err " << fmt(worst_bound);
}

// 4 -------------------------------------------------------------------------
void example7_criterion(Outcome& o) {
  double worst_bound = 0.0, worst_inner = 0.0;
  for (std::size_t P : {2u, 4u, 8u}) {
    const FilterBank fb = bank_of(example7(P));
    const FusionReport r = fusion_report(fb);
    o.check(r.is_puntf, "not PUNTF at P=" + std::to_string(P));
    worst_bound = std::max({worst_bound, std::abs(r.bounds.A - 2.0), std::abs(r.bounds.B - 2.0)});
    for (const auto& [a, b] : {std::pair{0u, 1u}, std::pair{2u, 3u}})
      for (std::size_t p = 0; p < P; ++p)
        worst_inner = std::max(worst_inner, std::abs(test::naive_inner(fb.filter(a).samples(),
                                                                       test::naive_shift(fb.filter(b).samples(), 2 * p))));
  }
  o.check(worst_bound <= 1e-9, "bounds off by " + fmt(worst_bound));
  o.check(worst_inner <= 1e-10, "paired channels not orthogonal: " + fmt(worst_inner));
  o.detail << "bound err " << fmt(worst_bound) << ", max paired inner product " << fmt(worst_inner);
}

// 5 -------------------------------------------------------------------------
std::vector<TreeLeaf> example7_tree(std::size_t Q, bool split_all) {
  const std::size_t D = 4 * Q;
  const FilterBank top = bank_of(example7(D / 2));
  const FilterBank child = bank_of(example7(D / 4));
  std::vector<TreeNode> children;
  for (std::size_t n = 0; n < 4; ++n)
    children.push_back(split_all || n == 0 ? TreeNode::split(child) : TreeNode::identity());
  return compose_tree(TreeNode::split(top, children));
}

void tree_criterion(Outcome& o) {
  const std::size_t Q = 4, D = 4 * Q;
  const auto e = example7_tree(Q, false);
  std::map<std::pair<Rational, std::size_t>, int> he;
  for (const auto& l : e) ++he[{l.weight, l.rank}];
  o.check(e.size() == 7, "one-split tree has " + std::to_string(e.size()) + " leaves");
  o.check(he[{Rational(1, 4), Q}] == 4 && he[{Rational(1, 2), 2 * Q}] == 3, "one-split weights/ranks wrong");
  const TreeVerification ve = verify_tree(e, D, 1e-9);
  o.check(ve.ok() && ve.parseval.max_residual <= 1e-9, "one-split Parseval residual " + fmt(ve.parseval.max_residual));

  const auto f = example7_tree(Q, true);
  bool uniform = f.size() == 16;
  for (const auto& l : f) uniform = uniform && l.weight == Rational(1, 4) && l.rank == Q;
  o.check(uniform, "full tree is not 16 leaves of weight 1/4 and rank Q");
  const TreeVerification vf = verify_tree(f, D, 1e-9);
  o.check(vf.ok() && vf.parseval.max_residual <= 1e-9, "full tree Parseval residual " + fmt(vf.parseval.max_residual));
  o.detail << "residuals " << fmt(ve.parseval.max_residual) << ", " << fmt(vf.parseval.max_residual);
}

// 6 -------------------------------------------------------------------------
void equivalent_filter_criterion(Outcome& o) {
  const std::size_t Q = 4, D = 4 * Q;
  const FilterBank top = bank_of(example7(D / 2));
  const FilterBank child = bank_of(example7(D / 4));
  const auto leaves = example7_tree(Q, true);
  double worst = 0.0;
  for (const auto& leaf : leaves) {
    const auto eq = test::naive_dft(leaf.op.filter.samples());
    const auto outer = test::naive_dft(top.filter(leaf.path.at(0)).samples());
    const auto inner_hat = test::naive_dft(child.filter(leaf.path.at(1)).samples());
    // Bin k of the half-length DFT sits at twice the frequency of bin k here.
    for (std::size_t k = 0; k < D; ++k)
      worst = std::max(worst, std::abs(std::norm(eq[k]) - std::norm(outer[k]) * std::norm(inner_hat[k % (D / 2)])));
  }
  o.check(leaves.size() == 16, "expected 16 two-level channels");
  o.check(worst <= 1e-9, "factorization off by " + fmt(worst));
  o.detail << "max deviation " << fmt(worst) << " over " << leaves.size() << " channels";
}

// 7 -------------------------------------------------------------------------
void ensemble_criterion(Outcome& o) {
  test::Rng rng(2026);
  double worst_bound = 0.0;
  int disagreements = 0, projections = 0, union_failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t M = 1 + trial % 3;
    const std::size_t N = M + (trial / 3) % 4;
    const std::size_t P = 2 + (trial / 12) % 3;
    std::vector<Signal> filters;
    for (std::size_t n = 0; n < N; ++n) {
      Signal raw = test::random_signal(M * P, rng);
      // Mix raw Gaussian channels with normalized (projection) ones and
      // normalized ones with a zeroed root (idempotent, rank < P).
      switch ((trial + n) % 3) {
        case 0: filters.push_back(std::move(raw)); break;
        case 1: filters.push_back(test::normalize_per_root(raw, M)); break;
        default: filters.push_back(test::normalize_per_root(raw, M, {n % P})); break;
      }
    }
    const FilterBank fb(std::move(filters), M);
    const FrameBounds b = frame_bounds(matrix_of(fb));
    const DenseSynthesis d = densify(fb);
    const auto spectrum = dense_frame_spectrum(d);
    worst_bound = std::max({worst_bound, std::abs(b.A - std::max(0.0, spectrum.front())),
                            std::abs(b.B - std::max(0.0, spectrum.back()))});
    for (std::size_t n = 0; n < N; ++n) {
      const bool lib = channel_is_projection(fb.filter(n), M, 1e-9);
      const ChannelGramReport g = dense_channel_gram(d, n, 1e-9);
      const bool dense = g.idempotent && g.rank == P;
      if (lib != dense) ++disagreements;
      if (lib) ++projections;
    }
    if (!spectrum_union_check(fb)) ++union_failures;
  }
  o.check(worst_bound <= 1e-8, "bounds differ from dense extremes by " + fmt(worst_bound));
  o.check(disagreements == 0, std::to_string(disagreements) + " projection verdict disagreements");
  o.check(union_failures == 0, std::to_string(union_failures) + " spectrum union failures");
  o.detail << "bound err " << fmt(worst_bound) << ", " << projections << " projection channels, verdicts agree";
}

// 8 -------------------------------------------------------------------------
void gabor_criterion(Outcome& o) {
  const std::size_t M = 2, Q = 2, R = 2, L = M * Q * R;
  test::Rng rng(88);
  double worst_bound = 0.0, worst_phase = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Signal phi = test::random_signal(L, rng);
    const FrameBounds g = gabor_frame_bounds(phi, M, Q, R);
    const auto spectrum = dense_frame_spectrum(densify(gabor_bank(GaborSystem(phi, M, Q, R))));
    worst_bound = std::max({worst_bound, std::abs(g.A - spectrum.front()), std::abs(g.B - spectrum.back())});
    for (std::size_t n = 0; n < M * R; ++n) {
      std::vector<cplx> mod(L);
      for (std::size_t k = 0; k < L; ++k)
        mod[k] = phi.samples()[k] * std::polar(1.0, kTwoPi * static_cast<double>((Q * n * k) % L) / static_cast<double>(L));
      for (std::size_t p = 0; p < Q * R; ++p) {
        const cplx lhs = test::naive_inner(mod, test::naive_shift(mod, M * p));
        const cplx rhs = std::polar(1.0, kTwoPi * static_cast<double>((n * p) % R) / static_cast<double>(R)) *
                         test::naive_inner(phi.samples(), test::naive_shift(phi.samples(), M * p));
        worst_phase = std::max(worst_phase, std::abs(lhs - rhs));
      }
    }
  }
  o.check(worst_bound <= 1e-8, "Gabor bounds differ from dense extremes by " + fmt(worst_bound));
  o.check(worst_phase <= 1e-12, "modulation phase law off by " + fmt(worst_phase));
  o.detail << "bound err " << fmt(worst_bound) << ", phase law err " << fmt(worst_phase);
}

// 9 -------------------------------------------------------------------------
double naive_translate_defect(std::span<const cplx> x, std::size_t step) {
  double worst = 0.0;
  for (std::size_t k = 0; k < x.size() / step; ++k)
    worst = std::max(worst, std::abs(test::naive_inner(x, test::naive_shift(x, k * step)) - (k == 0 ? 1.0 : 0.0)));
  return worst;
}

void maxflat_criterion(Outcome& o) {
  MaxFlatOptions options;
  options.restarts = 100;
  options.threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  for (std::size_t T : {2u, 10u}) {
    const std::string tag = "T=" + std::to_string(T) + ": ";
    const MaxFlatDesign d = design_maxflat(T, 1, options);
    o.check(d.found, tag + "no solution in 100 restarts");
    if (!d.found) continue;
    o.check(d.residual <= 1e-8, tag + "residual " + fmt(d.residual));
    const std::size_t Q = (T + 1) / 2;
    const Signal proto = maxflat_prototype(d.taps, Q);
    const GaborSystem sys(proto, 2, Q, 2);
    const FilterBank fb = gabor_bank(sys);
    const FrameBounds b = frame_bounds(matrix_of(fb));
    const FrameBounds g = gabor_frame_bounds(proto, 2, Q, 2);
    const double bound_err = std::max({std::abs(b.A - 2.0), std::abs(b.B - 2.0), std::abs(g.A - 2.0), std::abs(g.B - 2.0)});
    o.check(bound_err <= 1e-7, tag + "bounds off by " + fmt(bound_err));
    const double t0 = naive_translate_defect(proto.samples(), 4);
    const double t2 = naive_translate_defect(test::naive_shift(proto.samples(), 2), 4);
    o.check(std::max(t0, t2) <= 1e-8, tag + "4-translates not orthonormal: " + fmt(std::max(t0, t2)));
    const DenseSynthesis dense = densify(fb);
    for (std::size_t n = 0; n < 4; ++n) {
      const ChannelGramReport cg = dense_channel_gram(dense, n);
      o.check(std::abs(cg.trace - 2.0 * static_cast<double>(Q)) <= 1e-8, tag + "channel trace " + fmt(cg.trace));
      o.check(!cg.idempotent, tag + "channel " + std::to_string(n) + " is unexpectedly a single projection");
    }
    if (T != 2) o.detail << "; ";
    o.detail << tag << "restart " << d.restart << ", residual " << fmt(d.residual) << ", bound err " << fmt(bound_err);
  }
}

// 10 ------------------------------------------------------------------------
void property_criterion(Outcome& o) {
  test::Rng rng(1010);
  bool roundtrip = true;
  for (int i = 0; i < 100; ++i) {
    const std::size_t M = 1 + i % 4, P = 1 + (i / 4) % 5;
    const Signal x = test::random_signal(M * P, rng);
    roundtrip = roundtrip && reconstruct(decompose(x, M)) == x;
  }
  o.check(roundtrip, "polyphase roundtrip not exact");

  double zak = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t M = 1 + i % 3, P = 2 + i % 5;
    const Signal x = test::random_signal(M * P, rng);
    const Signal y = test::random_signal(M * P, rng);
    zak = std::max(zak, std::abs(pp_inner(x, y, M) - test::naive_inner(x.samples(), y.samples())));
  }
  o.check(zak <= 1e-10, "Zak-map unitarity off by " + fmt(zak));

  double adj = 0.0, fundamental = 0.0;
  for (int i = 0; i < 30; ++i) {
    const std::size_t M = 1 + i % 3, N = 1 + i % 4, P = 2 + i % 3;
    const FilterBank fb = test::random_bank(M, N, P, rng);
    const Signal x = test::random_signal(M * P, rng);
    std::vector<Signal> ys;
    for (std::size_t n = 0; n < N; ++n) ys.push_back(test::random_signal(P, rng));
    const auto coeffs = analysis_apply(fb, x);
    cplx rhs = 0.0;
    for (std::size_t n = 0; n < N; ++n) rhs += test::naive_inner(ys[n].samples(), coeffs[n].samples());
    adj = std::max(adj, std::abs(test::naive_inner(synthesis_apply(fb, ys).samples(), x.samples()) - rhs));

    const Signal& phi = fb.filter(0);
    std::vector<cplx> corr(P);
    for (std::size_t p = 0; p < P; ++p) corr[p] = test::naive_inner(x.samples(), test::naive_shift(phi.samples(), M * p));
    const auto lhs = test::naive_dft(corr);
    const auto xv = decompose(x, M);
    const auto fv = decompose(phi, M);
    for (std::size_t p = 0; p < P; ++p) {
      const auto a = xv.eval(static_cast<long long>(p));
      const auto b = fv.eval(static_cast<long long>(p));
      cplx ip = 0.0;
      for (std::size_t m = 0; m < M; ++m) ip += a[m] * std::conj(b[m]);
      fundamental = std::max(fundamental, std::abs(lhs[p] - ip));
    }
  }
  o.check(adj <= 1e-10, "adjoint identity off by " + fmt(adj));
  o.check(fundamental <= 1e-10, "correlation DFT identity off by " + fmt(fundamental));

  const double s = 1.0 / std::sqrt(3.0);
  const double verts[4][3] = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  std::vector<WeightedProjection> tet;
  for (const auto& v : verts) {
    CMatrix pi = CMatrix::identity(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) pi(i, j) -= v[i] * v[j];
    tet.push_back({[pi](const Signal& x) { return Signal(pi.apply(x.samples())); }, Rational(3, 8), 2});
  }
  const ParsevalCheck pc = verify_weighted_parseval(tet, 3, 1e-12);
  o.check(pc.ok && pc.max_residual <= 1e-12, "tetrahedron residual " + fmt(pc.max_residual));

  o.detail << "zak " << fmt(zak) << ", adjoint " << fmt(adj) << ", correlation " << fmt(fundamental)
           << ", tetrahedron " << fmt(pc.max_residual);
}

struct Entry {
  int id;
  const char* name;
  Criterion run;
  double time_limit;  // seconds; 0 means none
};

}  // namespace

int main() {
  const std::vector<Entry> entries{
      {1, "three-vector constant frame", mercedes_benz_criterion, 1.0},
      {2, "four-tap paraunitary bank", daubechies_criterion, 0.0},
      {3, "paraunitary times constant frame", example5_criterion, 0.0},
      {4, "stacked modulated bank", example7_criterion, 0.0},
      {5, "multi-level trees", tree_criterion, 5.0},
      {6, "equivalent-filter factorization", equivalent_filter_criterion, 0.0},
      {7, "oracle equivalence ensemble", ensemble_criterion, 0.0},
      {8, "Gabor bounds and modulation phase law", gabor_criterion, 0.0},
      {9, "max-flat Gabor design", maxflat_criterion, 60.0},
      {10, "property suites", property_criterion, 0.0},
  };

  int failures = 0;
  for (const auto& e : entries) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(o);
    } catch (const std::exception& ex) {
      o.check(false, std::string("exception: ") + ex.what());
    }
    const double elapsed = seconds_since(t0);
    if (e.time_limit > 0.0) o.check(elapsed < e.time_limit, "took " + fmt(elapsed) + " s, limit " + fmt(e.time_limit) + " s");
    if (!o.pass) ++failures;
    const std::string text = o.pass ? o.detail.str() : o.failures + " | " + o.detail.str();
    std::printf("%s criterion %d (%s): %s [%.3f s]\n", o.pass ? "PASS" : "FAIL", e.id, e.name, text.c_str(), elapsed);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failures, entries.size());
  return failures == 0 ? 0 : 1;
}
