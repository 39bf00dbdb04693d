// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include <catch_amalgamated.hpp>

#include "fbff/constructions.hpp"
#include "fbff/polyphase.hpp"
#include "oracles.hpp"

using namespace fbff;

TEST_CASE("decompose picks residue classes", "[polyphase]") {
  const auto v = decompose(Signal::delta(0, 6), 3);
  CHECK(v.component(0) == CyclicPoly::constant(1.0, 2));
  CHECK(v.component(1) == CyclicPoly(2));
  const auto w = decompose(Signal::delta(1, 4), 2);
  CHECK(w.component(0) == CyclicPoly(2));
  CHECK(w.component(1) == CyclicPoly::constant(1.0, 2));
  CHECK_THROWS_AS(decompose(Signal(5), 2), DimensionError);
}

TEST_CASE("reconstruct inverts decompose exactly", "[polyphase]") {
  test::Rng rng(20);
  for (std::size_t M : {1u, 2u, 3u})
    for (std::size_t P : {1u, 2u, 5u}) {
      const Signal x = test::random_signal(M * P, rng);
      CHECK(reconstruct(decompose(x, M)) == x);
    }
  CHECK(reconstruct(PolyphaseVector({CyclicPoly(3), CyclicPoly(3)})) == Signal(6));
  const Signal s = reconstruct(PolyphaseVector({CyclicPoly(3), CyclicPoly({1.0, 2.0, 3.0})}));
  for (std::size_t k = 0; k < 6; k += 2) CHECK(s[static_cast<long long>(k)] == cplx(0.0));
}

TEST_CASE("polyphase evaluation matches the definition", "[polyphase]") {
  test::Rng rng(21);
  const Signal x = test::random_signal(12, rng);
  const auto v = decompose(x, 3);
  for (std::size_t p = 0; p < 4; ++p) {
    const auto got = v.eval(static_cast<long long>(p));
    for (std::size_t m = 0; m < 3; ++m) CHECK(std::abs(got[m] - test::naive_polyphase_eval(x.samples(), 3, m, p)) < 1e-12);
  }
}

TEST_CASE("matrix_of named banks", "[polyphase]") {
  const auto mb = matrix_of(bank_of(mercedes_benz(2)));
  const double h = std::sqrt(3.0) / 2.0;
  const CMatrix expected{{1.0, -0.5, -0.5}, {0.0, h, -h}};
  for (long long p = 0; p < 2; ++p) CHECK(test::max_abs_diff(eval(mb, p), expected) < 1e-15);

  const auto d = daubechies4_coefficients();
  const auto db = matrix_of(bank_of(daubechies4(3)));
  CHECK(db.at(0, 0) == CyclicPoly({d.a, d.b, 0.0}));
  CHECK(db.at(1, 0) == CyclicPoly({d.c, d.d, 0.0}));

  const auto single = matrix_of(FilterBank({Signal::delta(0, 4)}, 2));
  CHECK(single.at(0, 0) == CyclicPoly::constant(1.0, 2));
  CHECK(single.at(1, 0) == CyclicPoly(2));
  CHECK(bank_of(db) == bank_of(daubechies4(3)));
}

TEST_CASE("polyphase adjoint", "[polyphase]") {
  const CMatrix f{{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}};
  const auto adj = adjoint(PolyphaseMatrix::constant(f, 3));
  CHECK(adj.rows() == 3);
  CHECK(adj.at(2, 1) == CyclicPoly::constant(6.0, 3));

  test::Rng rng(22);
  PolyphaseMatrix phi(2, 3, 8);
  for (std::size_t m = 0; m < 2; ++m)
    for (std::size_t n = 0; n < 3; ++n) phi.set(m, n, CyclicPoly(test::random_vector(8, rng)));
  const auto phi_star = adjoint(phi);
  for (long long p = 0; p < 8; ++p) CHECK(test::max_abs_diff(eval(phi_star, p), eval(phi, p).adjoint()) < 1e-12);
}

TEST_CASE("gram and evaluation", "[polyphase]") {
  const auto d1 = eval(daubechies4(1), 0);
  CHECK(test::max_abs_diff(d1 * d1.adjoint(), CMatrix::identity(2)) < 1e-12);
  const CMatrix c{{1.0, 0.5}, {0.0, 2.0}};
  for (long long p = 0; p < 4; ++p) CHECK(test::max_abs_diff(eval(PolyphaseMatrix::constant(c, 4), p), c) == 0.0);
  PolyphaseMatrix bad(2, 2, 4);
  CHECK_THROWS_AS(bad.set(0, 0, CyclicPoly(3)), DimensionError);
}

TEST_CASE("zak matrix", "[polyphase]") {
  test::Rng rng(23);
  const Signal x = test::random_signal(8, rng);
  const auto z1 = zak_of(x, 2, 1);
  const auto v = decompose(x, 2);
  CHECK(z1.at(0, 0) == v.component(0));
  CHECK(z1.at(1, 0) == v.component(1));

  const auto zd = zak_of(Signal::delta(0, 8), 2, 2);
  CHECK(zd.at(0, 0) == CyclicPoly::constant(1.0, 4));
  CHECK(zd.at(0, 1) == CyclicPoly::constant(1.0, 4));
  CHECK(zd.at(1, 1) == CyclicPoly(4));
  CHECK_THROWS_AS(zak_of(x, 2, 3), DimensionError);
}

TEST_CASE("pp_inner is unitary", "[polyphase]") {
  CHECK(std::abs(pp_inner(Signal::delta(0, 4), Signal::delta(0, 4), 2) - 1.0) < 1e-15);
  CHECK(std::abs(pp_inner(Signal::delta(0, 4), Signal::delta(1, 4), 2)) < 1e-12);
  test::Rng rng(24);
  for (int i = 0; i < 20; ++i) {
    const Signal x = test::random_signal(16, rng);
    const Signal y = test::random_signal(16, rng);
    CHECK(std::abs(pp_inner(x, y, 2) - test::naive_inner(x.samples(), y.samples())) < 1e-10);
  }
}

TEST_CASE("translation by M p multiplies by z^-p", "[polyphase]") {
  test::Rng rng(25);
  const Signal x = test::random_signal(12, rng);
  const std::size_t M = 3, P = 4;
  for (long long shift = 0; shift < 4; ++shift) {
    const auto moved = decompose(translate(x, static_cast<long long>(M) * shift), M);
    const auto base = decompose(x, M);
    for (long long p = 0; p < static_cast<long long>(P); ++p) {
      const cplx zp = root_of_unity(-p * shift, P);
      const auto a = moved.eval(p);
      const auto b = base.eval(p);
      for (std::size_t m = 0; m < M; ++m) CHECK(std::abs(a[m] - zp * b[m]) < 1e-12);
    }
  }
}

TEST_CASE("dft of the correlation sequence is the polyphase inner product", "[polyphase]") {
  test::Rng rng(26);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t M = 1 + trial % 3, P = 2 + trial % 4;
    const Signal x = test::random_signal(M * P, rng);
    const Signal phi = test::random_signal(M * P, rng);
    std::vector<cplx> corr(P);
    for (std::size_t p = 0; p < P; ++p) corr[p] = test::naive_inner(x.samples(), test::naive_shift(phi.samples(), M * p));
    const auto lhs = test::naive_dft(corr);
    const auto xv = decompose(x, M);
    const auto fv = decompose(phi, M);
    for (std::size_t p = 0; p < P; ++p) {
      const auto a = xv.eval(static_cast<long long>(p));
      const auto b = fv.eval(static_cast<long long>(p));
      cplx rhs = 0.0;
      for (std::size_t m = 0; m < M; ++m) rhs += a[m] * std::conj(b[m]);
      CHECK(std::abs(lhs[p] - rhs) < 1e-10);
    }
  }
}
