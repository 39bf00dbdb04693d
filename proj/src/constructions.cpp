// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include "fbff/constructions.hpp"

#include <algorithm>
#include <cmath>

namespace fbff {

PolyphaseMatrix mercedes_benz(std::size_t period) {
  const double h = std::sqrt(3.0) / 2.0;
  return PolyphaseMatrix::constant(CMatrix{{1.0, -0.5, -0.5}, {0.0, h, -h}}, period);
}

Daubechies4Coefficients daubechies4_coefficients() {
  const double scale = std::pow(2.0, -2.5);
  const double r3 = std::sqrt(3.0);
  return {scale * (1.0 + r3), scale * (3.0 - r3), scale * (3.0 + r3), scale * (1.0 - r3)};
}

PolyphaseMatrix daubechies4(std::size_t period) {
  const auto [a, b, c, d] = daubechies4_coefficients();
  auto entry = [period](double c0, double c1) {
    return CyclicPoly::constant(c0, period) + CyclicPoly::monomial(c1, 1, period);
  };
  PolyphaseMatrix out(2, 2, period);
  out.set(0, 0, entry(a, b));
  out.set(0, 1, entry(d, c));
  out.set(1, 0, entry(c, d));
  out.set(1, 1, entry(-b, -a));
  return out;
}

PolyphaseMatrix union_of(const PolyphaseMatrix& phi0, const PolyphaseMatrix& phi1) {
  require(phi0.rows() == phi1.rows(), "union needs equal row counts");
  require(phi0.period() == phi1.period(), "union needs equal periods");
  PolyphaseMatrix out(phi0.rows(), phi0.cols() + phi1.cols(), phi0.period());
  for (std::size_t m = 0; m < phi0.rows(); ++m) {
    for (std::size_t n = 0; n < phi0.cols(); ++n) out.set(m, n, phi0.at(m, n));
    for (std::size_t n = 0; n < phi1.cols(); ++n) out.set(m, phi0.cols() + n, phi1.at(m, n));
  }
  return out;
}

PolyphaseMatrix tensor(const PolyphaseMatrix& phi0, const PolyphaseMatrix& phi1) {
  require(phi0.period() == phi1.period(), "tensor needs equal periods");
  PolyphaseMatrix out(phi0.rows() * phi1.rows(), phi0.cols() * phi1.cols(), phi0.period());
  for (std::size_t m0 = 0; m0 < phi0.rows(); ++m0)
    for (std::size_t n0 = 0; n0 < phi0.cols(); ++n0)
      for (std::size_t m1 = 0; m1 < phi1.rows(); ++m1)
        for (std::size_t n1 = 0; n1 < phi1.cols(); ++n1)
          out.set(m0 * phi1.rows() + m1, n0 * phi1.cols() + n1, phi0.at(m0, n0) * phi1.at(m1, n1));
  return out;
}

PolyphaseMatrix paraunitary_product(const PolyphaseMatrix& psi, const PolyphaseMatrix& phi) {
  require(psi.rows() == psi.cols(), "paraunitary factor must be square");
  require(psi.cols() == phi.rows(), "product shape mismatch");
  require(psi.period() == phi.period(), "product needs equal periods");
  PolyphaseMatrix out(psi.rows(), phi.cols(), phi.period());
  for (std::size_t i = 0; i < psi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      CyclicPoly sum(phi.period());
      for (std::size_t k = 0; k < psi.cols(); ++k) sum += psi.at(i, k) * phi.at(k, j);
      out.set(i, j, std::move(sum));
    }
  return out;
}

PolyphaseMatrix elementary_paraunitary(std::span<const cplx> u, std::size_t period) {
  require(!u.empty(), "elementary factor needs a nonempty direction");
  double sq = 0.0;
  for (const auto& v : u) sq += std::norm(v);
  if (std::abs(std::sqrt(sq) - 1.0) > 1e-12) throw std::invalid_argument("elementary factor direction must be a unit vector");
  const std::size_t M = u.size();
  const long long z_plus_one = static_cast<long long>(period) - 1;  // z = z^{-(P-1)}
  PolyphaseMatrix out(M, M, period);
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) {
      const cplx uu = u[i] * std::conj(u[j]);
      const cplx id = i == j ? 1.0 : 0.0;
      out.set(i, j, CyclicPoly::constant(id - uu, period) + CyclicPoly::monomial(uu, z_plus_one, period));
    }
  return out;
}

PolyphaseMatrix paraunitary_chain(const std::vector<std::vector<cplx>>& directions, std::size_t M,
                                  std::size_t period) {
  PolyphaseMatrix out = PolyphaseMatrix::identity(M, period);
  for (const auto& u : directions) {
    require(u.size() == M, "chain direction has the wrong dimension");
    out = paraunitary_product(out, elementary_paraunitary(u, period));
  }
  return out;
}

RowMap RowMap::identity(std::size_t M) {
  RowMap map;
  for (std::size_t i = 0; i < M; ++i) {
    map.permutation.push_back(i);
    map.phases.emplace_back(1.0);
  }
  return map;
}

RowMap RowMap::swap2() { return RowMap{{1, 0}, {1.0, 1.0}}; }

RowMap RowMap::quarter_turn(std::size_t M) {
  RowMap map = identity(M);
  for (std::size_t i = 0; i < M; ++i) map.phases[i] = root_of_unity(static_cast<long long>(i), 4);
  return map;
}

PolyphaseMatrix modulated_copy(const PolyphaseMatrix& psi, const RowMap& rows) {
  require(psi.period() % 2 == 0, "modulated copy needs an even period for z -> -z");
  require(rows.permutation.size() == psi.rows() && rows.phases.size() == psi.rows(), "row map size mismatch");
  std::vector<std::size_t> sorted = rows.permutation;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) require(sorted[i] == i, "row map is not a permutation");

  PolyphaseMatrix out(psi.rows(), psi.cols(), psi.period());
  for (std::size_t i = 0; i < psi.rows(); ++i)
    for (std::size_t n = 0; n < psi.cols(); ++n)
      out.set(i, n, rows.phases[i] * psi.at(rows.permutation[i], n).twist(1, 2));
  return out;
}

PolyphaseMatrix example5(std::size_t period) {
  return paraunitary_product(daubechies4(period), mercedes_benz(period));
}

PolyphaseMatrix example7(std::size_t period) {
  const PolyphaseMatrix psi = daubechies4(period);
  return union_of(psi, modulated_copy(psi, RowMap::quarter_turn(2)));
}

bool is_named_matrix(std::string_view name) {
  return name == "mercedes-benz" || name == "daubechies4" || name == "example5" || name == "example7";
}

PolyphaseMatrix named_matrix(std::string_view name, std::size_t period) {
  if (name == "mercedes-benz") return mercedes_benz(period);
  if (name == "daubechies4") return daubechies4(period);
  if (name == "example5") return example5(period);
  if (name == "example7") return example7(period);
  throw std::invalid_argument("unknown bank name: " + std::string(name));
}

}  // namespace fbff
