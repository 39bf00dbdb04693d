// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include "fbff/signal.hpp"

#include <algorithm>
#include <cmath>

namespace fbff {

namespace {

void require_same_period(const Signal& a, const Signal& b) {
  require(a.period() == b.period(),
          "signal period mismatch: " + std::to_string(a.period()) + " vs " + std::to_string(b.period()));
}

}  // namespace

Signal::Signal(std::size_t period) : samples_(period) { require(period > 0, "signal period must be positive"); }

Signal::Signal(std::vector<cplx> samples) : samples_(std::move(samples)) {
  require(!samples_.empty(), "signal period must be positive");
}

Signal Signal::delta(long long k, std::size_t period) {
  Signal out(period);
  out.samples_[wrap_index(k, period)] = 1.0;
  return out;
}

double Signal::norm() const {
  double sum = 0.0;
  for (const auto& s : samples_) sum += std::norm(s);
  return std::sqrt(sum);
}

Signal& Signal::operator+=(const Signal& other) {
  require_same_period(*this, other);
  for (std::size_t k = 0; k < samples_.size(); ++k) samples_[k] += other.samples_[k];
  return *this;
}

Signal& Signal::operator-=(const Signal& other) {
  require_same_period(*this, other);
  for (std::size_t k = 0; k < samples_.size(); ++k) samples_[k] -= other.samples_[k];
  return *this;
}

Signal& Signal::operator*=(cplx scale) {
  for (auto& s : samples_) s *= scale;
  return *this;
}

cplx inner(const Signal& x, const Signal& y) {
  require_same_period(x, y);
  cplx sum{};
  for (std::size_t k = 0; k < x.period(); ++k) sum += x.samples()[k] * std::conj(y.samples()[k]);
  return sum;
}

double max_abs_diff(const Signal& x, const Signal& y) {
  require_same_period(x, y);
  double worst = 0.0;
  for (std::size_t k = 0; k < x.period(); ++k) worst = std::max(worst, std::abs(x.samples()[k] - y.samples()[k]));
  return worst;
}

std::vector<cplx> dft(std::span<const cplx> y) {
  const std::size_t n = y.size();
  std::vector<cplx> out(n);
  for (std::size_t p = 0; p < n; ++p) {
    cplx sum{};
    for (std::size_t q = 0; q < n; ++q) sum += y[q] * root_of_unity(-static_cast<long long>((p * q) % n), n);
    out[p] = sum;
  }
  return out;
}

Signal circ_convolve(const Signal& x, const Signal& h) {
  require_same_period(x, h);
  const std::size_t n = x.period();
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx xj = x.samples()[j];
    if (xj == cplx{}) continue;
    for (std::size_t i = 0; i < n; ++i) out[(i + j) % n] += xj * h.samples()[i];
  }
  return Signal(std::move(out));
}

Signal upsample(const Signal& y, std::size_t M) {
  require(M > 0, "upsampling rate must be positive");
  std::vector<cplx> out(y.period() * M);
  for (std::size_t p = 0; p < y.period(); ++p) out[M * p] = y.samples()[p];
  return Signal(std::move(out));
}

Signal downsample(const Signal& x, std::size_t M) {
  require(M > 0 && x.period() % M == 0,
          "downsampling rate " + std::to_string(M) + " does not divide period " + std::to_string(x.period()));
  std::vector<cplx> out(x.period() / M);
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = x.samples()[M * p];
  return Signal(std::move(out));
}

Signal translate(const Signal& x, long long k) {
  const std::size_t n = x.period();
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) out[wrap_index(static_cast<long long>(i) + k, n)] = x.samples()[i];
  return Signal(std::move(out));
}

double translate_orthonormality_defect(const Signal& x, std::size_t step) {
  require(step > 0 && x.period() % step == 0, "translation step must divide the period");
  double worst = 0.0;
  for (std::size_t k = 0; k < x.period() / step; ++k) {
    const cplx c = inner(x, translate(x, static_cast<long long>(k * step)));
    worst = std::max(worst, std::abs(c - (k == 0 ? cplx(1.0) : cplx(0.0))));
  }
  return worst;
}

Signal modulate(const Signal& x, long long p) {
  const std::size_t n = x.period();
  const std::size_t base = wrap_index(p, n);
  std::vector<cplx> out(n);
  for (std::size_t q = 0; q < n; ++q) {
    out[q] = x.samples()[q] * root_of_unity(static_cast<long long>((base * q) % n), n);
  }
  return Signal(std::move(out));
}

Signal involution(const Signal& x) {
  const std::size_t n = x.period();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = std::conj(x.samples()[(n - k) % n]);
  return Signal(std::move(out));
}

Signal periodize(const Signal& x, std::size_t target_period) {
  require(target_period > 0 && x.period() % target_period == 0,
          "periodization target " + std::to_string(target_period) + " does not divide period " +
              std::to_string(x.period()));
  std::vector<cplx> out(target_period);
  for (std::size_t k = 0; k < x.period(); ++k) out[k % target_period] += x.samples()[k];
  return Signal(std::move(out));
}

Signal embed_taps(std::span<const cplx> taps, std::size_t period) {
  require(period > 0, "signal period must be positive");
  std::vector<cplx> out(period);
  for (std::size_t k = 0; k < taps.size(); ++k) out[k % period] += taps[k];
  return Signal(std::move(out));
}

FilterBank::FilterBank(std::vector<Signal> filters, std::size_t downsample)
    : filters_(std::move(filters)), downsample_(downsample), inner_period_(0) {
  require(!filters_.empty(), "filter bank needs at least one filter");
  require(downsample_ > 0, "downsampling rate must be positive");
  const std::size_t period = filters_.front().period();
  for (const auto& f : filters_) require(f.period() == period, "all filters must share one period");
  require(period % downsample_ == 0, "downsampling rate " + std::to_string(downsample_) +
                                         " does not divide filter period " + std::to_string(period));
  inner_period_ = period / downsample_;
}

Signal synthesis_apply(const FilterBank& fb, std::span<const Signal> inputs) {
  require(inputs.size() == fb.channels(), "synthesis expects " + std::to_string(fb.channels()) + " inputs, got " +
                                              std::to_string(inputs.size()));
  Signal out(fb.filter_period());
  for (std::size_t n = 0; n < fb.channels(); ++n) {
    require(inputs[n].period() == fb.inner_period(), "synthesis input period must equal the inner period");
    out += circ_convolve(fb.filter(n), upsample(inputs[n], fb.downsample()));
  }
  return out;
}

std::vector<Signal> analysis_apply(const FilterBank& fb, const Signal& x) {
  require(x.period() == fb.filter_period(), "analysis input period must equal M * inner period");
  std::vector<Signal> out;
  out.reserve(fb.channels());
  for (const auto& f : fb.filters()) out.push_back(downsample(circ_convolve(involution(f), x), fb.downsample()));
  return out;
}

}  // namespace fbff
