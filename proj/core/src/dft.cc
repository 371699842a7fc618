// Copyright 2026 The seqspectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqspectra/dft.h"

#include <bit>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace seqspectra {
namespace {

// exp(-2 pi i r / n) for r = 0..n-1.
std::vector<Complex> RootsOfUnity(std::size_t n) {
  std::vector<Complex> roots(n);
  const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t r = 0; r < n; ++r) {
    roots[r] = std::polar(1.0, step * static_cast<double>(r));
  }
  return roots;
}

// Radix-2 length backing a plan of `size`: the size itself for powers of two,
// otherwise room for the length-(2 size - 1) linear convolution.
std::size_t WorkLength(std::size_t size) {
  if (size == 0) throw std::invalid_argument("FftPlan: size must be >= 1");
  return std::has_single_bit(size) ? size : std::bit_ceil(2 * size - 1);
}

// Plain complex product; std::complex's operator* carries the Annex G
// inf/nan recovery, which dominates the inner loops.
inline Complex Mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

std::vector<Complex> ToComplex(std::span<const double> x) {
  return std::vector<Complex>(x.begin(), x.end());
}

}  // namespace

ChannelSpectrum DftNaive(std::span<const Complex> x) {
  const std::size_t m = x.size();
  if (m == 0) return {};
  const std::vector<Complex> roots = RootsOfUnity(m);
  ChannelSpectrum out(m);
  for (std::size_t k = 0; k < m; ++k) {
    Complex sum = 0.0;
    std::size_t r = 0;  // k * j mod m
    for (std::size_t j = 0; j < m; ++j) {
      sum += Mul(x[j], roots[r]);
      r += k;
      if (r >= m) r -= m;
    }
    out[k] = sum;
  }
  return out;
}

ChannelSpectrum DftNaive(std::span<const double> x) {
  return DftNaive(std::span<const Complex>(ToComplex(x)));
}

FftPlan::Radix2::Radix2(std::size_t size) : n(size) {
  bit_reverse.resize(n);
  const int bits = n > 1 ? std::countr_zero(n) : 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
    bit_reverse[i] = r;
  }
  twiddles.resize(n / 2);
  const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n / 2; ++k) {
    twiddles[k] = std::polar(1.0, step * static_cast<double>(k));
  }
}

void FftPlan::Radix2::Transform(std::vector<Complex>& data,
                                bool inverse) const {
  for (std::size_t i = 0; i < n; ++i) {
    if (i < bit_reverse[i]) std::swap(data[i], data[bit_reverse[i]]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex t = twiddles[k * stride];
        const Complex w = inverse ? std::conj(t) : t;
        const Complex a = data[start + k];
        const Complex b = Mul(data[start + k + half], w);
        data[start + k] = a + b;
        data[start + k + half] = a - b;
      }
    }
  }
}

FftPlan::FftPlan(std::size_t size)
    : size_(size),
      power_of_two_(std::has_single_bit(size)),
      radix2_(WorkLength(size)) {
  if (power_of_two_) return;

  // chirp_[j] = exp(-i pi j^2 / n); j^2 is reduced mod 2n in integers so the
  // angle stays exact for large j.
  const std::uint64_t n = size_;
  chirp_.resize(size_);
  for (std::uint64_t j = 0; j < n; ++j) {
    const std::uint64_t q = (j * j) % (2 * n);
    chirp_[j] = std::polar(1.0, -std::numbers::pi * static_cast<double>(q) /
                                    static_cast<double>(n));
  }
  const std::size_t padded = radix2_.n;
  kernel_.assign(padded, Complex(0.0));
  kernel_[0] = std::conj(chirp_[0]);
  for (std::size_t j = 1; j < size_; ++j) {
    kernel_[j] = std::conj(chirp_[j]);
    kernel_[padded - j] = std::conj(chirp_[j]);
  }
  radix2_.Transform(kernel_, /*inverse=*/false);
}

ChannelSpectrum FftPlan::Bluestein(std::span<const Complex> x) const {
  const std::size_t padded = radix2_.n;
  std::vector<Complex> a(padded, Complex(0.0));
  for (std::size_t j = 0; j < size_; ++j) a[j] = Mul(x[j], chirp_[j]);
  radix2_.Transform(a, /*inverse=*/false);
  for (std::size_t i = 0; i < padded; ++i) a[i] = Mul(a[i], kernel_[i]);
  radix2_.Transform(a, /*inverse=*/true);
  const double scale = 1.0 / static_cast<double>(padded);
  ChannelSpectrum out(size_);
  for (std::size_t k = 0; k < size_; ++k) {
    out[k] = Mul(a[k] * scale, chirp_[k]);
  }
  return out;
}

ChannelSpectrum FftPlan::Forward(std::span<const Complex> x) const {
  if (x.size() != size_) {
    throw std::invalid_argument("FftPlan: input length " +
                                std::to_string(x.size()) +
                                " does not match plan length " +
                                std::to_string(size_));
  }
  if (!power_of_two_) return Bluestein(x);
  ChannelSpectrum data(x.begin(), x.end());
  radix2_.Transform(data, /*inverse=*/false);
  return data;
}

ChannelSpectrum FftPlan::Forward(std::span<const double> x) const {
  return Forward(std::span<const Complex>(ToComplex(x)));
}

ChannelSpectrum DftFast(std::span<const Complex> x) {
  if (x.empty()) return {};
  return FftPlan(x.size()).Forward(x);
}

ChannelSpectrum DftFast(std::span<const double> x) {
  if (x.empty()) return {};
  return FftPlan(x.size()).Forward(x);
}

}  // namespace seqspectra
