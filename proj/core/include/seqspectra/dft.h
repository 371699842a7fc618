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

#ifndef SEQSPECTRA_DFT_H_
#define SEQSPECTRA_DFT_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace seqspectra {

using Complex = std::complex<double>;

// X(k) = sum_j x(j) exp(-2 pi i k j / m), k = 0..m-1.
using ChannelSpectrum = std::vector<Complex>;

// Direct O(m^2) evaluation of the forward DFT. Twiddle factors are indexed by
// (k j mod m), so each one is an exactly reduced root of unity. This is the
// reference the fast transform is tested against.
ChannelSpectrum DftNaive(std::span<const Complex> x);
ChannelSpectrum DftNaive(std::span<const double> x);

// Forward DFT of one fixed length. Powers of two use an iterative radix-2
// Cooley-Tukey transform; every other length goes through Bluestein's chirp-z
// reformulation on a zero-padded power-of-two convolution. A plan is
// immutable after construction, so one plan can serve any number of threads.
class FftPlan {
 public:
  explicit FftPlan(std::size_t size);

  std::size_t size() const { return size_; }

  ChannelSpectrum Forward(std::span<const Complex> x) const;
  ChannelSpectrum Forward(std::span<const double> x) const;

 private:
  struct Radix2 {
    explicit Radix2(std::size_t n);
    // In-place; `inverse` flips the twiddle sign but does not scale.
    void Transform(std::vector<Complex>& data, bool inverse) const;

    std::size_t n = 0;
    std::vector<std::size_t> bit_reverse;
    std::vector<Complex> twiddles;  // exp(-2 pi i k / n), k < n/2
  };

  ChannelSpectrum Bluestein(std::span<const Complex> x) const;

  std::size_t size_;
  bool power_of_two_;
  Radix2 radix2_;                  // length size_ or the padded length
  std::vector<Complex> chirp_;     // exp(-i pi j^2 / size_)
  std::vector<Complex> kernel_;    // FFT of the padded conjugate chirp
};

// One-shot fast transform; prefer an FftPlan when transforming many signals
// of the same length.
ChannelSpectrum DftFast(std::span<const Complex> x);
ChannelSpectrum DftFast(std::span<const double> x);

}  // namespace seqspectra

#endif  // SEQSPECTRA_DFT_H_
