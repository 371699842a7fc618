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

#ifndef SEQSPECTRA_SPECTRUM_H_
#define SEQSPECTRA_SPECTRUM_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqspectra/dft.h"
#include "seqspectra/representation.h"

namespace seqspectra {

// Bins whose base SNR does not exceed this are left out of ratio checks: the
// ratio there is 0/0, not a measurement.
inline constexpr double kSnrSkipThreshold = 1e-12;

// Default relative tolerance for the spectral identities.
inline constexpr double kIdentityTolerance = 1e-9;

// Power spectrum of one numerical representation of a sequence.
struct SpectrumReport {
  std::string representation;
  std::size_t length = 0;        // m
  std::size_t symbol_count = 0;  // T
  bool is_base = true;           // indicator channels rather than T-1 rows
  double row_norm = 1.0;         // d; 1 for the base representation

  std::vector<double> power;  // P(k) = sum_channels |X(k)|^2, k = 0..m-1
  double total = 0.0;         // sum_k P(k), k = 0 included
  double average = 0.0;       // E = total / m
  std::vector<double> snr;    // snr[k-1] = P(k) / E for k = 1..m-1

  // SNR at bin k, 1 <= k < m.
  double Snr(std::size_t k) const { return snr.at(k - 1); }

  // Value `total` must take: m^2 for the base representation and
  // d^2 (T-1)/T m^2 for a transformed one.
  double ExpectedTotal() const;
};

// DFT of every channel with one shared plan. Channels are independent, so
// the result does not depend on evaluation order.
std::vector<ChannelSpectrum> ComputeChannelSpectra(
    std::span<const std::vector<double>> channels);

// Builds P(k), the total, E and the SNR profile from channel spectra.
SpectrumReport SpectrumFromChannels(std::span<const ChannelSpectrum> spectra,
                                    std::string representation);

// Indicator (base-vector) representation. Its SNR profile is
// sum_t |U_t(k)|^2 / m.
SpectrumReport SpectrumBase(const IndicatorMatrix& indicators);

// T-1 channel representation. Its SNR profile is T/(T-1) times the base one
// for every row-orthogonal matrix, whatever d is.
SpectrumReport SpectrumTransformed(const TransformedSignal& signal);

struct ChannelEnergy {
  char symbol = 0;
  std::size_t count = 0;   // |S_t|
  double expected = 0.0;   // m |S_t|
  double measured = 0.0;   // sum_k |U_t(k)|^2
};

struct TotalSpectrumCheck {
  double expected = 0.0;
  double measured = 0.0;
  double relative_error = 0.0;
  std::vector<ChannelEnergy> channels;  // filled for indicator checks only

  bool Passed(double tolerance = kIdentityTolerance) const {
    return relative_error < tolerance;
  }
};

// Sum over all bins and symbols of |U_t(k)|^2 against m^2, with the
// per-symbol energies m |S_t| that make it up.
TotalSpectrumCheck VerifyTotalSpectrum(const IndicatorMatrix& indicators);

// `report.total` against `report.ExpectedTotal()`.
TotalSpectrumCheck VerifyTotalSpectrum(const SpectrumReport& report);

struct SnrRatioCheck {
  std::string representation;
  double expected = 0.0;  // T/(T-1), or 1 when comparing like with like
  // ratios[k-1] for k = 1..m-1; empty where the base SNR was skipped.
  std::vector<std::optional<double>> ratios;
  double max_deviation = 0.0;  // max |ratio - expected| over checked bins
  std::size_t checked = 0;
  std::size_t skipped = 0;

  bool Vacuous() const { return checked == 0; }
  // Vacuous checks pass.
  bool Passed(double relative_tolerance = kIdentityTolerance) const {
    return max_deviation <= relative_tolerance * expected;
  }
};

// Per-bin transformed/base SNR ratios, compared with `expected`.
SnrRatioCheck CheckSnrRatio(const SpectrumReport& base,
                            const SpectrumReport& transformed,
                            double expected);

// Builds both spectra and compares against T/(T-1).
SnrRatioCheck CheckSnrRatio(const IndicatorMatrix& indicators,
                            const RepresentationMatrix& rep);

struct PeriodicityPeak {
  std::size_t period = 0;
  std::size_t k = 0;
  bool exact = false;  // period divides m
  double power = 0.0;
  double snr = 0.0;
};

// Bin of a period-p component: m/p when p divides m, otherwise round(m/p)
// with `exact` cleared. Throws Error when p < 2 or p > m.
PeriodicityPeak PeriodicityQuery(const SpectrumReport& report,
                                 std::size_t period);

// |sum_j x(j)^2 - (1/m) sum_k |X(k)|^2| relative to the time-domain energy
// (absolute when that energy is zero).
double ParsevalDeviation(std::span<const double> x, const ChannelSpectrum& X);

// max_k |X(m-k) - conj(X(k))|, k = 1..m-1, relative to max_k |X(k)| (absolute
// when the spectrum is zero).
double ConjugateSymmetryDeviation(const ChannelSpectrum& X);

}  // namespace seqspectra

#endif  // SEQSPECTRA_SPECTRUM_H_
