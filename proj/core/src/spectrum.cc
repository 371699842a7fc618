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

#include "seqspectra/spectrum.h"

#include <algorithm>
#include <cmath>

#include "seqspectra/errors.h"

namespace seqspectra {
namespace {

double RelativeError(double measured, double expected) {
  const double scale = std::abs(expected);
  const double diff = std::abs(measured - expected);
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace

double SpectrumReport::ExpectedTotal() const {
  const double m = static_cast<double>(length);
  if (is_base) return m * m;
  const double t = static_cast<double>(symbol_count);
  return row_norm * row_norm * (t - 1.0) / t * m * m;
}

std::vector<ChannelSpectrum> ComputeChannelSpectra(
    std::span<const std::vector<double>> channels) {
  std::vector<ChannelSpectrum> out;
  if (channels.empty()) return out;
  const FftPlan plan(channels.front().size());
  out.reserve(channels.size());
  for (const auto& c : channels) out.push_back(plan.Forward(c));
  return out;
}

SpectrumReport SpectrumFromChannels(std::span<const ChannelSpectrum> spectra,
                                    std::string representation) {
  SpectrumReport r;
  r.representation = std::move(representation);
  r.length = spectra.empty() ? 0 : spectra.front().size();
  r.power.assign(r.length, 0.0);
  for (const ChannelSpectrum& s : spectra) {
    for (std::size_t k = 0; k < r.length; ++k) r.power[k] += std::norm(s[k]);
  }
  for (double p : r.power) r.total += p;
  if (r.length == 0) return r;
  r.average = r.total / static_cast<double>(r.length);
  r.snr.resize(r.length - 1);
  for (std::size_t k = 1; k < r.length; ++k) {
    r.snr[k - 1] = r.average > 0.0 ? r.power[k] / r.average : 0.0;
  }
  return r;
}

SpectrumReport SpectrumBase(const IndicatorMatrix& indicators) {
  std::vector<std::vector<double>> rows;
  rows.reserve(indicators.alphabet_size());
  for (std::size_t t = 0; t < indicators.alphabet_size(); ++t) {
    auto r = indicators.row(t);
    rows.emplace_back(r.begin(), r.end());
  }
  SpectrumReport r =
      SpectrumFromChannels(ComputeChannelSpectra(rows), "base");
  r.symbol_count = indicators.alphabet_size();
  r.is_base = true;
  r.row_norm = 1.0;
  return r;
}

SpectrumReport SpectrumTransformed(const TransformedSignal& signal) {
  SpectrumReport r = SpectrumFromChannels(
      ComputeChannelSpectra(signal.channels), signal.representation);
  r.symbol_count = signal.symbol_count;
  r.is_base = false;
  r.row_norm = signal.row_norm;
  return r;
}

TotalSpectrumCheck VerifyTotalSpectrum(const IndicatorMatrix& indicators) {
  const std::size_t m = indicators.length();
  const std::vector<std::size_t> counts = indicators.Counts();
  const FftPlan plan(m);

  TotalSpectrumCheck check;
  check.expected = static_cast<double>(m) * static_cast<double>(m);
  for (std::size_t t = 0; t < indicators.alphabet_size(); ++t) {
    const ChannelSpectrum U = plan.Forward(indicators.row(t));
    ChannelEnergy e;
    e.symbol = indicators.alphabet().symbol(static_cast<SymbolIndex>(t));
    e.count = counts[t];
    e.expected = static_cast<double>(m) * static_cast<double>(counts[t]);
    for (const Complex& u : U) e.measured += std::norm(u);
    check.measured += e.measured;
    check.channels.push_back(e);
  }
  check.relative_error = RelativeError(check.measured, check.expected);
  return check;
}

TotalSpectrumCheck VerifyTotalSpectrum(const SpectrumReport& report) {
  TotalSpectrumCheck check;
  check.expected = report.ExpectedTotal();
  check.measured = report.total;
  check.relative_error = RelativeError(check.measured, check.expected);
  return check;
}

SnrRatioCheck CheckSnrRatio(const SpectrumReport& base,
                            const SpectrumReport& transformed,
                            double expected) {
  if (base.length != transformed.length) {
    throw Error("SNR ratio check needs spectra of equal length (" +
                std::to_string(base.length) + " vs " +
                std::to_string(transformed.length) + ")");
  }
  SnrRatioCheck check;
  check.representation = transformed.representation;
  check.expected = expected;
  check.ratios.resize(base.snr.size());
  for (std::size_t i = 0; i < base.snr.size(); ++i) {
    if (!(base.snr[i] > kSnrSkipThreshold)) {
      ++check.skipped;
      continue;
    }
    const double ratio = transformed.snr[i] / base.snr[i];
    check.ratios[i] = ratio;
    check.max_deviation =
        std::max(check.max_deviation, std::abs(ratio - expected));
    ++check.checked;
  }
  return check;
}

SnrRatioCheck CheckSnrRatio(const IndicatorMatrix& indicators,
                            const RepresentationMatrix& rep) {
  const double t = static_cast<double>(rep.symbol_count());
  return CheckSnrRatio(
      SpectrumBase(indicators),
      SpectrumTransformed(ApplyRepresentation(indicators, rep)), t / (t - 1));
}

PeriodicityPeak PeriodicityQuery(const SpectrumReport& report,
                                 std::size_t period) {
  const std::size_t m = report.length;
  if (period < 2) {
    throw Error("period must be at least 2, got " + std::to_string(period));
  }
  if (period > m) {
    throw Error("period " + std::to_string(period) +
                " exceeds sequence length " + std::to_string(m));
  }
  PeriodicityPeak peak;
  peak.period = period;
  peak.exact = m % period == 0;
  peak.k = peak.exact ? m / period
                      : static_cast<std::size_t>(std::llround(
                            static_cast<double>(m) /
                            static_cast<double>(period)));
  peak.power = report.power[peak.k];
  peak.snr = report.Snr(peak.k);
  return peak;
}

double ParsevalDeviation(std::span<const double> x, const ChannelSpectrum& X) {
  double time_energy = 0.0;
  for (double v : x) time_energy += v * v;
  double freq_energy = 0.0;
  for (const Complex& c : X) freq_energy += std::norm(c);
  freq_energy /= static_cast<double>(X.size());
  return RelativeError(freq_energy, time_energy);
}

double ConjugateSymmetryDeviation(const ChannelSpectrum& X) {
  const std::size_t m = X.size();
  double scale = 0.0;
  for (const Complex& c : X) scale = std::max(scale, std::abs(c));
  double worst = 0.0;
  for (std::size_t k = 1; k < m; ++k) {
    worst = std::max(worst, std::abs(X[m - k] - std::conj(X[k])));
  }
  return scale > 0.0 ? worst / scale : worst;
}

}  // namespace seqspectra
