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

#include "seqspectra/representation.h"

#include <cmath>
#include <sstream>

#include "seqspectra/errors.h"

namespace seqspectra {
namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

[[noreturn]] void Fail(const std::string& name, const std::string& what,
                       const std::string& detail) {
  std::ostringstream msg;
  msg << what << " in representation '" << name << "'";
  if (!detail.empty()) msg << ": " << detail;
  throw RepresentationError(msg.str());
}

std::string RowPair(std::size_t a, std::size_t b, double value) {
  std::ostringstream out;
  out << "rows " << (a + 1) << " and " << (b + 1) << " (normalized dot "
      << value << ")";
  return out.str();
}

}  // namespace

IndicatorMatrix::IndicatorMatrix(const SymbolicSequence& seq)
    : alphabet_(seq.alphabet()),
      length_(seq.size()),
      data_(seq.alphabet().size() * seq.size(), 0.0) {
  for (std::size_t j = 0; j < length_; ++j) {
    data_[static_cast<std::size_t>(seq[j]) * length_ + j] = 1.0;
  }
}

std::vector<std::size_t> IndicatorMatrix::Counts() const {
  std::vector<std::size_t> counts(alphabet_size(), 0);
  for (std::size_t t = 0; t < alphabet_size(); ++t) {
    for (double u : row(t)) counts[t] += u != 0.0 ? 1 : 0;
  }
  return counts;
}

std::vector<std::size_t> IndicatorMatrix::Support(std::size_t t) const {
  std::vector<std::size_t> positions;
  auto r = row(t);
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] != 0.0) positions.push_back(j);
  }
  return positions;
}

std::string_view MatrixKindName(MatrixKind kind) {
  return kind == MatrixKind::kOrthonormal ? "orthonormal" : "row-orthogonal";
}

RepresentationMatrix ValidateRowOrthogonal(
    std::string name, std::string_view column_order,
    std::vector<std::vector<double>> rows) {
  const std::size_t T = column_order.size();
  try {
    Alphabet::Create(column_order);
  } catch (const Error& e) {
    Fail(name, "invalid column order", e.what());
  }
  if (rows.size() != T - 1) {
    Fail(name, "wrong row count",
         "expected " + std::to_string(T - 1) + " rows for " +
             std::to_string(T) + " symbols, got " +
             std::to_string(rows.size()));
  }
  for (std::size_t l = 0; l < rows.size(); ++l) {
    if (rows[l].size() != T) {
      Fail(name, "wrong row length",
           "row " + std::to_string(l + 1) + " has " +
               std::to_string(rows[l].size()) + " entries, expected " +
               std::to_string(T));
    }
    for (double v : rows[l]) {
      if (!std::isfinite(v)) {
        Fail(name, "non-finite entry", "row " + std::to_string(l + 1));
      }
    }
  }

  std::vector<double> norms(rows.size());
  for (std::size_t l = 0; l < rows.size(); ++l) {
    norms[l] = std::sqrt(Dot(rows[l], rows[l]));
    if (norms[l] == 0.0) {
      Fail(name, "row norms differ",
           "row " + std::to_string(l + 1) + " is zero");
    }
  }

  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      const double c = Dot(rows[a], rows[b]) / (norms[a] * norms[b]);
      if (std::abs(c) > kRowOrthogonalityTolerance) {
        Fail(name, "rows not orthogonal", RowPair(a, b, c));
      }
    }
  }

  double d = 0.0;
  for (double n : norms) d += n;
  d /= static_cast<double>(norms.size());
  for (std::size_t l = 0; l < norms.size(); ++l) {
    if (std::abs(norms[l] - d) > kRowNormTolerance * d) {
      std::ostringstream detail;
      detail.precision(17);
      detail << "row " << (l + 1) << " has norm " << norms[l]
             << ", mean norm is " << d;
      Fail(name, "row norms differ", detail.str());
    }
  }

  const double sqrt_t = std::sqrt(static_cast<double>(T));
  for (std::size_t l = 0; l < rows.size(); ++l) {
    double sum = 0.0;
    for (double v : rows[l]) sum += v;
    const double c = sum / (norms[l] * sqrt_t);
    if (std::abs(c) > kRowOrthogonalityTolerance) {
      std::ostringstream detail;
      detail << "row " << (l + 1) << " sums to " << sum;
      Fail(name, "rows not orthogonal to constant row", detail.str());
    }
  }

  // Normalized columns: sum_l n_lj^2 = (T-1)/T and sum_l n_lj n_li = -1/T.
  const double tt = static_cast<double>(T);
  for (std::size_t i = 0; i < T; ++i) {
    for (std::size_t j = i; j < T; ++j) {
      double s = 0.0;
      for (const auto& r : rows) s += (r[i] / d) * (r[j] / d);
      const double expected = i == j ? (tt - 1.0) / tt : -1.0 / tt;
      if (std::abs(s - expected) > kColumnIdentityTolerance) {
        std::ostringstream detail;
        detail << "columns " << (i + 1) << "," << (j + 1) << " give " << s
               << ", expected " << expected;
        Fail(name, "column identity violated", detail.str());
      }
    }
  }

  RepresentationMatrix m;
  m.name_ = std::move(name);
  m.column_order_ = std::string(column_order);
  m.rows_.reserve(rows.size() * T);
  for (const auto& r : rows) m.rows_.insert(m.rows_.end(), r.begin(), r.end());
  m.row_norm_ = d;
  m.kind_ = std::abs(d - 1.0) <= kRowNormTolerance ? MatrixKind::kOrthonormal
                                                   : MatrixKind::kRowOrthogonal;
  return m;
}

RepresentationMatrix BuildZCurve() {
  return ValidateRowOrthogonal("zcurve", "ACGT",
                               {{1, -1, 1, -1},    // purine / pyrimidine
                                {1, 1, -1, -1},    // amino / keto
                                {1, -1, -1, 1}});  // weak / strong H-bond
}

RepresentationMatrix BuildTetrahedron() {
  const double r2 = std::sqrt(2.0);
  const double r6 = std::sqrt(6.0);
  return ValidateRowOrthogonal(
      "tetrahedron", "ATCG",
      {{0.0, 2.0 * r2 / 3.0, -r2 / 3.0, -r2 / 3.0},
       {0.0, 0.0, r6 / 3.0, -r6 / 3.0},
       {1.0, -1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0}});
}

RepresentationMatrix BuildHelmert(const Alphabet& alphabet) {
  const std::size_t T = alphabet.size();
  std::vector<std::vector<double>> rows(T - 1, std::vector<double>(T, 0.0));
  for (std::size_t l = 1; l < T; ++l) {
    const double ld = static_cast<double>(l);
    const double scale = 1.0 / std::sqrt(ld * (ld + 1.0));
    auto& r = rows[l - 1];
    for (std::size_t i = 0; i < l; ++i) r[i] = scale;
    r[l] = -ld * scale;
  }
  return ValidateRowOrthogonal("helmert", alphabet.symbols(), std::move(rows));
}

TransformedSignal ApplyRepresentation(const IndicatorMatrix& indicators,
                                      const RepresentationMatrix& rep) {
  const Alphabet& alphabet = indicators.alphabet();
  const std::string& order = rep.column_order();
  for (char c : order) {
    if (!alphabet.Contains(c)) {
      throw RepresentationError("representation '" + rep.name() +
                                "' column '" + std::string(1, c) +
                                "' is not in the sequence alphabet " +
                                alphabet.symbols());
    }
  }
  // column_of[t] is the matrix column for indicator row t.
  std::vector<std::size_t> column_of(alphabet.size());
  for (std::size_t t = 0; t < alphabet.size(); ++t) {
    const char c = alphabet.symbol(static_cast<SymbolIndex>(t));
    const std::size_t col = order.find(c);
    if (col == std::string::npos) {
      throw RepresentationError("symbol '" + std::string(1, c) +
                                "' is not a column of representation '" +
                                rep.name() + "' (columns " + order + ")");
    }
    column_of[t] = col;
  }

  const std::size_t m = indicators.length();
  TransformedSignal out;
  out.representation = rep.name();
  out.row_norm = rep.row_norm();
  out.symbol_count = rep.symbol_count();
  out.channels.assign(rep.row_count(), std::vector<double>(m, 0.0));
  for (std::size_t l = 0; l < rep.row_count(); ++l) {
    auto& channel = out.channels[l];
    for (std::size_t t = 0; t < alphabet.size(); ++t) {
      const double w = rep.at(l, column_of[t]);
      auto u = indicators.row(t);
      for (std::size_t j = 0; j < m; ++j) channel[j] += w * u[j];
    }
  }
  return out;
}

std::vector<std::vector<double>> CumulativeCoordinates(
    const TransformedSignal& signal) {
  std::vector<std::vector<double>> out;
  out.reserve(signal.channels.size());
  for (const auto& channel : signal.channels) {
    std::vector<double> running(channel.size());
    double sum = 0.0;
    for (std::size_t j = 0; j < channel.size(); ++j) {
      sum += channel[j];
      running[j] = sum;
    }
    out.push_back(std::move(running));
  }
  return out;
}

}  // namespace seqspectra
