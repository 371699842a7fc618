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

#ifndef SEQSPECTRA_REPRESENTATION_H_
#define SEQSPECTRA_REPRESENTATION_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqspectra/alphabet.h"
#include "seqspectra/sequence_io.h"

namespace seqspectra {

// T binary indicator rows over a length-m sequence: row t holds 1 at the
// positions where symbol t occurs. Every column contains exactly one 1.
class IndicatorMatrix {
 public:
  explicit IndicatorMatrix(const SymbolicSequence& seq);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t alphabet_size() const { return alphabet_.size(); }
  std::size_t length() const { return length_; }

  std::span<const double> row(std::size_t t) const {
    return {data_.data() + t * length_, length_};
  }
  double at(std::size_t t, std::size_t j) const {
    return data_[t * length_ + j];
  }

  // Row sums, i.e. how often each symbol occurs.
  std::vector<std::size_t> Counts() const;
  // Positions where symbol t occurs, ascending.
  std::vector<std::size_t> Support(std::size_t t) const;

 private:
  Alphabet alphabet_;
  std::size_t length_;
  std::vector<double> data_;  // row-major, T x m
};

inline IndicatorMatrix BuildIndicators(const SymbolicSequence& seq) {
  return IndicatorMatrix(seq);
}

enum class MatrixKind { kOrthonormal, kRowOrthogonal };

std::string_view MatrixKindName(MatrixKind kind);

// Tolerances applied by ValidateRowOrthogonal.
inline constexpr double kRowOrthogonalityTolerance = 1e-12;
inline constexpr double kRowNormTolerance = 1e-12;
inline constexpr double kColumnIdentityTolerance = 1e-10;

// The first T-1 rows of a row-orthogonal T x T transform whose implied last
// row is all ones. Rows are mutually orthogonal, share the norm d, and are
// orthogonal to the constant row. Columns are labelled by symbol, so the
// matrix can be applied to any alphabet holding the same symbols.
//
// Instances only come out of ValidateRowOrthogonal (directly or through the
// builders), so every RepresentationMatrix satisfies those invariants.
class RepresentationMatrix {
 public:
  const std::string& name() const { return name_; }
  const std::string& column_order() const { return column_order_; }
  std::size_t symbol_count() const { return column_order_.size(); }
  std::size_t row_count() const { return column_order_.size() - 1; }
  double row_norm() const { return row_norm_; }
  MatrixKind kind() const { return kind_; }

  double at(std::size_t row, std::size_t col) const {
    return rows_[row * symbol_count() + col];
  }
  std::span<const double> row(std::size_t r) const {
    return {rows_.data() + r * symbol_count(), symbol_count()};
  }
  // Row-major (T-1) x T entries.
  const std::vector<double>& entries() const { return rows_; }

 private:
  friend RepresentationMatrix ValidateRowOrthogonal(
      std::string name, std::string_view column_order,
      std::vector<std::vector<double>> rows);

  RepresentationMatrix() = default;

  std::string name_;
  std::string column_order_;
  std::vector<double> rows_;
  double row_norm_ = 0.0;
  MatrixKind kind_ = MatrixKind::kRowOrthogonal;
};

// Checks a candidate (T-1) x T matrix whose columns belong to the symbols of
// `column_order` (in that order). Throws RepresentationError with one of
//   "rows not orthogonal", "row norms differ",
//   "rows not orthogonal to constant row", "column identity violated"
// or a shape message. Dot-product checks are made on rows scaled by 1/d, so
// the absolute tolerances are independent of the matrix scale.
RepresentationMatrix ValidateRowOrthogonal(
    std::string name, std::string_view column_order,
    std::vector<std::vector<double>> rows);

// Purine/pyrimidine, amino/keto and weak/strong channels over columns ACGT.
// Entries are +-1 and d = 2.
RepresentationMatrix BuildZCurve();

// Regular-tetrahedron vertices over columns ATCG; d = 2/sqrt(3).
RepresentationMatrix BuildTetrahedron();

// Orthonormal Helmert contrasts: row l (1-based) is
// (1, ..., 1, -l, 0, ..., 0) / sqrt(l (l + 1)) with l leading ones. Columns
// follow the alphabet order.
RepresentationMatrix BuildHelmert(const Alphabet& alphabet);

// L = T-1 real channels, one per matrix row.
struct TransformedSignal {
  std::string representation;
  double row_norm = 0.0;
  std::size_t symbol_count = 0;
  std::vector<std::vector<double>> channels;

  std::size_t length() const {
    return channels.empty() ? 0 : channels.front().size();
  }
};

// channel l at position j = sum_t rep(l, col(t)) * u_t(j), where col(t) is
// the matrix column labelled with the symbol of indicator row t. Throws
// RepresentationError naming the first symbol present on one side only.
TransformedSignal ApplyRepresentation(const IndicatorMatrix& indicators,
                                      const RepresentationMatrix& rep);

// Running sums of every channel, starting at position 0.
std::vector<std::vector<double>> CumulativeCoordinates(
    const TransformedSignal& signal);

}  // namespace seqspectra

#endif  // SEQSPECTRA_REPRESENTATION_H_
