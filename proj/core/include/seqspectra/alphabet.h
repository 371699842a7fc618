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

#ifndef SEQSPECTRA_ALPHABET_H_
#define SEQSPECTRA_ALPHABET_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace seqspectra {

// Zero-based position of a symbol inside its alphabet.
using SymbolIndex = std::uint8_t;

// An ordered set of T >= 2 distinct single-character symbols. The order fixes
// the index of every symbol and therefore the row order of indicator
// matrices.
class Alphabet {
 public:
  // Throws Error on duplicates or fewer than two symbols. Symbols are taken
  // verbatim; callers fold case beforehand if they want to.
  static Alphabet Create(std::string_view symbols);

  // Lexicographically sorted set of the distinct characters in `text`.
  static Alphabet Infer(std::string_view text);

  static Alphabet Dna();      // "ACGT"
  static Alphabet Protein();  // the 20 standard amino acids, one-letter codes
  // First `size` characters of "A..Z0..9"; 2 <= size <= 36.
  static Alphabet Generic(std::size_t size);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  char symbol(SymbolIndex index) const { return symbols_[index]; }
  std::optional<SymbolIndex> IndexOf(char c) const;
  bool Contains(char c) const { return IndexOf(c).has_value(); }

  // True when both alphabets hold the same symbols, in any order.
  bool SameSymbolSet(const Alphabet& other) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  explicit Alphabet(std::string symbols);

  std::string symbols_;
  std::array<std::int16_t, 256> lookup_;
};

}  // namespace seqspectra

#endif  // SEQSPECTRA_ALPHABET_H_
