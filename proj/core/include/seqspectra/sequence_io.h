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

#ifndef SEQSPECTRA_SEQUENCE_IO_H_
#define SEQSPECTRA_SEQUENCE_IO_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqspectra/alphabet.h"

namespace seqspectra {

// A validated, non-empty sequence of alphabet indices.
class SymbolicSequence {
 public:
  // Throws ParseError("empty sequence") if `indices` is empty and Error if an
  // index is out of range for `alphabet`.
  SymbolicSequence(Alphabet alphabet, std::vector<SymbolIndex> indices,
                   std::string id = {});

  const Alphabet& alphabet() const { return alphabet_; }
  std::span<const SymbolIndex> indices() const { return indices_; }
  SymbolIndex operator[](std::size_t j) const { return indices_[j]; }
  std::size_t size() const { return indices_.size(); }
  const std::string& id() const { return id_; }

  // Symbols spelled out with the alphabet's characters.
  std::string ToString() const;

  friend bool operator==(const SymbolicSequence&,
                         const SymbolicSequence&) = default;

 private:
  Alphabet alphabet_;
  std::vector<SymbolIndex> indices_;
  std::string id_;
};

// std::nullopt selects inference: the alphabet becomes the sorted set of all
// characters seen across every record.
using AlphabetPolicy = std::optional<Alphabet>;

struct ParseOptions {
  AlphabetPolicy alphabet;
  // Treat the whole input as one headerless record; '>' gets no special
  // meaning.
  bool plain_text = false;
};

// Reads FASTA ('>' starts a record) or headerless text (one record).
// Whitespace inside records is dropped and letters are folded to upper case.
// All records share one alphabet.
std::vector<SymbolicSequence> ParseFasta(std::string_view text,
                                         const ParseOptions& options = {});
std::vector<SymbolicSequence> ParseFasta(std::istream& in,
                                         const ParseOptions& options = {});

// Single record from a bare string. Case is folded; whitespace is not
// stripped.
SymbolicSequence SequenceFromString(std::string_view text,
                                    const Alphabet& alphabet,
                                    std::string id = {});

// Writes records as FASTA with bodies wrapped at `line_width` characters.
// A record without an id gets a bare ">" header, which parses back to an
// empty id.
std::string ToFasta(std::span<const SymbolicSequence> sequences,
                    std::size_t line_width = 60);

}  // namespace seqspectra

#endif  // SEQSPECTRA_SEQUENCE_IO_H_
