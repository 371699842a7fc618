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

#include "seqspectra/alphabet.h"

#include <algorithm>
#include <bitset>

#include "seqspectra/errors.h"

namespace seqspectra {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  lookup_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    lookup_[static_cast<unsigned char>(symbols_[i])] =
        static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::Create(std::string_view symbols) {
  if (symbols.size() < 2) {
    throw Error("alphabet needs at least 2 symbols, got " +
                std::to_string(symbols.size()));
  }
  std::bitset<256> seen;
  for (char c : symbols) {
    auto u = static_cast<unsigned char>(c);
    if (seen[u]) {
      throw Error(std::string("duplicate symbol '") + c + "' in alphabet");
    }
    seen[u] = true;
  }
  return Alphabet(std::string(symbols));
}

Alphabet Alphabet::Infer(std::string_view text) {
  std::bitset<256> seen;
  for (char c : text) seen[static_cast<unsigned char>(c)] = true;
  std::string symbols;
  for (int c = 0; c < 256; ++c) {
    if (seen[c]) symbols.push_back(static_cast<char>(c));
  }
  return Create(symbols);
}

Alphabet Alphabet::Dna() { return Create("ACGT"); }

Alphabet Alphabet::Protein() { return Create("ACDEFGHIKLMNPQRSTVWY"); }

Alphabet Alphabet::Generic(std::size_t size) {
  static constexpr std::string_view kPool =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  if (size > kPool.size()) {
    throw Error("generic alphabet supports at most " +
                std::to_string(kPool.size()) + " symbols, got " +
                std::to_string(size));
  }
  return Create(kPool.substr(0, size));
}

std::optional<SymbolIndex> Alphabet::IndexOf(char c) const {
  const std::int16_t i = lookup_[static_cast<unsigned char>(c)];
  if (i < 0) return std::nullopt;
  return static_cast<SymbolIndex>(i);
}

bool Alphabet::SameSymbolSet(const Alphabet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [&](char c) { return other.Contains(c); });
}

}  // namespace seqspectra
