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

#include "seqspectra/sequence_io.h"

#include <cctype>
#include <iterator>
#include <sstream>

#include "seqspectra/errors.h"

namespace seqspectra {
namespace {

char FoldCase(char c) {
  return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// One record's body after whitespace removal, with enough bookkeeping to
// report the source line of any character.
struct RawRecord {
  std::string id;
  std::string body;
  std::size_t header_line = 0;
  // body_lines[i] is the source line of body[i].
  std::vector<std::size_t> body_lines;
};

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && IsSpace(s[b])) ++b;
  while (e > b && IsSpace(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<RawRecord> SplitRecords(std::string_view text, bool plain_text) {
  std::vector<RawRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;

    if (!plain_text && !line.empty() && line.front() == '>') {
      RawRecord r;
      // The id is the first word of the header line.
      std::string header = Trim(line.substr(1));
      r.id = header.substr(0, header.find_first_of(" \t"));
      r.header_line = line_no;
      records.push_back(std::move(r));
      continue;
    }
    for (char c : line) {
      if (IsSpace(c)) continue;
      if (records.empty()) records.emplace_back();  // headerless input
      records.back().body.push_back(FoldCase(c));
      records.back().body_lines.push_back(line_no);
    }
  }
  return records;
}

std::string RecordLabel(const std::string& id, std::size_t ordinal) {
  return id.empty() ? "#" + std::to_string(ordinal) : "'" + id + "'";
}

std::vector<SymbolIndex> Encode(const RawRecord& r, std::size_t ordinal,
                                const Alphabet& alphabet) {
  std::vector<SymbolIndex> indices;
  indices.reserve(r.body.size());
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    const char c = r.body[i];
    auto idx = alphabet.IndexOf(c);
    if (!idx) {
      std::ostringstream msg;
      msg << "invalid character '" << c << "' at position " << (i + 1)
          << " of record " << RecordLabel(r.id, ordinal) << " (line "
          << r.body_lines[i] << "); alphabet is " << alphabet.symbols();
      throw ParseError(msg.str(), r.id, r.body_lines[i], i + 1, c);
    }
    indices.push_back(*idx);
  }
  return indices;
}

}  // namespace

SymbolicSequence::SymbolicSequence(Alphabet alphabet,
                                   std::vector<SymbolIndex> indices,
                                   std::string id)
    : alphabet_(std::move(alphabet)),
      indices_(std::move(indices)),
      id_(std::move(id)) {
  if (indices_.empty()) throw ParseError("empty sequence", id_);
  for (SymbolIndex i : indices_) {
    if (i >= alphabet_.size()) {
      throw Error("symbol index " + std::to_string(i) +
                  " out of range for alphabet of size " +
                  std::to_string(alphabet_.size()));
    }
  }
}

std::string SymbolicSequence::ToString() const {
  std::string out;
  out.reserve(indices_.size());
  for (SymbolIndex i : indices_) out.push_back(alphabet_.symbol(i));
  return out;
}

std::vector<SymbolicSequence> ParseFasta(std::string_view text,
                                         const ParseOptions& options) {
  std::vector<RawRecord> raw = SplitRecords(text, options.plain_text);
  if (raw.empty()) throw ParseError("no sequence records in input");

  for (std::size_t n = 0; n < raw.size(); ++n) {
    if (raw[n].body.empty()) {
      throw ParseError("empty sequence: record " +
                           RecordLabel(raw[n].id, n + 1) + " (line " +
                           std::to_string(raw[n].header_line) + ")",
                       raw[n].id, raw[n].header_line);
    }
  }

  Alphabet alphabet = [&] {
    if (options.alphabet) return *options.alphabet;
    std::string all;
    for (const RawRecord& r : raw) all += r.body;
    return Alphabet::Infer(all);
  }();

  std::vector<SymbolicSequence> out;
  out.reserve(raw.size());
  for (std::size_t n = 0; n < raw.size(); ++n) {
    out.emplace_back(alphabet, Encode(raw[n], n + 1, alphabet), raw[n].id);
  }
  return out;
}

std::vector<SymbolicSequence> ParseFasta(std::istream& in,
                                         const ParseOptions& options) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error("failed to read sequence input");
  return ParseFasta(text, options);
}

SymbolicSequence SequenceFromString(std::string_view text,
                                    const Alphabet& alphabet, std::string id) {
  if (text.empty()) throw ParseError("empty sequence", id);
  RawRecord r;
  r.id = std::move(id);
  for (char c : text) {
    r.body.push_back(FoldCase(c));
    r.body_lines.push_back(1);
  }
  return SymbolicSequence(alphabet, Encode(r, 1, alphabet), r.id);
}

std::string ToFasta(std::span<const SymbolicSequence> sequences,
                    std::size_t line_width) {
  if (line_width == 0) line_width = 60;
  std::string out;
  for (const SymbolicSequence& s : sequences) {
    out += '>';
    out += s.id();
    out += '\n';
    const std::string body = s.ToString();
    for (std::size_t i = 0; i < body.size(); i += line_width) {
      out.append(body, i, line_width);
      out += '\n';
    }
  }
  return out;
}

}  // namespace seqspectra
