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

#ifndef SEQSPECTRA_REPRESENTATION_JSON_H_
#define SEQSPECTRA_REPRESENTATION_JSON_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "seqspectra/representation.h"

namespace seqspectra {

// JSON form: {"name": str, "alphabet_order": str, "rows": [[num, ...], ...],
// "d": num}. Doubles are written with round-trip precision.
std::string RepresentationToJson(const RepresentationMatrix& rep);

// Parses and validates a matrix. "alphabet_order" may be a string ("ACGT") or
// an array of one-character strings; letters are folded to upper case. "d" is
// optional; when present it must agree with the measured row norm to 1e-12
// relative. Throws RepresentationError.
RepresentationMatrix RepresentationFromJson(std::string_view json);

RepresentationMatrix LoadRepresentation(const std::filesystem::path& path);

}  // namespace seqspectra

#endif  // SEQSPECTRA_REPRESENTATION_JSON_H_
