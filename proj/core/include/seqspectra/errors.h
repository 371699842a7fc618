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

#ifndef SEQSPECTRA_ERRORS_H_
#define SEQSPECTRA_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqspectra {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed sequence input. `line` and `position` are 1-based; zero means
// "not applicable" (e.g. an empty record has no offending character).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string record = {},
             std::size_t line = 0, std::size_t position = 0,
             char character = '\0')
      : Error(message),
        record_(std::move(record)),
        line_(line),
        position_(position),
        character_(character) {}

  const std::string& record() const { return record_; }
  std::size_t line() const { return line_; }
  std::size_t position() const { return position_; }
  char character() const { return character_; }

 private:
  std::string record_;
  std::size_t line_;
  std::size_t position_;
  char character_;
};

// A candidate representation matrix failed validation, or a matrix does not
// match the alphabet it is applied to.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqspectra

#endif  // SEQSPECTRA_ERRORS_H_
