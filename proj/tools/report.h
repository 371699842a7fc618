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

#ifndef SEQSPECTRA_TOOLS_REPORT_H_
#define SEQSPECTRA_TOOLS_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seqspectra::cli {

enum class Command { kAnalyze, kCompare, kVerify, kSpectrum };
enum class OutputFormat { kText, kJson, kCsv };

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

struct AnalysisConfig {
  std::string input = "-";  // path, or "-" for stdin
  std::string alphabet = "auto";
  bool plain_text = false;
  // base | zcurve | tetrahedron | helmert | file:PATH. Empty selects the
  // command's default set.
  std::vector<std::string> representations;
  std::size_t period = 3;
  std::optional<OutputFormat> format;  // unset: text, or csv for spectrum
  std::string output = "-";

  // verify --random
  std::optional<std::size_t> random_count;
  std::uint64_t seed = 1;
  std::size_t alphabet_size = 4;
  std::size_t min_length = 1;
  std::size_t max_length = 2000;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Runs one subcommand. Errors are reported on `io.err` as "error: ..." and
// yield kExitError; a failed theorem check yields kExitCheckFailed.
int Run(Command command, const AnalysisConfig& config, Streams io);

std::optional<OutputFormat> ParseOutputFormat(std::string_view name);

// SNR with four decimals.
std::string FormatSnr(double value);
// Integer when within 1e-6 of one, otherwise six significant digits.
std::string FormatPower(double value);

}  // namespace seqspectra::cli

#endif  // SEQSPECTRA_TOOLS_REPORT_H_
