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

#include <iostream>
#include <limits>
#include <string>

#include "CLI11.hpp"
#include "report.h"

namespace {

using seqspectra::cli::AnalysisConfig;
using seqspectra::cli::Command;

struct Options {
  AnalysisConfig config;
  std::string format;
};

void AddCommonOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--input,-i", o.config.input,
                  "FASTA or plain-text sequence file, '-' for stdin")
      ->capture_default_str();
  cmd->add_option("--alphabet,-a", o.config.alphabet,
                  "Alphabet symbols in order (e.g. ACGT), or 'auto'")
      ->capture_default_str();
  cmd->add_flag("--plain", o.config.plain_text,
                "Read the input as one headerless record");
  cmd->add_option("--rep,-r", o.config.representations,
                  "base | zcurve | tetrahedron | helmert | file:PATH "
                  "(repeatable)");
  cmd->add_option("--period,-p", o.config.period,
                  "Period of interest for the peak query")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  cmd->add_option("--format,-f", o.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--output,-o", o.config.output, "Output path, '-' for stdout")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier power spectra and signal-to-noise ratios of symbolic "
               "sequences"};
  app.require_subcommand(1);

  Options options;
  Command command = Command::kAnalyze;

  auto* analyze = app.add_subcommand(
      "analyze", "Spectrum summary, peak and identity checks per representation");
  auto* compare = app.add_subcommand(
      "compare", "Side-by-side table of two or more representations");
  auto* verify = app.add_subcommand(
      "verify", "Check the total-spectrum and SNR-ratio identities");
  auto* spectrum = app.add_subcommand(
      "spectrum", "Per-bin power and SNR as CSV, for plotting");

  for (auto* cmd : {analyze, compare, verify, spectrum}) {
    AddCommonOptions(cmd, options);
  }
  std::size_t random_count = 0;
  auto* random_opt =
      verify->add_option("--random", random_count,
                         "Check N seeded random sequences instead of input");
  verify->add_option("--seed", options.config.seed, "Random seed")
      ->capture_default_str();
  verify->add_option("--alphabet-size", options.config.alphabet_size,
                     "Alphabet size T for --random (4: ACGT, 20: amino acids, "
                     "otherwise A..Z0..9)")
      ->capture_default_str()
      ->check(CLI::Range(2, 36));
  verify->add_option("--min-length", options.config.min_length,
                     "Shortest random sequence")
      ->capture_default_str();
  verify->add_option("--max-length", options.config.max_length,
                     "Longest random sequence")
      ->capture_default_str();

  analyze->callback([&] { command = Command::kAnalyze; });
  compare->callback([&] { command = Command::kCompare; });
  verify->callback([&] { command = Command::kVerify; });
  spectrum->callback([&] { command = Command::kSpectrum; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : seqspectra::cli::kExitError;
  }

  if (*random_opt) options.config.random_count = random_count;
  if (!options.format.empty()) {
    options.config.format = seqspectra::cli::ParseOutputFormat(options.format);
  }
  return seqspectra::cli::Run(command, options.config,
                              {std::cin, std::cout, std::cerr});
}
