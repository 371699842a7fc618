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

#include "report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "seqspectra/errors.h"
#include "seqspectra/representation.h"
#include "seqspectra/representation_json.h"
#include "seqspectra/sequence_io.h"
#include "seqspectra/spectrum.h"

namespace seqspectra::cli {
namespace {

using nlohmann::ordered_json;

// --- representation selection ----------------------------------------------

struct Selection {
  std::string label;                          // as shown in reports
  std::optional<RepresentationMatrix> matrix;  // empty for base
};

struct RepSpec {
  std::string text;
  enum class Kind { kBase, kFixed, kHelmert } kind = Kind::kBase;
  std::optional<RepresentationMatrix> fixed;
};

std::vector<RepSpec> ParseRepSpecs(const std::vector<std::string>& names) {
  std::vector<RepSpec> specs;
  for (const std::string& name : names) {
    RepSpec s;
    s.text = name;
    if (name == "base") {
      s.kind = RepSpec::Kind::kBase;
    } else if (name == "zcurve") {
      s.kind = RepSpec::Kind::kFixed;
      s.fixed = BuildZCurve();
    } else if (name == "tetrahedron") {
      s.kind = RepSpec::Kind::kFixed;
      s.fixed = BuildTetrahedron();
    } else if (name == "helmert") {
      s.kind = RepSpec::Kind::kHelmert;
    } else if (name.rfind("file:", 0) == 0) {
      s.kind = RepSpec::Kind::kFixed;
      s.fixed = LoadRepresentation(name.substr(5));
    } else {
      throw Error("unknown representation '" + name +
                  "' (expected base, zcurve, tetrahedron, helmert or "
                  "file:PATH)");
    }
    specs.push_back(std::move(s));
  }
  return specs;
}

std::string SortedSymbols(std::string_view symbols) {
  std::string s(symbols);
  std::sort(s.begin(), s.end());
  return s;
}

// The alphabet implied by the fixed-column representations, if any.
std::optional<Alphabet> AlphabetFromSpecs(const std::vector<RepSpec>& specs) {
  std::optional<std::string> symbols;
  for (const RepSpec& s : specs) {
    if (!s.fixed) continue;
    std::string sorted = SortedSymbols(s.fixed->column_order());
    if (symbols && *symbols != sorted) {
      throw Error("representations disagree on the alphabet (" + *symbols +
                  " vs " + sorted + "); pass --alphabet explicitly");
    }
    symbols = sorted;
  }
  if (!symbols) return std::nullopt;
  return Alphabet::Create(*symbols);
}

std::vector<Selection> Materialize(const std::vector<RepSpec>& specs,
                                   const Alphabet& alphabet) {
  std::vector<Selection> out;
  for (const RepSpec& s : specs) {
    Selection sel;
    switch (s.kind) {
      case RepSpec::Kind::kBase:
        sel.label = "base";
        break;
      case RepSpec::Kind::kFixed:
        sel.matrix = s.fixed;
        sel.label = s.fixed->name();
        break;
      case RepSpec::Kind::kHelmert:
        sel.matrix = BuildHelmert(alphabet);
        sel.label = "helmert";
        break;
    }
    if (sel.matrix && !Alphabet::Create(sel.matrix->column_order())
                           .SameSymbolSet(alphabet)) {
      throw RepresentationError("representation '" + sel.label +
                                "' has columns " +
                                sel.matrix->column_order() +
                                " but the sequence alphabet is " +
                                alphabet.symbols());
    }
    out.push_back(std::move(sel));
  }
  return out;
}

bool IsDna(const Alphabet& a) { return a.SameSymbolSet(Alphabet::Dna()); }

std::vector<std::string> DefaultRepresentations(Command command,
                                                const Alphabet& alphabet) {
  switch (command) {
    case Command::kAnalyze:
    case Command::kSpectrum:
      return {"base"};
    case Command::kCompare:
      return IsDna(alphabet) ? std::vector<std::string>{"base", "zcurve"}
                             : std::vector<std::string>{"base", "helmert"};
    case Command::kVerify:
      return IsDna(alphabet)
                 ? std::vector<std::string>{"zcurve", "tetrahedron", "helmert"}
                 : std::vector<std::string>{"helmert"};
  }
  return {};
}

// --- input -----------------------------------------------------------------

struct Input {
  std::string label;  // file path, "stdin" or "random"
  std::vector<SymbolicSequence> sequences;
  Alphabet alphabet;
  std::vector<Selection> representations;
};

Alphabet RandomAlphabet(std::size_t size) {
  if (size == 4) return Alphabet::Dna();
  if (size == 20) return Alphabet::Protein();
  return Alphabet::Generic(size);
}

// Uniform symbols from a seeded mt19937_64; the length is uniform on
// [min_length, max_length].
std::vector<SymbolicSequence> RandomSequences(const AnalysisConfig& config,
                                              const Alphabet& alphabet) {
  if (config.min_length < 1 || config.min_length > config.max_length) {
    throw Error("random lengths need 1 <= min-length <= max-length");
  }
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> length(config.min_length,
                                                    config.max_length);
  std::uniform_int_distribution<int> symbol(
      0, static_cast<int>(alphabet.size()) - 1);
  std::vector<SymbolicSequence> out;
  for (std::size_t n = 0; n < *config.random_count; ++n) {
    std::vector<SymbolIndex> indices(length(rng));
    for (auto& i : indices) i = static_cast<SymbolIndex>(symbol(rng));
    out.emplace_back(alphabet, std::move(indices),
                     "random-" + std::to_string(n + 1));
  }
  return out;
}

Input LoadInput(Command command, const AnalysisConfig& config,
                std::istream& stdin_stream) {
  std::vector<RepSpec> specs = ParseRepSpecs(config.representations);

  Input input{.label = {},
              .sequences = {},
              .alphabet = Alphabet::Dna(),
              .representations = {}};
  std::optional<Alphabet> alphabet;
  if (config.alphabet != "auto") {
    std::string symbols = config.alphabet;
    for (char& c : symbols) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    alphabet = Alphabet::Create(symbols);
  } else {
    alphabet = AlphabetFromSpecs(specs);
  }

  if (config.random_count) {
    if (command != Command::kVerify) {
      throw Error("--random is only supported by verify");
    }
    if (!alphabet) alphabet = RandomAlphabet(config.alphabet_size);
    input.label = "random";
    input.sequences = RandomSequences(config, *alphabet);
  } else {
    ParseOptions options{.alphabet = alphabet,
                         .plain_text = config.plain_text};
    input.label = config.input == "-" ? "stdin" : config.input;
    try {
      if (config.input == "-") {
        input.sequences = ParseFasta(stdin_stream, options);
      } else {
        std::ifstream file(config.input, std::ios::binary);
        if (!file) throw Error("cannot open input file");
        input.sequences = ParseFasta(file, options);
      }
    } catch (const Error& e) {
      throw Error(input.label + ": " + e.what());
    }
  }
  input.alphabet = input.sequences.front().alphabet();

  if (specs.empty()) {
    specs = ParseRepSpecs(DefaultRepresentations(command, input.alphabet));
  }
  input.representations = Materialize(specs, input.alphabet);
  return input;
}

// --- formatting ------------------------------------------------------------

std::string Printf(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string FormatFrequency(std::size_t k, std::size_t m) {
  return Printf("%.6g", static_cast<double>(k) / static_cast<double>(m));
}

std::string FormatSci(double v) { return Printf("%.3g", v); }

double ExpectedRatio(const Selection& s) {
  if (!s.matrix) return 1.0;
  const double t = static_cast<double>(s.matrix->symbol_count());
  return t / (t - 1.0);
}

std::string RatioFraction(const Selection& num, const Selection& den) {
  if (!num.matrix == !den.matrix) return "1";
  const std::size_t t =
      num.matrix ? num.matrix->symbol_count() : den.matrix->symbol_count();
  return num.matrix ? std::to_string(t) + "/" + std::to_string(t - 1)
                    : std::to_string(t - 1) + "/" + std::to_string(t);
}

ordered_json NullableNumber(std::optional<double> v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

// --- per-representation analysis -------------------------------------------

struct RepResult {
  const Selection* selection = nullptr;
  SpectrumReport report;
  TotalSpectrumCheck total;
  SnrRatioCheck ratio;
  std::optional<PeriodicityPeak> peak;  // empty when the period exceeds m

  bool Passed() const { return total.Passed() && ratio.Passed(); }
  double row_norm() const {
    return selection->matrix ? selection->matrix->row_norm() : 1.0;
  }
  std::string kind() const {
    return selection->matrix
               ? std::string(MatrixKindName(selection->matrix->kind()))
               : "indicator";
  }
};

std::vector<RepResult> AnalyzeSequence(const SymbolicSequence& seq,
                                       const std::vector<Selection>& reps,
                                       std::size_t period) {
  const IndicatorMatrix indicators(seq);
  const SpectrumReport base = SpectrumBase(indicators);
  std::vector<RepResult> out;
  for (const Selection& sel : reps) {
    RepResult r;
    r.selection = &sel;
    if (sel.matrix) {
      r.report = SpectrumTransformed(ApplyRepresentation(indicators,
                                                         *sel.matrix));
    } else {
      r.report = base;
    }
    r.report.representation = sel.label;
    r.total = VerifyTotalSpectrum(r.report);
    r.ratio = CheckSnrRatio(base, r.report, ExpectedRatio(sel));
    if (period <= seq.size()) r.peak = PeriodicityQuery(r.report, period);
    out.push_back(std::move(r));
  }
  return out;
}

ordered_json PeakJson(const std::optional<PeriodicityPeak>& p) {
  if (!p) return nullptr;
  return {{"k", p->k}, {"exact", p->exact}, {"power", p->power},
          {"snr", p->snr}};
}

ordered_json RatioJson(const SnrRatioCheck& c) {
  return {{"expected", c.expected},
          {"max_dev", NullableNumber(c.Vacuous()
                                         ? std::nullopt
                                         : std::optional(c.max_deviation))},
          {"pass", c.Passed()},
          {"checked_bins", c.checked},
          {"skipped_bins", c.skipped},
          {"status", c.Vacuous() ? "vacuous" : (c.Passed() ? "pass" : "fail")}};
}

std::string RatioStatus(const SnrRatioCheck& c) {
  if (c.Vacuous()) return "vacuous (no nonzero base bins)";
  std::ostringstream s;
  s << (c.Passed() ? "pass" : "FAIL") << " (expected " << FormatSnr(c.expected)
    << ", max dev " << FormatSci(c.max_deviation) << ", " << c.checked
    << " bins checked, " << c.skipped << " skipped)";
  return s.str();
}

std::string TotalStatus(const TotalSpectrumCheck& c) {
  std::ostringstream s;
  s << (c.Passed() ? "pass" : "FAIL") << " (measured "
    << FormatPower(c.measured) << ", expected " << FormatPower(c.expected)
    << ", rel. error " << FormatSci(c.relative_error) << ")";
  return s.str();
}

std::string PeakDescription(const std::optional<PeriodicityPeak>& p,
                            std::size_t period, std::size_t m) {
  std::ostringstream s;
  if (!p) {
    s << "no peak bin (period " << period << " exceeds m = " << m << ")";
  } else {
    s << "k = " << p->k;
    if (!p->exact) {
      s << " (nearest bin; " << period << " does not divide " << m << ")";
    }
  }
  return s.str();
}

std::string PeakCell(const std::optional<PeriodicityPeak>& p, bool snr) {
  if (!p) return "n/a";
  return snr ? FormatSnr(p->snr) : FormatPower(p->power);
}

std::string RecordName(const SymbolicSequence& s, std::size_t n) {
  return s.id().empty() ? "record-" + std::to_string(n + 1) : s.id();
}

// --- analyze ---------------------------------------------------------------

int Analyze(const Input& input, const AnalysisConfig& config,
            OutputFormat format, std::ostream& out) {
  bool all_pass = true;
  ordered_json docs = ordered_json::array();
  if (format == OutputFormat::kCsv) {
    out << "record,representation,k,frequency,power,snr\n";
  }
  for (std::size_t n = 0; n < input.sequences.size(); ++n) {
    const SymbolicSequence& seq = input.sequences[n];
    const std::string record = RecordName(seq, n);
    const std::size_t m = seq.size();
    const auto results =
        AnalyzeSequence(seq, input.representations, config.period);
    for (const auto& r : results) all_pass = all_pass && r.Passed();

    if (format == OutputFormat::kCsv) {
      for (const auto& r : results) {
        for (std::size_t k = 1; k < m; ++k) {
          out << record << ',' << r.selection->label << ',' << k << ','
              << FormatFrequency(k, m) << ',' << FormatPower(r.report.power[k])
              << ',' << FormatSnr(r.report.Snr(k)) << '\n';
        }
      }
    } else if (format == OutputFormat::kJson) {
      ordered_json doc = {{"input", input.label},
                          {"id", seq.id()},
                          {"m", m},
                          {"alphabet", seq.alphabet().symbols()},
                          {"period", config.period}};
      ordered_json reps = ordered_json::array();
      for (const auto& r : results) {
        reps.push_back(
            {{"name", r.selection->label},
             {"d", r.row_norm()},
             {"kind", r.kind()},
             {"total", r.report.total},
             {"mean_noise", r.report.average},
             {"peak", PeakJson(r.peak)},
             {"theorem_checks",
              {{"total_spectrum",
                {{"expected", r.total.expected},
                 {"measured", r.total.measured},
                 {"pass", r.total.Passed()}}},
               {"snr_ratio", RatioJson(r.ratio)}}}});
      }
      doc["representations"] = std::move(reps);
      docs.push_back(std::move(doc));
    } else {
      out << "record " << record << ": m = " << m
          << ", T = " << seq.alphabet().size() << ", alphabet "
          << seq.alphabet().symbols() << " (" << input.label << ")\n";
      for (const auto& r : results) {
        out << "  representation " << r.selection->label << " (" << r.kind()
            << ", d = " << Printf("%.6g", r.row_norm()) << ")\n"
            << "    total spectrum  " << FormatPower(r.report.total) << '\n'
            << "    mean noise E    " << FormatPower(r.report.average) << '\n'
            << "    period-" << config.period << " peak   "
            << PeakDescription(r.peak, config.period, m);
        if (r.peak) {
          out << ", power " << FormatPower(r.peak->power) << ", SNR "
              << FormatSnr(r.peak->snr);
        }
        out << '\n'
            << "    check total     " << TotalStatus(r.total) << '\n'
            << "    check SNR ratio " << RatioStatus(r.ratio) << '\n';
      }
    }
  }
  if (format == OutputFormat::kJson) {
    out << (docs.size() == 1 ? docs.front() : docs).dump(2) << '\n';
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

// --- compare ---------------------------------------------------------------

constexpr char kTotalFootnote[] =
    "* Total Spectra is the sum of P(k) over k = 0..m-1 and is checked "
    "against m^2 (base) or d^2 (T-1)/T m^2 (T-1 channel representations)";

struct RatioLine {
  std::string numerator;
  std::string denominator;
  std::optional<double> measured;  // empty when indeterminate
  double expected = 0.0;
  std::string fraction;
  bool pass = true;
};

std::vector<RatioLine> PeakRatios(const std::vector<RepResult>& results) {
  std::vector<RatioLine> lines;
  const RepResult& ref = results.front();
  for (std::size_t i = 1; i < results.size(); ++i) {
    const RepResult& r = results[i];
    RatioLine line;
    line.numerator = r.selection->label;
    line.denominator = ref.selection->label;
    line.expected = ExpectedRatio(*r.selection) / ExpectedRatio(*ref.selection);
    line.fraction = RatioFraction(*r.selection, *ref.selection);
    if (ref.peak && r.peak && ref.peak->snr > kSnrSkipThreshold) {
      line.measured = r.peak->snr / ref.peak->snr;
      line.pass = std::abs(*line.measured - line.expected) <=
                  kIdentityTolerance * line.expected;
    }
    lines.push_back(line);
  }
  return lines;
}

int Compare(const Input& input, const AnalysisConfig& config,
            OutputFormat format, std::ostream& out) {
  if (input.representations.size() < 2) {
    throw Error("compare needs at least two representations");
  }
  bool all_pass = true;
  ordered_json docs = ordered_json::array();
  if (format == OutputFormat::kCsv) {
    out << "record,method,length,total_spectra,mean_noise,period,k,"
           "periodicity_power,snr\n";
  }
  const std::string periodicity = std::to_string(config.period) +
                                  "-Periodicity";
  for (std::size_t n = 0; n < input.sequences.size(); ++n) {
    const SymbolicSequence& seq = input.sequences[n];
    const std::string record = RecordName(seq, n);
    const std::size_t m = seq.size();
    const auto results =
        AnalyzeSequence(seq, input.representations, config.period);
    const auto ratios = PeakRatios(results);
    for (const auto& r : results) all_pass = all_pass && r.total.Passed();
    for (const auto& l : ratios) all_pass = all_pass && l.pass;

    if (format == OutputFormat::kCsv) {
      for (const auto& r : results) {
        out << record << ',' << r.selection->label << ',' << m << ','
            << FormatPower(r.report.total) << ','
            << FormatPower(r.report.average) << ',' << config.period << ','
            << (r.peak ? std::to_string(r.peak->k) : "") << ','
            << (r.peak ? PeakCell(r.peak, false) : "") << ','
            << (r.peak ? PeakCell(r.peak, true) : "") << '\n';
      }
    } else if (format == OutputFormat::kJson) {
      ordered_json rows = ordered_json::array();
      for (const auto& r : results) {
        rows.push_back({{"method", r.selection->label},
                        {"length", m},
                        {"total_spectra", r.report.total},
                        {"total_spectra_expected", r.total.expected},
                        {"total_spectra_pass", r.total.Passed()},
                        {"mean_noise", r.report.average},
                        {"periodicity_power",
                         NullableNumber(r.peak ? std::optional(r.peak->power)
                                               : std::nullopt)},
                        {"snr", NullableNumber(r.peak ? std::optional(r.peak->snr)
                                                      : std::nullopt)}});
      }
      ordered_json ratio_docs = ordered_json::array();
      for (const auto& l : ratios) {
        ratio_docs.push_back(
            {{"numerator", l.numerator},
             {"denominator", l.denominator},
             {"measured", NullableNumber(l.measured)},
             {"expected", l.expected},
             {"status", l.measured ? (l.pass ? "pass" : "fail")
                                   : "indeterminate"}});
      }
      docs.push_back({{"input", input.label},
                      {"id", seq.id()},
                      {"m", m},
                      {"alphabet", seq.alphabet().symbols()},
                      {"period", config.period},
                      {"peak", PeakJson(results.front().peak)},
                      {"rows", std::move(rows)},
                      {"ratios", std::move(ratio_docs)},
                      {"note", kTotalFootnote}});
    } else {
      const int label_w = 16;
      int col_w = 14;
      for (const auto& r : results) {
        col_w = std::max(col_w,
                         static_cast<int>(r.selection->label.size()) + 2);
      }
      auto row = [&](const std::string& label, auto cell) {
        out << std::left << std::setw(label_w) << label;
        for (std::size_t i = 0; i < results.size(); ++i) {
          if (i + 1 < results.size()) out << std::setw(col_w);
          out << cell(results[i]);
        }
        out << '\n';
      };
      out << "record " << record << " (" << input.label << "), period "
          << config.period << ", "
          << PeakDescription(results.front().peak, config.period, m) << '\n';
      row("Method", [](const RepResult& r) { return r.selection->label; });
      row("Length", [&](const RepResult&) { return std::to_string(m); });
      row("Total Spectra", [](const RepResult& r) {
        return FormatPower(r.report.total) + (r.total.Passed() ? "*" : "!");
      });
      row("Mean Noise",
          [](const RepResult& r) { return FormatPower(r.report.average); });
      row(periodicity,
          [](const RepResult& r) { return PeakCell(r.peak, false); });
      row("SNR", [](const RepResult& r) { return PeakCell(r.peak, true); });
      out << std::right;
      for (const auto& l : ratios) {
        out << "SNR ratio " << l.numerator << '/' << l.denominator << ": ";
        if (l.measured) {
          out << "measured " << FormatSnr(*l.measured) << ", theoretical "
              << FormatSnr(l.expected) << " (" << l.fraction << ")"
              << (l.pass ? "" : " MISMATCH") << '\n';
        } else {
          out << "indeterminate (no nonzero " << l.denominator
              << " SNR at the peak bin), theoretical "
              << FormatSnr(l.expected) << " (" << l.fraction << ")\n";
        }
      }
      out << kTotalFootnote;
      bool any_bad = false;
      for (const auto& r : results) any_bad = any_bad || !r.total.Passed();
      out << (any_bad ? "; '!' marks a total that failed the check" : "")
          << '\n';
    }
  }
  if (format == OutputFormat::kJson) {
    out << (docs.size() == 1 ? docs.front() : docs).dump(2) << '\n';
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

// --- verify ----------------------------------------------------------------

int Verify(const Input& input, const AnalysisConfig& config,
           OutputFormat format, std::ostream& out) {
  bool all_pass = true;
  std::size_t failures = 0;
  std::size_t checks = 0;
  ordered_json seqs = ordered_json::array();
  std::ostringstream text;
  std::ostringstream csv;
  csv << "record,m,T,check,representation,expected,measured_or_max_dev,"
         "status\n";

  for (std::size_t n = 0; n < input.sequences.size(); ++n) {
    const SymbolicSequence& seq = input.sequences[n];
    const std::string record = RecordName(seq, n);
    const IndicatorMatrix indicators(seq);
    const TotalSpectrumCheck total = VerifyTotalSpectrum(indicators);
    double channel_dev = 0.0;
    for (const ChannelEnergy& e : total.channels) {
      const double dev = std::abs(e.measured - e.expected);
      channel_dev = std::max(
          channel_dev, e.expected > 0.0 ? dev / e.expected : dev);
    }
    const bool total_pass =
        total.Passed() && channel_dev < kIdentityTolerance;
    ++checks;
    if (!total_pass) ++failures;
    all_pass = all_pass && total_pass;

    ordered_json ratio_docs = ordered_json::array();
    text << record << " (m = " << seq.size() << ", T = "
         << seq.alphabet().size() << ")\n"
         << "  total spectrum = m^2: " << TotalStatus(total)
         << ", max per-symbol rel. error " << FormatSci(channel_dev)
         << (total_pass ? "" : " FAIL") << '\n';
    csv << record << ',' << seq.size() << ',' << seq.alphabet().size()
        << ",total_spectrum,base," << FormatPower(total.expected) << ','
        << FormatPower(total.measured) << ','
        << (total_pass ? "pass" : "fail") << '\n';

    for (const Selection& sel : input.representations) {
      if (!sel.matrix) continue;
      const SnrRatioCheck c = CheckSnrRatio(indicators, *sel.matrix);
      ++checks;
      if (!c.Passed()) ++failures;
      all_pass = all_pass && c.Passed();
      ordered_json doc = {{"representation", sel.label}};
      doc.update(RatioJson(c));
      ratio_docs.push_back(std::move(doc));
      text << "  snr ratio " << sel.label << " = T/(T-1): "
           << RatioStatus(c) << '\n';
      csv << record << ',' << seq.size() << ',' << seq.alphabet().size()
          << ",snr_ratio," << sel.label << ',' << FormatSnr(c.expected) << ','
          << (c.Vacuous() ? std::string() : FormatSci(c.max_deviation)) << ','
          << (c.Vacuous() ? "vacuous" : (c.Passed() ? "pass" : "fail"))
          << '\n';
    }

    seqs.push_back(
        {{"id", record},
         {"m", seq.size()},
         {"T", seq.alphabet().size()},
         {"total_spectrum",
          {{"expected", total.expected},
           {"measured", total.measured},
           {"relative_error", total.relative_error},
           {"max_channel_relative_error", channel_dev},
           {"pass", total_pass}}},
         {"snr_ratio", std::move(ratio_docs)}});
  }

  ordered_json doc = {{"input", input.label}};
  if (config.random_count) {
    doc["seed"] = config.seed;
    doc["count"] = *config.random_count;
    doc["min_length"] = config.min_length;
    doc["max_length"] = config.max_length;
  }
  doc["alphabet"] = input.alphabet.symbols();
  ordered_json rep_names = ordered_json::array();
  for (const Selection& sel : input.representations) {
    if (sel.matrix) rep_names.push_back(sel.label);
  }
  doc["representations"] = std::move(rep_names);
  doc["sequences"] = std::move(seqs);
  doc["checks"] = checks;
  doc["failures"] = failures;
  doc["all_pass"] = all_pass;

  switch (format) {
    case OutputFormat::kJson:
      out << doc.dump(2) << '\n';
      break;
    case OutputFormat::kCsv:
      out << csv.str();
      break;
    case OutputFormat::kText:
      if (config.random_count) {
        out << "random corpus: " << *config.random_count << " sequences, seed "
            << config.seed << ", alphabet " << input.alphabet.symbols()
            << ", m in [" << config.min_length << ", " << config.max_length
            << "]\n";
      }
      out << text.str() << "summary: " << checks << " checks, " << failures
          << " failed -> " << (all_pass ? "PASS" : "FAIL") << '\n';
      break;
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

// --- spectrum --------------------------------------------------------------

int Spectrum(const Input& input, OutputFormat format, std::ostream& out) {
  if (input.representations.size() != 1) {
    throw Error("spectrum needs exactly one representation, got " +
                std::to_string(input.representations.size()));
  }
  if (input.sequences.size() != 1) {
    throw Error("spectrum needs exactly one sequence record, got " +
                std::to_string(input.sequences.size()));
  }
  const SymbolicSequence& seq = input.sequences.front();
  const Selection& sel = input.representations.front();
  const IndicatorMatrix indicators(seq);
  SpectrumReport report =
      sel.matrix
          ? SpectrumTransformed(ApplyRepresentation(indicators, *sel.matrix))
          : SpectrumBase(indicators);
  const std::size_t m = seq.size();
  const bool total_ok = VerifyTotalSpectrum(report).Passed();

  if (format == OutputFormat::kJson) {
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 1; k < m; ++k) {
      rows.push_back({{"k", k},
                      {"frequency", static_cast<double>(k) /
                                        static_cast<double>(m)},
                      {"power", report.power[k]},
                      {"snr", report.Snr(k)}});
    }
    ordered_json doc = {{"input", input.label},
                        {"id", seq.id()},
                        {"m", m},
                        {"representation", sel.label},
                        {"total", report.total},
                        {"mean_noise", report.average},
                        {"rows", std::move(rows)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "k,frequency,power,snr\n";
    for (std::size_t k = 1; k < m; ++k) {
      out << k << ',' << FormatFrequency(k, m) << ','
          << FormatPower(report.power[k]) << ',' << FormatSnr(report.Snr(k))
          << '\n';
    }
  }
  return total_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::optional<OutputFormat> ParseOutputFormat(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  return std::nullopt;
}

std::string FormatSnr(double value) { return Printf("%.4f", value); }

std::string FormatPower(double value) {
  const double r = std::round(value);
  if (std::abs(value - r) <= 1e-6) {
    return Printf("%.0f", r == 0.0 ? 0.0 : r);
  }
  return Printf("%.6g", value);
}

int Run(Command command, const AnalysisConfig& config, Streams io) {
  try {
    if (config.period < 2) {
      throw Error("--period must be at least 2");
    }
    const OutputFormat format = config.format.value_or(
        command == Command::kSpectrum ? OutputFormat::kCsv
                                      : OutputFormat::kText);
    const Input input = LoadInput(command, config, io.in);

    std::ostringstream buffer;
    int status = kExitOk;
    switch (command) {
      case Command::kAnalyze:
        status = Analyze(input, config, format, buffer);
        break;
      case Command::kCompare:
        status = Compare(input, config, format, buffer);
        break;
      case Command::kVerify:
        status = Verify(input, config, format, buffer);
        break;
      case Command::kSpectrum:
        status = Spectrum(input, format, buffer);
        break;
    }

    if (config.output == "-") {
      io.out << buffer.str();
      io.out.flush();
    } else {
      std::ofstream file(config.output, std::ios::binary);
      if (!file) throw Error("cannot open output file " + config.output);
      file << buffer.str();
      if (!file) throw Error("failed writing output file " + config.output);
    }
    return status;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace seqspectra::cli
