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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "seqspectra/representation.h"
#include "seqspectra/representation_json.h"

namespace seqspectra::cli {
namespace {

using ::testing::HasSubstr;
using ::testing::Not;
using nlohmann::json;

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result RunWith(Command command, AnalysisConfig config,
               const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.status = Run(command, config, {in, out, err});
  r.out = out.str();
  r.err = err.str();
  return r;
}

AnalysisConfig Config(std::vector<std::string> reps, OutputFormat format) {
  AnalysisConfig c;
  c.representations = std::move(reps);
  c.format = format;
  return c;
}

TEST(FormatTest, PowerAndSnr) {
  EXPECT_EQ(FormatSnr(12.766990291262136), "12.7670");
  EXPECT_EQ(FormatSnr(17.022653721682847), "17.0227");
  EXPECT_EQ(FormatPower(15780.0000000004), "15780");
  EXPECT_EQ(FormatPower(-1e-12), "0");
  EXPECT_EQ(FormatPower(2.0 / 3.0), "0.666667");
  EXPECT_EQ(FormatPower(1527696.0), "1527696");
}

TEST(AnalyzeTest, AcgtBaseAndZCurveCsv) {
  const Result r = RunWith(Command::kAnalyze,
                           Config({"base", "zcurve"}, OutputFormat::kCsv),
                           ">x\nACGT\n");
  EXPECT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "record,representation,k,frequency,power,snr\n"
            "x,base,1,0.25,4,1.0000\n"
            "x,base,2,0.5,4,1.0000\n"
            "x,base,3,0.75,4,1.0000\n"
            "x,zcurve,1,0.25,16,1.3333\n"
            "x,zcurve,2,0.5,16,1.3333\n"
            "x,zcurve,3,0.75,16,1.3333\n");
}

TEST(AnalyzeTest, AcgtJsonSchemaAndFlaggedPeak) {
  const Result r = RunWith(Command::kAnalyze,
                           Config({"base", "zcurve"}, OutputFormat::kJson),
                           ">x\nACGT\n");
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["input"], "stdin");
  EXPECT_EQ(doc["m"], 4);
  EXPECT_EQ(doc["alphabet"], "ACGT");
  ASSERT_EQ(doc["representations"].size(), 2u);
  const json& base = doc["representations"][0];
  const json& z = doc["representations"][1];
  EXPECT_EQ(base["name"], "base");
  EXPECT_EQ(z["name"], "zcurve");
  EXPECT_DOUBLE_EQ(z["d"].get<double>(), 2.0);
  EXPECT_EQ(base["peak"]["k"], 1);
  EXPECT_EQ(base["peak"]["exact"], false);
  EXPECT_NEAR(base["peak"]["snr"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(z["peak"]["snr"].get<double>(), 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(z["total"].get<double>(), 48.0, 1e-12);
  EXPECT_NEAR(z["mean_noise"].get<double>(), 12.0, 1e-12);
  const json& checks = z["theorem_checks"];
  EXPECT_EQ(checks["total_spectrum"]["expected"], 48.0);
  EXPECT_EQ(checks["total_spectrum"]["pass"], true);
  EXPECT_NEAR(checks["snr_ratio"]["expected"].get<double>(), 4.0 / 3.0,
              1e-15);
  EXPECT_EQ(checks["snr_ratio"]["pass"], true);
  EXPECT_TRUE(checks["snr_ratio"].contains("max_dev"));
}

TEST(AnalyzeTest, TextSummary) {
  const Result r = RunWith(Command::kAnalyze,
                           Config({"base", "zcurve"}, OutputFormat::kText),
                           ">x\nACGT\n");
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("3 does not divide 4"));
  EXPECT_THAT(r.out, HasSubstr("SNR 1.3333"));
}

TEST(AnalyzeTest, BadMatrixFileFails) {
  const std::string path =
      std::string(SEQSPECTRA_TEST_DATA_DIR) + "/badmatrix.json";
  const Result r = RunWith(Command::kAnalyze,
                           Config({"file:" + path}, OutputFormat::kText),
                           ">x\nACGT\n");
  EXPECT_NE(r.status, kExitOk);
  EXPECT_THAT(r.err, HasSubstr("rows not orthogonal"));
}

TEST(AnalyzeTest, MatrixFileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() /
                    "seqspectra_report_test_tetra.json";
  {
    std::ofstream f(path);
    f << RepresentationToJson(BuildTetrahedron());
  }
  const Result a = RunWith(Command::kAnalyze,
                           Config({"file:" + path.string()}, OutputFormat::kCsv),
                           "GATTACAGATTACA");
  const Result b = RunWith(Command::kAnalyze,
                           Config({"tetrahedron"}, OutputFormat::kCsv),
                           "GATTACAGATTACA");
  std::filesystem::remove(path);
  EXPECT_EQ(a.status, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(AnalyzeTest, ParseErrorsCarryContext) {
  AnalysisConfig c = Config({"base"}, OutputFormat::kText);
  c.alphabet = "ACGT";
  const Result r = RunWith(Command::kAnalyze, c, ">x\nACGU\n");
  EXPECT_EQ(r.status, kExitError);
  EXPECT_THAT(r.err, HasSubstr("stdin: invalid character 'U' at position 4"));

  c.input = "/nonexistent/input.fa";
  EXPECT_EQ(RunWith(Command::kAnalyze, c).status, kExitError);
}

TEST(AnalyzeTest, UnknownRepresentationAndAlphabetMismatch) {
  EXPECT_EQ(RunWith(Command::kAnalyze,
                    Config({"voss4d"}, OutputFormat::kText), "ACGT")
                .status,
            kExitError);
  AnalysisConfig c = Config({"zcurve"}, OutputFormat::kText);
  c.alphabet = "ACGU";
  const Result r = RunWith(Command::kAnalyze, c, "ACGU");
  EXPECT_EQ(r.status, kExitError);
  EXPECT_THAT(r.err, HasSubstr("zcurve"));
}

TEST(AnalyzeTest, LengthOneAndShortSequencesReportNoPeak) {
  AnalysisConfig c = Config({"base", "zcurve"}, OutputFormat::kJson);
  const Result r = RunWith(Command::kAnalyze, c, "A");
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["m"], 1);
  EXPECT_TRUE(doc["representations"][0]["peak"].is_null());
  EXPECT_EQ(doc["representations"][1]["theorem_checks"]["snr_ratio"]["status"],
            "vacuous");
}

TEST(AnalyzeTest, MultipleRecordsGiveJsonArray) {
  const Result r = RunWith(Command::kAnalyze,
                           Config({"zcurve"}, OutputFormat::kJson),
                           ">a\nACGTTT\n>b\nGGCA\n");
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  ASSERT_TRUE(doc.is_array());
  EXPECT_EQ(doc[1]["id"], "b");
}

TEST(CompareTest, TableHasTheFiveFields) {
  const Result r = RunWith(Command::kCompare,
                           Config({"base", "zcurve"}, OutputFormat::kText),
                           ">x\nATGGCGATGAAATGG\n");
  ASSERT_EQ(r.status, kExitOk) << r.err;
  for (const char* field :
       {"Length", "Total Spectra", "Mean Noise", "3-Periodicity", "SNR"}) {
    EXPECT_THAT(r.out, HasSubstr(field));
  }
  EXPECT_THAT(r.out, HasSubstr("theoretical 1.3333 (4/3)"));
  EXPECT_THAT(r.out, HasSubstr("measured 1.3333"));
  EXPECT_THAT(r.out, Not(HasSubstr("MISMATCH")));
}

TEST(CompareTest, ZCurveVersusTetrahedron) {
  const Result r = RunWith(Command::kCompare,
                           Config({"zcurve", "tetrahedron"}, OutputFormat::kJson),
                           "ATGGCGATGAAATGGCCCTTA");
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  const json& z = doc["rows"][0];
  const json& t = doc["rows"][1];
  EXPECT_NEAR(z["snr"].get<double>(), t["snr"].get<double>(), 1e-9);
  // Totals differ by d_z^2 / d_t^2 = 4 / (4/3) = 3.
  EXPECT_NEAR(z["total_spectra"].get<double>() /
                  t["total_spectra"].get<double>(),
              3.0, 1e-9);
  EXPECT_NEAR(doc["ratios"][0]["expected"].get<double>(), 1.0, 1e-15);
  EXPECT_EQ(doc["ratios"][0]["status"], "pass");
}

TEST(CompareTest, SingleSymbolIsIndeterminate) {
  AnalysisConfig c = Config({"base", "zcurve"}, OutputFormat::kText);
  const Result r = RunWith(Command::kCompare, c, "AAAA");
  EXPECT_EQ(r.status, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("indeterminate"));

  c.format = OutputFormat::kJson;
  const json doc = json::parse(RunWith(Command::kCompare, c, "AAAA").out);
  EXPECT_EQ(doc["rows"][0]["snr"], 0.0);
  EXPECT_TRUE(doc["ratios"][0]["measured"].is_null());
  EXPECT_EQ(doc["ratios"][0]["status"], "indeterminate");
}

TEST(CompareTest, NeedsTwoRepresentations) {
  EXPECT_EQ(RunWith(Command::kCompare, Config({"base"}, OutputFormat::kText),
                    "ACGT")
                .status,
            kExitError);
}

TEST(CompareTest, CsvCarriesTableFields) {
  const Result r = RunWith(Command::kCompare,
                           Config({"base", "zcurve"}, OutputFormat::kCsv),
                           ">x\nACGTAC\n");
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("record,method,length,total_spectra,mean_noise,"
                               "period,k,periodicity_power,snr\n"));
  EXPECT_THAT(r.out, HasSubstr("x,base,6,36,6,3,2,"));
  EXPECT_THAT(r.out, HasSubstr("x,zcurve,6,108,18,3,2,"));
}

TEST(VerifyTest, RandomDnaPasses) {
  AnalysisConfig c;
  c.random_count = 10;
  c.seed = 7;
  c.format = OutputFormat::kJson;
  const Result r = RunWith(Command::kVerify, c);
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["seed"], 7);
  EXPECT_EQ(doc["sequences"].size(), 10u);
  EXPECT_EQ(doc["representations"],
            json::array({"zcurve", "tetrahedron", "helmert"}));
  EXPECT_EQ(doc["all_pass"], true);
  for (const json& s : doc["sequences"]) {
    EXPECT_LT(s["total_spectrum"]["relative_error"].get<double>(), 1e-9);
    for (const json& c2 : s["snr_ratio"]) {
      if (c2["status"] == "vacuous") continue;
      EXPECT_LT(c2["max_dev"].get<double>(), 1e-9);
    }
  }
}

TEST(VerifyTest, RandomProteinUsesTwentyOverNineteen) {
  AnalysisConfig c;
  c.random_count = 5;
  c.alphabet_size = 20;
  c.format = OutputFormat::kJson;
  const Result r = RunWith(Command::kVerify, c);
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["alphabet"], "ACDEFGHIKLMNPQRSTVWY");
  for (const json& s : doc["sequences"]) {
    ASSERT_EQ(s["snr_ratio"].size(), 1u);
    EXPECT_NEAR(s["snr_ratio"][0]["expected"].get<double>(), 20.0 / 19.0,
                1e-15);
  }
}

TEST(VerifyTest, SingleSymbolIsVacuous) {
  AnalysisConfig c;
  c.alphabet = "ACGT";
  const Result r = RunWith(Command::kVerify, c, ">s\nAAAAAAA\n");
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("vacuous (no nonzero base bins)"));
  EXPECT_THAT(r.out, HasSubstr("PASS"));
}

TEST(VerifyTest, DeterministicOutput) {
  AnalysisConfig c;
  c.random_count = 20;
  c.seed = 99;
  c.format = OutputFormat::kJson;
  EXPECT_EQ(RunWith(Command::kVerify, c).out, RunWith(Command::kVerify, c).out);
  AnalysisConfig other = c;
  other.seed = 100;
  EXPECT_NE(RunWith(Command::kVerify, c).out,
            RunWith(Command::kVerify, other).out);
}

TEST(VerifyTest, RandomOnlyForVerify) {
  AnalysisConfig c;
  c.random_count = 3;
  EXPECT_EQ(RunWith(Command::kAnalyze, c).status, kExitError);
}

TEST(SpectrumTest, AcgtBaseCsv) {
  AnalysisConfig c;
  const Result r = RunWith(Command::kSpectrum, c, "ACGT");
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out,
            "k,frequency,power,snr\n"
            "1,0.25,4,1.0000\n"
            "2,0.5,4,1.0000\n"
            "3,0.75,4,1.0000\n");
}

TEST(SpectrumTest, ZCurveIsFourTimesBaseAtNonzeroBins) {
  const std::string seq = "ATGGCGATGAAATGGCCCTTAGGA";
  const auto base = json::parse(
      RunWith(Command::kSpectrum, Config({"base"}, OutputFormat::kJson), seq)
          .out);
  const auto z = json::parse(
      RunWith(Command::kSpectrum, Config({"zcurve"}, OutputFormat::kJson), seq)
          .out);
  for (std::size_t i = 0; i < base["rows"].size(); ++i) {
    EXPECT_NEAR(z["rows"][i]["power"].get<double>(),
                4.0 * base["rows"][i]["power"].get<double>(), 1e-9);
  }
}

TEST(SpectrumTest, NeedsOneRepresentationAndOneRecord) {
  EXPECT_EQ(RunWith(Command::kSpectrum,
                    Config({"base", "zcurve"}, OutputFormat::kCsv), "ACGT")
                .status,
            kExitError);
  EXPECT_EQ(RunWith(Command::kSpectrum, Config({}, OutputFormat::kCsv),
                    ">a\nACGT\n>b\nACGT\n")
                .status,
            kExitError);
}

TEST(OutputTest, WritesToFile) {
  const auto path =
      std::filesystem::temp_directory_path() / "seqspectra_report_test.csv";
  AnalysisConfig c;
  c.output = path.string();
  const Result r = RunWith(Command::kSpectrum, c, "ACGT");
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::filesystem::remove(path);
  EXPECT_THAT(buf.str(), HasSubstr("k,frequency,power,snr\n"));
}

}  // namespace
}  // namespace seqspectra::cli
