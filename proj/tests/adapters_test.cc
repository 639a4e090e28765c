// Copyright 2026 The mtsca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>

#include "mtsca/adapters/adapters.h"
#include "mtsca/rules/rules.h"
#include "support/corpus.h"

namespace mtsca::adapters {
namespace {

namespace fs = std::filesystem;
using verdict::Warning;
using verdict::WarningReport;

std::string Fixture(const std::string& name) {
  return testing::SourceDir() + "/tests/fixtures/adapters/" + name;
}

std::string Stub(const std::string& name) { return testing::SourceDir() + "/tests/stubs/" + name; }

RawReport Raw(ReportFormat f, const std::string& fixture) {
  return RawReport{f, testing::ReadFile(Fixture(fixture)), 0};
}

size_t OffsetOfNth(const std::string& text, const std::string& needle, int n) {
  size_t pos = text.find(needle);
  while (n-- > 0) pos = text.find(needle, pos + 1);
  return pos;
}

TEST(Adapters, PmdFixture) {
  auto r = ParseReport(Raw(ReportFormat::kPmdXml, "pmd_report.xml"));
  EXPECT_EQ(r.analyzer, "pmd");
  EXPECT_EQ(r.version, "7.0.0-rc3");
  EXPECT_EQ(r.size(), 3u);
  ASSERT_EQ(r.files.size(), 2u);
  EXPECT_EQ(r.files.at("src/CloseHelper.java").size(), 2u);
  EXPECT_EQ(r.files.at("src/NestedArray.java").size(), 1u);
  const auto& a = r.files.at("src/CloseHelper.java");
  EXPECT_EQ(a[0].rule_id, "pmd/CloseResource");
  EXPECT_EQ(a[0].line, 4);
  EXPECT_EQ(a[0].message, "Ensure that resources like this Connection object are closed after use");
  EXPECT_EQ(a[1].rule_id, "pmd/UnusedPrivateMethod");
  EXPECT_EQ(a[1].line, 11);
  EXPECT_EQ(r.files.at("src/NestedArray.java")[0].rule_id, "pmd/MethodReturnsInternalArray");
}

TEST(Adapters, SpotBugsFixture) {
  auto r = ParseReport(Raw(ReportFormat::kSpotBugsXml, "spotbugs_report.xml"));
  EXPECT_EQ(r.analyzer, "spotbugs");
  EXPECT_EQ(r.version, "4.7.3");
  ASSERT_EQ(r.size(), 1u);
  auto w = r.All()[0];
  EXPECT_EQ(w.rule_id, "spotbugs/ES_COMPARING_STRINGS_WITH_EQ");
  EXPECT_EQ(w.file, "FinalString.java");
  EXPECT_EQ(w.line, 5);
}

TEST(Adapters, SarifFixture) {
  auto r = ParseReport(Raw(ReportFormat::kSarif, "sarif_report.json"));
  EXPECT_EQ(r.analyzer, "sonarqube");
  EXPECT_EQ(r.version, "9.9");
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r.files.at("src/CloseHelper.java")[0].rule_id, "sonarqube/java:S2095");
  EXPECT_EQ(r.files.at("src/CloseHelper.java")[0].line, 4);
  EXPECT_EQ(r.files.at("src/LocalConstant.java")[0].rule_id, "sonarqube/java:S2159");
  EXPECT_EQ(r.files.at("src/LocalConstant.java")[0].line, 7);
}

TEST(Adapters, EmptyReports) {
  EXPECT_EQ(ParseReport(Raw(ReportFormat::kSarif, "sarif_empty.json")).size(), 0u);
  for (auto f : {ReportFormat::kPmdXml, ReportFormat::kSpotBugsXml, ReportFormat::kSarif,
                 ReportFormat::kMiniJson}) {
    EXPECT_EQ(ParseReport(RawReport{f, "", 0}).size(), 0u);
    EXPECT_EQ(ParseReport(RawReport{f, " \n", 0}).size(), 0u);
  }
  EXPECT_EQ(ParseReport(RawReport{ReportFormat::kPmdXml, "<pmd version=\"7\"></pmd>", 0}).size(),
            0u);
}

TEST(Adapters, MiniJsonFixture) {
  auto r = ParseReport(Raw(ReportFormat::kMiniJson, "mini_report.ndjson"));
  EXPECT_EQ(r.analyzer, "mini");
  EXPECT_EQ(r.size(), 3u);
  EXPECT_EQ(r.RuleCounts(), (std::map<std::string, int>{{"R1", 2}, {"R9", 1}}));
}

TEST(Adapters, FormatErrorsCarryOffsets) {
  auto expect_error = [](ReportFormat f, const std::string& fixture, size_t offset) {
    std::string text = testing::ReadFile(Fixture(fixture));
    try {
      ParseReport(RawReport{f, text, 0});
      ADD_FAILURE() << fixture << " parsed";
    } catch (const FormatError& e) {
      EXPECT_EQ(e.offset(), offset) << fixture << ": " << e.what();
      EXPECT_NE(std::string(e.what()).find("byte "), std::string::npos);
    }
  };
  std::string pmd = testing::ReadFile(Fixture("pmd_malformed.xml"));
  // The unclosed violation swallows the remaining closing tags; the parser
  // runs out of data.
  expect_error(ReportFormat::kPmdXml, "pmd_malformed.xml", pmd.size());
  std::string norule = testing::ReadFile(Fixture("pmd_no_rule.xml"));
  expect_error(ReportFormat::kPmdXml, "pmd_no_rule.xml", OffsetOfNth(norule, "<violation", 0));
  std::string sarif = testing::ReadFile(Fixture("sarif_malformed.json"));
  expect_error(ReportFormat::kSarif, "sarif_malformed.json", OffsetOfNth(sarif, ",,", 0) + 1);
  std::string mini = testing::ReadFile(Fixture("mini_bad_line.ndjson"));
  expect_error(ReportFormat::kMiniJson, "mini_bad_line.ndjson", mini.find('\n') + 1);
  EXPECT_THROW(ParseReport(RawReport{ReportFormat::kSarif, "{\"version\": \"2.1.0\"}", 0}),
               FormatError);
  EXPECT_THROW(ParseReport(RawReport{ReportFormat::kSpotBugsXml, "<pmd/>", 0}), FormatError);
}

// Byte-level corruption never crashes: either a report or a FormatError.
TEST(AdaptersProperty, CorruptedFixturesFailCleanly) {
  std::mt19937 rng(3);
  std::vector<std::pair<ReportFormat, std::string>> inputs = {
      {ReportFormat::kPmdXml, "pmd_report.xml"},
      {ReportFormat::kSpotBugsXml, "spotbugs_report.xml"},
      {ReportFormat::kSarif, "sarif_report.json"},
      {ReportFormat::kMiniJson, "mini_report.ndjson"}};
  for (const auto& [f, name] : inputs) {
    std::string text = testing::ReadFile(Fixture(name));
    for (int i = 0; i < 200; ++i) {
      std::string t = text;
      int edits = 1 + static_cast<int>(rng() % 4);
      for (int e = 0; e < edits; ++e) {
        size_t at = rng() % t.size();
        switch (rng() % 3) {
          case 0: t[at] = "<>{}\"=,/ 0a"[rng() % 11]; break;
          case 1: t.erase(at, 1 + rng() % 8); break;
          default: t = t.substr(0, at); break;
        }
        if (t.empty()) break;
      }
      try {
        ParseReport(RawReport{f, t, 0});
      } catch (const FormatError& e) {
        EXPECT_LE(e.offset(), t.size());
      }
    }
  }
}

TEST(Adapters, MiniJsonRoundTrip) {
  std::vector<Warning> ws;
  for (const auto& path : testing::CorpusFiles()) {
    auto unit = testing::LoadPrinted(path);
    for (auto& w : rules::RunRules(unit, {})) ws.push_back(w);
  }
  ASSERT_FALSE(ws.empty());
  auto report = WarningReport::FromWarnings("mini", "", ws);
  auto back = ParseReport(RawReport{ReportFormat::kMiniJson, WriteMiniJson(report), 0});
  EXPECT_EQ(back.files, report.files);
}

// Compare gives the same answer for a report read back from every format.
TEST(Adapters, NeutralAcrossFormats) {
  auto mini = ParseReport(Raw(ReportFormat::kMiniJson, "mini_report.ndjson"));
  auto pmd = ParseReport(Raw(ReportFormat::kPmdXml, "pmd_report.xml"));
  verdict::CompareMeta meta;
  meta.original_file = meta.variant_file = "src/CloseHelper.java";
  WarningReport only6a;
  only6a.files["src/CloseHelper.java"] = pmd.files.at("src/CloseHelper.java");
  auto direct = verdict::Compare(only6a, WarningReport{}, meta);
  auto via = verdict::Compare(
      ParseReport(RawReport{ReportFormat::kMiniJson, WriteMiniJson(only6a), 0}),
      WarningReport{}, meta);
  EXPECT_EQ(direct, via);
  EXPECT_EQ(direct.size(), 2u);
  (void)mini;
}

TEST(Adapters, FormatNames) {
  EXPECT_EQ(ParseFormat("pmd-xml"), ReportFormat::kPmdXml);
  EXPECT_EQ(ParseFormat("SpotBugs-XML"), ReportFormat::kSpotBugsXml);
  EXPECT_EQ(ParseFormat("sarif"), ReportFormat::kSarif);
  EXPECT_EQ(ParseFormat("MiniJSON"), ReportFormat::kMiniJson);
  EXPECT_THROW(ParseFormat("csv"), std::invalid_argument);
}

TEST(AnalyzerSpecTest, Placeholders) {
  AnalyzerSpec s{"pmd", "pmd check -d {input} -f xml -r {output}", ReportFormat::kPmdXml, 60};
  EXPECT_NO_THROW(s.Validate());
  EXPECT_EQ(s.Render("/in dir", "/o'ut"), "pmd check -d '/in dir' -f xml -r '/o'\\''ut'");
  s.command = "pmd -d {input} -r {output} {input}";
  EXPECT_THROW(s.Validate(), std::invalid_argument);
  s.command = "pmd -d {input}";
  EXPECT_THROW(s.Validate(), std::invalid_argument);
  s.command = "pmd -d {input} -r {output}";
  s.timeout_seconds = 0;
  EXPECT_THROW(s.Validate(), std::invalid_argument);
}

TEST(AnalyzerSpecTest, LoadFile) {
  fs::path p = fs::temp_directory_path() / "mtsca_spec_test.ini";
  {
    std::ofstream out(p);
    out << "# external PMD\nname = pmd\ncommand = pmd check -d {input} -r {output}\n"
        << "format = PMD-XML\n";
  }
  auto s = AnalyzerSpec::Load(p.string());
  EXPECT_EQ(s.name, "pmd");
  EXPECT_EQ(s.format, ReportFormat::kPmdXml);
  EXPECT_EQ(s.timeout_seconds, 60);
  {
    std::ofstream out(p);
    out << "name = x\ncommand = run {input}\n";
  }
  EXPECT_THROW(AnalyzerSpec::Load(p.string()), std::invalid_argument);
  fs::remove(p);
}

AnalyzerSpec StubSpec(const std::string& command, ReportFormat f, int timeout = 10) {
  return AnalyzerSpec{"stub", command, f, timeout};
}

TEST(RunExternalTest, StubEmitsFixture) {
  auto spec = StubSpec("sh " + Stub("emit_report.sh") + " " + Fixture("pmd_report.xml") +
                           " {input} {output}",
                       ReportFormat::kPmdXml);
  auto raw = RunExternal(spec, testing::SourceDir() + "/tests/corpus");
  EXPECT_EQ(raw.exit_status, 4);
  EXPECT_EQ(raw.content, testing::ReadFile(Fixture("pmd_report.xml")));
  EXPECT_EQ(ParseReport(raw).size(), 3u);
}

TEST(RunExternalTest, SilentFailureIsSpawnFailure) {
  auto spec = StubSpec("sh " + Stub("fail_silently.sh") + " {input} {output}",
                       ReportFormat::kSarif);
  EXPECT_THROW(RunExternal(spec, testing::SourceDir()), SpawnFailure);
  auto missing = StubSpec("/nonexistent/analyzer {input} {output}", ReportFormat::kSarif);
  EXPECT_THROW(RunExternal(missing, testing::SourceDir()), SpawnFailure);
}

TEST(RunExternalTest, CleanExitWithoutReportIsEmpty) {
  auto spec = StubSpec("true {input} {output}", ReportFormat::kSarif);
  auto raw = RunExternal(spec, testing::SourceDir());
  EXPECT_EQ(raw.exit_status, 0);
  EXPECT_EQ(ParseReport(raw).size(), 0u);
}

TEST(RunExternalTest, TimeoutKillsGroup) {
  auto spec = StubSpec("sh " + Stub("sleep_forever.sh") + " {input} {output}",
                       ReportFormat::kSarif, 1);
  auto start = std::chrono::steady_clock::now();
  EXPECT_THROW(RunExternal(spec, testing::SourceDir()), Timeout);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(5));
}

TEST(RunExternalTest, WorkDirIsRemoved) {
  fs::path root = fs::temp_directory_path() / "mtsca_work_root_test";
  fs::remove_all(root);
  auto spec = StubSpec("echo x > out.txt; cp out.txt {output} && test -d {input}",
                       ReportFormat::kMiniJson);
  EXPECT_THROW(ParseReport(RunExternal(spec, testing::SourceDir(), root.string())), FormatError);
  auto raw = RunExternal(StubSpec("pwd > {output}; test -d {input}", ReportFormat::kMiniJson),
                         testing::SourceDir(), root.string());
  EXPECT_NE(raw.content.find(root.string()), std::string::npos);
  EXPECT_TRUE(fs::is_empty(root));
  fs::remove_all(root);
}

}  // namespace
}  // namespace mtsca::adapters
