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

// Acceptance checks. Prints one PASS/FAIL line per criterion; --verbose adds
// the per-item evidence under each line.
//
// Exit status is 0 when the set of failing criteria equals the set given by
// --expect-fail (empty by default), so a known failure stays visible in the
// output while any change in the outcome is reported.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mtsca/adapters/adapters.h"
#include "mtsca/analysis/weakness.h"
#include "mtsca/campaign/campaign.h"
#include "mtsca/java/parser.h"
#include "mtsca/java/printer.h"
#include "mtsca/mutation/mutation.h"
#include "mtsca/rules/rules.h"
#include "mtsca/taxonomy.h"
#include "mtsca/verdict/verdict.h"
#include "support/corpus.h"
#include "support/fixtures.h"

namespace mtsca {
namespace {

namespace fs = std::filesystem;
using mutation::OperatorId;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> evidence;

  void Fail(const std::string& item) {
    pass = false;
    evidence.push_back("FAIL " + item);
  }
  void Note(const std::string& item) { evidence.push_back("ok   " + item); }
  void Check(bool ok, const std::string& item) { ok ? Note(item) : Fail(item); }
};

class ScratchDir {
 public:
  ScratchDir() {
    std::string tmpl = (fs::temp_directory_path() / "mtsca-accept-XXXXXX").string();
    path_ = mkdtemp(tmpl.data());
  }
  ~ScratchDir() { fs::remove_all(path_); }
  std::string Sub(const std::string& name) const { return path_ + "/" + name; }

 private:
  std::string path_;
};

std::string Corpus() { return testing::SourceDir() + "/tests/corpus"; }

campaign::CampaignConfig Config(const std::vector<OperatorId>& ops,
                                const analysis::WeaknessConfig& weaknesses) {
  campaign::CampaignConfig c;
  c.corpus_dir = Corpus();
  c.operators = ops;
  c.analyzer.weaknesses = weaknesses;
  return c;
}

std::vector<OperatorId> AllOperatorIds() {
  std::vector<OperatorId> ids;
  for (const auto& op : mutation::AllOperators()) ids.push_back(op.id);
  return ids;
}

Outcome MetamorphicSoundness() {
  Outcome o;
  size_t programs = testing::CorpusFiles().size();
  o.Check(programs >= 31, "corpus has " + std::to_string(programs) + " programs");
  auto start = std::chrono::steady_clock::now();
  campaign::CampaignResult r = campaign::RunCampaign(Config(mutation::ParseOperatorList("E"), {}));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  size_t skipped = 0, unparsed = 0;
  for (const auto& v : r.variants) skipped += v.skipped;
  for (const auto& p : r.programs) unparsed += !p.parsed;
  o.Check(unparsed == 0, std::to_string(unparsed) + " programs failed to analyze");
  o.Check(r.DiscrepancyCount() == 0,
          std::to_string(r.DiscrepancyCount()) + " discrepancies over " +
              std::to_string(r.variants.size()) + " variants (" + std::to_string(skipped) +
              " skipped)");
  o.Check(secs < 60, "runtime " + std::to_string(secs) + "s");
  std::ostringstream s;
  s << r.variants.size() << " E-family variants over " << programs << " programs, "
    << r.DiscrepancyCount() << " discrepancies, " << secs << "s";
  o.summary = s.str();
  return o;
}

Outcome WeaknessMatrix() {
  Outcome o;
  auto rows = testing::WeaknessMatrix();
  o.Check(rows.size() == 11, std::to_string(rows.size()) + " weaknesses in the matrix");
  int detected = 0;
  std::vector<std::string> missing;
  for (const auto& row : rows) {
    auto id = analysis::ParseWeaknessId(row.weakness);
    if (!id) {
      o.Fail(row.weakness + ": unknown weakness");
      missing.push_back(row.weakness);
      continue;
    }
    const auto& info = analysis::Info(*id);
    auto want = info.direction == analysis::Direction::kFalseNegative ? verdict::Direction::kLost
                                                                      : verdict::Direction::kGained;
    std::vector<OperatorId> ops;
    for (OperatorId op : AllOperatorIds()) {
      for (RootCause rc : verdict::SuggestRootCauses(op)) {
        if (rc == info.root_cause) ops.push_back(op);
      }
    }
    std::string head = row.weakness + " (" + std::string(RootCauseName(info.root_cause)) + ", " +
                       std::string(info.owning_rule) + " " + std::string(verdict::DirectionName(want)) + ")";
    if (ops.empty()) {
      o.Fail(head + ": no operator suggests this root cause");
      missing.push_back(row.weakness);
      continue;
    }
    auto r = campaign::RunCampaign(Config(ops, analysis::WeaknessConfig{*id}));
    std::set<std::string> found_by;
    std::set<std::string> programs;
    for (const auto& v : r.variants) {
      for (const auto& d : v.discrepancies) {
        if (d.rule_id == info.owning_rule && d.direction == want) {
          found_by.insert(std::string(mutation::OperatorName(v.op)));
          programs.insert(v.program);
        }
      }
    }
    bool matches_fixture = row.op == "-" || found_by.count(row.op) > 0;
    bool witness_seen = row.witness == "-" || programs.count(row.witness) > 0;
    std::string ops_text;
    for (const auto& n : found_by) ops_text += (ops_text.empty() ? "" : ",") + n;
    if (!found_by.empty() && matches_fixture && witness_seen) {
      ++detected;
      o.Note(head + ": found by " + ops_text + ", expected " + row.op + " on " + row.witness);
    } else {
      missing.push_back(row.weakness);
      o.Fail(head + ": " + (found_by.empty() ? "no qualifying discrepancy" : "found by " + ops_text) +
             ", expected " + row.op + " on " + row.witness + ", " +
             std::to_string(r.variants.size()) + " variants tried");
    }
  }
  o.summary = std::to_string(detected) + "/" + std::to_string(rows.size()) + " weaknesses detected";
  if (!missing.empty()) {
    o.summary += "; missing:";
    for (const auto& m : missing) o.summary += " " + m;
  }
  return o;
}

std::vector<int> RuleLines(const std::string& file, const std::string& rule,
                           const analysis::WeaknessConfig& cfg) {
  auto unit = testing::LoadPrinted(Corpus() + "/" + file);
  std::vector<int> lines;
  for (const auto& w : rules::RunRules(unit, rules::ParseRuleList(rule), cfg)) {
    lines.push_back(w.line);
  }
  return lines;
}

std::string Lines(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Outcome WeaknessCases() {
  struct Case {
    std::string rule;
    std::string weakness;
    std::string file;
    std::vector<int> correct;
    std::vector<int> weak;
  };
  const std::vector<Case> cases = {
      {"R4", "W_R4_BARE_LITERAL", "r4_parenthesized.java", {2, 3, 4}, {2, 4}},
      {"R9", "W_R9_SKIP_FINAL", "final_string.java", {3}, {}},
      {"R5", "W_TYPE_ARRAYLEN", "array_length.java", {}, {3}},
      {"R6", "W_R6_PER_CLASS", "nested_private.java", {}, {15}},
      {"R8", "W_R8_INIT_ONLY", "delayed_assignment.java", {}, {3}},
      {"R11", "W_R11_NO_CALLFLOW", "close_helper.java", {}, {11}},
      {"R10", "W_CONST_LOCAL_ONLY", "class_constant.java", {5}, {}},
  };
  Outcome o;
  int ok = 0;
  for (const auto& c : cases) {
    auto correct = RuleLines(c.file, c.rule, {});
    auto weak = RuleLines(c.file, c.rule, analysis::WeaknessConfig::FromString(c.weakness));
    bool pass = correct == c.correct && weak == c.weak;
    ok += pass;
    o.Check(pass, c.rule + " + " + c.weakness + " on " + c.file + ": correct " + Lines(correct) +
                      " (want " + Lines(c.correct) + "), weak " + Lines(weak) + " (want " +
                      Lines(c.weak) + ")");
  }
  o.summary = std::to_string(ok) + "/" + std::to_string(cases.size()) + " cases match exactly";
  return o;
}

Outcome RoundTrip() {
  Outcome o;
  size_t files = 0, stable = 0, variants = 0, reparsed = 0;
  for (const auto& path : testing::CorpusFiles()) {
    ++files;
    java::CompilationUnit unit;
    try {
      unit = java::Parse(testing::ReadFile(path), path);
      if (java::Parse(java::Print(unit), path) == unit) {
        ++stable;
      } else {
        o.Fail(path + ": printed form parses to a different tree");
      }
    } catch (const std::exception& e) {
      o.Fail(path + ": " + e.what());
      continue;
    }
    auto printed = testing::LoadPrinted(path);
    for (OperatorId op : AllOperatorIds()) {
      auto sites = mutation::EnumerateSites(printed, op);
      for (const auto& site : sites) {
        ++variants;
        try {
          auto v = mutation::Apply(printed, site, 0);
          java::Parse(v.text, path);
          ++reparsed;
        } catch (const std::exception& e) {
          o.Fail(path + " " + std::string(mutation::OperatorName(op)) + ": " + e.what());
        }
      }
    }
  }
  o.Check(files > 0, std::to_string(files) + " corpus files");
  o.summary = std::to_string(stable) + "/" + std::to_string(files) + " files stable, " +
              std::to_string(reparsed) + "/" + std::to_string(variants) + " variants re-parse";
  return o;
}

Outcome Goldens() {
  Outcome o;
  std::map<std::string, int> per_op;
  int pairs = 0, matched = 0;
  for (const auto& in_path : testing::ListFiles(testing::SourceDir() + "/tests/golden", ".java")) {
    std::string base = fs::path(in_path).filename().string();
    auto pos = base.find(".in.java");
    if (pos == std::string::npos) continue;
    ++pairs;
    std::string stem = base.substr(0, pos);
    auto op = mutation::ParseOperatorId(stem.substr(0, stem.find('_')));
    std::string out_path = in_path.substr(0, in_path.size() - 8) + ".out.java";
    try {
      auto unit = testing::LoadPrinted(in_path);
      auto sites = mutation::EnumerateSites(unit, *op);
      if (sites.empty()) throw std::runtime_error("no site");
      auto v = mutation::Apply(unit, sites[0], 0);
      auto expected = java::Print(java::Parse(testing::ReadFile(out_path), out_path));
      if (v.text == expected) {
        ++matched;
        ++per_op[std::string(mutation::OperatorName(*op))];
      } else {
        o.Fail(stem + ": output differs");
      }
    } catch (const std::exception& e) {
      o.Fail(stem + ": " + e.what());
    }
  }
  for (const auto& op : mutation::AllOperators()) {
    int n = per_op[std::string(op.name)];
    o.Check(n >= 2, std::string(op.name) + ": " + std::to_string(n) + " matching pairs");
  }
  o.summary = std::to_string(matched) + "/" + std::to_string(pairs) + " golden pairs byte-exact, " +
              std::to_string(per_op.size()) + " operators covered";
  return o;
}

Outcome Adapters() {
  using adapters::ReportFormat;
  Outcome o;
  std::string fixtures = testing::SourceDir() + "/tests/fixtures/adapters/";
  std::string stubs = testing::SourceDir() + "/tests/stubs/";
  struct Expect {
    std::string file;
    ReportFormat format;
    std::map<std::string, int> rules;
  };
  const std::vector<Expect> expects = {
      {"pmd_report.xml", ReportFormat::kPmdXml, {{"pmd/CloseResource", 1},
        {"pmd/MethodReturnsInternalArray", 1},
        {"pmd/UnusedPrivateMethod", 1}}},
      {"spotbugs_report.xml", ReportFormat::kSpotBugsXml, {{"spotbugs/ES_COMPARING_STRINGS_WITH_EQ", 1}}},
      {"sarif_report.json", ReportFormat::kSarif, {{"sonarqube/java:S2095", 1}, {"sonarqube/java:S2159", 1}}},
  };
  for (const auto& e : expects) {
    try {
      auto report = adapters::ParseReport({e.format, testing::ReadFile(fixtures + e.file), 0});
      auto counts = report.RuleCounts();
      o.Check(counts == e.rules, e.file + ": " + std::to_string(report.size()) + " warning(s)");
    } catch (const std::exception& ex) {
      o.Fail(e.file + ": " + ex.what());
    }
  }
  auto spec = [](const std::string& cmd, ReportFormat f, int timeout) {
    adapters::AnalyzerSpec s;
    s.name = "stub";
    s.command = cmd;
    s.format = f;
    s.timeout_seconds = timeout;
    return s;
  };
  try {
    auto raw = adapters::RunExternal(
        spec("sh " + stubs + "emit_report.sh " + fixtures + "pmd_report.xml {input} {output}",
             ReportFormat::kPmdXml, 30),
        Corpus());
    o.Check(adapters::ParseReport(raw).size() == 3, "stub run yields the fixture's 3 warnings");
  } catch (const std::exception& e) {
    o.Fail(std::string("stub run: ") + e.what());
  }
  auto start = std::chrono::steady_clock::now();
  try {
    adapters::RunExternal(
        spec("sh " + stubs + "sleep_forever.sh {input} {output}", ReportFormat::kSarif, 1),
        Corpus());
    o.Fail("sleeping stub did not time out");
  } catch (const adapters::Timeout&) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.Check(secs < 5, "timeout raised after " + std::to_string(secs) + "s");
  } catch (const std::exception& e) {
    o.Fail(std::string("timeout case: ") + e.what());
  }
  for (const std::string cmd : {"sh " + stubs + "fail_silently.sh {input} {output}",
                                std::string("/nonexistent/analyzer {input} {output}")}) {
    try {
      adapters::RunExternal(spec(cmd, ReportFormat::kSarif, 30), Corpus());
      o.Fail("no spawn failure for: " + cmd);
    } catch (const adapters::SpawnFailure&) {
      o.Note("spawn failure for: " + cmd);
    } catch (const std::exception& e) {
      o.Fail(cmd + ": " + e.what());
    }
  }
  o.summary = o.pass ? "3 formats parse to expected rule counts; stub runs, timeout and spawn "
                       "failure behave"
                     : "see evidence";
  return o;
}

Outcome Determinism() {
  Outcome o;
  ScratchDir scratch;
  int n = std::max(4, campaign::CampaignConfig::DefaultJobs());
  auto cfg = Config(AllOperatorIds(), analysis::WeaknessConfig::FromString(
                                          "W_R1_SKIP_NESTED,W_R6_PER_CLASS,W_CONST_LOCAL_ONLY"));
  cfg.seed = 1;
  std::vector<std::pair<std::string, int>> runs = {{"a", 1}, {"b", 1}, {"c", n}, {"d", n}};
  std::vector<std::string> outputs;
  for (const auto& [name, jobs] : runs) {
    cfg.jobs = jobs;
    cfg.out_dir = scratch.Sub(name);
    campaign::RunCampaign(cfg);
    outputs.push_back(campaign::StripTimings(testing::ReadFile(cfg.out_dir + "/results.ndjson")));
  }
  bool same = true;
  for (size_t i = 1; i < outputs.size(); ++i) {
    bool eq = outputs[i] == outputs[0];
    same &= eq;
    o.Check(eq, "run " + runs[i].first + " (jobs " + std::to_string(runs[i].second) +
                    ") matches run a (jobs 1)");
  }
  o.Check(!outputs[0].empty(), std::to_string(outputs[0].size()) + " bytes of results");
  o.summary = std::string(same ? "identical" : "different") + " results.ndjson across jobs 1 and " +
              std::to_string(n) + " (" + std::to_string(outputs[0].size()) + " bytes)";
  return o;
}

Outcome TaxonomyCoverage() {
  Outcome o;
  std::set<RootCause> causes;
  std::set<InputCharacteristic> chars;
  for (const auto& w : analysis::AllWeaknesses()) {
    causes.insert(w.root_cause);
    chars.insert(w.characteristics.begin(), w.characteristics.end());
  }
  for (const auto& op : mutation::AllOperators()) {
    causes.insert(op.targeted_root_causes.begin(), op.targeted_root_causes.end());
    chars.insert(op.targeted_characteristics.begin(), op.targeted_characteristics.end());
  }
  std::set<RootCause> label_causes;
  for (const auto& e : LabelOnlyRootCauses()) label_causes.insert(e.cause);
  std::set<InputCharacteristic> label_chars;
  for (const auto& e : LabelOnlyCharacteristics()) label_chars.insert(e.characteristic);
  int covered = 0, total = 0;
  for (RootCause rc : AllRootCauses()) {
    ++total;
    bool ok = causes.count(rc) || label_causes.count(rc);
    covered += ok;
    o.Check(ok, std::string(RootCauseName(rc)) +
                    (causes.count(rc) ? ": tagged" : label_causes.count(rc) ? ": label-only" : ""));
  }
  for (InputCharacteristic ch : AllInputCharacteristics()) {
    ++total;
    bool ok = chars.count(ch) || label_chars.count(ch);
    covered += ok;
    o.Check(ok, std::string(CharacteristicName(ch)) +
                    (chars.count(ch) ? ": tagged" : label_chars.count(ch) ? ": label-only" : ""));
  }
  const std::set<std::string> expected_label_only = {
      "SymbolicExecutionError", "UnhandledJavaLibrary",    "MissingWhitelistCase",
      "MissingSimilarCase",     "FlawedRuleSpecification", "GeneralProgrammingError",
      "Miscellaneous"};
  std::set<std::string> label_names;
  for (RootCause rc : label_causes) label_names.insert(std::string(RootCauseName(rc)));
  o.Check(label_names == expected_label_only,
          std::to_string(label_names.size()) + " label-only root causes");
  o.summary = std::to_string(covered) + "/" + std::to_string(total) + " taxonomy members covered";
  return o;
}

}  // namespace
}  // namespace mtsca

int main(int argc, char** argv) {
  using namespace mtsca;
  bool verbose = false;
  std::set<int> expect_fail;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--verbose") {
      verbose = true;
    } else if (arg.rfind("--expect-fail=", 0) == 0) {
      std::stringstream ss(arg.substr(14));
      for (std::string n; std::getline(ss, n, ',');) expect_fail.insert(std::stoi(n));
    } else {
      std::cerr << "usage: " << argv[0] << " [--verbose] [--expect-fail=N,...]\n";
      return 2;
    }
  }
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"metamorphic soundness", MetamorphicSoundness},
      {"seeded-weakness detection matrix", WeaknessMatrix},
      {"weakness case reproductions", WeaknessCases},
      {"frontend round-trip", RoundTrip},
      {"operator goldens", Goldens},
      {"adapter fixtures and external runner", Adapters},
      {"determinism across parallelism", Determinism},
      {"taxonomy coverage", TaxonomyCoverage},
  };
  std::set<int> failed;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("error: ") + e.what();
    }
    if (!o.pass) failed.insert(index);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << " " << c.name << ": " << o.summary
              << std::endl;
    if (verbose) {
      for (const auto& line : o.evidence) std::cout << "    " << line << "\n";
    }
  }
  std::cout << (8 - failed.size()) << "/8 criteria pass" << std::endl;
  if (failed != expect_fail) {
    if (!expect_fail.empty()) std::cout << "outcome differs from --expect-fail" << std::endl;
    return 1;
  }
  return 0;
}
