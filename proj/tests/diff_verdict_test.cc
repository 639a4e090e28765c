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

#include <random>
#include <set>

#include "mtsca/java/parser.h"
#include "mtsca/java/walk.h"
#include "mtsca/mutation/mutation.h"
#include "mtsca/rules/rules.h"
#include "mtsca/verdict/verdict.h"
#include "support/corpus.h"

namespace mtsca::verdict {
namespace {

using mutation::OperatorId;

Warning W(std::string rule, int line, std::string file = "A.java") {
  return Warning{"mini", std::move(rule), std::move(file), line, ""};
}

CompareMeta Meta(OperatorId op = OperatorId::kE1) {
  CompareMeta m;
  m.variant_id = "A__" + std::string(mutation::OperatorName(op)) + "__0";
  m.op = op;
  m.original_file = "A.java";
  m.variant_file = "A.java";
  return m;
}

WarningReport Report(std::vector<Warning> ws) {
  return WarningReport::FromWarnings("mini", "1", std::move(ws));
}

TEST(Verdict, LostOnNestedWrapping) {
  auto orig = Report({W("R1", 3), W("R1", 6)});
  auto var = Report({W("R1", 4)});
  auto ds = Compare(orig, var, Meta());
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].rule_id, "R1");
  EXPECT_EQ(ds[0].direction, Direction::kLost);
  EXPECT_EQ(ds[0].original_count, 2);
  EXPECT_EQ(ds[0].variant_count, 1);
  EXPECT_EQ(ds[0].equivalence, Equivalence::kCertified);
  EXPECT_EQ(ds[0].suggested_root_causes,
            std::vector<RootCause>{RootCause::kUnhandledLanguageFeature});
  EXPECT_FALSE(ds[0].line.has_value());
}

TEST(Verdict, IdenticalReportsGiveNothing) {
  auto r = Report({W("R1", 3), W("R9", 7)});
  EXPECT_TRUE(Compare(r, r, Meta()).empty());
  EXPECT_TRUE(Compare(Report({}), Report({}), Meta()).empty());
}

// Deliberately count-sensitive: one R2 warning per `||`.
std::vector<Warning> ToyOrCounter(const java::CompilationUnit& unit) {
  std::vector<Warning> out;
  java::Walk(unit, [&](java::NodeRef n, const std::vector<java::NodeRef>&) {
    if (auto* e = n.Get<java::Expr>()) {
      if (auto* b = std::get_if<java::Binary>(&e->node); b && b->op == java::BinaryOp::kOr) {
        out.push_back(W("R2", e->span.start_line));
      }
    }
    return true;
  });
  return out;
}

TEST(Verdict, ToyRuleGainsOnFalseOrFalse) {
  auto unit = java::Parse(
      "class A {\n"
      "    boolean f() {\n"
      "        return false;\n"
      "    }\n"
      "}\n",
      "A.java");
  auto sites = mutation::EnumerateSites(unit, OperatorId::kE4b);
  ASSERT_EQ(sites.size(), 1u);
  auto v = mutation::Apply(unit, sites[0]);
  auto orig = Report(ToyOrCounter(unit));
  auto var = Report(ToyOrCounter(v.unit));
  auto ds = Compare(orig, var, CompareMeta::For(v, "A.java", "A.java"));
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].rule_id, "R2");
  EXPECT_EQ(ds[0].direction, Direction::kGained);
  EXPECT_EQ(ds[0].original_count, 0);
  EXPECT_EQ(ds[0].variant_count, 1);
  EXPECT_EQ(ds[0].variant_id, v.id);
  EXPECT_EQ(ds[0].suggested_root_causes,
            (std::vector<RootCause>{RootCause::kMissingSpecificCase, RootCause::kMishandledIR}));
}

TEST(Verdict, SuggestRootCausesTable) {
  using RC = RootCause;
  std::vector<std::pair<OperatorId, std::vector<RC>>> table = {
      {OperatorId::kE1, {RC::kUnhandledLanguageFeature}},
      {OperatorId::kE2, {RC::kUnhandledLanguageFeature}},
      {OperatorId::kE3, {RC::kTypeResolutionError, RC::kScopeAnalysisError}},
      {OperatorId::kE4a, {RC::kMissingSpecificCase, RC::kMishandledIR}},
      {OperatorId::kE4b, {RC::kMissingSpecificCase, RC::kMishandledIR}},
      {OperatorId::kE4c, {RC::kMissingSpecificCase, RC::kMishandledIR}},
      {OperatorId::kE5, {RC::kMissingSpecificCase, RC::kMishandledIR}},
      {OperatorId::kX1, {RC::kDataflowAnalysisError}},
      {OperatorId::kX2, {RC::kScopeAnalysisError}},
      {OperatorId::kX3, {RC::kTypeResolutionError}},
  };
  for (const auto& [op, want] : table) {
    EXPECT_EQ(SuggestRootCauses(op), want) << mutation::OperatorName(op);
    EXPECT_EQ(EquivalenceOf(op), mutation::Operator(op).family == mutation::Family::kEquivalent
                                     ? Equivalence::kCertified
                                     : Equivalence::kUnverified);
  }
}

TEST(Verdict, ExploratoryIsUnverified) {
  auto ds = Compare(Report({}), Report({W("R11", 5)}), Meta(OperatorId::kX1));
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].equivalence, Equivalence::kUnverified);
  EXPECT_EQ(ds[0].direction, Direction::kGained);
}

TEST(Verdict, OrderedByRule) {
  auto ds = Compare(Report({W("R9", 1), W("R1", 2), W("R5", 3)}), Report({}), Meta());
  ASSERT_EQ(ds.size(), 3u);
  EXPECT_EQ(ds[0].rule_id, "R1");
  EXPECT_EQ(ds[1].rule_id, "R5");
  EXPECT_EQ(ds[2].rule_id, "R9");
}

TEST(Verdict, MismatchedFiles) {
  auto meta = Meta();
  meta.variant_file = "variants/A__E1__0.java";
  auto orig = Report({W("R1", 3)});
  auto var = Report({W("R1", 3, "variants/A__E1__0.java")});
  EXPECT_TRUE(Compare(orig, var, meta).empty());
  EXPECT_THROW(Compare(orig, Report({W("R1", 3, "B.java")}), meta), MismatchedFiles);
  EXPECT_THROW(Compare(Report({W("R1", 3, "B.java")}), var, meta), MismatchedFiles);
}

TEST(Verdict, StrictModeProjectsLines) {
  auto meta = Meta();
  // Variant line 1 is inserted, lines 2..4 map to original 1..3.
  meta.origin_map = {std::nullopt, 1, 2, 3};
  auto orig = Report({W("R1", 2), W("R1", 3)});
  auto moved = Report({W("R1", 3), W("R1", 4)});
  EXPECT_TRUE(Compare(orig, moved, meta, {true}).empty());
  auto shifted = Report({W("R1", 2), W("R1", 4)});
  EXPECT_TRUE(Compare(orig, shifted, meta).empty());
  auto ds = Compare(orig, shifted, meta, {true});
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[0].line, 1);
  EXPECT_EQ(ds[0].direction, Direction::kGained);
  EXPECT_EQ(ds[1].line, 2);
  EXPECT_EQ(ds[1].direction, Direction::kLost);
  auto inserted = Report({W("R1", 1), W("R1", 3), W("R1", 4)});
  ds = Compare(orig, inserted, meta, {true});
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].line, 0);
}

TEST(Verdict, ReportHelpers) {
  auto r = Report({W("R9", 4, "B.java"), W("R1", 9), W("R1", 2)});
  EXPECT_EQ(r.size(), 3u);
  ASSERT_EQ(r.files.at("A.java").size(), 2u);
  EXPECT_EQ(r.files.at("A.java")[0].line, 2);
  EXPECT_EQ(r.RuleCounts("A.java"), (std::map<std::string, int>{{"R1", 2}}));
  EXPECT_EQ(r.RuleCounts(), (std::map<std::string, int>{{"R1", 2}, {"R9", 1}}));
}

// Random reports over a few rules in one file.
WarningReport RandomReport(std::mt19937& rng) {
  static const char* kRules[] = {"R1", "R2", "R5", "R7", "R9", "R11"};
  std::vector<Warning> ws;
  int n = std::uniform_int_distribution<int>(0, 12)(rng);
  for (int i = 0; i < n; ++i) {
    ws.push_back(W(kRules[rng() % 6], 1 + static_cast<int>(rng() % 40)));
  }
  return Report(std::move(ws));
}

std::map<std::string, int> Count(const WarningReport& r) { return r.RuleCounts("A.java"); }

TEST(VerdictProperty, SymmetryZeroAndConservation) {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    auto a = RandomReport(rng);
    auto b = RandomReport(rng);
    auto op = mutation::AllOperators()[rng() % mutation::AllOperators().size()].id;
    auto ab = Compare(a, b, Meta(op));
    auto ba = Compare(b, a, Meta(op));
    ASSERT_EQ(ab.size(), ba.size());
    auto ca = Count(a), cb = Count(b);
    for (size_t i = 0; i < ab.size(); ++i) {
      EXPECT_EQ(ab[i].rule_id, ba[i].rule_id);
      EXPECT_NE(ab[i].direction, ba[i].direction);
      EXPECT_EQ(ab[i].original_count, ba[i].variant_count);
      EXPECT_EQ(ab[i].original_count, ca[ab[i].rule_id]);
      EXPECT_EQ(ab[i].variant_count, cb[ab[i].rule_id]);
      if (ab[i].direction == Direction::kLost) {
        EXPECT_LT(ab[i].variant_count, ab[i].original_count);
      } else {
        EXPECT_GT(ab[i].variant_count, ab[i].original_count);
      }
      EXPECT_EQ(ab[i].op, op);
      EXPECT_EQ(ab[i].equivalence == Equivalence::kCertified,
                mutation::Operator(op).family == mutation::Family::kEquivalent);
    }
    size_t differing = 0;
    std::set<std::string> rules;
    for (auto& [r, n] : ca) rules.insert(r);
    for (auto& [r, n] : cb) rules.insert(r);
    for (const auto& r : rules) differing += ca[r] != cb[r];
    EXPECT_EQ(ab.size(), differing);
    EXPECT_TRUE(Compare(a, a, Meta(op)).empty());
  }
}

TEST(VerdictProperty, LocationInsensitive) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    auto a = RandomReport(rng);
    std::vector<Warning> moved = a.All();
    for (auto& w : moved) w.line = 1 + static_cast<int>(rng() % 90);
    EXPECT_TRUE(Compare(a, Report(moved), Meta()).empty());
  }
}

// End to end on the nested-array program: the weak R1 loses a warning when E1
// wraps the outer accessor.
TEST(Verdict, CorpusNestedArrayLost) {
  auto path = testing::SourceDir() + "/tests/corpus/nested_array.java";
  auto unit = testing::LoadPrinted(path);
  analysis::WeaknessConfig weak{analysis::WeaknessId::kR1SkipNested};
  auto r1 = *rules::FindRule("R1");
  auto sites = mutation::EnumerateSites(unit, OperatorId::kE1);
  bool lost = false;
  for (const auto& s : sites) {
    auto v = mutation::Apply(unit, s);
    auto orig = WarningReport::FromWarnings("mini", "1", rules::RunRules(unit, {r1}, weak));
    auto var = WarningReport::FromWarnings("mini", "1", rules::RunRules(v.unit, {r1}, weak));
    for (const auto& d : Compare(orig, var, CompareMeta::For(v, path, path))) {
      lost |= d.rule_id == "R1" && d.direction == Direction::kLost;
    }
  }
  EXPECT_TRUE(lost);
}

}  // namespace
}  // namespace mtsca::verdict
