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

#include "mtsca/analysis/weakness.h"

#include <stdexcept>

namespace mtsca::analysis {

using IC = InputCharacteristic;

const std::vector<WeaknessInfo>& AllWeaknesses() {
  static const std::vector<WeaknessInfo> kAll = {
      {WeaknessId::kScopeFlat, "W_SCOPE_FLAT", RootCause::kScopeAnalysisError,
       Direction::kFalsePositive, "R7", {IC::kSameIdentifiers},
       "sibling method scopes of one type share a single scope"},
      {WeaknessId::kTypeArrayLen, "W_TYPE_ARRAYLEN", RootCause::kTypeResolutionError,
       Direction::kFalsePositive, "R5", {IC::kMethodCallsFieldAccesses},
       "a .length access resolves to an unknown object type"},
      {WeaknessId::kDfLeftToRight, "W_DF_LTR", RootCause::kDataflowAnalysisError,
       Direction::kFalsePositive, "R8", {IC::kVariableInitAssignments},
       "definitions and uses in one statement are ordered left to right"},
      {WeaknessId::kConstLocalOnly, "W_CONST_LOCAL_ONLY", RootCause::kScopeAnalysisError,
       Direction::kFalseNegative, "R10", {IC::kVariableInitAssignments},
       "static final class fields are not folded as constants"},
      {WeaknessId::kR1SkipNested, "W_R1_SKIP_NESTED", RootCause::kUnhandledLanguageFeature,
       Direction::kFalseNegative, "R1", {IC::kNestedClasses},
       "only members of top-level types are visited"},
      {WeaknessId::kR2AnyOccurrence, "W_R2_ANY_OCCURRENCE",
       RootCause::kInconsistentRuleImplementation, Direction::kFalsePositive, "R2",
       {IC::kJavaStandardLibraries},
       "every NullPointerException allocation is reported"},
      {WeaknessId::kR3LiteralRoot, "W_R3_LITERAL_ROOT", RootCause::kMissingSpecificCase,
       Direction::kFalsePositive, "R3", {IC::kMethodCallsFieldAccesses},
       "append arguments rooted at a one-character literal are reported"},
      {WeaknessId::kR4BareLiteral, "W_R4_BARE_LITERAL", RootCause::kMishandledIR,
       Direction::kFalseNegative, "R4", {IC::kComplexExpressionsStatements},
       "only bare literal initializers are recognized"},
      {WeaknessId::kR6PerClass, "W_R6_PER_CLASS", RootCause::kUnhandledLanguageFeature,
       Direction::kFalsePositive, "R6", {IC::kNestedClasses},
       "call sites are counted only inside the declaring class"},
      {WeaknessId::kR7NameMatch, "W_R7_NAME_MATCH", RootCause::kScopeAnalysisError,
       Direction::kFalsePositive, "R7", {IC::kSameIdentifiers},
       "the assigned value is matched to array parameters by name only"},
      {WeaknessId::kR8InitOnly, "W_R8_INIT_ONLY", RootCause::kMissingSpecificCase,
       Direction::kFalsePositive, "R8", {IC::kVariableInitAssignments},
       "a declaration without initializer is treated as a definition"},
      {WeaknessId::kR9SkipFinal, "W_R9_SKIP_FINAL", RootCause::kUnhandledLanguageFeature,
       Direction::kFalseNegative, "R9", {IC::kModifiers},
       "operands rooted at a final declaration are skipped"},
      {WeaknessId::kR11NoCallFlow, "W_R11_NO_CALLFLOW", RootCause::kDataflowAnalysisError,
       Direction::kFalsePositive, "R11", {IC::kMethodCallsFieldAccesses},
       "only a close() call in the same method counts"},
  };
  return kAll;
}

const WeaknessInfo& Info(WeaknessId id) {
  for (const auto& info : AllWeaknesses()) {
    if (info.id == id) return info;
  }
  throw std::logic_error("unknown weakness id");
}

std::optional<WeaknessId> ParseWeaknessId(std::string_view name) {
  for (const auto& info : AllWeaknesses()) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

std::string WeaknessConfig::ToString() const {
  std::string out;
  for (const auto& info : AllWeaknesses()) {
    if (!Has(info.id)) continue;
    if (!out.empty()) out += ",";
    out += info.name;
  }
  return out;
}

WeaknessConfig WeaknessConfig::FromString(std::string_view csv) {
  WeaknessConfig cfg;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view item = csv.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      auto id = ParseWeaknessId(item);
      if (!id) throw std::invalid_argument("unknown weakness: " + std::string(item));
      cfg.Enable(*id);
    }
    start = comma + 1;
  }
  return cfg;
}

}  // namespace mtsca::analysis
