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

#include "mtsca/taxonomy.h"

#include <utility>

namespace mtsca {
namespace {

const std::vector<std::pair<RootCause, std::string_view>>& CauseNames() {
  static const std::vector<std::pair<RootCause, std::string_view>> kNames = {
      {RootCause::kFlawedRuleSpecification, "FlawedRuleSpecification"},
      {RootCause::kInconsistentRuleImplementation, "InconsistentRuleImplementation"},
      {RootCause::kUnhandledLanguageFeature, "UnhandledLanguageFeature"},
      {RootCause::kUnhandledJavaLibrary, "UnhandledJavaLibrary"},
      {RootCause::kMissingWhitelistCase, "MissingWhitelistCase"},
      {RootCause::kMissingSimilarCase, "MissingSimilarCase"},
      {RootCause::kMissingSpecificCase, "MissingSpecificCase"},
      {RootCause::kMishandledIR, "MishandledIR"},
      {RootCause::kScopeAnalysisError, "ScopeAnalysisError"},
      {RootCause::kTypeResolutionError, "TypeResolutionError"},
      {RootCause::kDataflowAnalysisError, "DataflowAnalysisError"},
      {RootCause::kSymbolicExecutionError, "SymbolicExecutionError"},
      {RootCause::kGeneralProgrammingError, "GeneralProgrammingError"},
      {RootCause::kMiscellaneous, "Miscellaneous"},
  };
  return kNames;
}

const std::vector<std::pair<InputCharacteristic, std::string_view>>& CharNames() {
  static const std::vector<std::pair<InputCharacteristic, std::string_view>> kNames = {
      {InputCharacteristic::kAnnotations, "Annotations"},
      {InputCharacteristic::kMethodCallsFieldAccesses, "MethodCallsFieldAccesses"},
      {InputCharacteristic::kJavaStandardLibraries, "JavaStandardLibraries"},
      {InputCharacteristic::kNestedClasses, "NestedClasses"},
      {InputCharacteristic::kSameIdentifiers, "SameIdentifiers"},
      {InputCharacteristic::kComplexExpressionsStatements, "ComplexExpressionsStatements"},
      {InputCharacteristic::kJavaExternalLibraries, "JavaExternalLibraries"},
      {InputCharacteristic::kVariableInitAssignments, "VariableInitAssignments"},
      {InputCharacteristic::kLambdaExpressions, "LambdaExpressions"},
      {InputCharacteristic::kModifiers, "Modifiers"},
      {InputCharacteristic::kOther, "Other"},
  };
  return kNames;
}

}  // namespace

const std::vector<RootCause>& AllRootCauses() {
  static const std::vector<RootCause> kAll = [] {
    std::vector<RootCause> out;
    for (const auto& [c, n] : CauseNames()) out.push_back(c);
    return out;
  }();
  return kAll;
}

const std::vector<InputCharacteristic>& AllInputCharacteristics() {
  static const std::vector<InputCharacteristic> kAll = [] {
    std::vector<InputCharacteristic> out;
    for (const auto& [c, n] : CharNames()) out.push_back(c);
    return out;
  }();
  return kAll;
}

std::string_view RootCauseName(RootCause cause) {
  for (const auto& [c, n] : CauseNames()) {
    if (c == cause) return n;
  }
  return "?";
}

std::string_view CharacteristicName(InputCharacteristic ch) {
  for (const auto& [c, n] : CharNames()) {
    if (c == ch) return n;
  }
  return "?";
}

std::optional<RootCause> ParseRootCause(std::string_view name) {
  for (const auto& [c, n] : CauseNames()) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::optional<InputCharacteristic> ParseInputCharacteristic(std::string_view name) {
  for (const auto& [c, n] : CharNames()) {
    if (n == name) return c;
  }
  return std::nullopt;
}

const std::vector<LabelOnlyEntry>& LabelOnlyRootCauses() {
  static const std::vector<LabelOnlyEntry> kEntries = {
      {RootCause::kSymbolicExecutionError,
       "no symbolic executor is built; path-sensitive rules are out of scope"},
      {RootCause::kUnhandledJavaLibrary,
       "library semantics are not modeled; external calls resolve to Unknown"},
      {RootCause::kMissingWhitelistCase,
       "volatile-field whitelisting needs annotation semantics no rule carries"},
      {RootCause::kMissingSimilarCase,
       "no rule in the catalog has a sibling case to miss"},
      {RootCause::kFlawedRuleSpecification,
       "rule specifications are taken as given"},
      {RootCause::kGeneralProgrammingError,
       "crash-style defects are not seeded"},
      {RootCause::kMiscellaneous, "catch-all category"},
  };
  return kEntries;
}

const std::vector<LabelOnlyCharacteristic>& LabelOnlyCharacteristics() {
  static const std::vector<LabelOnlyCharacteristic> kEntries = {
      {InputCharacteristic::kAnnotations,
       "annotations are parsed and tagged in the corpus; no operator rewrites them"},
      {InputCharacteristic::kJavaStandardLibraries,
       "standard library semantics are not modeled"},
      {InputCharacteristic::kJavaExternalLibraries,
       "external library semantics are not modeled"},
      {InputCharacteristic::kOther, "catch-all category"},
  };
  return kEntries;
}

}  // namespace mtsca
