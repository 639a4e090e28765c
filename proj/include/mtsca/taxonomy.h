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

#ifndef MTSCA_TAXONOMY_H_
#define MTSCA_TAXONOMY_H_

#include <optional>
#include <string_view>
#include <vector>

namespace mtsca {

// Why an analyzer produced a false negative or false positive.
enum class RootCause {
  kFlawedRuleSpecification,
  kInconsistentRuleImplementation,
  kUnhandledLanguageFeature,
  kUnhandledJavaLibrary,
  kMissingWhitelistCase,
  kMissingSimilarCase,
  kMissingSpecificCase,
  kMishandledIR,
  kScopeAnalysisError,
  kTypeResolutionError,
  kDataflowAnalysisError,
  kSymbolicExecutionError,
  kGeneralProgrammingError,
  kMiscellaneous,
};

// Syntactic or semantic feature of an input program that triggers FNs/FPs.
enum class InputCharacteristic {
  kAnnotations,
  kMethodCallsFieldAccesses,
  kJavaStandardLibraries,
  kNestedClasses,
  kSameIdentifiers,
  kComplexExpressionsStatements,
  kJavaExternalLibraries,
  kVariableInitAssignments,
  kLambdaExpressions,
  kModifiers,
  kOther,
};

const std::vector<RootCause>& AllRootCauses();
const std::vector<InputCharacteristic>& AllInputCharacteristics();

std::string_view RootCauseName(RootCause cause);
std::string_view CharacteristicName(InputCharacteristic ch);
std::optional<RootCause> ParseRootCause(std::string_view name);
std::optional<InputCharacteristic> ParseInputCharacteristic(std::string_view name);

// Categories that no weakness or operator embodies. Each entry names the
// reason the category is kept as a label only.
struct LabelOnlyEntry {
  RootCause cause;
  std::string_view reason;
};
const std::vector<LabelOnlyEntry>& LabelOnlyRootCauses();

struct LabelOnlyCharacteristic {
  InputCharacteristic characteristic;
  std::string_view reason;
};
const std::vector<LabelOnlyCharacteristic>& LabelOnlyCharacteristics();

}  // namespace mtsca

#endif  // MTSCA_TAXONOMY_H_
