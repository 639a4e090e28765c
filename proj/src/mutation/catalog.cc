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

#include <stdexcept>
#include <string>

#include "mtsca/mutation/mutation.h"

namespace mtsca::mutation {

using RC = RootCause;
using IC = InputCharacteristic;

const std::vector<MutationOperator>& AllOperators() {
  static const std::vector<MutationOperator> kOperators = {
      {OperatorId::kE1, "E1", "wrap_method_in_nested_class", Family::kEquivalent,
       {RC::kUnhandledLanguageFeature}, {IC::kNestedClasses}},
      {OperatorId::kE2, "E2", "anonymous_to_lambda", Family::kEquivalent,
       {RC::kUnhandledLanguageFeature}, {IC::kLambdaExpressions}},
      {OperatorId::kE3, "E3", "rename_field_to_method_name", Family::kEquivalent,
       {RC::kTypeResolutionError, RC::kScopeAnalysisError}, {IC::kSameIdentifiers}},
      {OperatorId::kE4a, "E4a", "incdec_swap", Family::kEquivalent,
       {RC::kMissingSpecificCase, RC::kMishandledIR}, {IC::kComplexExpressionsStatements}},
      {OperatorId::kE4b, "E4b", "false_or_false", Family::kEquivalent,
       {RC::kMissingSpecificCase, RC::kMishandledIR}, {IC::kComplexExpressionsStatements}},
      {OperatorId::kE4c, "E4c", "this_qualify", Family::kEquivalent,
       {RC::kMissingSpecificCase, RC::kMishandledIR}, {IC::kMethodCallsFieldAccesses}},
      {OperatorId::kE5, "E5", "literal_split", Family::kEquivalent,
       {RC::kMissingSpecificCase, RC::kMishandledIR}, {IC::kComplexExpressionsStatements}},
      {OperatorId::kX1, "X1", "extract_statement_to_method", Family::kExploratory,
       {RC::kDataflowAnalysisError}, {IC::kMethodCallsFieldAccesses}},
      {OperatorId::kX2, "X2", "promote_local_constant", Family::kExploratory,
       {RC::kScopeAnalysisError}, {IC::kVariableInitAssignments}},
      {OperatorId::kX3, "X3", "static_to_instance", Family::kExploratory,
       {RC::kTypeResolutionError}, {IC::kMethodCallsFieldAccesses, IC::kModifiers}},
  };
  return kOperators;
}

const MutationOperator& Operator(OperatorId id) {
  return AllOperators()[static_cast<size_t>(id)];
}

std::string_view OperatorName(OperatorId id) { return Operator(id).name; }

std::optional<OperatorId> ParseOperatorId(std::string_view name) {
  for (const auto& op : AllOperators()) {
    if (op.name == name || op.title == name) return op.id;
  }
  return std::nullopt;
}

std::vector<OperatorId> ParseOperatorList(std::string_view spec) {
  std::vector<OperatorId> out;
  auto add = [&](OperatorId id) {
    for (OperatorId o : out) {
      if (o == id) return;
    }
    out.push_back(id);
  };
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view item = spec.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    pos = comma + 1;
    if (item.empty()) continue;
    if (item == "all" || item == "E" || item == "X") {
      for (const auto& op : AllOperators()) {
        bool eq = op.family == Family::kEquivalent;
        if (item == "all" || (item == "E") == eq) add(op.id);
      }
      continue;
    }
    auto id = ParseOperatorId(item);
    if (!id) throw std::invalid_argument("unknown mutation operator: " + std::string(item));
    add(*id);
  }
  if (out.empty()) throw std::invalid_argument("empty operator list");
  return out;
}

std::string VariantId(std::string_view path, OperatorId op, int index) {
  std::string stem(path);
  size_t slash = stem.find_last_of('/');
  if (slash != std::string::npos) stem = stem.substr(slash + 1);
  size_t dot = stem.rfind('.');
  if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  if (stem.empty()) stem = "unit";
  return stem + "__" + std::string(OperatorName(op)) + "__" + std::to_string(index);
}

}  // namespace mtsca::mutation
