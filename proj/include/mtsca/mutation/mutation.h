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

#ifndef MTSCA_MUTATION_MUTATION_H_
#define MTSCA_MUTATION_MUTATION_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mtsca/java/ast.h"
#include "mtsca/java/walk.h"
#include "mtsca/taxonomy.h"

namespace mtsca::mutation {

enum class OperatorId { kE1, kE2, kE3, kE4a, kE4b, kE4c, kE5, kX1, kX2, kX3 };

enum class Family { kEquivalent, kExploratory };

struct MutationOperator {
  OperatorId id;
  std::string_view name;   // "E1"
  std::string_view title;  // "wrap_method_in_nested_class"
  Family family;
  std::vector<RootCause> targeted_root_causes;
  std::vector<InputCharacteristic> targeted_characteristics;
};

const std::vector<MutationOperator>& AllOperators();
const MutationOperator& Operator(OperatorId id);
std::string_view OperatorName(OperatorId id);
std::optional<OperatorId> ParseOperatorId(std::string_view name);

// "all", "E" (the equivalent family), "X" (the exploratory family) or a
// comma-separated list of ids. Throws std::invalid_argument on unknown ids.
std::vector<OperatorId> ParseOperatorList(std::string_view spec);

struct MutationSite {
  OperatorId op = OperatorId::kE1;
  java::NodePath anchor;
  java::Span span;
  std::string label;

  bool operator==(const MutationSite& o) const {
    return op == o.op && anchor == o.anchor && label == o.label;
  }
};

struct Variant {
  std::string id;  // <stem>__<op>__<k>
  OperatorId op = OperatorId::kE1;
  MutationSite site;
  int index = 0;  // position of the site in EnumerateSites
  std::uint64_t seed = 0;
  java::CompilationUnit unit;  // parsed back from `text`
  std::string text;
  // origin_map[i] is the original line of variant line i + 1, if any.
  std::vector<std::optional<int>> origin_map;
};

class ApplicabilityLost : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sites in source order. `unit` should be in printed form so that spans
// refer to the text the analyzers see.
std::vector<MutationSite> EnumerateSites(const java::CompilationUnit& unit, OperatorId op);

// Applies one site. Throws ApplicabilityLost when `site` is not among the
// current sites of `unit`.
Variant Apply(const java::CompilationUnit& unit, const MutationSite& site,
              std::uint64_t seed = 0);

// Line correspondence between two texts; lines are compared without leading
// whitespace and unmatched lines inside a changed hunk are paired in order.
std::vector<std::optional<int>> OriginMap(std::string_view original,
                                          std::string_view mutated);

std::string VariantId(std::string_view path, OperatorId op, int index);

}  // namespace mtsca::mutation

#endif  // MTSCA_MUTATION_MUTATION_H_
