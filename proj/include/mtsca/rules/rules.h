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

#ifndef MTSCA_RULES_RULES_H_
#define MTSCA_RULES_RULES_H_

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "mtsca/analysis/weakness.h"
#include "mtsca/java/ast.h"

namespace mtsca::rules {

inline constexpr std::string_view kMiniAnalyzer = "mini";

struct Warning {
  std::string analyzer;
  std::string rule_id;
  std::string file;
  int line = 0;
  std::string message;

  bool operator==(const Warning&) const = default;
  bool operator<(const Warning& o) const {
    return std::tie(file, line, rule_id, message) <
           std::tie(o.file, o.line, o.rule_id, o.message);
  }
};

enum class ImplKind { kAstPattern, kScopeAware, kDataflow };

std::string_view ImplKindName(ImplKind kind);

struct Rule {
  std::string id;    // "R1" .. "R11"
  std::string name;  // e.g. "MethodReturnsInternalArray"
  std::string description;
  ImplKind kind = ImplKind::kAstPattern;
  // Weaknesses that may change this rule's verdicts, rule-level first.
  std::vector<analysis::WeaknessId> weaknesses;
};

const std::vector<Rule>& AllRules();

// Looks a rule up by id or by name; null when unknown.
const Rule* FindRule(std::string_view id_or_name);

// "all" or a comma-separated list of ids/names. Throws std::invalid_argument
// on an unknown entry.
std::vector<Rule> ParseRuleList(std::string_view spec);

// Runs `ruleset` over one unit. The result is sorted and deterministic.
std::vector<Warning> RunRules(const java::CompilationUnit& unit,
                              const std::vector<Rule>& ruleset,
                              const analysis::WeaknessConfig& cfg);

// All rules.
std::vector<Warning> RunRules(const java::CompilationUnit& unit,
                              const analysis::WeaknessConfig& cfg);

}  // namespace mtsca::rules

#endif  // MTSCA_RULES_RULES_H_
