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

#ifndef MTSCA_ANALYSIS_WEAKNESS_H_
#define MTSCA_ANALYSIS_WEAKNESS_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mtsca/taxonomy.h"

namespace mtsca::analysis {

enum class WeaknessId {
  kScopeFlat,
  kTypeArrayLen,
  kDfLeftToRight,
  kConstLocalOnly,
  kR1SkipNested,
  kR2AnyOccurrence,
  kR3LiteralRoot,
  kR4BareLiteral,
  kR6PerClass,
  kR7NameMatch,
  kR8InitOnly,
  kR9SkipFinal,
  kR11NoCallFlow,
};

enum class Direction { kFalseNegative, kFalsePositive };

struct WeaknessInfo {
  WeaknessId id;
  std::string_view name;       // e.g. "W_R1_SKIP_NESTED"
  RootCause root_cause;
  Direction direction;
  std::string_view owning_rule;  // rule whose verdicts it may change
  std::vector<InputCharacteristic> characteristics;
  std::string_view summary;
};

const std::vector<WeaknessInfo>& AllWeaknesses();
const WeaknessInfo& Info(WeaknessId id);
std::optional<WeaknessId> ParseWeaknessId(std::string_view name);

// Set of enabled weaknesses; empty means the fully correct analysis.
class WeaknessConfig {
 public:
  WeaknessConfig() = default;
  WeaknessConfig(std::initializer_list<WeaknessId> ids) : enabled_(ids) {}

  bool Has(WeaknessId id) const { return enabled_.count(id) > 0; }
  void Enable(WeaknessId id) { enabled_.insert(id); }
  bool empty() const { return enabled_.empty(); }
  const std::set<WeaknessId>& enabled() const { return enabled_; }
  // Comma-separated names in catalog order.
  std::string ToString() const;
  // Throws std::invalid_argument on an unknown name.
  static WeaknessConfig FromString(std::string_view csv);

 private:
  std::set<WeaknessId> enabled_;
};

}  // namespace mtsca::analysis

#endif  // MTSCA_ANALYSIS_WEAKNESS_H_
