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

#ifndef MTSCA_VERDICT_VERDICT_H_
#define MTSCA_VERDICT_VERDICT_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mtsca/mutation/mutation.h"
#include "mtsca/rules/rules.h"
#include "mtsca/taxonomy.h"

namespace mtsca::verdict {

using rules::Warning;

struct WarningReport {
  std::string analyzer;
  std::string version;
  std::map<std::string, std::vector<Warning>> files;  // sorted per file

  static WarningReport FromWarnings(std::string analyzer, std::string version,
                                    std::vector<Warning> warnings);
  void Add(Warning w);
  void Sort();
  size_t size() const;
  std::vector<Warning> All() const;
  // rule id -> count, for one file or for all files when `file` is empty.
  std::map<std::string, int> RuleCounts(const std::string& file = "") const;
  bool operator==(const WarningReport&) const = default;
};

enum class Direction { kLost, kGained };
enum class Equivalence { kCertified, kUnverified };

std::string_view DirectionName(Direction d);
std::string_view EquivalenceName(Equivalence e);

struct Discrepancy {
  std::string variant_id;
  mutation::OperatorId op = mutation::OperatorId::kE1;
  std::string rule_id;
  Direction direction = Direction::kLost;
  int original_count = 0;
  int variant_count = 0;
  Equivalence equivalence = Equivalence::kCertified;
  std::vector<RootCause> suggested_root_causes;
  // Original-source line of the bucket in strict mode; 0 for variant lines
  // without an origin. Unset in the default count comparison.
  std::optional<int> line;
  bool operator==(const Discrepancy&) const = default;
};

// Pairs a variant with the original it came from.
struct CompareMeta {
  std::string variant_id;
  mutation::OperatorId op = mutation::OperatorId::kE1;
  std::string original_file;
  std::string variant_file;
  std::vector<std::optional<int>> origin_map;

  static CompareMeta For(const mutation::Variant& v, std::string original_file,
                         std::string variant_file);
};

struct CompareOptions {
  bool strict_location = false;
};

class MismatchedFiles : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-rule warning counts of the original file against the variant file. One
// Discrepancy per rule whose counts differ, ordered by rule id. In strict mode
// the buckets are (rule, original line), variant lines projected through the
// origin map. Throws MismatchedFiles when either report has warnings for a
// file outside the pair.
std::vector<Discrepancy> Compare(const WarningReport& original, const WarningReport& variant,
                                 const CompareMeta& meta, const CompareOptions& options = {});

std::vector<RootCause> SuggestRootCauses(mutation::OperatorId op);

Equivalence EquivalenceOf(mutation::OperatorId op);

}  // namespace mtsca::verdict

#endif  // MTSCA_VERDICT_VERDICT_H_
