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

#include "mtsca/verdict/verdict.h"

#include <algorithm>
#include <set>
#include <utility>

namespace mtsca::verdict {

WarningReport WarningReport::FromWarnings(std::string analyzer, std::string version,
                                          std::vector<Warning> warnings) {
  WarningReport r;
  r.analyzer = std::move(analyzer);
  r.version = std::move(version);
  for (auto& w : warnings) r.Add(std::move(w));
  r.Sort();
  return r;
}

void WarningReport::Add(Warning w) {
  std::string file = w.file;
  files[file].push_back(std::move(w));
}

void WarningReport::Sort() {
  for (auto& [file, ws] : files) std::stable_sort(ws.begin(), ws.end());
}

size_t WarningReport::size() const {
  size_t n = 0;
  for (const auto& [file, ws] : files) n += ws.size();
  return n;
}

std::vector<Warning> WarningReport::All() const {
  std::vector<Warning> out;
  for (const auto& [file, ws] : files) out.insert(out.end(), ws.begin(), ws.end());
  return out;
}

std::map<std::string, int> WarningReport::RuleCounts(const std::string& file) const {
  std::map<std::string, int> out;
  for (const auto& [f, ws] : files) {
    if (!file.empty() && f != file) continue;
    for (const auto& w : ws) ++out[w.rule_id];
  }
  return out;
}

std::string_view DirectionName(Direction d) { return d == Direction::kLost ? "Lost" : "Gained"; }

std::string_view EquivalenceName(Equivalence e) {
  return e == Equivalence::kCertified ? "Certified" : "Unverified";
}

CompareMeta CompareMeta::For(const mutation::Variant& v, std::string original_file,
                             std::string variant_file) {
  CompareMeta m;
  m.variant_id = v.id;
  m.op = v.op;
  m.original_file = std::move(original_file);
  m.variant_file = std::move(variant_file);
  m.origin_map = v.origin_map;
  return m;
}

std::vector<RootCause> SuggestRootCauses(mutation::OperatorId op) {
  return mutation::Operator(op).targeted_root_causes;
}

Equivalence EquivalenceOf(mutation::OperatorId op) {
  return mutation::Operator(op).family == mutation::Family::kEquivalent ? Equivalence::kCertified
                                                                        : Equivalence::kUnverified;
}

namespace {

void CheckFiles(const WarningReport& r, const std::string& expected, const char* side) {
  for (const auto& [file, ws] : r.files) {
    if (file != expected && !ws.empty()) {
      throw MismatchedFiles(std::string(side) + " report has warnings for '" + file +
                            "', expected only '" + expected + "'");
    }
  }
}

using Bucket = std::pair<std::string, int>;

std::map<Bucket, int> Buckets(const WarningReport& r, const std::string& file,
                              const std::vector<std::optional<int>>* origin_map, bool strict) {
  std::map<Bucket, int> out;
  auto it = r.files.find(file);
  if (it == r.files.end()) return out;
  for (const auto& w : it->second) {
    int line = -1;
    if (strict) {
      line = w.line;
      if (origin_map) {
        size_t i = static_cast<size_t>(w.line - 1);
        line = w.line >= 1 && i < origin_map->size() && (*origin_map)[i] ? *(*origin_map)[i] : 0;
      }
    }
    ++out[{w.rule_id, line}];
  }
  return out;
}

}  // namespace

std::vector<Discrepancy> Compare(const WarningReport& original, const WarningReport& variant,
                                 const CompareMeta& meta, const CompareOptions& options) {
  CheckFiles(original, meta.original_file, "original");
  CheckFiles(variant, meta.variant_file, "variant");
  bool strict = options.strict_location;
  auto a = Buckets(original, meta.original_file, nullptr, strict);
  auto b = Buckets(variant, meta.variant_file, &meta.origin_map, strict);
  std::set<Bucket> keys;
  for (const auto& [k, n] : a) keys.insert(k);
  for (const auto& [k, n] : b) keys.insert(k);
  std::vector<Discrepancy> out;
  for (const auto& key : keys) {
    int na = a.count(key) ? a.at(key) : 0;
    int nb = b.count(key) ? b.at(key) : 0;
    if (na == nb) continue;
    Discrepancy d;
    d.variant_id = meta.variant_id;
    d.op = meta.op;
    d.rule_id = key.first;
    d.direction = nb < na ? Direction::kLost : Direction::kGained;
    d.original_count = na;
    d.variant_count = nb;
    d.equivalence = EquivalenceOf(meta.op);
    d.suggested_root_causes = SuggestRootCauses(meta.op);
    if (strict) d.line = key.second;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace mtsca::verdict
