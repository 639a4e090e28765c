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

#ifndef MTSCA_ANALYSIS_TYPES_H_
#define MTSCA_ANALYSIS_TYPES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "mtsca/analysis/scopes.h"
#include "mtsca/analysis/weakness.h"
#include "mtsca/java/ast.h"

namespace mtsca::analysis {

// Static type of an expression. Literals map to primitives or String; names
// and members use their declaration; calls to in-unit methods use the declared
// return type. Anything else is Unknown.
//
// With W_TYPE_ARRAYLEN, every `.length` access is taken for an array length
// whose type could not be resolved, and yields an unknown object type.
ResolvedType ResolveType(const java::Expr& expr, const ScopeTree& scopes,
                         const WeaknessConfig& cfg);

struct ConstValue {
  std::variant<std::int64_t, bool, std::string> value;
  bool is_long = false;

  bool IsInt() const { return std::holds_alternative<std::int64_t>(value); }
  bool IsBool() const { return std::holds_alternative<bool>(value); }
  bool IsString() const { return std::holds_alternative<std::string>(value); }
  std::int64_t AsInt() const { return std::get<std::int64_t>(value); }
  bool AsBool() const { return std::get<bool>(value); }
  const std::string& AsString() const { return std::get<std::string>(value); }
  std::string ToString() const;
  bool operator==(const ConstValue&) const = default;
};

// Parses an integer literal as written (decimal or hex, underscores, L
// suffix). Returns nullopt when the value does not fit its type.
std::optional<ConstValue> ParseIntLiteral(const std::string& text);

// Folds int/long/boolean arithmetic and String concatenation over literals,
// final locals with constant initializers and static final constant fields.
// With W_CONST_LOCAL_ONLY, fields are never folded.
std::optional<ConstValue> ConstEval(const java::Expr& expr, const ScopeTree& scopes,
                                    const WeaknessConfig& cfg);

}  // namespace mtsca::analysis

#endif  // MTSCA_ANALYSIS_TYPES_H_
