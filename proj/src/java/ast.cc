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

#include "mtsca/java/ast.h"

#include <tuple>

namespace mtsca::java {

bool Span::Contains(const Span& inner) const {
  return std::tie(start_line, start_col) <= std::tie(inner.start_line, inner.start_col) &&
         std::tie(inner.end_line, inner.end_col) <= std::tie(end_line, end_col);
}

bool SameSpan(const Span& a, const Span& b) {
  return std::tie(a.start_line, a.start_col, a.end_line, a.end_col) ==
         std::tie(b.start_line, b.start_col, b.end_line, b.end_col);
}

int ModifierSet::AccessCount() const {
  return Has(Modifier::kPublic) + Has(Modifier::kPrivate) + Has(Modifier::kProtected);
}

const std::vector<std::pair<Modifier, const char*>>& ModifierSpellings() {
  static const std::vector<std::pair<Modifier, const char*>> kSpellings = {
      {Modifier::kPublic, "public"},
      {Modifier::kProtected, "protected"},
      {Modifier::kPrivate, "private"},
      {Modifier::kAbstract, "abstract"},
      {Modifier::kDefault, "default"},
      {Modifier::kStatic, "static"},
      {Modifier::kFinal, "final"},
      {Modifier::kSynchronized, "synchronized"},
      {Modifier::kVolatile, "volatile"},
  };
  return kSpellings;
}

bool TypeRef::IsPrimitive() const {
  if (dims != 0) return false;
  return name == "int" || name == "long" || name == "boolean" || name == "char" ||
         name == "byte" || name == "short" || name == "float" || name == "double";
}

std::string TypeRef::SimpleName() const {
  auto dot = name.rfind('.');
  return dot == std::string::npos ? name : name.substr(dot + 1);
}

const char* Spelling(UnaryOp op) {
  switch (op) {
    case UnaryOp::kPreInc:
    case UnaryOp::kPostInc:
      return "++";
    case UnaryOp::kPreDec:
    case UnaryOp::kPostDec:
      return "--";
    case UnaryOp::kNot:
      return "!";
    case UnaryOp::kNeg:
      return "-";
  }
  return "?";
}

const char* Spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kRem: return "%";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGe: return ">=";
  }
  return "?";
}

const char* Spelling(AssignOp op) {
  switch (op) {
    case AssignOp::kAssign: return "=";
    case AssignOp::kAdd: return "+=";
    case AssignOp::kSub: return "-=";
    case AssignOp::kMul: return "*=";
    case AssignOp::kDiv: return "/=";
    case AssignOp::kRem: return "%=";
  }
  return "?";
}

bool IsComparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::kEq:
    case BinaryOp::kNe:
    case BinaryOp::kLt:
    case BinaryOp::kGt:
    case BinaryOp::kLe:
    case BinaryOp::kGe:
      return true;
    default:
      return false;
  }
}

bool IsArithmetic(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd:
    case BinaryOp::kSub:
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kRem:
      return true;
    default:
      return false;
  }
}

const Expr& StripParens(const Expr& e) {
  const Expr* cur = &e;
  while (const auto* p = cur->As<Paren>()) cur = p->inner.get();
  return *cur;
}

const TypeDecl* Member::AsType() const {
  const auto* boxed = std::get_if<Box<TypeDecl>>(&node);
  return boxed ? boxed->get() : nullptr;
}

TypeDecl* Member::AsType() {
  auto* boxed = std::get_if<Box<TypeDecl>>(&node);
  return boxed ? boxed->get() : nullptr;
}

Span Member::span() const {
  return std::visit(
      [](const auto& m) -> Span {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Box<TypeDecl>>) {
          return m->span;
        } else {
          return m.span;
        }
      },
      node);
}

}  // namespace mtsca::java
